#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "selfdual/verify.hpp"

namespace selfdual {

int default_order_cap() {
    if (const char* s = std::getenv("SELFDUAL_ORDER_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
    }
    return 11;
}

namespace {

// Erdos-Gallai: a non-increasing sequence with even sum is graphical iff
// for every k, the k largest degrees can be absorbed by the rest.
bool graphical(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    long long sum = 0;
    for (int x : d) {
        if (x < 0) return false;
        sum += x;
    }
    if (sum % 2 != 0) return false;
    const int n = static_cast<int>(d.size());
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += d[static_cast<size_t>(k - 1)];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[static_cast<size_t>(i)], k);
        if (lhs > rhs) return false;
    }
    return true;
}

AbstractGraph component_subgraph(const AbstractGraph& g, const std::vector<int>& vertices) {
    AbstractGraph h(static_cast<int>(vertices.size()));
    std::map<int, int> local;
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.neighbors(vertices[i])) {
            auto it = local.find(u);
            if (it != local.end() && it->second > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), it->second);
        }
    return h;
}

// The requested filters, evaluated in fixed order so that every thread and
// the serial reference agree bit for bit.
bool passes_filters(const AbstractGraph& g, const EnumerationQuery& q) {
    if (q.three_connected || q.self_dual) {
        if (!is_three_connected(g)) return false;
    }
    if (q.planar || q.self_dual) {
        for (const auto& comp : connected_components(g)) {
            if (comp.size() <= 4) continue;  // K4 and smaller are planar
            if (!planar_embed(component_subgraph(g, comp))) return false;
        }
    }
    if (q.self_dual) {
        const auto m = planar_embed(g);  // connected: 3-connectivity held above
        if (!m) return false;
        if (!is_self_dual(*m)) return false;
    }
    return true;
}

// Vertex-by-vertex completion: vertex v picks its neighbor set among the
// higher-indexed vertices with spare degree; the residual degrees on
// {v+1..n-1} form a fresh (edge-free) instance, so the Erdos-Gallai test
// on them is an exact feasibility oracle, not a heuristic.
struct Completion {
    const std::vector<int>& target;
    const EnumerationQuery& query;
    std::map<std::string, bool>& classes;

    void finish(const AbstractGraph& g) {
        std::string canon = canonical_form(g);
        auto [it, fresh] = classes.try_emplace(canon, false);
        if (!fresh) return;
        it->second = passes_filters(g, query);
    }

    void extend(AbstractGraph& g, std::vector<int>& rem, int v) {
        const int n = static_cast<int>(target.size());
        if (v == n) {
            finish(g);
            return;
        }
        if (rem[static_cast<size_t>(v)] == 0) {
            extend(g, rem, v + 1);
            return;
        }
        std::vector<int> cand;
        for (int u = v + 1; u < n; ++u)
            if (rem[static_cast<size_t>(u)] > 0) cand.push_back(u);
        choose(g, rem, v, cand, 0, rem[static_cast<size_t>(v)]);
    }

    void choose(AbstractGraph& g, std::vector<int>& rem, int v, const std::vector<int>& cand,
                size_t from, int need) {
        if (need == 0) {
            std::vector<int> residual(rem.begin() + v + 1, rem.end());
            if (graphical(std::move(residual))) extend(g, rem, v + 1);
            return;
        }
        if (cand.size() - from < static_cast<size_t>(need)) return;
        for (size_t i = from; i + static_cast<size_t>(need) <= cand.size(); ++i) {
            const int u = cand[i];
            g.add_edge(v, u);
            --rem[static_cast<size_t>(v)];
            --rem[static_cast<size_t>(u)];
            choose(g, rem, v, cand, i + 1, need - 1);
            ++rem[static_cast<size_t>(u)];
            ++rem[static_cast<size_t>(v)];
            g.remove_edge(v, u);
        }
    }
};

std::vector<int> checked_sequence(const EnumerationQuery& q) {
    const int cap = q.cap < 0 ? default_order_cap() : q.cap;
    if (q.sequence.length() > cap)
        throw OrderCapExceeded("sequence length " + std::to_string(q.sequence.length()) +
                               " exceeds the order cap " + std::to_string(cap));
    for (int d : q.sequence.values)
        if (d < 0) throw InvalidParameter("degrees must be non-negative");
    if (q.sequence.sum() % 2 != 0)
        throw OddDegreeSum("no graph realises a sequence with odd degree sum");
    return q.sequence.values;  // already non-increasing
}

std::vector<std::string> passing_sorted(const std::map<std::string, bool>& classes) {
    std::vector<std::string> out;
    for (const auto& [canon, ok] : classes)
        if (ok) out.push_back(canon);
    std::sort(out.begin(), out.end());
    return out;
}

// All neighbor-set choices for vertex 0, used as the parallel work items.
std::vector<std::vector<int>> first_level_choices(const std::vector<int>& target) {
    const int n = static_cast<int>(target.size());
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    std::vector<int> current;
    const int need = target[0];
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (int u = from; u <= n - left; ++u) {
            if (target[static_cast<size_t>(u)] == 0) continue;
            current.push_back(u);
            self(self, u + 1, left - 1);
            current.pop_back();
        }
    };
    rec(rec, 1, need);
    return out;
}

}  // namespace

std::vector<std::string> enumerate_realizations_serial(const EnumerationQuery& q) {
    const std::vector<int> target = checked_sequence(q);
    const int n = static_cast<int>(target.size());
    std::map<std::string, bool> classes;
    AbstractGraph g(n);
    std::vector<int> rem = target;
    Completion c{target, q, classes};
    if (n == 0)
        c.finish(g);
    else
        c.extend(g, rem, 0);
    return passing_sorted(classes);
}

std::vector<std::string> enumerate_realizations(const EnumerationQuery& q) {
    const std::vector<int> target = checked_sequence(q);
    const int n = static_cast<int>(target.size());
    if (n == 0 || target[0] == 0) return enumerate_realizations_serial(q);

    // Partition the search tree at vertex 0's neighbor choice; each work
    // item is completed independently and the per-thread class maps are
    // merged (canonical evaluation is deterministic, so values agree).
    const std::vector<std::vector<int>> items = first_level_choices(target);
    std::vector<std::map<std::string, bool>> partial(items.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
        AbstractGraph g(n);
        std::vector<int> rem = target;
        for (int u : items[static_cast<size_t>(i)]) {
            g.add_edge(0, u);
            --rem[0];
            --rem[static_cast<size_t>(u)];
        }
        std::vector<int> residual(rem.begin() + 1, rem.end());
        if (!graphical(std::move(residual))) continue;
        Completion c{target, q, partial[static_cast<size_t>(i)]};
        c.extend(g, rem, 1);
    }

    std::map<std::string, bool> classes;
    for (const auto& p : partial)
        for (const auto& [canon, ok] : p) classes.emplace(canon, ok);
    return passing_sorted(classes);
}

}  // namespace selfdual
