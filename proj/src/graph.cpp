#include "selfdual/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace selfdual {

bool AbstractGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

void AbstractGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidParameter("loop edges are not allowed");
    if (has_edge(u, v)) throw InvalidParameter("duplicate edge insert");
    auto ins = [](std::vector<int>& a, int x) {
        a.insert(std::upper_bound(a.begin(), a.end(), x), x);
    };
    ins(adj_[static_cast<size_t>(u)], v);
    ins(adj_[static_cast<size_t>(v)], u);
    ++edge_count_;
}

void AbstractGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw InvalidParameter("removing a non-edge");
    auto del = [](std::vector<int>& a, int x) {
        a.erase(std::lower_bound(a.begin(), a.end(), x));
    };
    del(adj_[static_cast<size_t>(u)], v);
    del(adj_[static_cast<size_t>(v)], u);
    --edge_count_;
}

std::vector<int> AbstractGraph::degrees() const {
    std::vector<int> d(static_cast<size_t>(order()));
    for (int v = 0; v < order(); ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

std::vector<std::pair<int, int>> AbstractGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(size()));
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeSequence::DegreeSequence(std::vector<int> vals) : values(std::move(vals)) {
    std::sort(values.begin(), values.end(), std::greater<int>());
}

long long DegreeSequence::sum() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    return os.str();
}

DegreeSequence degree_sequence(const AbstractGraph& g) {
    return DegreeSequence(g.degrees());
}

InducedSubgraph induced_by_degree(const AbstractGraph& g, DegreeClass mode) {
    InducedSubgraph out;
    std::vector<int> new_id(static_cast<size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        const bool take = mode == DegreeClass::Exactly3 ? g.degree(v) == 3
                                                        : g.degree(v) >= 4;
        if (take) {
            new_id[static_cast<size_t>(v)] = static_cast<int>(out.original_ids.size());
            out.original_ids.push_back(v);
        }
    }
    out.graph = AbstractGraph(static_cast<int>(out.original_ids.size()));
    for (int v : out.original_ids)
        for (int w : g.neighbors(v)) {
            const int nv = new_id[static_cast<size_t>(v)];
            const int nw = new_id[static_cast<size_t>(w)];
            if (nw >= 0 && nv < nw) out.graph.add_edge(nv, nw);
        }
    return out;
}

std::vector<std::vector<int>> connected_components(const AbstractGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const AbstractGraph& g) {
    return g.order() == 0 || connected_components(g).size() == 1;
}

namespace {

// Is g minus the (optional) removed pair still connected on the rest?
bool connected_without(const AbstractGraph& g, int x, int y) {
    const int n = g.order();
    std::vector<char> blocked(static_cast<size_t>(n), 0);
    if (x >= 0) blocked[static_cast<size_t>(x)] = 1;
    if (y >= 0) blocked[static_cast<size_t>(y)] = 1;
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!blocked[static_cast<size_t>(v)]) {
            ++remaining;
            if (start < 0) start = v;
        }
    if (remaining == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(start);
    seen[static_cast<size_t>(start)] = 1;
    int visited = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++visited;
        for (int w : g.neighbors(v))
            if (!blocked[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                q.push(w);
            }
    }
    return visited == remaining;
}

}  // namespace

bool is_three_connected(const AbstractGraph& g) {
    const int n = g.order();
    if (n < 4) return false;
    if (!connected_without(g, -1, -1)) return false;
    for (int x = 0; x < n; ++x)
        if (!connected_without(g, x, -1)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!connected_without(g, x, y)) return false;
    return true;
}

// --- graph6 ------------------------------------------------------------------

std::string to_graph6(const AbstractGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw InvalidParameter("graph too large for this graph6 writer");
    }
    int bit = 5;
    unsigned char cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<unsigned char>(1u << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

AbstractGraph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw InvalidParameter("truncated graph6 string");
    };
    need(1);
    int n;
    if (static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        need(3);
        n = 0;
        for (int t = 0; t < 3; ++t) {
            int c = static_cast<unsigned char>(s[pos++]) - 63;
            if (c < 0 || c > 63) throw InvalidParameter("bad graph6 byte");
            n = (n << 6) | c;
        }
    } else {
        n = static_cast<unsigned char>(s[pos++]) - 63;
        if (n < 0 || n > 62) throw InvalidParameter("bad graph6 order byte");
    }
    AbstractGraph g(n);
    int bit = 5;
    int cur = 0;
    bool have = false;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (!have) {
                need(1);
                cur = static_cast<unsigned char>(s[pos++]) - 63;
                if (cur < 0 || cur > 63) throw InvalidParameter("bad graph6 byte");
                have = true;
                bit = 5;
            }
            if (cur & (1 << bit)) g.add_edge(i, j);
            if (--bit < 0) have = false;
        }
    return g;
}

std::string to_dot(const AbstractGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace selfdual
