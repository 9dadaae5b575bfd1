#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfdual/verify.hpp"

namespace selfdual {

namespace {

// Sorted list of unordered edge pairs by vertex id; defined for any map,
// multi-edges included, so the comparison below never needs simplicity.
std::vector<std::pair<int, int>> edge_pairs(const PlanarMap& m) {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) {
        const int u = m.tail(2 * e);
        const int v = m.head(2 * e);
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    return es;
}

void require_index_bijection(const LabeledRadial& r) {
    const int n = r.map.order();
    if (static_cast<int>(r.vclass.size()) != n || static_cast<int>(r.vindex.size()) != n)
        throw MissingLabels("class/index labelling does not cover the map");
    int np = 0, nd = 0;
    for (int v = 0; v < n; ++v) (r.vclass[static_cast<size_t>(v)] == VClass::Primal ? np : nd)++;
    if (np != nd)
        throw MissingLabels("the two vertex classes have different sizes");
    std::vector<char> seen_p(static_cast<size_t>(np) + 1, 0), seen_d(static_cast<size_t>(nd) + 1, 0);
    for (int v = 0; v < n; ++v) {
        const int idx = r.vindex[static_cast<size_t>(v)];
        auto& seen = r.vclass[static_cast<size_t>(v)] == VClass::Primal ? seen_p : seen_d;
        if (idx < 1 || idx >= static_cast<int>(seen.size()) || seen[static_cast<size_t>(idx)])
            throw MissingLabels("class indices are not a bijection onto 1..n");
        seen[static_cast<size_t>(idx)] = 1;
    }
}

}  // namespace

bool is_self_dual(const PlanarMap& m) {
    if (!is_polyhedral_map(m))
        throw NotPolyhedral("self-duality is defined on polyhedral maps only");
    const PlanarMap d = dual(m);
    return isomorphic(underlying(m), underlying(d)).has_value();
}

bool check_phi(const LabeledRadial& r) {
    require_index_bijection(r);
    const PlanarMap p = primal_from_radial(r, VClass::Primal);
    const PlanarMap q = primal_from_radial(r, VClass::Dual);
    // Both extractions place index i at vertex i-1, so the candidate
    // bijection v_i -> f_i is the identity on these ids.
    return edge_pairs(p) == edge_pairs(q);
}

bool check_lemma_leaf(const DegreeTuple& t, const AlgorithmOneResult& run) {
    if (static_cast<int>(run.grown.size()) != t.k())
        throw LabelsUnavailable("run record lacks one grown vertex per entry");
    const AbstractGraph g = underlying(run.primal);
    const InducedSubgraph h = induced_by_degree(g, DegreeClass::AtLeast4);

    std::vector<int> grown_sorted = run.grown;
    std::sort(grown_sorted.begin(), grown_sorted.end());
    if (h.original_ids != grown_sorted) return false;

    std::map<int, int> pos;
    for (size_t i = 0; i < h.original_ids.size(); ++i)
        pos[h.original_ids[i]] = static_cast<int>(i);

    const int k = t.k();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool expected = false;
            if (j == i + 1)
                expected = true;
            else if (j == i + 2)
                expected = t.entries[static_cast<size_t>(i + 1)] == 5;
            else if (j == i + 3)
                expected = t.entries[static_cast<size_t>(i + 1)] == 4 &&
                           t.entries[static_cast<size_t>(i + 2)] == 4;
            const bool actual = h.graph.has_edge(pos.at(run.grown[static_cast<size_t>(i)]),
                                                 pos.at(run.grown[static_cast<size_t>(j)]));
            if (actual != expected) return false;
        }
    return true;
}

std::vector<int> hplus_end_vertex_degrees(const AbstractGraph& g) {
    const InducedSubgraph h = induced_by_degree(g, DegreeClass::AtLeast4);
    std::vector<int> out;
    for (int i = 0; i < h.graph.order(); ++i)
        if (h.graph.degree(i) == 1)
            out.push_back(g.degree(h.original_ids[static_cast<size_t>(i)]));
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

namespace {

// Representatives of the first two isomorphism classes met when realising
// every distinct ordering of the entries, or nullopt if all orderings
// realise the same polyhedron.
std::optional<std::pair<PlanarMap, PlanarMap>> scan_orderings(const std::vector<int>& entries) {
    std::vector<int> perm = entries;
    std::sort(perm.begin(), perm.end());
    std::optional<PlanarMap> first;
    std::string first_canon;
    do {
        PlanarMap m = algorithm_one(DegreeTuple(perm)).primal;
        const std::string canon = canonical_form(underlying(m));
        if (!first) {
            first = std::move(m);
            first_canon = canon;
        } else if (canon != first_canon) {
            return std::make_pair(*first, std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Reordering chooser for non-constant tuples. The first entry of the
// chosen ordering must differ from the second (swapping them must change
// the tuple) and must not be 5 (a second entry of 5 would chord the grown
// path and blur the end-vertex separation); orderings whose third entry
// avoids 4 are preferred for the same reason when there are four or more
// entries.
std::vector<int> choose_ordering(const std::vector<int>& entries) {
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const int k = static_cast<int>(entries.size());
    std::vector<int> first_valid;
    for (int b0 : distinct) {
        if (b0 == 5) continue;
        std::vector<int> rest0 = sorted;
        rest0.erase(std::find(rest0.begin(), rest0.end(), b0));
        std::vector<int> distinct1 = rest0;
        distinct1.erase(std::unique(distinct1.begin(), distinct1.end()), distinct1.end());
        for (int b1 : distinct1) {
            if (b1 == b0) continue;
            std::vector<int> rest = rest0;
            rest.erase(std::find(rest.begin(), rest.end(), b1));
            std::vector<int> b{b0, b1};
            b.insert(b.end(), rest.begin(), rest.end());
            if (k < 4 || b[2] != 4) return b;
            if (first_valid.empty()) first_valid = b;
        }
    }
    return first_valid;  // may be empty; the caller then falls back to scanning
}

}  // namespace

std::pair<PlanarMap, PlanarMap> two_witnesses(const DegreeTuple& t) {
    if (t.k() < 3) throw InvalidTuple("witness pairs need at least three entries");

    const bool constant =
        std::all_of(t.entries.begin(), t.entries.end(), [&](int e) { return e == t.entries[0]; });

    if (constant) {
        const int n = t.entries[0];
        PlanarMap first = algorithm_one(t).primal;
        PlanarMap second = n == 4 ? construct_G(t.k() + 4) : construct_P_prime(n, t.k());
        if (isomorphic(underlying(first), underlying(second)).has_value())
            throw PreconditionViolated("the two constant-tuple constructions coincide");
        return {std::move(first), std::move(second)};
    }

    const std::vector<int> b = choose_ordering(t.entries);
    if (!b.empty()) {
        std::vector<int> a = b;
        std::swap(a[0], a[1]);
        PlanarMap mb = algorithm_one(DegreeTuple(b)).primal;
        PlanarMap ma = algorithm_one(DegreeTuple(a)).primal;
        if (!isomorphic(underlying(mb), underlying(ma)).has_value())
            return {std::move(mb), std::move(ma)};
    }
    if (auto pair = scan_orderings(t.entries)) return std::move(*pair);
    throw PreconditionViolated("all entry orderings realise isomorphic polyhedra");
}

}  // namespace selfdual
