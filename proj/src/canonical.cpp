#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "selfdual/verify.hpp"

namespace selfdual {

namespace {

// Iterated neighborhood refinement: colours are 0-based ranks; a vertex's
// signature is (own colour, sorted neighbor colours), and signatures are
// re-ranked lexicographically until the partition is stable. The ranking
// depends only on the coloured graph, never on vertex ids.
void refine(const AbstractGraph& g, std::vector<int>& colour) {
    const int n = g.order();
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, colour[static_cast<size_t>(v)] + 1);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.neighbors(v).size() + 1);
            s.push_back(colour[static_cast<size_t>(v)]);
            for (int u : g.neighbors(v)) s.push_back(colour[static_cast<size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
            sig[static_cast<size_t>(v)] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        int next = -1;
        std::vector<int> fresh(static_cast<size_t>(n));
        const std::vector<int>* prev = nullptr;
        for (const auto& [s, v] : sorted) {
            if (!prev || *prev != s) ++next;
            fresh[static_cast<size_t>(v)] = next;
            prev = &s;
        }
        if (next + 1 == classes) {
            colour = std::move(fresh);
            return;
        }
        classes = next + 1;
        colour = std::move(fresh);
    }
}

bool is_discrete(const std::vector<int>& colour) {
    const int n = static_cast<int>(colour.size());
    for (int c : colour)
        if (c < 0 || c >= n) return false;
    std::vector<char> seen(colour.size(), 0);
    for (int c : colour) {
        if (seen[static_cast<size_t>(c)]) return false;
        seen[static_cast<size_t>(c)] = 1;
    }
    return true;
}

// Upper-triangle adjacency bits (row-major in canonical order) under the
// labelling colour: vertex v sits at position colour[v].
std::string adjacency_bytes(const AbstractGraph& g, const std::vector<int>& colour) {
    const int n = g.order();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<size_t>(colour[static_cast<size_t>(v)])] = v;
    std::string bits;
    bits.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back(g.has_edge(inv[static_cast<size_t>(i)], inv[static_cast<size_t>(j)])
                               ? '1'
                               : '0');
    return bits;
}

// Individualization-refinement search over orderings compatible with the
// stable colouring, keeping the lexicographically smallest adjacency
// string. Exhaustive over the first non-singleton class at each level, so
// the result is label-independent.
void search(const AbstractGraph& g, std::vector<int> colour, std::string& best_bits,
            std::vector<int>& best_colour) {
    refine(g, colour);
    if (is_discrete(colour)) {
        std::string bits = adjacency_bytes(g, colour);
        if (best_bits.empty() || bits < best_bits) {
            best_bits = std::move(bits);
            best_colour = std::move(colour);
        }
        return;
    }
    // Target cell: the smallest colour with more than one member.
    const int n = g.order();
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : colour) ++count[static_cast<size_t>(c)];
    int target = 0;
    while (count[static_cast<size_t>(target)] <= 1) ++target;
    for (int v = 0; v < n; ++v) {
        if (colour[static_cast<size_t>(v)] != target) continue;
        std::vector<int> child = colour;
        for (int u = 0; u < n; ++u) {
            if (child[static_cast<size_t>(u)] > target)
                ++child[static_cast<size_t>(u)];
            else if (child[static_cast<size_t>(u)] == target && u != v)
                ++child[static_cast<size_t>(u)];
        }
        search(g, std::move(child), best_bits, best_colour);
    }
}

// Canonical labelling of one connected (or any) graph as a standalone object.
std::vector<int> canonical_labelling_whole(const AbstractGraph& g) {
    const int n = g.order();
    if (n == 0) return {};
    // Initial colouring by degree rank.
    std::vector<int> deg_sorted = g.degrees();
    std::sort(deg_sorted.begin(), deg_sorted.end());
    deg_sorted.erase(std::unique(deg_sorted.begin(), deg_sorted.end()), deg_sorted.end());
    std::vector<int> colour(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        colour[static_cast<size_t>(v)] = static_cast<int>(
            std::lower_bound(deg_sorted.begin(), deg_sorted.end(), g.degree(v)) -
            deg_sorted.begin());
    std::string best_bits;
    std::vector<int> best_colour;
    search(g, std::move(colour), best_bits, best_colour);
    return best_colour;
}

struct SubgraphView {
    AbstractGraph graph;
    std::vector<int> original_ids;  // local -> host
};

SubgraphView subgraph_on(const AbstractGraph& g, const std::vector<int>& vertices) {
    SubgraphView s;
    s.original_ids = vertices;
    s.graph = AbstractGraph(static_cast<int>(vertices.size()));
    std::map<int, int> local;
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.neighbors(vertices[i])) {
            auto it = local.find(u);
            if (it != local.end() && it->second > static_cast<int>(i))
                s.graph.add_edge(static_cast<int>(i), it->second);
        }
    return s;
}

AbstractGraph permuted(const AbstractGraph& g, const std::vector<int>& lab) {
    AbstractGraph h(g.order());
    for (const auto& [u, v] : g.edges())
        h.add_edge(lab[static_cast<size_t>(u)], lab[static_cast<size_t>(v)]);
    return h;
}

}  // namespace

std::vector<int> canonical_labelling(const AbstractGraph& g) {
    // Componentwise: each component is canonicalized on its own, and the
    // components are ordered by (order, canonical bytes), ties broken by
    // smallest original vertex id (which cannot change the resulting
    // canonical graph: tied components are isomorphic interchangeable blocks).
    struct Comp {
        SubgraphView view;
        std::vector<int> lab;  // local canonical labelling
        std::string bytes;     // canonical graph6 of the component
        int min_id;
    };
    std::vector<Comp> comps;
    for (const auto& vertices : connected_components(g)) {
        Comp c;
        c.view = subgraph_on(g, vertices);
        c.lab = canonical_labelling_whole(c.view.graph);
        c.bytes = to_graph6(permuted(c.view.graph, c.lab));
        c.min_id = vertices.front();
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
        if (a.view.graph.order() != b.view.graph.order())
            return a.view.graph.order() < b.view.graph.order();
        if (a.bytes != b.bytes) return a.bytes < b.bytes;
        return a.min_id < b.min_id;
    });
    std::vector<int> lab(static_cast<size_t>(g.order()));
    int offset = 0;
    for (const auto& c : comps) {
        for (size_t i = 0; i < c.view.original_ids.size(); ++i)
            lab[static_cast<size_t>(c.view.original_ids[i])] = offset + c.lab[i];
        offset += c.view.graph.order();
    }
    return lab;
}

std::string canonical_form(const AbstractGraph& g) {
    return to_graph6(permuted(g, canonical_labelling(g)));
}

std::optional<std::vector<int>> isomorphic(const AbstractGraph& g, const AbstractGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (canonical_form(g) != canonical_form(h)) return std::nullopt;
    const std::vector<int> lg = canonical_labelling(g);
    const std::vector<int> lh = canonical_labelling(h);
    std::vector<int> inv_h(static_cast<size_t>(h.order()));
    for (int v = 0; v < h.order(); ++v) inv_h[static_cast<size_t>(lh[static_cast<size_t>(v)])] = v;
    std::vector<int> bij(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        bij[static_cast<size_t>(v)] = inv_h[static_cast<size_t>(lg[static_cast<size_t>(v)])];
    // The composition must be a genuine isomorphism; verify edge by edge.
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(bij[static_cast<size_t>(u)], bij[static_cast<size_t>(v)]))
            return std::nullopt;
    return bij;
}

Fingerprint component_fingerprint(const AbstractGraph& g) {
    Fingerprint fp;
    for (const auto& vertices : connected_components(g)) {
        SubgraphView view = subgraph_on(g, vertices);
        ComponentDescriptor d;
        d.order = view.graph.order();
        d.size = view.graph.size();
        d.degrees = view.graph.degrees();
        std::sort(d.degrees.begin(), d.degrees.end(), std::greater<int>());
        d.end_vertices = static_cast<int>(
            std::count(d.degrees.begin(), d.degrees.end(), 1));
        d.canonical = canonical_form(view.graph);
        fp.components.push_back(std::move(d));
    }
    std::sort(fp.components.begin(), fp.components.end());
    return fp;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (i) os << ", ";
        os << "(n=" << c.order << " m=" << c.size << " deg=";
        for (size_t j = 0; j < c.degrees.size(); ++j)
            os << (j ? "," : "") << c.degrees[j];
        os << " ends=" << c.end_vertices << " canon=" << c.canonical << ")";
    }
    os << "}";
    return os.str();
}

}  // namespace selfdual
