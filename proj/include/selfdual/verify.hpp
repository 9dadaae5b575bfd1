#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "selfdual/constructions.hpp"
#include "selfdual/graph.hpp"
#include "selfdual/planar_map.hpp"

namespace selfdual {

// Canonical bytes: equal iff the graphs are isomorphic. Implemented as
// iterated neighborhood-refinement colouring plus backtracking over
// colour-class orderings, componentwise, taking the lexicographically
// minimal adjacency matrix; the bytes are the graph6 encoding of the
// canonically relabelled graph.
std::string canonical_form(const AbstractGraph& g);

// The canonical relabelling itself: position i holds the canonical index
// of vertex i. canonical_form is to_graph6 of the graph permuted by this.
std::vector<int> canonical_labelling(const AbstractGraph& g);

// A vertex bijection g -> h preserving adjacency both ways, if one exists.
std::optional<std::vector<int>> isomorphic(const AbstractGraph& g,
                                           const AbstractGraph& h);

// Per-connected-component descriptor used to tell subgraphs apart quickly.
struct ComponentDescriptor {
    int order = 0;
    int size = 0;
    std::vector<int> degrees;   // non-increasing, within the component
    int end_vertices = 0;       // vertices of degree 1 in the component
    std::string canonical;      // canonical bytes of the component

    auto tie() const { return std::tie(order, size, degrees, end_vertices, canonical); }
    bool operator==(const ComponentDescriptor& o) const { return tie() == o.tie(); }
    bool operator<(const ComponentDescriptor& o) const { return tie() < o.tie(); }
};

// Canonical multiset of component descriptors. Equal fingerprints iff
// isomorphic graphs (the canonical bytes make the descriptor exact).
struct Fingerprint {
    std::vector<ComponentDescriptor> components;  // sorted

    bool operator==(const Fingerprint& o) const { return components == o.components; }
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
    std::string to_string() const;
};

Fingerprint component_fingerprint(const AbstractGraph& g);

// True iff the polyhedral map m is isomorphic to its dual.
// Raises NotPolyhedral on non-polyhedral input.
bool is_self_dual(const PlanarMap& m);

// True iff v_i -> f_i is an adjacency-preserving bijection from the primal
// extraction of r onto its dual extraction. Raises MissingLabels when the
// index labelling is absent or not a bijection with equal class sizes.
bool check_phi(const LabeledRadial& r);

// True iff the grown vertices u_1..u_k of a construction run exhibit
// exactly the documented adjacency pattern: u_i ~ u_{i+1} always;
// u_i ~ u_{i+2} iff t_{i+1} = 5; u_i ~ u_{i+3} iff t_{i+1} = t_{i+2} = 4;
// and no other pair is adjacent. Raises LabelsUnavailable when the run
// record lacks the grown-vertex history.
bool check_lemma_leaf(const DegreeTuple& t, const AlgorithmOneResult& run);

// A rotation system witnessing planarity of a connected simple graph, or
// nullopt when the graph is non-planar. Face-by-face insertion with
// admissible-face counting on each block, blocks merged at cut vertices.
std::optional<PlanarMap> planar_embed(const AbstractGraph& g);

// The default enumeration order cap (11), overridable by the
// SELFDUAL_ORDER_CAP environment variable.
int default_order_cap();

struct EnumerationQuery {
    DegreeSequence sequence;
    bool planar = false;
    bool three_connected = false;
    bool self_dual = false;    // implies the polyhedral checks run first
    int cap = -1;              // -1: use default_order_cap()
};

// Every isomorphism class of simple graphs realising the degree sequence
// and passing the requested filters, exactly once, as sorted canonical
// graph6 lines. Exhaustive: degree-constrained edge-addition backtracking
// with remaining-degree feasibility pruning and canonical deduplication.
// The _serial variant is the single-threaded reference; the plain one
// partitions the backtracking tree across threads when OpenMP is enabled
// and returns the identical list.
std::vector<std::string> enumerate_realizations_serial(const EnumerationQuery& q);
std::vector<std::string> enumerate_realizations(const EnumerationQuery& q);

// Two non-isomorphic self-dual polyhedral realisations of the sequence of
// T (k >= 3): distinct entry orderings when T is non-constant, the
// green-seeded construction against the cube-seeded one for constant
// entries >= 5, and the quad-heavy family against the cube-seeded one for
// constant 4s. Non-isomorphism is always re-verified by the full test.
std::pair<PlanarMap, PlanarMap> two_witnesses(const DegreeTuple& t);

// Degrees (in the host graph) of the end-vertices of the subgraph induced
// by vertices of degree >= 4 — the quick separator used for realisations
// of reordered tuples. Sorted non-increasing.
std::vector<int> hplus_end_vertex_degrees(const AbstractGraph& g);

}  // namespace selfdual
