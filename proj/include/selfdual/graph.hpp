#pragma once

#include <string>
#include <vector>

#include "selfdual/errors.hpp"

namespace selfdual {

// Unembedded simple graph on contiguous vertex indices 0..n-1.
// Adjacency is kept symmetric, irreflexive and duplicate-free; neighbor
// lists are kept sorted so that everything downstream is deterministic.
class AbstractGraph {
  public:
    AbstractGraph() = default;
    explicit AbstractGraph(int n) : adj_(static_cast<size_t>(n)) {
        if (n < 0) throw InvalidParameter("graph order must be non-negative");
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    bool has_edge(int u, int v) const;

    // Inserts edge uv. Loops and duplicate edges are rejected: the callers
    // in this library always know whether an edge is new, so a duplicate
    // insert is a bug worth surfacing.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::vector<int> degrees() const;

    // All edges as ordered pairs (u < v), lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order()) throw InvalidParameter("vertex index out of range");
    }

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Multiset of vertex degrees, stored non-increasing.
struct DegreeSequence {
    std::vector<int> values;

    DegreeSequence() = default;
    // Sorts the given values non-increasingly.
    explicit DegreeSequence(std::vector<int> vals);

    int length() const { return static_cast<int>(values.size()); }
    long long sum() const;
    bool operator==(const DegreeSequence& o) const { return values == o.values; }
    bool operator!=(const DegreeSequence& o) const { return !(*this == o); }
    std::string to_string() const;  // e.g. "6,6,3,3,3,3,3,3,3,3"
};

DegreeSequence degree_sequence(const AbstractGraph& g);

// Vertex-induced subgraph selection by degree measured in the *input* graph.
enum class DegreeClass {
    Exactly3,  // vertices of degree exactly 3
    AtLeast4,  // vertices of degree 4 or more
};

struct InducedSubgraph {
    AbstractGraph graph;            // vertices renumbered 0..m-1
    std::vector<int> original_ids;  // position i -> vertex id in the host graph
};

InducedSubgraph induced_by_degree(const AbstractGraph& g, DegreeClass mode);

// Connected components as sorted vertex-id lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const AbstractGraph& g);
bool is_connected(const AbstractGraph& g);

// True iff |V| >= 4 and no vertex set of size <= 2 disconnects the graph,
// by exhaustive removal of all O(V^2) pairs (quadratic method; all callers
// are desk-scale).
bool is_three_connected(const AbstractGraph& g);

// graph6 encoding of a simple graph (standard bit-exact format: order,
// then the upper triangle read column by column, 6 bits per byte, +63).
std::string to_graph6(const AbstractGraph& g);
AbstractGraph from_graph6(const std::string& s);

// DOT rendering (undirected; stable vertex and edge order).
std::string to_dot(const AbstractGraph& g, const std::string& name = "g");

}  // namespace selfdual
