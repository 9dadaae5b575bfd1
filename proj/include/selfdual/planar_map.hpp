#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfdual/errors.hpp"
#include "selfdual/graph.hpp"

namespace selfdual {

// An embedded planar (genus-0) connected graph as a combinatorial map.
//
// Edge i owns darts 2i and 2i+1, which are each other's twins; twin(d) is
// d XOR 1. Every dart has a tail vertex, and sigma(d) is the next dart
// counter-clockwise around that tail. Faces are the orbits of
// phi = sigma . twin; construction fails unless V - E + F = 2, which is the
// planarity gate for maps given by rotation systems.
class PlanarMap {
  public:
    // An empty placeholder map; every real map comes from a builder below.
    PlanarMap() = default;

    int order() const { return vertex_count_; }          // V
    int size() const { return dart_count() / 2; }        // E
    int dart_count() const { return static_cast<int>(tail_.size()); }
    int face_count() const { return face_count_; }       // F

    static int twin(int d) { return d ^ 1; }
    int sigma(int d) const { return sigma_[static_cast<size_t>(d)]; }
    int sigma_inv(int d) const { return sigma_inv_[static_cast<size_t>(d)]; }
    int tail(int d) const { return tail_[static_cast<size_t>(d)]; }
    int head(int d) const { return tail(twin(d)); }
    int phi(int d) const { return sigma(twin(d)); }      // next dart along the face

    int degree(int v) const { return degree_[static_cast<size_t>(v)]; }
    // Some dart whose tail is v (the smallest id).
    int dart_at(int v) const { return first_dart_[static_cast<size_t>(v)]; }
    // Darts with tail v in rotation (sigma) order, starting at dart_at(v).
    std::vector<int> darts_at(int v) const;
    // Neighbors of v in rotation order (with multiplicity for multi-edges).
    std::vector<int> neighbors_in_order(int v) const;

    int face_of(int d) const { return face_of_[static_cast<size_t>(d)]; }
    // The length (number of darts) of face f.
    int face_size(int f) const { return face_size_[static_cast<size_t>(f)]; }
    // One representative dart per face (the smallest id in the orbit).
    int face_dart(int f) const { return face_dart_[static_cast<size_t>(f)]; }

    // No loops and no parallel edges.
    bool simple() const { return simple_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    void set_labels(std::vector<std::string> labels);

    // Looks up the dart v->w with the smallest id, or -1.
    int find_dart(int v, int w) const;

    // Internal-ish constructor from raw arrays; validates everything
    // (twin consistency, orbit structure, Euler). Public builders below
    // are the intended entry points.
    static PlanarMap from_arrays(std::vector<int> tail, std::vector<int> sigma,
                                 int vertex_count,
                                 std::vector<std::string> labels = {});

  private:
    std::vector<int> tail_, sigma_, sigma_inv_;
    std::vector<int> first_dart_, degree_;
    std::vector<int> face_of_, face_size_, face_dart_;
    std::vector<std::string> labels_;
    int vertex_count_ = 0;
    int face_count_ = 0;
    bool simple_ = false;
};

// Builds a map from per-vertex cyclic neighbor lists. Multi-edges are
// paired first-unmatched along each list pair; asymmetric incidence counts
// raise InconsistentRotation, and a failed Euler count raises
// NonPlanarEmbedding.
PlanarMap build_map(const std::vector<std::vector<int>>& rotation,
                    std::vector<std::string> labels = {});

// Builds the unique map whose face set is the given list of boundary walks
// (cyclic vertex lists over vertices 0..n-1). Each undirected edge must be
// covered exactly twice; walks are oriented coherently by propagation, so
// the caller may list them in either sense.
PlanarMap map_from_faces(int n, const std::vector<std::vector<int>>& face_walks,
                         std::vector<std::string> labels = {});

// One boundary walk per face: the cyclic sequence of tail vertices along
// the face orbit, starting at the face's representative dart.
std::vector<std::vector<int>> faces(const PlanarMap& m);

DegreeSequence degree_sequence(const PlanarMap& m);

// Simple graph on the same vertices, forgetting the embedding.
// Requires a simple map.
AbstractGraph underlying(const PlanarMap& m);

// The dual map: one vertex per face, one edge per edge, rotations induced
// by the face orbits. dual(dual(m)) is isomorphic to m. The result may be
// non-simple when m is not 3-connected; its `simple` flag says.
PlanarMap dual(const PlanarMap& m);

// Vertex class of a labelled radial: primal vertices came from vertices of
// the original map, dual vertices from its faces.
enum class VClass : unsigned char { Primal = 0, Dual = 1 };

// The six cursor roles steering the growth surgery, stored as vertex ids.
struct Cursor {
    int a, A, b, B, c, C;
};

// A bipartite quadrangulation with per-vertex class and per-class 1-based
// index labels, plus (optionally) the six-vertex cursor. This is the
// working state of the tuple-driven construction; `radial` also returns
// one (cursor-less) for any 2-connected map.
struct LabeledRadial {
    PlanarMap map;
    std::vector<VClass> vclass;   // per vertex of `map`
    std::vector<int> vindex;      // per vertex: 1-based index within its class
    std::optional<Cursor> cursor;

    int class_size(VClass c) const;
    // Vertex id of the class member with the given 1-based index, or -1.
    int vertex_by(VClass c, int index) const;
    // Human-readable vertex label, "v<i>" or "f<i>".
    std::string label_of(int v) const;
};

// The vertex-face incidence map of a 2-connected map m: one vertex per
// vertex of m, one per face, one edge per incidence, every face a 4-gon.
// Raises NotTwoConnected otherwise.
LabeledRadial radial(const PlanarMap& m);

// Extracts the map induced on one class of a bipartite quadrangulation:
// two class members are adjacent iff they are opposite corners of a face.
// The embedding is inherited; vertex i of the result is the class member
// with index i+1, and its label is set accordingly.
PlanarMap primal_from_radial(const LabeledRadial& r, VClass side = VClass::Primal);

// Validates the full labelled-radial invariant bundle (bipartite between
// classes, all faces 4-gons, index labelling bijective with equal class
// sizes, and, when a cursor is present, its hexagon configuration).
// Throws the specific error; returns normally when all hold.
void validate_labeled_radial(const LabeledRadial& r);

// Replaces edge ab by a fresh degree-3 vertex d adjacent to a, b and a
// third vertex c lying on a face bounded by ab. The output keeps all
// other degrees except deg(c), which grows by one, and is polyhedral
// whenever the input is.
PlanarMap edge_split(const PlanarMap& m, int a, int b, int c);

// True iff m is simple and its underlying graph is 3-connected (Euler
// validity is guaranteed by construction).
bool is_polyhedral_map(const PlanarMap& m);

// True iff every 4-cycle of the quadrangulation r bounds a face,
// enumerated via common-neighbor pairs on each side of the bipartition.
bool every_four_cycle_bounds_face(const LabeledRadial& r);

// --- serialisation ---------------------------------------------------------

// Text format: one vertex per line, "label: n1 n2 n3 ..." with the cyclic
// neighbor list in rotation order. Round-trips exactly through build_map.
std::string write_map_text(const PlanarMap& m);
PlanarMap read_map_text(const std::string& text);

// The same data as JSON: {"vertices":[{"label":..., "neighbors":[...]}]}.
std::string write_map_json(const PlanarMap& m);
PlanarMap read_map_json(const std::string& text);

// DOT rendering of the underlying graph with the map's labels.
std::string map_to_dot(const PlanarMap& m, const std::string& name = "m");

}  // namespace selfdual
