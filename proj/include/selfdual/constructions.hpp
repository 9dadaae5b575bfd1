#pragma once

#include <vector>

#include "selfdual/planar_map.hpp"

namespace selfdual {

// Input tuple T = (t_1,...,t_k) of target degrees, every entry >= 4.
// The realised polyhedron has degree sequence t_1,...,t_k,3^m with
// m = 4 + sum(t_i - 4): these are the only sequences of the shape at hand
// compatible with Euler's formula and the handshaking lemma.
struct DegreeTuple {
    std::vector<int> entries;

    DegreeTuple() = default;
    explicit DegreeTuple(std::vector<int> e);

    int k() const { return static_cast<int>(entries.size()); }
    int m() const;                         // 4 + sum(entries_i - 4)
    int target_order() const { return k() + m(); }
    DegreeSequence target_sequence() const;  // entries + 3^m, non-increasing
};

// The 8-vertex bipartite quadrangulation (the cube) labelled
// v1,f1,...,v4,f4, with the cursor a:=v2, A:=f2, c:=v3, C:=f3, b:=v4,
// B:=f4 and v1 adjacent to f1,f2,f3. This is the seed of the tuple-driven
// construction: its primal extraction is the tetrahedron.
LabeledRadial seed_cube();

// One growth surgery: removes chord bB, inserts a fresh primal/dual vertex
// pair (next free index in each class), and rewires so that deg(c) and
// deg(C) grow by one while every other pre-existing degree is unchanged.
// The result is again a labelled radial satisfying all invariants.
LabeledRadial z_transform(const LabeledRadial& r);

// Cursor reassignment after a growth surgery. Continue keeps c,C growing;
// Advance freezes the grown pair (old c,C become a,A) and promotes the
// next pair to grow. Pure relabelling: the map is untouched.
enum class RelabelMode { Continue, Advance };
LabeledRadial relabel_after_z(const LabeledRadial& r, RelabelMode mode);

// Full run record of the tuple-driven construction.
struct AlgorithmOneResult {
    LabeledRadial radial;      // the final labelled radial
    PlanarMap primal;          // the realised polyhedron P(T)
    std::vector<int> grown;    // primal-map vertex ids of u_1..u_k, in order
    long long edit_count = 0;  // elementary pointer edits spent on surgeries
};

struct AlgorithmOneOptions {
    // Re-validate the complete labelled-radial invariant bundle after every
    // single surgery (slow; meant for tests).
    bool checked = false;
};

// Runs the construction: for each entry t_i, applies the growth surgery
// t_i - 3 times, relabelling Continue between applications of one entry and
// Advance between entries (no relabelling after the last entry). The empty
// tuple returns the untouched seed (primal: tetrahedron). Work is constant
// per surgery, so the whole run is linear in the output order.
AlgorithmOneResult algorithm_one(const DegreeTuple& t,
                                 const AlgorithmOneOptions& opts = {});
AlgorithmOneResult algorithm_one(const DegreeTuple& t, const LabeledRadial& seed,
                                 const AlgorithmOneOptions& opts = {});

// The relabelled radial of S(n,n), n >= 5: its edge set is the
// (4n-4)-cycle v1,f2,v3,f4,...,v_{2n-3},f_{2n-2},v_{2n-2},f_{2n-3},...,v2,f1
// plus four fans (v1-f_i and f1-v_i for odd i in [3,2n-3]; v_{2n-2}-f_i and
// f_{2n-2}-v_i for even i in [2,2n-4]), cursor a:=v2, A:=f2, b:=v1, B:=f1,
// c:=v3, C:=f3. Seeding the construction here instead of at the cube yields
// realisations that differ from the cube-seeded ones.
LabeledRadial seed_green(int n);

// The alternative self-dual realisation of the constant sequence
// n^k,3^{4+k(n-4)} for n >= 5, k >= 3: the tuple-driven construction run on
// seed_green(n) with the constant (k-2)-tuple (n,...,n).
PlanarMap construct_P_prime(int n, int k);

// The two-adjacent-large-faces polyhedron S(x,y), x >= y >= 3: one x-gon
// and one y-gon sharing an edge, all other faces triangles; self-dual with
// degree sequence x,y,3^{x+y-4}. S(x,3) degenerates to the x-gonal wheel.
PlanarMap construct_S(int x, int y);

// Q(x,y) = S(x,y-1) with edge v3v4 split towards v1 (x >= y >= 4): same
// degree sequence x,y,3^{x+y-4} as S(x,y) but not self-dual once x >= 5.
PlanarMap construct_Q(int x, int y);

// A polyhedral map together with an ordering of its faces f_1..f_r
// (each stored as its boundary walk); vertex v_i is map vertex i-1.
struct LabeledPolyhedron {
    PlanarMap map;
    std::vector<std::vector<int>> face_walks;  // position i -> f_{i+1}
};

// One step of the quad-heavy family's growth: on input with p vertices,
// splits the triangle face f1 = [v_{p-2},v_{p-1},v_p] through its
// v_{p-2}v_{p-1} edge towards v_p, so that v_{p+1} appears with
// g1 = [v_{p-1},v_p,v_{p+1}] and g2 = [v_{p-2},v_p,v_{p+1}] as new faces,
// and relabels g_i := f_{i-1} for i >= 3. Raises PreconditionViolated if
// the triangle is absent or mislabelled.
LabeledPolyhedron algorithm_two_step(const LabeledPolyhedron& g);

// The labelled base G6 (S(4,4) relabelled so the degree-3 path sits on
// v1,v2,v3 and f1 = [v4,v5,v6] is the first split triangle).
LabeledPolyhedron construct_G_base();

// G_p for p >= 6: the (p-6)-fold iteration of the step above; self-dual
// with degree sequence 4^{p-4},3^4, and H3(G_p) is a 3-vertex path plus an
// isolated vertex for p >= 7.
PlanarMap construct_G(int p);

}  // namespace selfdual
