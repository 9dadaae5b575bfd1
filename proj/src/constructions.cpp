#include "selfdual/constructions.hpp"

#include <algorithm>
#include <set>

#include "map_edit.hpp"

namespace selfdual {

// --- degree tuples -----------------------------------------------------------

DegreeTuple::DegreeTuple(std::vector<int> e) : entries(std::move(e)) {
    for (int t : entries)
        if (t < 4) throw InvalidTuple("every tuple entry must be at least 4");
}

int DegreeTuple::m() const {
    int m = 4;
    for (int t : entries) m += t - 4;
    return m;
}

DegreeSequence DegreeTuple::target_sequence() const {
    std::vector<int> v = entries;
    v.insert(v.end(), static_cast<size_t>(m()), 3);
    return DegreeSequence(std::move(v));
}

// --- the seed ----------------------------------------------------------------

LabeledRadial seed_cube() {
    // Vertices 0..3 are v1..v4, 4..7 are f1..f4; rotations are ccw.
    const std::vector<std::vector<int>> rotation = {
        {4, 5, 6},  // v1: f1 f2 f3
        {4, 6, 7},  // v2: f1 f3 f4
        {4, 7, 5},  // v3: f1 f4 f2
        {5, 7, 6},  // v4: f2 f4 f3
        {0, 1, 2},  // f1: v1 v2 v3
        {0, 2, 3},  // f2: v1 v3 v4
        {0, 3, 1},  // f3: v1 v4 v2
        {1, 3, 2},  // f4: v2 v4 v3
    };
    LabeledRadial r;
    r.map = build_map(rotation, {"v1", "v2", "v3", "v4", "f1", "f2", "f3", "f4"});
    r.vclass = {VClass::Primal, VClass::Primal, VClass::Primal, VClass::Primal,
                VClass::Dual,   VClass::Dual,   VClass::Dual,   VClass::Dual};
    r.vindex = {1, 2, 3, 4, 1, 2, 3, 4};
    Cursor cur;
    cur.a = 1;  // v2
    cur.A = 5;  // f2
    cur.b = 3;  // v4
    cur.B = 7;  // f4
    cur.c = 2;  // v3
    cur.C = 6;  // f3
    r.cursor = cur;
    return r;
}

// --- the growth surgery ------------------------------------------------------

namespace {

// Applies one growth surgery in place. The cursor's chord bB is removed, a
// fresh primal/dual pair (d, D) is inserted, and the rewiring follows the
// local orientation: the face walk leaving the chord at B reaches either c
// (one handedness) or a (its mirror image). Returns the new pair (d, D).
std::pair<int, int> z_apply(detail::MutableMap& m, const Cursor& cur) {
    const int b_to_B = m.find_dart(cur.b, cur.B);
    if (b_to_B < 0) throw InvalidCursor("cursor chord bB is not an edge");
    const int B_to_b = detail::MutableMap::twin(b_to_B);

    const int across = m.phi(b_to_B);  // dart at B, along the face left of b->B
    const bool toward_c = m.head(across) == cur.c;
    if (!toward_c && m.head(across) != cur.a)
        throw InvalidCursor("chord faces do not match the hexagon configuration");

    const int dv = m.new_vertex(VClass::Primal, m.max_index_primal + 1);
    const int Dv = m.new_vertex(VClass::Dual, m.max_index_dual + 1);
    const auto [d_to_B, B_to_d] = m.new_edge(dv, cur.B);
    const auto [d_to_C, C_to_d] = m.new_edge(dv, cur.C);
    const auto [d_to_D, D_to_d] = m.new_edge(dv, Dv);
    const auto [b_to_D, D_to_b] = m.new_edge(cur.b, Dv);
    const auto [c_to_D, D_to_c] = m.new_edge(cur.c, Dv);

    if (toward_c) {
        const int c_to_B = detail::MutableMap::twin(across);
        const int b_to_C = m.find_dart(cur.b, cur.C);
        if (b_to_C < 0) throw InvalidCursor("hexagon edge bC is missing");
        const int C_to_b = detail::MutableMap::twin(b_to_C);
        m.replace_slot(b_to_B, b_to_D);
        m.replace_slot(B_to_b, B_to_d);
        m.insert_after(c_to_B, c_to_D);
        m.insert_after(C_to_b, C_to_d);
        m.set_rotation3(dv, d_to_B, d_to_C, d_to_D);
        m.set_rotation3(Dv, D_to_b, D_to_c, D_to_d);
    } else {
        const int c_to_A = m.find_dart(cur.c, cur.A);
        const int a_to_C = m.find_dart(cur.a, cur.C);
        if (c_to_A < 0 || a_to_C < 0) throw InvalidCursor("hexagon edge cA or Ca is missing");
        const int C_to_a = detail::MutableMap::twin(a_to_C);
        m.replace_slot(b_to_B, b_to_D);
        m.replace_slot(B_to_b, B_to_d);
        m.insert_after(c_to_A, c_to_D);
        m.insert_after(C_to_a, C_to_d);
        m.set_rotation3(dv, d_to_C, d_to_B, d_to_D);
        m.set_rotation3(Dv, D_to_c, D_to_b, D_to_d);
    }
    return {dv, Dv};
}

std::set<int> face_vertex_set(const PlanarMap& m, int dart) {
    std::set<int> s;
    int d = dart;
    do {
        s.insert(m.tail(d));
        d = m.phi(d);
    } while (d != dart);
    return s;
}

// Checks everything z_transform needs from the cursor: classes, the
// hexagon, the chord, and that the chord's two sides are exactly the
// quadrangular faces {a,B,b,C} and {c,A,b,B}.
void require_z_config(const LabeledRadial& r) {
    if (!r.cursor) throw InvalidCursor("the surgery needs a cursor");
    const Cursor& cur = *r.cursor;
    const PlanarMap& m = r.map;
    for (int v : {cur.a, cur.b, cur.c, cur.A, cur.B, cur.C})
        if (v < 0 || v >= m.order()) throw InvalidCursor("cursor vertex out of range");
    auto cls = [&](int v) { return r.vclass[static_cast<size_t>(v)]; };
    if (cls(cur.a) != VClass::Primal || cls(cur.b) != VClass::Primal ||
        cls(cur.c) != VClass::Primal || cls(cur.A) != VClass::Dual ||
        cls(cur.B) != VClass::Dual || cls(cur.C) != VClass::Dual)
        throw InvalidCursor("cursor roles sit in the wrong classes");
    auto edge = [&](int u, int v) { return m.find_dart(u, v) >= 0; };
    if (!edge(cur.a, cur.B) || !edge(cur.B, cur.c) || !edge(cur.c, cur.A) ||
        !edge(cur.A, cur.b) || !edge(cur.b, cur.C) || !edge(cur.C, cur.a))
        throw InvalidCursor("cursor hexagon edge missing");
    const int chord = m.find_dart(cur.b, cur.B);
    if (chord < 0) throw InvalidCursor("cursor chord bB is not an edge");
    const std::set<int> q1 = {cur.a, cur.B, cur.b, cur.C};
    const std::set<int> q2 = {cur.c, cur.A, cur.b, cur.B};
    const std::set<int> s1 = face_vertex_set(m, chord);
    const std::set<int> s2 = face_vertex_set(m, PlanarMap::twin(chord));
    if (!((s1 == q1 && s2 == q2) || (s1 == q2 && s2 == q1)))
        throw InvalidCursor("the chord's sides are not the expected quadrangles");
}

}  // namespace

LabeledRadial z_transform(const LabeledRadial& r) {
    require_z_config(r);
    detail::MutableMap m = detail::MutableMap::from(r);
    z_apply(m, *r.cursor);
    LabeledRadial out = m.freeze();
    out.cursor = r.cursor;  // vertex ids are stable under the surgery
    return out;
}

LabeledRadial relabel_after_z(const LabeledRadial& r, RelabelMode mode) {
    if (!r.cursor) throw InvalidCursor("relabelling needs a cursor");
    int dv = -1, Dv = -1;
    for (int v = 0; v < r.map.order(); ++v) {
        int& best = r.vclass[static_cast<size_t>(v)] == VClass::Primal ? dv : Dv;
        if (best < 0 || r.vindex[static_cast<size_t>(v)] > r.vindex[static_cast<size_t>(best)])
            best = v;
    }
    const Cursor& old = *r.cursor;
    Cursor cur;
    if (mode == RelabelMode::Continue) {
        cur.a = old.b;
        cur.A = old.B;
        cur.c = old.c;
        cur.C = old.C;
    } else {
        cur.a = old.c;
        cur.A = old.C;
        cur.c = old.b;
        cur.C = old.B;
    }
    cur.b = dv;
    cur.B = Dv;
    LabeledRadial out = r;
    out.cursor = cur;
    auto edge = [&](int u, int v) { return out.map.find_dart(u, v) >= 0; };
    if (!edge(cur.a, cur.B) || !edge(cur.B, cur.c) || !edge(cur.c, cur.A) ||
        !edge(cur.A, cur.b) || !edge(cur.b, cur.C) || !edge(cur.C, cur.a))
        throw InvalidCursor("relabelled cursor does not form a hexagon");
    return out;
}

// --- the tuple-driven construction -------------------------------------------

AlgorithmOneResult algorithm_one(const DegreeTuple& t, const LabeledRadial& seed,
                                 const AlgorithmOneOptions& opts) {
    if (!seed.cursor) throw InvalidCursor("the construction needs a seeded cursor");
    require_z_config(seed);

    detail::MutableMap m = detail::MutableMap::from(seed);
    Cursor cur = *seed.cursor;
    int last_d = -1, last_D = -1;
    bool applied_any = false;
    std::vector<int> grown_radial_ids;
    grown_radial_ids.reserve(static_cast<size_t>(t.k()));

    for (int i = 0; i < t.k(); ++i) {
        const int reps = t.entries[static_cast<size_t>(i)] - 3;
        for (int j = 0; j < reps; ++j) {
            if (applied_any) {
                if (j == 0) {  // entry boundary: freeze the grown pair
                    cur.a = cur.c;
                    cur.A = cur.C;
                    cur.c = cur.b;
                    cur.C = cur.B;
                } else {  // within an entry: keep growing c, C
                    cur.a = cur.b;
                    cur.A = cur.B;
                }
                cur.b = last_d;
                cur.B = last_D;
            }
            const auto [dv, Dv] = z_apply(m, cur);
            last_d = dv;
            last_D = Dv;
            applied_any = true;
            if (opts.checked) {
                LabeledRadial snapshot = m.freeze();
                snapshot.cursor = cur;
                validate_labeled_radial(snapshot);
            }
        }
        grown_radial_ids.push_back(cur.c);
    }

    AlgorithmOneResult result;
    result.radial = m.freeze();
    result.radial.cursor = cur;
    result.primal = primal_from_radial(result.radial, VClass::Primal);
    result.edit_count = m.edits;
    result.grown.reserve(grown_radial_ids.size());
    for (int u : grown_radial_ids)
        result.grown.push_back(result.radial.vindex[static_cast<size_t>(u)] - 1);
    return result;
}

AlgorithmOneResult algorithm_one(const DegreeTuple& t, const AlgorithmOneOptions& opts) {
    return algorithm_one(t, seed_cube(), opts);
}

// --- the alternative seed and family -----------------------------------------

LabeledRadial seed_green(int n) {
    if (n < 5) throw InvalidParameter("the alternative seed needs n >= 5");
    const int half = 2 * n - 2;
    auto v = [&](int i) { return i - 1; };         // v_i, 1 <= i <= 2n-2
    auto f = [&](int i) { return half + i - 1; };  // f_i, 1 <= i <= 2n-2

    std::vector<std::vector<int>> quads;
    quads.reserve(static_cast<size_t>(4 * n - 6));
    quads.push_back({v(1), f(1), v(3), f(2)});
    quads.push_back({v(1), f(3), v(2), f(1)});
    for (int i = 2; i <= n - 2; ++i) quads.push_back({v(1), f(2 * i + 1), v(2 * i), f(2 * i - 1)});
    quads.push_back({v(1), f(2), v(2 * n - 2), f(2 * n - 3)});
    for (int i = 2; i <= n - 2; ++i) quads.push_back({f(1), v(2 * i + 1), f(2 * i), v(2 * i - 1)});
    quads.push_back({f(1), v(2), f(2 * n - 2), v(2 * n - 3)});
    for (int i = 1; i <= n - 3; ++i)
        quads.push_back({v(2 * n - 2), f(2 * i), v(2 * i + 1), f(2 * i + 2)});
    quads.push_back({v(2 * n - 2), f(2 * n - 4), v(2 * n - 3), f(2 * n - 2)});
    quads.push_back({v(2 * n - 2), f(2 * n - 2), v(2 * n - 4), f(2 * n - 3)});
    for (int i = 1; i <= n - 3; ++i)
        quads.push_back({f(2 * n - 2), v(2 * i), f(2 * i + 1), v(2 * i + 2)});

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(2 * half));
    for (int i = 1; i <= half; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= half; ++i) labels.push_back("f" + std::to_string(i));

    LabeledRadial r;
    r.map = map_from_faces(2 * half, quads, std::move(labels));
    r.vclass.resize(static_cast<size_t>(2 * half));
    r.vindex.resize(static_cast<size_t>(2 * half));
    for (int x = 0; x < 2 * half; ++x) {
        r.vclass[static_cast<size_t>(x)] = x < half ? VClass::Primal : VClass::Dual;
        r.vindex[static_cast<size_t>(x)] = x < half ? x + 1 : x - half + 1;
    }
    Cursor cur;
    cur.a = v(2);
    cur.A = f(2);
    cur.b = v(1);
    cur.B = f(1);
    cur.c = v(3);
    cur.C = f(3);
    r.cursor = cur;
    return r;
}

PlanarMap construct_P_prime(int n, int k) {
    if (n < 5) throw InvalidParameter("the alternative family needs n >= 5");
    if (k < 3) throw InvalidParameter("the alternative family needs k >= 3");
    DegreeTuple t(std::vector<int>(static_cast<size_t>(k - 2), n));
    return algorithm_one(t, seed_green(n)).primal;
}

// --- the two-adjacent-large-faces family --------------------------------------

PlanarMap construct_S(int x, int y) {
    if (y < 3 || x < y) throw InvalidParameter("the family needs x >= y >= 3");
    const int n = x + y - 2;
    auto v = [&](int i) { return i - 1; };      // v_i, 1 <= i <= x
    auto w = [&](int j) { return x + j - 1; };  // w_j, 1 <= j <= y-2

    std::vector<std::vector<int>> walks;
    walks.reserve(static_cast<size_t>(n));
    std::vector<int> X;
    for (int i = 1; i <= x; ++i) X.push_back(v(i));
    walks.push_back(std::move(X));
    std::vector<int> Y;
    for (int j = 1; j <= y - 2; ++j) Y.push_back(w(j));
    Y.push_back(v(x));
    Y.push_back(v(x - 1));
    walks.push_back(std::move(Y));
    for (int j = 1; j <= y - 3; ++j) walks.push_back({v(1), w(j), w(j + 1)});
    for (int j = 1; j <= x - 3; ++j) walks.push_back({w(1), v(j), v(j + 1)});
    walks.push_back({v(1), w(y - 2), v(x)});
    walks.push_back({w(1), v(x - 2), v(x - 1)});

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= x; ++i) labels.push_back("v" + std::to_string(i));
    for (int j = 1; j <= y - 2; ++j) labels.push_back("w" + std::to_string(j));
    return map_from_faces(n, walks, std::move(labels));
}

PlanarMap construct_Q(int x, int y) {
    if (y < 4 || x < y) throw InvalidParameter("the split family needs x >= y >= 4");
    const PlanarMap base = construct_S(x, y - 1);
    // Split edge v3v4 on the x-gonal face, anchored at v1.
    return edge_split(base, 2, 3, 0);
}

// --- the quad-heavy family ----------------------------------------------------

LabeledPolyhedron algorithm_two_step(const LabeledPolyhedron& g) {
    const int p = g.map.order();
    if (p < 4 || g.face_walks.empty())
        throw PreconditionViolated("input lacks the labelled triangle to split");
    const std::vector<int>& f1 = g.face_walks.front();
    const std::set<int> want = {p - 3, p - 2, p - 1};
    if (f1.size() != 3 || std::set<int>(f1.begin(), f1.end()) != want)
        throw PreconditionViolated("the first face must be the triangle on the last three vertices");
    bool found = false;
    for (const auto& walk : faces(g.map))
        if (walk.size() == 3 && std::set<int>(walk.begin(), walk.end()) == want) found = true;
    if (!found) throw PreconditionViolated("the labelled triangle is not a face of the map");

    const int a = p - 3, b = p - 2, c = p - 1;  // v_{p-2}, v_{p-1}, v_p
    PlanarMap grown = edge_split(g.map, a, b, c);
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(p + 1));
    for (int i = 1; i <= p + 1; ++i) labels.push_back("v" + std::to_string(i));
    grown.set_labels(std::move(labels));

    LabeledPolyhedron out;
    out.face_walks.reserve(g.face_walks.size() + 1);
    out.face_walks.push_back({b, c, p});  // g1 = [v_{p-1}, v_p, v_{p+1}]
    out.face_walks.push_back({a, c, p});  // g2 = [v_{p-2}, v_p, v_{p+1}]
    for (size_t i = 1; i < g.face_walks.size(); ++i) {
        std::vector<int> walk = g.face_walks[i];
        // The face on the far side of edge ab gains the new vertex between
        // a and b on its boundary.
        const int L = static_cast<int>(walk.size());
        for (int j = 0; j < L; ++j) {
            const int u = walk[static_cast<size_t>(j)];
            const int vnext = walk[static_cast<size_t>((j + 1) % L)];
            if ((u == a && vnext == b) || (u == b && vnext == a)) {
                walk.insert(walk.begin() + j + 1, p);
                break;
            }
        }
        out.face_walks.push_back(std::move(walk));
    }
    out.map = std::move(grown);
    return out;
}

LabeledPolyhedron construct_G_base() {
    const PlanarMap s = construct_S(4, 4);  // vertices v1..v4, w1, w2
    // Relabel so the degree-3 path sits on the first three vertices:
    // (new v1..v6) := (old v2, v3, v4, w1, v1, w2).
    const std::vector<int> new_of_old = {4, 0, 1, 2, 3, 5};
    std::vector<std::vector<int>> rotation(6);
    for (int old = 0; old < 6; ++old) {
        std::vector<int>& r = rotation[static_cast<size_t>(new_of_old[static_cast<size_t>(old)])];
        for (int nb : s.neighbors_in_order(old))
            r.push_back(new_of_old[static_cast<size_t>(nb)]);
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back("v" + std::to_string(i));
    LabeledPolyhedron g;
    g.map = build_map(rotation, std::move(labels));
    // f1 = [v4,v5,v6]; the rest in the map's face order.
    g.face_walks.push_back({3, 4, 5});
    const std::set<int> first = {3, 4, 5};
    for (const auto& walk : faces(g.map)) {
        if (walk.size() == 3 && std::set<int>(walk.begin(), walk.end()) == first) continue;
        g.face_walks.push_back(walk);
    }
    return g;
}

PlanarMap construct_G(int p) {
    if (p < 6) throw InvalidParameter("the quad-heavy family needs p >= 6");
    LabeledPolyhedron g = construct_G_base();
    for (int q = 7; q <= p; ++q) g = algorithm_two_step(g);
    return g.map;
}

}  // namespace selfdual
