#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "selfdual/constructions.hpp"
#include "selfdual/verify.hpp"

using namespace selfdual;

namespace {

AbstractGraph complete_graph(int n) {
    AbstractGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

AbstractGraph permuted_graph(const AbstractGraph& g, const std::vector<int>& perm) {
    AbstractGraph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[(size_t)u], perm[(size_t)v]);
    return h;
}

PlanarMap tetrahedron() {
    return build_map({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

PlanarMap cube_map() {
    // Vertices 0..7, rotations of the standard hexahedron.
    return map_from_faces(8, {{0, 1, 2, 3},
                              {0, 4, 5, 1},
                              {1, 5, 6, 2},
                              {2, 6, 7, 3},
                              {3, 7, 4, 0},
                              {4, 7, 6, 5}});
}

std::vector<int> two_wide(int x, int y) {
    std::vector<int> s{x, y};
    for (int i = 0; i < x + y - 4; ++i) s.push_back(3);
    return s;
}

// Faces as a canonical multiset: each walk reduced to its sorted vertex
// list, the whole collection sorted. Invariant under walk rotation and
// orientation, which is exactly the slack re-embedding is allowed.
std::vector<std::vector<int>> face_multiset(const PlanarMap& m) {
    std::vector<std::vector<int>> out;
    for (auto& w : faces(m)) {
        std::sort(w.begin(), w.end());
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("abstract graph basics") {
    AbstractGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(g.add_edge(0, 1), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidParameter);
    g.remove_edge(0, 1);
    CHECK(!g.has_edge(0, 1));
    CHECK(g.size() == 1);

    CHECK(degree_sequence(complete_graph(4)).to_string() == "3,3,3,3");
    CHECK(DegreeSequence({3, 4, 3}).values == std::vector<int>{4, 3, 3});
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + (int)(rng() % 30);
        AbstractGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        const AbstractGraph h = from_graph6(to_graph6(g));
        CHECK(h.order() == g.order());
        CHECK(h.edges() == g.edges());
    }
    CHECK(to_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("connectivity helpers") {
    AbstractGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[2] == std::vector<int>{4});
    CHECK(!is_connected(g));

    CHECK(is_three_connected(complete_graph(4)));
    CHECK(is_three_connected(complete_graph(5)));
    AbstractGraph k4m = complete_graph(4);
    k4m.remove_edge(0, 1);
    CHECK(!is_three_connected(k4m));
    CHECK(!is_three_connected(complete_graph(3)));
}

TEST_CASE("degree-class induced subgraphs partition at minimum degree 3") {
    for (const auto& m : {construct_S(6, 5), construct_G(8), algorithm_one(DegreeTuple({5, 7})).primal}) {
        const AbstractGraph g = underlying(m);
        const auto h3 = induced_by_degree(g, DegreeClass::Exactly3);
        const auto hp = induced_by_degree(g, DegreeClass::AtLeast4);
        CHECK(h3.graph.order() + hp.graph.order() == g.order());
        for (size_t i = 0; i + 1 < h3.original_ids.size(); ++i)
            CHECK(h3.original_ids[i] < h3.original_ids[i + 1]);
    }
}

TEST_CASE("map construction validates its input") {
    const PlanarMap t = tetrahedron();
    CHECK(t.order() == 4);
    CHECK(t.size() == 6);
    CHECK(t.face_count() == 4);
    CHECK(t.simple());
    CHECK(is_polyhedral_map(t));

    // Asymmetric incidences: 0 lists 1, but 1 never lists 0.
    CHECK_THROWS_AS(build_map({{1, 2}, {2, 2}, {0, 1, 1}}), InconsistentRotation);
    // K5 admits no planar rotation system: Euler always fails.
    CHECK_THROWS_AS(build_map({{1, 2, 3, 4},
                               {0, 2, 3, 4},
                               {0, 1, 3, 4},
                               {0, 1, 2, 4},
                               {0, 1, 2, 3}}),
                    NonPlanarEmbedding);
    // The digon is a legal non-simple map.
    const PlanarMap digon = build_map({{1, 1}, {0, 0}});
    CHECK(digon.size() == 2);
    CHECK(digon.face_count() == 2);
    CHECK(!digon.simple());
}

TEST_CASE("map_from_faces orients walks coherently") {
    const PlanarMap a = map_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    CHECK(is_polyhedral_map(a));
    // Same map, one walk listed in the opposite sense.
    const PlanarMap b = map_from_faces(4, {{0, 1, 2}, {3, 2, 0}, {0, 3, 1}, {1, 3, 2}});
    CHECK(isomorphic(underlying(a), underlying(b)).has_value());
    CHECK_THROWS_AS(map_from_faces(3, {{0, 1, 2}}), InvalidParameter);
}

TEST_CASE("faces and boundary walks") {
    const PlanarMap c = cube_map();
    CHECK(c.face_count() == 6);
    for (const auto& w : faces(c)) CHECK(w.size() == 4);
    CHECK(degree_sequence(c).to_string() == "3,3,3,3,3,3,3,3");
}

TEST_CASE("dual is an involution and swaps vertex/face data") {
    const PlanarMap c = cube_map();
    const PlanarMap d = dual(c);
    CHECK(d.order() == 6);
    CHECK(d.size() == 12);
    CHECK(d.face_count() == 8);
    CHECK(degree_sequence(d).to_string() == "4,4,4,4,4,4");
    const PlanarMap dd = dual(d);
    CHECK(isomorphic(underlying(dd), underlying(c)).has_value());
    for (const auto& m : {construct_S(5, 4), construct_G(7), algorithm_one(DegreeTuple({6, 4})).primal}) {
        CHECK(isomorphic(underlying(dual(dual(m))), underlying(m)).has_value());
    }
}

TEST_CASE("radial counts and identities") {
    for (const auto& m : {tetrahedron(), cube_map(), construct_S(6, 4)}) {
        const LabeledRadial r = radial(m);
        CHECK(r.map.order() == m.order() + m.face_count());
        CHECK(r.map.size() == 2 * m.size());
        CHECK(r.map.face_count() == m.size());
        for (int f = 0; f < r.map.face_count(); ++f) CHECK(r.map.face_size(f) == 4);
        // The radial of the dual is the radial of the map.
        CHECK(isomorphic(underlying(radial(dual(m)).map), underlying(r.map)).has_value());
        // Primal extraction undoes the radial exactly (same vertex ids).
        CHECK(underlying(primal_from_radial(r)).edges() == underlying(m).edges());
    }
    // Radial demands 2-connectivity.
    const PlanarMap path = build_map({{1}, {0, 2}, {1}});
    CHECK_THROWS_AS(radial(path), NotTwoConnected);
}

TEST_CASE("polyhedrality equals the radial 4-cycle criterion") {
    for (const auto& m : {tetrahedron(), cube_map(), construct_S(5, 5), construct_Q(6, 4)}) {
        CHECK(is_polyhedral_map(m));
        CHECK(every_four_cycle_bounds_face(radial(m)));
    }
    AbstractGraph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 0);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(5, 3);
    g.add_edge(0, 3); g.add_edge(1, 4);
    const auto m = planar_embed(g);
    REQUIRE(m.has_value());
    CHECK(!is_polyhedral_map(*m));
    CHECK(!every_four_cycle_bounds_face(radial(*m)));
}

TEST_CASE("edge_split grows one triangle fan") {
    const PlanarMap t = tetrahedron();
    const PlanarMap s = edge_split(t, 0, 1, 2);
    CHECK(s.order() == 5);
    CHECK(s.size() == 8);
    CHECK(s.face_count() == 5);
    CHECK(is_polyhedral_map(s));
    CHECK(isomorphic(underlying(s), underlying(construct_S(4, 3))).has_value());
    CHECK_THROWS_AS(edge_split(t, 0, 0, 2), NotAnEdge);
    CHECK_THROWS_AS(edge_split(cube_map(), 0, 2, 1), NotAnEdge);
    CHECK_THROWS_AS(edge_split(t, 0, 1, 1), VertexNotOnFace);
    // Splitting within a labelled map appends a fresh label.
    PlanarMap lt = tetrahedron();
    lt.set_labels({"v1", "v2", "v3", "v4"});
    const PlanarMap ls = edge_split(lt, 0, 1, 2);
    CHECK(ls.has_labels());
    CHECK(ls.label(4).substr(0, 1) == "u");
}

TEST_CASE("edge_split preserves polyhedrality across constructions") {
    std::mt19937 rng(99);
    for (const auto& base : {construct_S(5, 4), construct_G(7)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const int e = (int)(rng() % (unsigned)base.size());
            const int a = base.tail(2 * e), b = base.head(2 * e);
            // third corner of a face containing edge ab
            const int f = base.face_of(2 * e);
            int c = -1;
            for (int d = 2 * e;;) {
                d = base.phi(d);
                if (base.face_of(d) == f && base.tail(d) != a && base.tail(d) != b) {
                    c = base.tail(d);
                    break;
                }
            }
            REQUIRE(c >= 0);
            const PlanarMap s = edge_split(base, a, b, c);
            CHECK(is_polyhedral_map(s));
            CHECK(s.order() == base.order() + 1);
            CHECK(s.size() == base.size() + 2);
        }
    }
}

TEST_CASE("seed and single growth surgeries") {
    const LabeledRadial seed = seed_cube();
    validate_labeled_radial(seed);
    CHECK(seed.class_size(VClass::Primal) == 4);
    CHECK(isomorphic(underlying(primal_from_radial(seed)), underlying(tetrahedron())).has_value());

    const LabeledRadial once = z_transform(seed);
    validate_labeled_radial(once);
    CHECK(once.map.order() == 10);
    const LabeledRadial cont = relabel_after_z(once, RelabelMode::Continue);
    validate_labeled_radial(cont);
    const LabeledRadial adv = relabel_after_z(once, RelabelMode::Advance);
    validate_labeled_radial(adv);
    CHECK(cont.map.order() == once.map.order());

    // The cursor configuration is part of the invariant bundle.
    LabeledRadial broken = seed;
    std::swap(broken.cursor->a, broken.cursor->c);
    CHECK_THROWS_AS(validate_labeled_radial(broken), InvalidCursor);

    LabeledRadial tri;
    tri.map = tetrahedron();
    tri.vclass = {VClass::Primal, VClass::Dual, VClass::Primal, VClass::Dual};
    tri.vindex = {1, 1, 2, 2};
    CHECK_THROWS_AS(validate_labeled_radial(tri), NotQuadrangulation);
}

TEST_CASE("tuple-driven construction meets its contract") {
    CHECK_THROWS_AS(DegreeTuple({3, 4}), InvalidTuple);

    const auto empty = algorithm_one(DegreeTuple(std::vector<int>{}));
    CHECK(isomorphic(underlying(empty.primal), underlying(tetrahedron())).has_value());
    CHECK(empty.edit_count == 0);
    CHECK(empty.grown.empty());

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = 1 + (int)(rng() % 4);
        std::vector<int> entries;
        long long apps = 0;
        for (int i = 0; i < k; ++i) {
            entries.push_back(4 + (int)(rng() % 5));
            apps += entries.back() - 3;
        }
        const DegreeTuple t(entries);
        const auto run = algorithm_one(t);
        CHECK(run.primal.order() == t.target_order());
        CHECK(degree_sequence(run.primal) == t.target_sequence());
        CHECK(is_polyhedral_map(run.primal));
        CHECK((int)run.grown.size() == t.k());
        // Every surgery costs the same constant number of pointer edits.
        CHECK(run.edit_count == 13 * apps);
        // Grown vertices realise the tuple entries in order.
        for (int i = 0; i < t.k(); ++i)
            CHECK(underlying(run.primal).degree(run.grown[(size_t)i]) == entries[(size_t)i]);
    }

    // Checked mode recomputes every invariant after every surgery and
    // must not change the outcome.
    const DegreeTuple t({6, 4, 5});
    const auto fast = algorithm_one(t);
    const auto slow = algorithm_one(t, AlgorithmOneOptions{true});
    CHECK(fast.edit_count == slow.edit_count);
    CHECK(canonical_form(underlying(fast.primal)) == canonical_form(underlying(slow.primal)));
}

TEST_CASE("two-large-face family") {
    CHECK_THROWS_AS(construct_S(3, 4), InvalidParameter);  // needs x >= y
    CHECK_THROWS_AS(construct_S(2, 2), InvalidParameter);
    for (int x = 3; x <= 7; ++x)
        for (int y = 3; y <= x; ++y) {
            const PlanarMap s = construct_S(x, y);
            CHECK(is_polyhedral_map(s));
            CHECK(degree_sequence(s) == DegreeSequence(two_wide(x, y)));
            CHECK(is_self_dual(s));
        }
    // The y = 3 degenerate case is the wheel, which the one-entry tuple
    // realises as well.
    CHECK(isomorphic(underlying(construct_S(5, 3)),
                     underlying(algorithm_one(DegreeTuple({5})).primal))
              .has_value());
}

TEST_CASE("split variant of the two-large-face family") {
    CHECK_THROWS_AS(construct_Q(4, 3), InvalidParameter);  // needs y >= 4
    CHECK(isomorphic(underlying(construct_Q(4, 4)), underlying(construct_S(4, 4))).has_value());
    for (int x = 5; x <= 7; ++x)
        for (int y = 4; y <= x; ++y) {
            const PlanarMap q = construct_Q(x, y);
            CHECK(is_polyhedral_map(q));
            CHECK(degree_sequence(q) == DegreeSequence(two_wide(x, y)));
            CHECK(!is_self_dual(q));
        }
}

TEST_CASE("quad-heavy family") {
    CHECK_THROWS_AS(construct_G(5), InvalidParameter);
    CHECK(isomorphic(underlying(construct_G(6)), underlying(construct_S(4, 4))).has_value());
    for (int p = 6; p <= 10; ++p) {
        const PlanarMap g = construct_G(p);
        CHECK(g.order() == p);
        std::vector<int> want((size_t)p - 4, 4);
        want.insert(want.end(), 4, 3);
        CHECK(degree_sequence(g) == DegreeSequence(want));
        CHECK(is_polyhedral_map(g));
        CHECK(is_self_dual(g));
    }
    // The step demands the labelled triangle in first position.
    LabeledPolyhedron wrong;
    wrong.map = construct_S(5, 4);
    wrong.face_walks = faces(wrong.map);
    CHECK_THROWS_AS(algorithm_two_step(wrong), PreconditionViolated);
}

TEST_CASE("alternative seed family") {
    CHECK_THROWS_AS(seed_green(4), InvalidParameter);
    for (int n = 5; n <= 8; ++n) {
        const LabeledRadial g = seed_green(n);
        validate_labeled_radial(g);
        CHECK(g.class_size(VClass::Primal) == 2 * n - 2);
        CHECK(g.map.face_count() == 4 * n - 6);
    }
    CHECK_THROWS_AS(construct_P_prime(4, 3), InvalidParameter);
    CHECK_THROWS_AS(construct_P_prime(5, 2), InvalidParameter);
    for (int n = 5; n <= 6; ++n)
        for (int k = 3; k <= 4; ++k) {
            const PlanarMap pp = construct_P_prime(n, k);
            std::vector<int> want((size_t)k, n);
            want.insert(want.end(), (size_t)(4 + k * (n - 4)), 3);
            CHECK(degree_sequence(pp) == DegreeSequence(want));
            CHECK(is_polyhedral_map(pp));
            CHECK(is_self_dual(pp));
            // Distinguishing mark: the radial's high-degree part keeps a
            // 2-vertex component, absent from the cube-seeded realisation.
            const auto hp = induced_by_degree(underlying(radial(pp).map), DegreeClass::AtLeast4);
            bool has2 = false;
            for (const auto& comp : connected_components(hp.graph)) has2 |= comp.size() == 2;
            CHECK(has2);
        }
}

TEST_CASE("canonical form is a complete isomorphism invariant here") {
    std::mt19937 rng(2024);
    const AbstractGraph g = underlying(algorithm_one(DegreeTuple({5, 4, 6})).primal);
    const std::string c0 = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> perm(g.order());
        for (int i = 0; i < g.order(); ++i) perm[(size_t)i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted_graph(g, perm)) == c0);
    }
    const auto lab = canonical_labelling(g);
    CHECK(to_graph6(permuted_graph(g, lab)) == c0);

    // A regular pair that degree counting cannot tell apart: the 6-cycle
    // against two triangles.
    AbstractGraph c6(6), c33(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    c33.add_edge(0, 1); c33.add_edge(1, 2); c33.add_edge(2, 0);
    c33.add_edge(3, 4); c33.add_edge(4, 5); c33.add_edge(5, 3);
    CHECK(canonical_form(c6) != canonical_form(c33));
    CHECK(!isomorphic(c6, c33).has_value());
}

TEST_CASE("isomorphic returns a verified bijection") {
    std::mt19937 rng(5150);
    const AbstractGraph g = underlying(construct_G(8));
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[(size_t)i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const AbstractGraph h = permuted_graph(g, perm);
    const auto bij = isomorphic(g, h);
    REQUIRE(bij.has_value());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge((*bij)[(size_t)u], (*bij)[(size_t)v]));
    CHECK(!isomorphic(underlying(construct_S(5, 4)), underlying(construct_Q(5, 4))).has_value());
    CHECK(!isomorphic(g, underlying(construct_G(7))).has_value());
}

TEST_CASE("component fingerprints") {
    AbstractGraph a(4);  // path of 3 + isolated
    a.add_edge(0, 1); a.add_edge(1, 2);
    AbstractGraph b(4);  // two disjoint edges
    b.add_edge(0, 1); b.add_edge(2, 3);
    const auto fa = component_fingerprint(a);
    const auto fb = component_fingerprint(b);
    CHECK(fa != fb);
    CHECK(fa.components.size() == 2);
    CHECK(fb.components.size() == 2);
    CHECK(fa.to_string() != fb.to_string());
    // Fingerprints are isomorphism invariants.
    std::mt19937 rng(8);
    std::vector<int> perm{2, 0, 3, 1};
    CHECK(component_fingerprint(permuted_graph(a, perm)) == fa);
}

TEST_CASE("planar embedding") {
    const auto k4 = planar_embed(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->face_count() == 4);
    CHECK(!planar_embed(complete_graph(5)).has_value());
    AbstractGraph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    CHECK(!planar_embed(k33).has_value());
    // Petersen graph: 3-regular, girth 5, non-planar.
    AbstractGraph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    CHECK(!planar_embed(pet).has_value());
    // Trees and near-trees embed with a single face.
    AbstractGraph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    const auto sm = planar_embed(star);
    REQUIRE(sm.has_value());
    CHECK(sm->face_count() == 1);
}

TEST_CASE("re-embedding a polyhedral graph reproduces its face lattice") {
    // For 3-connected planar graphs the embedding is unique up to
    // reflection, so the face multiset survives forgetting the rotation.
    for (const auto& m : {construct_S(6, 5), construct_G(8), construct_P_prime(5, 3),
                          algorithm_one(DegreeTuple({6, 6})).primal}) {
        const auto re = planar_embed(underlying(m));
        REQUIRE(re.has_value());
        CHECK(face_multiset(*re) == face_multiset(m));
    }
}

TEST_CASE("enumeration without filters") {
    EnumerationQuery q;
    q.sequence = DegreeSequence({2, 2, 2, 1, 1});
    const auto r = enumerate_realizations_serial(q);
    CHECK(r.size() == 2);  // 5-path, triangle plus an edge
    CHECK(enumerate_realizations(q) == r);

    q.sequence = DegreeSequence({2, 2, 2, 2, 2});
    CHECK(enumerate_realizations(q).size() == 1);  // the pentagon

    q.sequence = DegreeSequence({1, 1});
    CHECK(enumerate_realizations(q).size() == 1);

    q.sequence = DegreeSequence({0, 0, 0});
    CHECK(enumerate_realizations(q).size() == 1);

    q.sequence = DegreeSequence({3, 1});
    CHECK(enumerate_realizations(q).empty());
}

TEST_CASE("enumeration guards") {
    EnumerationQuery q;
    q.sequence = DegreeSequence({3, 3, 3});
    CHECK_THROWS_AS(enumerate_realizations(q), OddDegreeSum);
    std::vector<int> long_seq{1, 1};
    long_seq.resize(12, 0);  // one edge plus ten isolated vertices
    q.sequence = DegreeSequence(long_seq);
    CHECK_THROWS_AS(enumerate_realizations(q), OrderCapExceeded);
    q.cap = 12;
    CHECK(enumerate_realizations(q).size() == 1);

    // Environment override of the default cap.
    CHECK(default_order_cap() == 11);
    setenv("SELFDUAL_ORDER_CAP", "9", 1);
    CHECK(default_order_cap() == 9);
    unsetenv("SELFDUAL_ORDER_CAP");
    CHECK(default_order_cap() == 11);
}

TEST_CASE("enumeration filters and parallel agreement") {
    EnumerationQuery q;
    q.sequence = DegreeSequence({3, 3, 3, 3});
    q.self_dual = true;
    auto r = enumerate_realizations(q);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == canonical_form(underlying(construct_S(3, 3))));
    CHECK(enumerate_realizations_serial(q) == r);

    // The oracle contains every construction output for its sequence.
    for (auto [x, y] : {std::pair{4, 4}, std::pair{5, 4}}) {
        EnumerationQuery qq;
        qq.sequence = degree_sequence(construct_S(x, y));
        qq.self_dual = true;
        const auto classes = enumerate_realizations(qq);
        const std::string canon = canonical_form(underlying(construct_S(x, y)));
        CHECK(std::find(classes.begin(), classes.end(), canon) != classes.end());
        CHECK(enumerate_realizations_serial(qq) == classes);
    }

    // Filters are monotone: each extra filter keeps a subset.
    EnumerationQuery plain, planar_q, three_q;
    plain.sequence = planar_q.sequence = three_q.sequence = DegreeSequence({4, 3, 3, 3, 3});
    planar_q.planar = true;
    three_q.planar = true;
    three_q.three_connected = true;
    const auto all = enumerate_realizations(plain);
    const auto pl = enumerate_realizations(planar_q);
    const auto th = enumerate_realizations(three_q);
    CHECK(pl.size() <= all.size());
    CHECK(th.size() <= pl.size());
    for (const auto& s : th) CHECK(std::find(pl.begin(), pl.end(), s) != pl.end());
}

TEST_CASE("self-duality decisions") {
    CHECK(is_self_dual(tetrahedron()));
    CHECK(!is_self_dual(construct_Q(6, 5)));
    AbstractGraph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 0);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(5, 3);
    g.add_edge(0, 3); g.add_edge(1, 4);
    const auto m = planar_embed(g);
    REQUIRE(m.has_value());
    CHECK_THROWS_AS(is_self_dual(*m), NotPolyhedral);
}

TEST_CASE("index bijection check") {
    const auto run = algorithm_one(DegreeTuple({6, 6}));
    CHECK(check_phi(run.radial));
    LabeledRadial stripped = run.radial;
    stripped.vindex.clear();
    CHECK_THROWS_AS(check_phi(stripped), MissingLabels);
    LabeledRadial shuffled = run.radial;
    // Reuse an index within a class: no longer a bijection.
    for (size_t v = 0; v < shuffled.vindex.size(); ++v)
        if (shuffled.vclass[v] == VClass::Primal && shuffled.vindex[v] == 2) shuffled.vindex[v] = 1;
    CHECK_THROWS_AS(check_phi(shuffled), MissingLabels);
}

TEST_CASE("grown-vertex adjacency pattern") {
    const DegreeTuple t({6, 5, 4, 4});
    auto run = algorithm_one(t);
    CHECK(check_lemma_leaf(t, run));
    run.grown.pop_back();
    CHECK_THROWS_AS(check_lemma_leaf(t, run), LabelsUnavailable);
}

TEST_CASE("high-degree end-vertex separator") {
    CHECK(hplus_end_vertex_degrees(underlying(construct_S(6, 5))) == std::vector<int>{6, 5});
    const auto d1 = hplus_end_vertex_degrees(underlying(algorithm_one(DegreeTuple({6, 4, 5, 4})).primal));
    const auto d2 = hplus_end_vertex_degrees(underlying(algorithm_one(DegreeTuple({4, 6, 5, 4})).primal));
    CHECK(d1 != d2);
}

TEST_CASE("witness pairs") {
    CHECK_THROWS_AS(two_witnesses(DegreeTuple({4, 4})), InvalidTuple);
    for (auto entries : {std::vector<int>{6, 5, 4, 4}, std::vector<int>{5, 4, 4},
                         std::vector<int>{4, 4, 4}, std::vector<int>{5, 5, 5}}) {
        const DegreeTuple t(entries);
        const auto [w1, w2] = two_witnesses(t);
        CHECK(!isomorphic(underlying(w1), underlying(w2)).has_value());
        CHECK(degree_sequence(w1) == t.target_sequence());
        CHECK(degree_sequence(w2) == t.target_sequence());
        CHECK(is_self_dual(w1));
        CHECK(is_self_dual(w2));
    }
}

TEST_CASE("serialisation round trips") {
    const PlanarMap s = construct_S(5, 4);
    const PlanarMap rt = read_map_text(write_map_text(s));
    CHECK(underlying(rt).edges() == underlying(s).edges());
    CHECK(rt.label(0) == s.label(0));
    const PlanarMap rj = read_map_json(write_map_json(s));
    CHECK(underlying(rj).edges() == underlying(s).edges());
    CHECK(map_to_dot(s).find("graph") != std::string::npos);
    CHECK(to_dot(underlying(s)).find("graph") != std::string::npos);
    CHECK_THROWS_AS(read_map_text("x: y\n"), InconsistentRotation);
}
