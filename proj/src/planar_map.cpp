#include "selfdual/planar_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace selfdual {

// --- PlanarMap core ----------------------------------------------------------

PlanarMap PlanarMap::from_arrays(std::vector<int> tail, std::vector<int> sigma,
                                 int vertex_count, std::vector<std::string> labels) {
    if (tail.size() != sigma.size() || tail.size() % 2 != 0)
        throw InconsistentRotation("dart arrays must have matching even length");
    if (vertex_count < 1) throw InconsistentRotation("a map needs at least one vertex");
    const int D = static_cast<int>(tail.size());
    if (D == 0 && vertex_count != 1)
        throw InconsistentRotation("an edgeless map can only have a single vertex");

    PlanarMap m;
    m.tail_ = std::move(tail);
    m.sigma_ = std::move(sigma);
    m.vertex_count_ = vertex_count;

    m.sigma_inv_.assign(static_cast<size_t>(D), -1);
    for (int d = 0; d < D; ++d) {
        const int t = m.tail_[static_cast<size_t>(d)];
        if (t < 0 || t >= vertex_count) throw InconsistentRotation("dart tail out of range");
        const int s = m.sigma_[static_cast<size_t>(d)];
        if (s < 0 || s >= D) throw InconsistentRotation("sigma image out of range");
        if (m.sigma_inv_[static_cast<size_t>(s)] != -1)
            throw InconsistentRotation("sigma is not a permutation");
        m.sigma_inv_[static_cast<size_t>(s)] = d;
        if (m.tail_[static_cast<size_t>(s)] != t)
            throw InconsistentRotation("sigma must stay at its tail vertex");
    }

    // Rotation at each vertex must be one cycle through all its darts.
    m.first_dart_.assign(static_cast<size_t>(vertex_count), -1);
    m.degree_.assign(static_cast<size_t>(vertex_count), 0);
    for (int d = 0; d < D; ++d) {
        int& f = m.first_dart_[static_cast<size_t>(m.tail_[static_cast<size_t>(d)])];
        if (f < 0) f = d;
        ++m.degree_[static_cast<size_t>(m.tail_[static_cast<size_t>(d)])];
    }
    for (int v = 0; v < vertex_count; ++v) {
        const int start = m.first_dart_[static_cast<size_t>(v)];
        if (start < 0) {
            if (D > 0) throw InconsistentRotation("isolated vertex in a map with edges");
            continue;
        }
        int cnt = 0, d = start;
        do {
            ++cnt;
            d = m.sigma(d);
        } while (d != start && cnt <= D);
        if (cnt != m.degree_[static_cast<size_t>(v)])
            throw InconsistentRotation("rotation at a vertex splits into several cycles");
    }

    // Face orbits of phi = sigma . twin, and the Euler planarity gate.
    m.face_of_.assign(static_cast<size_t>(D), -1);
    for (int d = 0; d < D; ++d) {
        if (m.face_of_[static_cast<size_t>(d)] >= 0) continue;
        const int f = m.face_count_++;
        m.face_dart_.push_back(d);
        int sz = 0, e = d;
        do {
            m.face_of_[static_cast<size_t>(e)] = f;
            ++sz;
            e = m.phi(e);
        } while (e != d);
        m.face_size_.push_back(sz);
    }
    if (D == 0) {
        m.face_count_ = 1;  // the one face of the single-vertex map
        m.face_dart_.clear();
        m.face_size_.clear();
    }
    if (vertex_count - D / 2 + m.face_count_ != 2)
        throw NonPlanarEmbedding("rotation system is not planar: V - E + F != 2");

    // Simplicity: no loops and no parallel edges.
    m.simple_ = true;
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < D / 2; ++e) {
        int u = m.tail_[static_cast<size_t>(2 * e)];
        int v = m.tail_[static_cast<size_t>(2 * e + 1)];
        if (u == v) {
            m.simple_ = false;
            break;
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            m.simple_ = false;
            break;
        }
    }

    if (!labels.empty()) m.set_labels(std::move(labels));
    return m;
}

void PlanarMap::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != vertex_count_)
        throw InvalidParameter("label count must match vertex count");
    labels_ = std::move(labels);
}

std::vector<int> PlanarMap::darts_at(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(degree(v)));
    const int start = dart_at(v);
    if (start < 0) return out;
    int d = start;
    do {
        out.push_back(d);
        d = sigma(d);
    } while (d != start);
    return out;
}

std::vector<int> PlanarMap::neighbors_in_order(int v) const {
    std::vector<int> out;
    for (int d : darts_at(v)) out.push_back(head(d));
    return out;
}

int PlanarMap::find_dart(int v, int w) const {
    for (int d : darts_at(v))
        if (head(d) == w) return d;
    return -1;
}

// --- builders ----------------------------------------------------------------

PlanarMap build_map(const std::vector<std::vector<int>>& rotation,
                    std::vector<std::string> labels) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw InconsistentRotation("empty rotation system");

    // Count ordered incidences; they must be symmetric.
    std::map<std::pair<int, int>, int> count;
    for (int u = 0; u < n; ++u)
        for (int v : rotation[static_cast<size_t>(u)]) {
            if (v < 0 || v >= n) throw InconsistentRotation("neighbor index out of range");
            if (v == u) throw InconsistentRotation("loops are not supported by this builder");
            ++count[{u, v}];
        }
    for (const auto& [key, c] : count) {
        auto it = count.find({key.second, key.first});
        if (it == count.end() || it->second != c)
            throw InconsistentRotation("u must appear in v's list exactly as often as v in u's");
    }

    // Pair occurrences first-unmatched: the i-th v in u's list joins the
    // i-th u in v's list. Assign edge ids in scan order.
    long long total = 0;
    for (const auto& [key, c] : count) total += c;
    const int D = static_cast<int>(total);
    std::vector<int> tail(static_cast<size_t>(D));
    std::vector<int> sigma(static_cast<size_t>(D));
    // dart id at slot (u, position i in u's list)
    std::vector<std::vector<int>> slot_dart(static_cast<size_t>(n));
    std::map<std::pair<int, int>, std::vector<int>> open;  // (u,v) -> dart ids u->v waiting for their twin
    int next_edge = 0;
    for (int u = 0; u < n; ++u) {
        slot_dart[static_cast<size_t>(u)].resize(rotation[static_cast<size_t>(u)].size());
        for (size_t i = 0; i < rotation[static_cast<size_t>(u)].size(); ++i) {
            const int v = rotation[static_cast<size_t>(u)][i];
            auto& waiting = open[{v, u}];
            int d;
            if (!waiting.empty()) {
                // Twin already created as some dart v->u.
                d = PlanarMap::twin(waiting.front());
                waiting.erase(waiting.begin());
            } else {
                d = 2 * next_edge++;
                open[{u, v}].push_back(d);
            }
            slot_dart[static_cast<size_t>(u)][i] = d;
            tail[static_cast<size_t>(d)] = u;
            tail[static_cast<size_t>(PlanarMap::twin(d))] = v;  // provisional; fixed when twin's slot is seen
        }
    }
    for (const auto& [key, waiting] : open)
        if (!waiting.empty() && count.find({key.second, key.first}) == count.end())
            throw InconsistentRotation("unmatched incidence");
    for (int u = 0; u < n; ++u) {
        const auto& slots = slot_dart[static_cast<size_t>(u)];
        if (slots.empty() && D > 0)
            throw InconsistentRotation("isolated vertex in a map with edges");
        for (size_t i = 0; i < slots.size(); ++i)
            sigma[static_cast<size_t>(slots[i])] = slots[(i + 1) % slots.size()];
    }
    return PlanarMap::from_arrays(std::move(tail), std::move(sigma), n, std::move(labels));
}

PlanarMap map_from_faces(int n, const std::vector<std::vector<int>>& face_walks,
                         std::vector<std::string> labels) {
    if (n < 1) throw InvalidParameter("map_from_faces needs at least one vertex");
    struct Occ {
        int face, pos;  // directed edge = walk[pos] -> walk[pos+1]
    };
    std::map<std::pair<int, int>, std::vector<Occ>> occ;  // key: sorted endpoints
    for (int f = 0; f < static_cast<int>(face_walks.size()); ++f) {
        const auto& w = face_walks[static_cast<size_t>(f)];
        if (w.size() < 2) throw InvalidParameter("face walk shorter than two vertices");
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            int u = w[static_cast<size_t>(i)];
            int v = w[static_cast<size_t>((i + 1) % w.size())];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidParameter("face walk vertex out of range");
            if (u == v) throw InvalidParameter("face walk repeats a vertex consecutively");
            occ[{std::min(u, v), std::max(u, v)}].push_back({f, i});
        }
    }
    for (const auto& [key, v] : occ)
        if (v.size() != 2)
            throw InvalidParameter("every edge must be covered by exactly two face sides");

    // Orient faces coherently: each undirected edge once in each direction.
    const int F = static_cast<int>(face_walks.size());
    std::vector<int> flip(static_cast<size_t>(F), -1);  // -1 unvisited, 0 as given, 1 reversed
    auto directed = [&](const Occ& o, int fl) -> std::pair<int, int> {
        const auto& w = face_walks[static_cast<size_t>(o.face)];
        int u = w[static_cast<size_t>(o.pos)];
        int v = w[static_cast<size_t>((o.pos + 1) % w.size())];
        return fl ? std::make_pair(v, u) : std::make_pair(u, v);
    };
    for (int start = 0; start < F; ++start) {
        if (flip[static_cast<size_t>(start)] != -1) continue;
        flip[static_cast<size_t>(start)] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int f = q.front();
            q.pop();
            const auto& w = face_walks[static_cast<size_t>(f)];
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                int u = w[static_cast<size_t>(i)];
                int v = w[static_cast<size_t>((i + 1) % w.size())];
                const auto& both = occ[{std::min(u, v), std::max(u, v)}];
                const Occ& other = (both[0].face == f && both[0].pos == i) ? both[1] : both[0];
                if (other.face == f && other.pos == i) continue;
                auto mine = directed({f, i}, flip[static_cast<size_t>(f)]);
                if (flip[static_cast<size_t>(other.face)] == -1) {
                    auto as_given = directed(other, 0);
                    flip[static_cast<size_t>(other.face)] =
                        (as_given == mine) ? 1 : 0;
                    q.push(other.face);
                } else {
                    auto theirs = directed(other, flip[static_cast<size_t>(other.face)]);
                    if (theirs == mine)
                        throw InvalidParameter("face walks cannot be oriented coherently");
                }
            }
        }
    }

    // Darts: one per directed edge side. Edge e with occurrences A,B gets
    // darts 2e (A's direction) and 2e+1 (B's direction).
    std::map<std::pair<int, int>, int> edge_id;
    int ne = 0;
    for (const auto& [key, v] : occ) edge_id[key] = ne++;
    std::vector<int> tail(static_cast<size_t>(2 * ne), -1);
    std::vector<int> phi_arr(static_cast<size_t>(2 * ne), -1);
    auto dart_of = [&](int f, int i) {
        const auto& w = face_walks[static_cast<size_t>(f)];
        int u = w[static_cast<size_t>(i)];
        int v = w[static_cast<size_t>((i + 1) % w.size())];
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        const auto& both = occ[key];
        int which = (both[0].face == f && both[0].pos == i) ? 0 : 1;
        return 2 * edge_id[key] + which;
    };
    for (int f = 0; f < F; ++f) {
        const auto& w = face_walks[static_cast<size_t>(f)];
        const int L = static_cast<int>(w.size());
        const int fl = flip[static_cast<size_t>(f)];
        // In walk order when not flipped, reversed when flipped: the face's
        // directed boundary visits positions 0,1,.. or backwards.
        for (int i = 0; i < L; ++i) {
            const int j = fl ? (i - 1 + L) % L : (i + 1) % L;  // next position along the directed face
            const int d = dart_of(f, i);
            auto dir = directed({f, i}, fl);
            tail[static_cast<size_t>(d)] = dir.first;
            phi_arr[static_cast<size_t>(d)] = dart_of(f, j);
        }
    }
    // sigma = phi . twin
    std::vector<int> sigma(static_cast<size_t>(2 * ne));
    for (int d = 0; d < 2 * ne; ++d)
        sigma[static_cast<size_t>(d)] = phi_arr[static_cast<size_t>(PlanarMap::twin(d))];
    for (int v = 0; v < n; ++v) {
        bool covered = false;
        for (int t : tail)
            if (t == v) {
                covered = true;
                break;
            }
        if (!covered) throw InvalidParameter("a vertex appears on no face walk");
    }
    return PlanarMap::from_arrays(std::move(tail), std::move(sigma), n, std::move(labels));
}

// --- derived views -----------------------------------------------------------

std::vector<std::vector<int>> faces(const PlanarMap& m) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(m.face_count()));
    for (int f = 0; f < m.face_count() && m.dart_count() > 0; ++f) {
        std::vector<int> walk;
        const int start = m.face_dart(f);
        int d = start;
        do {
            walk.push_back(m.tail(d));
            d = m.phi(d);
        } while (d != start);
        out.push_back(std::move(walk));
    }
    if (m.dart_count() == 0) out.push_back({});
    return out;
}

DegreeSequence degree_sequence(const PlanarMap& m) {
    std::vector<int> d(static_cast<size_t>(m.order()));
    for (int v = 0; v < m.order(); ++v) d[static_cast<size_t>(v)] = m.degree(v);
    return DegreeSequence(std::move(d));
}

AbstractGraph underlying(const PlanarMap& m) {
    if (!m.simple()) throw InvalidParameter("underlying graph of a non-simple map");
    AbstractGraph g(m.order());
    for (int e = 0; e < m.size(); ++e) g.add_edge(m.tail(2 * e), m.tail(2 * e + 1));
    return g;
}

PlanarMap dual(const PlanarMap& m) {
    const int D = m.dart_count();
    std::vector<int> tail(static_cast<size_t>(D)), sigma(static_cast<size_t>(D));
    for (int d = 0; d < D; ++d) {
        tail[static_cast<size_t>(d)] = m.face_of(d);
        sigma[static_cast<size_t>(d)] = m.phi(d);
    }
    return PlanarMap::from_arrays(std::move(tail), std::move(sigma), m.face_count());
}

namespace {

// 2-connectivity in the exact sense the radial construction needs: the map
// is connected, loop-free, each face boundary is a simple cycle, and the
// two sides of every edge are distinct faces.
bool map_is_two_connected(const PlanarMap& m) {
    if (m.order() < 2 || m.dart_count() == 0) return false;
    for (int e = 0; e < m.size(); ++e) {
        if (m.tail(2 * e) == m.tail(2 * e + 1)) return false;          // loop
        if (m.face_of(2 * e) == m.face_of(2 * e + 1)) return false;    // bridge-like side
    }
    for (const auto& walk : faces(m)) {
        std::set<int> s(walk.begin(), walk.end());
        if (s.size() != walk.size()) return false;  // pinched face = cut vertex
    }
    return true;
}

std::vector<std::string> radial_labels(int nv, int nf) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(nv + nf));
    for (int i = 1; i <= nv; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= nf; ++i) labels.push_back("f" + std::to_string(i));
    return labels;
}

}  // namespace

int LabeledRadial::class_size(VClass c) const {
    int n = 0;
    for (VClass x : vclass)
        if (x == c) ++n;
    return n;
}

int LabeledRadial::vertex_by(VClass c, int index) const {
    for (int v = 0; v < map.order(); ++v)
        if (vclass[static_cast<size_t>(v)] == c && vindex[static_cast<size_t>(v)] == index)
            return v;
    return -1;
}

std::string LabeledRadial::label_of(int v) const {
    const char* prefix = vclass[static_cast<size_t>(v)] == VClass::Primal ? "v" : "f";
    return prefix + std::to_string(vindex[static_cast<size_t>(v)]);
}

LabeledRadial radial(const PlanarMap& m) {
    if (!map_is_two_connected(m))
        throw NotTwoConnected("the vertex-face incidence map needs a 2-connected input");
    const int V = m.order(), F = m.face_count();
    // One quadrangular face per edge of m: vertex, left face, other vertex,
    // right face.
    std::vector<std::vector<int>> quads;
    quads.reserve(static_cast<size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) {
        const int d = 2 * e, t = 2 * e + 1;
        quads.push_back({m.tail(d), V + m.face_of(d), m.tail(t), V + m.face_of(t)});
    }
    LabeledRadial r;
    r.map = map_from_faces(V + F, quads, radial_labels(V, F));
    r.vclass.resize(static_cast<size_t>(V + F));
    r.vindex.resize(static_cast<size_t>(V + F));
    for (int v = 0; v < V + F; ++v) {
        r.vclass[static_cast<size_t>(v)] = v < V ? VClass::Primal : VClass::Dual;
        r.vindex[static_cast<size_t>(v)] = v < V ? v + 1 : v - V + 1;
    }
    return r;
}

PlanarMap primal_from_radial(const LabeledRadial& r, VClass side) {
    const PlanarMap& m = r.map;
    if (static_cast<int>(r.vclass.size()) != m.order() ||
        static_cast<int>(r.vindex.size()) != m.order())
        throw NotQuadrangulation("class labelling missing or inconsistent");
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) != 4)
            throw NotQuadrangulation("input has a face that is not a 4-gon");
    for (int e = 0; e < m.size(); ++e)
        if (r.vclass[static_cast<size_t>(m.tail(2 * e))] ==
            r.vclass[static_cast<size_t>(m.tail(2 * e + 1))])
            throw NotQuadrangulation("an edge joins two vertices of the same class");

    // Index labelling must enumerate the side 1..N.
    int N = 0;
    for (int v = 0; v < m.order(); ++v)
        if (r.vclass[static_cast<size_t>(v)] == side) ++N;
    std::vector<int> by_index(static_cast<size_t>(N), -1);
    for (int v = 0; v < m.order(); ++v)
        if (r.vclass[static_cast<size_t>(v)] == side) {
            const int idx = r.vindex[static_cast<size_t>(v)];
            if (idx < 1 || idx > N || by_index[static_cast<size_t>(idx - 1)] != -1)
                throw NotQuadrangulation("index labelling is not a bijection on the class");
            by_index[static_cast<size_t>(idx - 1)] = v;
        }

    // Each dart with a side-class tail becomes a dart of the extraction;
    // its twin is phi^2 (the opposite corner of its quadrangular face), and
    // rotations are inherited unchanged.
    const int D = m.dart_count();
    std::vector<int> new_id(static_cast<size_t>(D), -1);
    std::vector<int> side_darts;
    for (int d = 0; d < D; ++d)
        if (r.vclass[static_cast<size_t>(m.tail(d))] == side) side_darts.push_back(d);
    int ne = 0;
    for (int d : side_darts) {
        if (new_id[static_cast<size_t>(d)] != -1) continue;
        const int o = m.phi(m.phi(d));  // opposite corner
        if (o == d || new_id[static_cast<size_t>(o)] != -1)
            throw NotQuadrangulation("degenerate quadrangular face");
        new_id[static_cast<size_t>(d)] = 2 * ne;
        new_id[static_cast<size_t>(o)] = 2 * ne + 1;
        ++ne;
    }
    std::vector<int> tail(static_cast<size_t>(2 * ne)), sigma(static_cast<size_t>(2 * ne));
    for (int d : side_darts) {
        const int nd = new_id[static_cast<size_t>(d)];
        tail[static_cast<size_t>(nd)] = r.vindex[static_cast<size_t>(m.tail(d))] - 1;
        sigma[static_cast<size_t>(nd)] = new_id[static_cast<size_t>(m.sigma(d))];
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(N));
    const char* prefix = side == VClass::Primal ? "v" : "f";
    for (int i = 1; i <= N; ++i) labels.push_back(prefix + std::to_string(i));
    return PlanarMap::from_arrays(std::move(tail), std::move(sigma), N, std::move(labels));
}

void validate_labeled_radial(const LabeledRadial& r) {
    const PlanarMap& m = r.map;
    if (static_cast<int>(r.vclass.size()) != m.order() ||
        static_cast<int>(r.vindex.size()) != m.order())
        throw MissingLabels("class or index labelling has the wrong size");
    for (int e = 0; e < m.size(); ++e)
        if (r.vclass[static_cast<size_t>(m.tail(2 * e))] ==
            r.vclass[static_cast<size_t>(m.tail(2 * e + 1))])
            throw NotQuadrangulation("an edge joins two vertices of the same class");
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) != 4)
            throw NotQuadrangulation("a face is not a 4-gon");
    const int np = r.class_size(VClass::Primal);
    const int nd = r.class_size(VClass::Dual);
    if (np != nd) throw MissingLabels("class sizes differ");
    std::vector<char> seen_p(static_cast<size_t>(np), 0), seen_d(static_cast<size_t>(nd), 0);
    for (int v = 0; v < m.order(); ++v) {
        const int idx = r.vindex[static_cast<size_t>(v)];
        auto& seen = r.vclass[static_cast<size_t>(v)] == VClass::Primal ? seen_p : seen_d;
        if (idx < 1 || idx > static_cast<int>(seen.size()) || seen[static_cast<size_t>(idx - 1)])
            throw MissingLabels("index labelling is not a bijection per class");
        seen[static_cast<size_t>(idx - 1)] = 1;
    }
    if (!every_four_cycle_bounds_face(r))
        throw NotQuadrangulation("a 4-cycle does not bound a face");
    if (r.cursor) {
        const Cursor& cur = *r.cursor;
        auto cls = [&](int v) { return r.vclass[static_cast<size_t>(v)]; };
        for (int v : {cur.a, cur.b, cur.c, cur.A, cur.B, cur.C})
            if (v < 0 || v >= m.order()) throw InvalidCursor("cursor vertex out of range");
        if (cls(cur.a) != VClass::Primal || cls(cur.b) != VClass::Primal ||
            cls(cur.c) != VClass::Primal || cls(cur.A) != VClass::Dual ||
            cls(cur.B) != VClass::Dual || cls(cur.C) != VClass::Dual)
            throw InvalidCursor("cursor roles sit in the wrong classes");
        auto edge = [&](int u, int v) { return m.find_dart(u, v) >= 0; };
        // The hexagon a-B-c-A-b-C-a of the working configuration.
        if (!edge(cur.a, cur.B) || !edge(cur.B, cur.c) || !edge(cur.c, cur.A) ||
            !edge(cur.A, cur.b) || !edge(cur.b, cur.C) || !edge(cur.C, cur.a))
            throw InvalidCursor("cursor hexagon edge missing");
    }
}

// --- edge splitting ----------------------------------------------------------

PlanarMap edge_split(const PlanarMap& m, int a, int b, int c) {
    if (a < 0 || a >= m.order() || b < 0 || b >= m.order() || c < 0 || c >= m.order())
        throw InvalidParameter("vertex index out of range");
    if (a == b) throw NotAnEdge("cannot split a loop");
    const int dart_ab = m.find_dart(a, b);
    if (dart_ab < 0) throw NotAnEdge("edge to split is not in the map");
    if (c == a || c == b) throw VertexNotOnFace("the anchor vertex must differ from both endpoints");

    // Pick the side of ab whose boundary walk passes through c; prefer the
    // side of dart a->b for determinism when both do.
    int dart_cy = -1;       // the walk dart with tail c on the chosen face
    bool a_side = true;     // true: chosen face lies on dart a->b's side
    for (int cand : {dart_ab, PlanarMap::twin(dart_ab)}) {
        int d = cand;
        do {
            if (m.tail(d) == c) {
                dart_cy = d;
                break;
            }
            d = m.phi(d);
        } while (d != cand);
        if (dart_cy >= 0) {
            a_side = (cand == dart_ab);
            break;
        }
    }
    if (dart_cy < 0) throw VertexNotOnFace("the anchor vertex lies on neither side of the edge");

    const int dart_ba = PlanarMap::twin(dart_ab);
    const int D = m.dart_count();
    // New darts: a<->d, b<->d, c<->d appended after the old ones.
    const int Dad = D, Dda = D + 1, Dbd = D + 2, Ddb = D + 3, Dcd = D + 4, Ddc = D + 5;
    const int dv = m.order();  // the fresh vertex

    std::vector<int> tail(static_cast<size_t>(D + 6));
    std::vector<int> sigma(static_cast<size_t>(D + 6));
    for (int d = 0; d < D; ++d) {
        tail[static_cast<size_t>(d)] = m.tail(d);
        sigma[static_cast<size_t>(d)] = m.sigma(d);
    }
    tail[static_cast<size_t>(Dad)] = a;
    tail[static_cast<size_t>(Dda)] = dv;
    tail[static_cast<size_t>(Dbd)] = b;
    tail[static_cast<size_t>(Ddb)] = dv;
    tail[static_cast<size_t>(Dcd)] = c;
    tail[static_cast<size_t>(Ddc)] = dv;

    // a: a->d takes a->b's rotation slot.
    {
        const int prev = m.sigma_inv(dart_ab), next = m.sigma(dart_ab);
        if (prev == dart_ab) {
            sigma[static_cast<size_t>(Dad)] = Dad;
        } else {
            sigma[static_cast<size_t>(prev)] = Dad;
            sigma[static_cast<size_t>(Dad)] = next;
        }
    }
    // b: b->d takes b->a's slot.
    {
        const int prev = m.sigma_inv(dart_ba), next = m.sigma(dart_ba);
        if (prev == dart_ba) {
            sigma[static_cast<size_t>(Dbd)] = Dbd;
        } else {
            sigma[static_cast<size_t>(prev)] = Dbd;
            sigma[static_cast<size_t>(Dbd)] = next;
        }
    }
    // c: c->d slots in just before the face's outgoing dart at c.
    {
        const int prev = m.sigma_inv(dart_cy);
        sigma[static_cast<size_t>(prev)] = Dcd;
        sigma[static_cast<size_t>(Dcd)] = dart_cy;
    }
    // d: rotation (a, c, b) when the anchor face lies on a->b's side, the
    // mirror image (b, c, a) otherwise — so that the anchor face splits
    // into two and the opposite face merely gains d on its boundary.
    if (a_side) {
        sigma[static_cast<size_t>(Dda)] = Ddc;
        sigma[static_cast<size_t>(Ddc)] = Ddb;
        sigma[static_cast<size_t>(Ddb)] = Dda;
    } else {
        sigma[static_cast<size_t>(Ddb)] = Ddc;
        sigma[static_cast<size_t>(Ddc)] = Dda;
        sigma[static_cast<size_t>(Dda)] = Ddb;
    }

    // Drop the two removed darts, compacting ids order-preservingly.
    std::vector<int> remap(static_cast<size_t>(D + 6), -1);
    int nd = 0;
    for (int d = 0; d < D + 6; ++d)
        if (d != dart_ab && d != dart_ba) remap[static_cast<size_t>(d)] = nd++;
    // The removed pair are twins (2e, 2e+1), so twin parity survives compaction.
    std::vector<int> tail2(static_cast<size_t>(nd)), sigma2(static_cast<size_t>(nd));
    for (int d = 0; d < D + 6; ++d) {
        if (remap[static_cast<size_t>(d)] < 0) continue;
        tail2[static_cast<size_t>(remap[static_cast<size_t>(d)])] = tail[static_cast<size_t>(d)];
        sigma2[static_cast<size_t>(remap[static_cast<size_t>(d)])] =
            remap[static_cast<size_t>(sigma[static_cast<size_t>(d)])];
    }
    std::vector<std::string> labels;
    if (m.has_labels()) {
        labels.reserve(static_cast<size_t>(m.order() + 1));
        for (int v = 0; v < m.order(); ++v) labels.push_back(m.label(v));
        std::string fresh = "u";
        int suffix = 1;
        while (std::find(labels.begin(), labels.end(), fresh) != labels.end())
            fresh = "u" + std::to_string(++suffix);
        labels.push_back(fresh);
    }
    return PlanarMap::from_arrays(std::move(tail2), std::move(sigma2), m.order() + 1,
                                  std::move(labels));
}

// --- polyhedrality -----------------------------------------------------------

bool is_polyhedral_map(const PlanarMap& m) {
    return m.simple() && is_three_connected(underlying(m));
}

bool every_four_cycle_bounds_face(const LabeledRadial& r) {
    const PlanarMap& m = r.map;
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_size(f) != 4)
            throw NotQuadrangulation("input has a face that is not a 4-gon");
    for (int e = 0; e < m.size(); ++e)
        if (r.vclass[static_cast<size_t>(m.tail(2 * e))] ==
            r.vclass[static_cast<size_t>(m.tail(2 * e + 1))])
            throw NotQuadrangulation("an edge joins two vertices of the same class");

    // Face keys: normalized pair of diagonals {u,w},{x,y}.
    auto norm = [](int u, int w, int x, int y) {
        std::pair<int, int> p = std::minmax(u, w);
        std::pair<int, int> q = std::minmax(x, y);
        if (q < p) std::swap(p, q);
        return std::make_pair(p, q);
    };
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> face_keys;
    for (const auto& walk : faces(m))
        face_keys.insert(norm(walk[0], walk[2], walk[1], walk[3]));

    // In a bipartite graph every 4-cycle has its opposite corners in one
    // class, so pairs with >= 2 common neighbors enumerate all of them.
    AbstractGraph g = underlying(m);
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w) {
            if (r.vclass[static_cast<size_t>(u)] != r.vclass[static_cast<size_t>(w)]) continue;
            std::vector<int> common;
            std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                                  g.neighbors(w).begin(), g.neighbors(w).end(),
                                  std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!face_keys.count(norm(u, w, common[i], common[j]))) return false;
        }
    return true;
}

// --- serialisation -----------------------------------------------------------

namespace {

std::vector<std::string> effective_labels(const PlanarMap& m) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m.order()));
    for (int v = 0; v < m.order(); ++v)
        labels.push_back(m.has_labels() ? m.label(v) : std::to_string(v + 1));
    return labels;
}

}  // namespace

std::string write_map_text(const PlanarMap& m) {
    const auto labels = effective_labels(m);
    std::ostringstream os;
    for (int v = 0; v < m.order(); ++v) {
        os << labels[static_cast<size_t>(v)] << ':';
        for (int w : m.neighbors_in_order(v)) os << ' ' << labels[static_cast<size_t>(w)];
        os << '\n';
    }
    return os.str();
}

PlanarMap read_map_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> neighbor_names;
    std::map<std::string, int> id_of;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InconsistentRotation("serialised map line lacks a ':'");
        std::string label = line.substr(0, colon);
        while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) label.pop_back();
        size_t start = label.find_first_not_of(" \t");
        label = start == std::string::npos ? std::string() : label.substr(start);
        if (label.empty()) throw InconsistentRotation("empty vertex label");
        if (id_of.count(label)) throw InconsistentRotation("duplicate vertex label");
        id_of[label] = static_cast<int>(labels.size());
        labels.push_back(label);
        std::istringstream rest(line.substr(colon + 1));
        std::vector<std::string> nbrs;
        std::string tok;
        while (rest >> tok) nbrs.push_back(tok);
        neighbor_names.push_back(std::move(nbrs));
    }
    if (labels.empty()) throw InconsistentRotation("empty serialised map");
    std::vector<std::vector<int>> rotation(labels.size());
    for (size_t v = 0; v < labels.size(); ++v)
        for (const auto& name : neighbor_names[v]) {
            auto it = id_of.find(name);
            if (it == id_of.end())
                throw InconsistentRotation("neighbor label '" + name + "' is not a vertex");
            rotation[v].push_back(it->second);
        }
    return build_map(rotation, std::move(labels));
}

std::string write_map_json(const PlanarMap& m) {
    const auto labels = effective_labels(m);
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < m.order(); ++v) {
        nlohmann::json entry;
        entry["label"] = labels[static_cast<size_t>(v)];
        entry["neighbors"] = nlohmann::json::array();
        for (int w : m.neighbors_in_order(v))
            entry["neighbors"].push_back(labels[static_cast<size_t>(w)]);
        j["vertices"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

PlanarMap read_map_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InconsistentRotation(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InconsistentRotation("JSON map needs a 'vertices' array");
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> neighbor_names;
    std::map<std::string, int> id_of;
    for (const auto& entry : j["vertices"]) {
        std::string label = entry.at("label").get<std::string>();
        if (id_of.count(label)) throw InconsistentRotation("duplicate vertex label");
        id_of[label] = static_cast<int>(labels.size());
        labels.push_back(label);
        std::vector<std::string> nbrs;
        for (const auto& n : entry.at("neighbors")) nbrs.push_back(n.get<std::string>());
        neighbor_names.push_back(std::move(nbrs));
    }
    std::vector<std::vector<int>> rotation(labels.size());
    for (size_t v = 0; v < labels.size(); ++v)
        for (const auto& name : neighbor_names[v]) {
            auto it = id_of.find(name);
            if (it == id_of.end())
                throw InconsistentRotation("neighbor label '" + name + "' is not a vertex");
            rotation[v].push_back(it->second);
        }
    return build_map(rotation, std::move(labels));
}

std::string map_to_dot(const PlanarMap& m, const std::string& name) {
    const auto labels = effective_labels(m);
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < m.order(); ++v)
        os << "  \"" << labels[static_cast<size_t>(v)] << "\";\n";
    for (int e = 0; e < m.size(); ++e)
        os << "  \"" << labels[static_cast<size_t>(m.tail(2 * e))] << "\" -- \""
           << labels[static_cast<size_t>(m.tail(2 * e + 1))] << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace selfdual
