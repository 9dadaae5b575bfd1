#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "selfdual/verify.hpp"

namespace selfdual {

namespace {

using Edge = std::pair<int, int>;

Edge norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Standard lowpoint block decomposition; every block comes out as an edge
// list (bridges are single-edge blocks).
std::vector<std::vector<Edge>> blocks_of(const AbstractGraph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<size_t>(n), 0), low(static_cast<size_t>(n), 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    // Iterative DFS to dodge recursion limits on long paths.
    struct Frame {
        int v, parent;
        size_t next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)]) continue;
        std::vector<Frame> frames;
        frames.push_back({root, -1});
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = ++timer;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const int u = nbrs[f.next++];
                if (u == f.parent) continue;
                if (!disc[static_cast<size_t>(u)]) {
                    stack.push_back({f.v, u});
                    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = ++timer;
                    frames.push_back({u, f.v});
                } else if (disc[static_cast<size_t>(u)] < disc[static_cast<size_t>(f.v)]) {
                    stack.push_back({f.v, u});
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(u)]);
                }
            } else {
                const int child = f.v, parent = f.parent;
                frames.pop_back();
                if (parent < 0) continue;
                low[static_cast<size_t>(parent)] =
                    std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(child)]);
                if (low[static_cast<size_t>(child)] >= disc[static_cast<size_t>(parent)]) {
                    std::vector<Edge> block;
                    for (;;) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e.first == parent && e.second == child) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

// One cycle of a 2-connected graph, as a vertex list, via the first DFS
// back edge.
std::vector<int> find_cycle(const AbstractGraph& h) {
    const int n = h.order();
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::vector<int> order;
    parent[0] = -1;
    std::vector<int> stk = {0};
    while (!stk.empty()) {
        const int v = stk.back();
        stk.pop_back();
        for (int u : h.neighbors(v)) {
            if (parent[static_cast<size_t>(u)] == -2) {
                parent[static_cast<size_t>(u)] = v;
                stk.push_back(u);
            } else if (u != parent[static_cast<size_t>(v)]) {
                // Back (or cross-in-DFS-order) edge: climb both endpoints'
                // ancestor chains to the meeting point.
                std::vector<int> av, au;
                for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) av.push_back(x);
                for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) au.push_back(x);
                std::set<int> on_av(av.begin(), av.end());
                int meet = -1;
                for (int x : au)
                    if (on_av.count(x)) {
                        meet = x;
                        break;
                    }
                std::vector<int> cycle;
                for (int x = v; x != meet; x = parent[static_cast<size_t>(x)]) cycle.push_back(x);
                cycle.push_back(meet);
                std::vector<int> back;
                for (int x = u; x != meet; x = parent[static_cast<size_t>(x)]) back.push_back(x);
                std::reverse(back.begin(), back.end());
                for (int x : back) cycle.push_back(x);
                if (cycle.size() >= 3) return cycle;
            }
        }
    }
    return {};
}

// Face-by-face insertion on one 2-connected block: start from any cycle,
// repeatedly choose the bridge-fragment with the fewest admissible faces
// and lay one of its paths into such a face. Returns all face walks, or
// nullopt once some fragment has nowhere to go.
std::optional<std::vector<std::vector<int>>> insertion_faces(const AbstractGraph& h) {
    std::vector<int> cycle = find_cycle(h);
    if (cycle.empty()) return std::nullopt;  // never for 2-connected input

    std::set<Edge> embedded_edges;
    std::vector<char> embedded_vertex(static_cast<size_t>(h.order()), 0);
    for (size_t i = 0; i < cycle.size(); ++i) {
        embedded_edges.insert(norm_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
        embedded_vertex[static_cast<size_t>(cycle[i])] = 1;
    }
    std::vector<std::vector<int>> walks;
    walks.push_back(cycle);
    std::reverse(cycle.begin(), cycle.end());
    walks.push_back(cycle);

    const int total_edges = h.size();
    while (static_cast<int>(embedded_edges.size()) < total_edges) {
        // Fragments: connected pieces of the not-yet-embedded part. A chord
        // between embedded vertices is a fragment of its own; otherwise a
        // component of interior vertices plus all its edges to the embedded
        // part.
        struct Fragment {
            std::vector<int> attachments;      // embedded vertices it touches
            std::vector<int> interior;         // not-yet-embedded vertices
        };
        std::vector<Fragment> fragments;
        for (const auto& [u, v] : h.edges())
            if (!embedded_edges.count({u, v}) && embedded_vertex[static_cast<size_t>(u)] &&
                embedded_vertex[static_cast<size_t>(v)])
                fragments.push_back({{u, v}, {}});
        std::vector<char> seen(static_cast<size_t>(h.order()), 0);
        for (int v = 0; v < h.order(); ++v) {
            if (embedded_vertex[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
            Fragment f;
            std::set<int> attach;
            std::queue<int> q;
            q.push(v);
            seen[static_cast<size_t>(v)] = 1;
            while (!q.empty()) {
                const int x = q.front();
                q.pop();
                f.interior.push_back(x);
                for (int u : h.neighbors(x)) {
                    if (embedded_vertex[static_cast<size_t>(u)]) {
                        attach.insert(u);
                    } else if (!seen[static_cast<size_t>(u)]) {
                        seen[static_cast<size_t>(u)] = 1;
                        q.push(u);
                    }
                }
            }
            f.attachments.assign(attach.begin(), attach.end());
            fragments.push_back(std::move(f));
        }

        // Admissible faces per fragment.
        int best = -1;
        std::vector<int> best_faces;
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            std::vector<int> ok;
            for (size_t wi = 0; wi < walks.size(); ++wi) {
                const std::set<int> on_face(walks[wi].begin(), walks[wi].end());
                bool all = true;
                for (int a : fragments[fi].attachments)
                    if (!on_face.count(a)) {
                        all = false;
                        break;
                    }
                if (all) ok.push_back(static_cast<int>(wi));
            }
            if (best < 0 || ok.size() < best_faces.size()) {
                best = static_cast<int>(fi);
                best_faces = std::move(ok);
            }
            if (best_faces.empty()) return std::nullopt;  // stuck: nonplanar
        }
        const Fragment& frag = fragments[static_cast<size_t>(best)];

        // One path of the fragment between two attachment points.
        std::vector<int> path;
        if (frag.interior.empty()) {
            path = {frag.attachments[0], frag.attachments[1]};
        } else {
            // BFS from one attachment through the interior to any other.
            const int src = frag.attachments[0];
            std::set<int> inside(frag.interior.begin(), frag.interior.end());
            std::map<int, int> from;
            std::queue<int> q;
            int reached = -1;
            for (int u : h.neighbors(src))
                if (inside.count(u) && !from.count(u)) {
                    from[u] = src;
                    q.push(u);
                }
            while (!q.empty() && reached < 0) {
                const int x = q.front();
                q.pop();
                for (int u : h.neighbors(x)) {
                    if (embedded_vertex[static_cast<size_t>(u)] && u != src) {
                        from[u] = x;
                        reached = u;
                        break;
                    }
                    if (inside.count(u) && !from.count(u)) {
                        from[u] = x;
                        q.push(u);
                    }
                }
            }
            if (reached < 0) return std::nullopt;  // cannot happen in a 2-connected block
            for (int x = reached; x != src; x = from[x]) path.push_back(x);
            path.push_back(src);
            std::reverse(path.begin(), path.end());
        }

        // Lay the path into the chosen face, splitting its walk in two.
        const std::vector<int> walk = walks[static_cast<size_t>(best_faces.front())];
        const int L = static_cast<int>(walk.size());
        int pu = -1, pw = -1;
        for (int i = 0; i < L; ++i) {
            if (walk[static_cast<size_t>(i)] == path.front()) pu = i;
            if (walk[static_cast<size_t>(i)] == path.back()) pw = i;
        }
        std::vector<int> f1, f2;
        for (int i = pu; i != pw; i = (i + 1) % L) f1.push_back(walk[static_cast<size_t>(i)]);
        f1.push_back(walk[static_cast<size_t>(pw)]);
        for (size_t i = path.size() - 2; i + 1 >= 2; --i) f1.push_back(path[i]);
        for (int i = pw; i != pu; i = (i + 1) % L) f2.push_back(walk[static_cast<size_t>(i)]);
        f2.push_back(walk[static_cast<size_t>(pu)]);
        for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

        walks[static_cast<size_t>(best_faces.front())] = std::move(f1);
        walks.push_back(std::move(f2));
        for (size_t i = 0; i + 1 < path.size(); ++i)
            embedded_edges.insert(norm_edge(path[i], path[i + 1]));
        for (int x : path) embedded_vertex[static_cast<size_t>(x)] = 1;
    }
    return walks;
}

}  // namespace

std::optional<PlanarMap> planar_embed(const AbstractGraph& g) {
    if (g.order() == 0) throw InvalidParameter("cannot embed the empty graph");
    if (!is_connected(g)) throw InvalidParameter("embedding needs a connected graph");
    if (g.order() == 1) return PlanarMap::from_arrays({}, {}, 1);

    // Embed each block separately, then merge rotations at cut vertices:
    // concatenating the per-block rotation segments of a shared vertex
    // nests each later block inside a face of the earlier ones.
    std::vector<std::vector<int>> rotation(static_cast<size_t>(g.order()));
    for (const auto& block_edges : blocks_of(g)) {
        if (block_edges.size() == 1) {
            const auto [u, v] = block_edges.front();
            rotation[static_cast<size_t>(u)].push_back(v);
            rotation[static_cast<size_t>(v)].push_back(u);
            continue;
        }
        std::set<int> vs;
        for (const auto& [u, v] : block_edges) {
            vs.insert(u);
            vs.insert(v);
        }
        std::vector<int> local_to_global(vs.begin(), vs.end());
        std::map<int, int> global_to_local;
        for (size_t i = 0; i < local_to_global.size(); ++i)
            global_to_local[local_to_global[i]] = static_cast<int>(i);
        AbstractGraph h(static_cast<int>(local_to_global.size()));
        for (const auto& [u, v] : block_edges) h.add_edge(global_to_local[u], global_to_local[v]);

        auto walks = insertion_faces(h);
        if (!walks) return std::nullopt;
        const PlanarMap block_map =
            map_from_faces(h.order(), *walks);
        for (int lv = 0; lv < block_map.order(); ++lv)
            for (int nb : block_map.neighbors_in_order(lv))
                rotation[static_cast<size_t>(local_to_global[static_cast<size_t>(lv)])].push_back(
                    local_to_global[static_cast<size_t>(nb)]);
    }
    return build_map(rotation);
}

}  // namespace selfdual
