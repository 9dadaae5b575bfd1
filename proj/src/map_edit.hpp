#pragma once

// Internal mutable combinatorial-map editor. The public PlanarMap is
// immutable; construction algorithms that perform many local surgeries use
// this editor so each surgery is O(1), then freeze the result. Darts are
// allocated in twin pairs (2e, 2e+1) and edges die in whole pairs, so twin
// parity survives compaction on freeze.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "selfdual/planar_map.hpp"

namespace selfdual::detail {

struct MutableMap {
    // per dart
    std::vector<int> tail, nxt, prv;
    std::vector<char> alive;
    // per vertex
    std::vector<int> rep, deg, idx;
    std::vector<VClass> cls;

    int alive_darts = 0;
    int max_index_primal = 0, max_index_dual = 0;
    long long edits = 0;  // one tick per local mutation

    static MutableMap from(const LabeledRadial& r) {
        MutableMap m;
        const PlanarMap& p = r.map;
        const int D = p.dart_count();
        m.tail.resize(static_cast<size_t>(D));
        m.nxt.resize(static_cast<size_t>(D));
        m.prv.resize(static_cast<size_t>(D));
        m.alive.assign(static_cast<size_t>(D), 1);
        m.alive_darts = D;
        for (int d = 0; d < D; ++d) {
            m.tail[static_cast<size_t>(d)] = p.tail(d);
            m.nxt[static_cast<size_t>(d)] = p.sigma(d);
            m.prv[static_cast<size_t>(d)] = p.sigma_inv(d);
        }
        m.rep.assign(static_cast<size_t>(p.order()), -1);
        m.deg.assign(static_cast<size_t>(p.order()), 0);
        for (int v = 0; v < p.order(); ++v) {
            m.rep[static_cast<size_t>(v)] = p.dart_at(v);
            m.deg[static_cast<size_t>(v)] = p.degree(v);
        }
        m.cls = r.vclass;
        m.idx = r.vindex;
        for (int v = 0; v < p.order(); ++v) {
            int& mx = m.cls[static_cast<size_t>(v)] == VClass::Primal ? m.max_index_primal
                                                                      : m.max_index_dual;
            if (m.idx[static_cast<size_t>(v)] > mx) mx = m.idx[static_cast<size_t>(v)];
        }
        return m;
    }

    int order() const { return static_cast<int>(rep.size()); }
    static int twin(int d) { return d ^ 1; }
    int head(int d) const { return tail[static_cast<size_t>(twin(d))]; }
    int phi(int d) const { return nxt[static_cast<size_t>(twin(d))]; }

    int find_dart(int u, int v) const {
        const int start = rep[static_cast<size_t>(u)];
        if (start < 0) return -1;
        int d = start;
        do {
            if (head(d) == v) return d;
            d = nxt[static_cast<size_t>(d)];
        } while (d != start);
        return -1;
    }

    int new_vertex(VClass c, int index) {
        rep.push_back(-1);
        deg.push_back(0);
        cls.push_back(c);
        idx.push_back(index);
        int& mx = c == VClass::Primal ? max_index_primal : max_index_dual;
        if (index > mx) mx = index;
        ++edits;
        return order() - 1;
    }

    // Allocates an edge's dart pair with tails set but not yet linked into
    // any rotation; returns (dart u->v, dart v->u).
    std::pair<int, int> new_edge(int u, int v) {
        const int d = static_cast<int>(tail.size());
        tail.push_back(u);
        tail.push_back(v);
        nxt.push_back(d);
        nxt.push_back(d + 1);
        prv.push_back(d);
        prv.push_back(d + 1);
        alive.push_back(1);
        alive.push_back(1);
        alive_darts += 2;
        ++edits;
        return {d, d + 1};
    }

    // sigma(at) := nd, pushing the old successor one step later.
    void insert_after(int at, int nd) {
        assert(tail[static_cast<size_t>(at)] == tail[static_cast<size_t>(nd)]);
        const int n = nxt[static_cast<size_t>(at)];
        nxt[static_cast<size_t>(at)] = nd;
        prv[static_cast<size_t>(nd)] = at;
        nxt[static_cast<size_t>(nd)] = n;
        prv[static_cast<size_t>(n)] = nd;
        ++deg[static_cast<size_t>(tail[static_cast<size_t>(nd)])];
        ++edits;
    }

    // nd takes old_d's position in its tail's rotation; old_d dies.
    void replace_slot(int old_d, int nd) {
        assert(alive[static_cast<size_t>(old_d)]);
        assert(tail[static_cast<size_t>(old_d)] == tail[static_cast<size_t>(nd)]);
        const int p = prv[static_cast<size_t>(old_d)], n = nxt[static_cast<size_t>(old_d)];
        if (p == old_d) {  // degree-1 vertex: rotation is the single dart
            nxt[static_cast<size_t>(nd)] = nd;
            prv[static_cast<size_t>(nd)] = nd;
        } else {
            nxt[static_cast<size_t>(p)] = nd;
            prv[static_cast<size_t>(nd)] = p;
            nxt[static_cast<size_t>(nd)] = n;
            prv[static_cast<size_t>(n)] = nd;
        }
        alive[static_cast<size_t>(old_d)] = 0;
        --alive_darts;
        const int v = tail[static_cast<size_t>(old_d)];
        if (rep[static_cast<size_t>(v)] == old_d) rep[static_cast<size_t>(v)] = nd;
        ++edits;
    }

    // Installs the full rotation (d0, d1, d2) at a fresh degree-0 vertex.
    void set_rotation3(int v, int d0, int d1, int d2) {
        assert(deg[static_cast<size_t>(v)] == 0);
        assert(tail[static_cast<size_t>(d0)] == v && tail[static_cast<size_t>(d1)] == v &&
               tail[static_cast<size_t>(d2)] == v);
        nxt[static_cast<size_t>(d0)] = d1;
        nxt[static_cast<size_t>(d1)] = d2;
        nxt[static_cast<size_t>(d2)] = d0;
        prv[static_cast<size_t>(d0)] = d2;
        prv[static_cast<size_t>(d1)] = d0;
        prv[static_cast<size_t>(d2)] = d1;
        rep[static_cast<size_t>(v)] = d0;
        deg[static_cast<size_t>(v)] = 3;
        ++edits;
    }

    // Compacts alive darts (order-preserving, twin pairs intact) into an
    // immutable map labelled from the class/index records.
    LabeledRadial freeze() const {
        const int D = static_cast<int>(tail.size());
        std::vector<int> remap(static_cast<size_t>(D), -1);
        int ndarts = 0;
        for (int d = 0; d < D; ++d)
            if (alive[static_cast<size_t>(d)]) {
                assert(alive[static_cast<size_t>(twin(d))]);
                remap[static_cast<size_t>(d)] = ndarts++;
            }
        std::vector<int> t2(static_cast<size_t>(ndarts)), s2(static_cast<size_t>(ndarts));
        for (int d = 0; d < D; ++d) {
            if (remap[static_cast<size_t>(d)] < 0) continue;
            t2[static_cast<size_t>(remap[static_cast<size_t>(d)])] = tail[static_cast<size_t>(d)];
            s2[static_cast<size_t>(remap[static_cast<size_t>(d)])] =
                remap[static_cast<size_t>(nxt[static_cast<size_t>(d)])];
        }
        std::vector<std::string> labels(static_cast<size_t>(order()));
        for (int v = 0; v < order(); ++v)
            labels[static_cast<size_t>(v)] =
                (cls[static_cast<size_t>(v)] == VClass::Primal ? "v" : "f") +
                std::to_string(idx[static_cast<size_t>(v)]);
        LabeledRadial r;
        r.map = PlanarMap::from_arrays(std::move(t2), std::move(s2), order(), std::move(labels));
        r.vclass = cls;
        r.vindex = idx;
        return r;
    }
};

}  // namespace selfdual::detail
