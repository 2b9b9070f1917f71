// Z_d chains and cochains on a cell complex, boundary/coboundary maps, walks
// and the chain/cochain intersection pairing.
//
// Chains are indexed by edge ids, cochains by dual edge ids; the two share the
// same integer keys through the edge <-> dual edge bijection. Coefficients are
// stored sparsely and kept reduced to [1, d); absent keys are zero.
#pragma once

#include "kitlab/cell_complex.hpp"
#include "kitlab/intmath.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kitlab {

template <class Tag>
struct ZdVector {
    int d = 2;
    std::map<int, int> coef;

    ZdVector() = default;
    explicit ZdVector(int d_) : d(d_) {
        if (d < 2) throw std::invalid_argument("ZdVector: modulus must be >= 2");
    }

    int get(int k) const {
        auto it = coef.find(k);
        return it == coef.end() ? 0 : it->second;
    }
    void set(int k, long long v) {
        int r = mod_norm(v, d);
        if (r == 0) coef.erase(k);
        else coef[k] = r;
    }
    void add(int k, long long v) { set(k, get(k) + v); }

    bool is_zero() const { return coef.empty(); }

    ZdVector operator+(const ZdVector& o) const {
        check_same(o);
        ZdVector r = *this;
        for (auto [k, v] : o.coef) r.add(k, v);
        return r;
    }
    ZdVector operator-(const ZdVector& o) const {
        check_same(o);
        ZdVector r = *this;
        for (auto [k, v] : o.coef) r.add(k, -v);
        return r;
    }
    ZdVector operator-() const {
        ZdVector r(d);
        for (auto [k, v] : coef) r.set(k, -v);
        return r;
    }
    ZdVector scaled(long long s) const {
        ZdVector r(d);
        for (auto [k, v] : coef) r.set(k, static_cast<long long>(v) * s);
        return r;
    }
    bool operator==(const ZdVector& o) const { return d == o.d && coef == o.coef; }

    void check_same(const ZdVector& o) const {
        if (d != o.d) throw std::invalid_argument("ZdVector: modulus mismatch");
    }
};

struct ChainTag {};
struct CochainTag {};
using Chain = ZdVector<ChainTag>;      // coefficients on edges
using Cochain = ZdVector<CochainTag>;  // coefficients on dual edges

// 0-chains on vertices and 2-chains on faces reuse the same container.
struct VertexTag {};
struct FaceTag {};
using VertexChain = ZdVector<VertexTag>;
using FaceChain = ZdVector<FaceTag>;

inline VertexChain boundary(const CellComplex& c, const Chain& ch) {
    VertexChain out(ch.d);
    for (auto [e, v] : ch.coef) {
        if (e < 0 || e >= c.num_edges())
            throw std::invalid_argument("boundary: edge id out of range");
        out.add(c.edges[e].head, v);
        out.add(c.edges[e].tail, -v);
    }
    return out;
}

inline Chain face_boundary(const CellComplex& c, int f, int d) {
    if (f < 0 || f >= c.num_faces())
        throw std::invalid_argument("face_boundary: unknown face id");
    Chain out(d);
    for (auto [e, s] : c.faces[f].edges) out.add(e, s);
    return out;
}

inline Chain two_chain_boundary(const CellComplex& c, const FaceChain& w) {
    Chain out(w.d);
    for (auto [f, v] : w.coef) {
        Chain fb = face_boundary(c, f, w.d);
        out = out + fb.scaled(v);
    }
    return out;
}

// Coboundary of the indicator cochain of v: coefficient +1 on incoming edges,
// -1 on outgoing ones. As a 1-cochain this is the boundary of the dual face
// of v, and X to this exponent is the star operator a_v.
inline Cochain covertex_coboundary(const CellComplex& c, int v, int d) {
    if (v < 0 || v >= c.num_vertices)
        throw std::invalid_argument("covertex_coboundary: unknown vertex id");
    Cochain out(d);
    for (int e : c.vertex_edges[v]) out.add(e, c.vertex_sign(v, e));
    return out;
}

// Boundary of a cochain taken in the dual complex: a 0-chain on faces.
inline FaceChain dual_boundary(const CellComplex& c, const Cochain& co) {
    FaceChain out(co.d);
    for (auto [e, v] : co.coef) {
        int left = -1, right = -1;
        for (auto [f, s] : c.edge_faces[e]) (s > 0 ? left : right) = f;
        if (left < 0 || right < 0)
            throw std::invalid_argument("dual_boundary: edge without two faces");
        out.add(left, v);    // head of e*
        out.add(right, -v);  // tail of e*
    }
    return out;
}

// Sum over shared spins of chain and cochain coefficients; bilinear, and drops
// to homology/cohomology classes.
inline int intersection(const Chain& ch, const Cochain& co) {
    if (ch.d != co.d) throw std::invalid_argument("intersection: modulus mismatch");
    long long acc = 0;
    for (auto [e, v] : ch.coef) acc += static_cast<long long>(v) * co.get(e);
    return mod_norm(acc, ch.d);
}

// ---------------------------------------------------------------------------
// Walks and cowalks.

// A walk is an alternating vertex/edge sequence; steps record the edge and the
// direction it is traversed in (+1 along its orientation).
struct Walk {
    std::vector<int> vertices;                 // N+1 entries
    std::vector<std::pair<int, int>> steps;    // N entries: (edge, direction)

    int start() const { return vertices.front(); }
    int end() const { return vertices.back(); }
    bool closed() const { return start() == end(); }
};

inline Walk make_walk(const CellComplex& c, int start, const std::vector<std::pair<int, int>>& steps) {
    Walk w;
    w.vertices.push_back(start);
    int at = start;
    for (auto [e, dir] : steps) {
        if (e < 0 || e >= c.num_edges())
            throw std::invalid_argument("make_walk: edge id out of range");
        if (dir != 1 && dir != -1)
            throw std::invalid_argument("make_walk: direction must be +1 or -1");
        int from = dir > 0 ? c.edges[e].tail : c.edges[e].head;
        int to = dir > 0 ? c.edges[e].head : c.edges[e].tail;
        if (from != at)
            throw std::invalid_argument("make_walk: step not incident to current vertex");
        w.steps.push_back({e, dir});
        w.vertices.push_back(to);
        at = to;
    }
    return w;
}

inline Chain walk_chain(const Walk& w, int d, int k = 1) {
    Chain out(d);
    for (auto [e, dir] : w.steps) out.add(e, dir * k);
    return out;
}

inline Walk concat(const CellComplex& c, const Walk& a, const Walk& b) {
    if (a.end() != b.start())
        throw std::invalid_argument("concat: walks are not composable");
    std::vector<std::pair<int, int>> steps = a.steps;
    steps.insert(steps.end(), b.steps.begin(), b.steps.end());
    return make_walk(c, a.start(), steps);
}

// A cowalk alternates faces and dual edges. Direction +1 traverses e* along
// its orientation, i.e. from the right face of e to its left face.
struct Cowalk {
    std::vector<int> faces;
    std::vector<std::pair<int, int>> steps;  // (edge id, direction)

    int start() const { return faces.front(); }
    int end() const { return faces.back(); }
    bool closed() const { return start() == end(); }
};

inline Cowalk make_cowalk(const CellComplex& c, int start, const std::vector<std::pair<int, int>>& steps) {
    Cowalk w;
    w.faces.push_back(start);
    int at = start;
    for (auto [e, dir] : steps) {
        if (e < 0 || e >= c.num_edges())
            throw std::invalid_argument("make_cowalk: edge id out of range");
        if (dir != 1 && dir != -1)
            throw std::invalid_argument("make_cowalk: direction must be +1 or -1");
        int left = -1, right = -1;
        for (auto [f, s] : c.edge_faces[e]) (s > 0 ? left : right) = f;
        int from = dir > 0 ? right : left;
        int to = dir > 0 ? left : right;
        if (from != at)
            throw std::invalid_argument("make_cowalk: step not incident to current face");
        w.steps.push_back({e, dir});
        w.faces.push_back(to);
        at = to;
    }
    return w;
}

inline Cochain cowalk_cochain(const Cowalk& w, int d, int k = 1) {
    Cochain out(d);
    for (auto [e, dir] : w.steps) out.add(e, dir * k);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering.

template <class Tag>
inline std::string coef_text(const ZdVector<Tag>& v) {
    std::ostringstream out;
    bool first = true;
    for (auto [k, c] : v.coef) {
        if (!first) out << " ";
        out << k << "^" << c;
        first = false;
    }
    return out.str();
}

inline std::string to_text(const Chain& ch) {
    return "chain d=" + std::to_string(ch.d) + ": " + coef_text(ch);
}

inline std::string to_text(const Cochain& co) {
    return "cochain d=" + std::to_string(co.d) + ": " + coef_text(co);
}

} // namespace kitlab
