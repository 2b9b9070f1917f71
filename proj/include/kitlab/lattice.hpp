// Builders for concrete decompositions: the L x L square-lattice torus, the
// cube as a decomposition of the sphere, and a genus-2 surface obtained by
// gluing two 3x3 tori along a removed face.
//
// Conventions fixed here and relied on everywhere else:
//   - faces are traversed counterclockwise in the (column j -> right,
//     row i -> up) picture;
//   - h(i,j) runs v(i,j) -> v(i,j+1), u(i,j) runs v(i,j) -> v(i+1,j);
//   - generator hints: cycles = [lambda_1..g | tau_1..g] and
//     cocycles = [nu_1..g | mu_1..g] with <lambda_i, mu_i> = <tau_i, nu_i> = 1
//     and all other pairings zero.
#pragma once

#include "kitlab/cell_complex.hpp"

#include <numeric>
#include <stdexcept>

namespace kitlab {

// Coordinate helpers for the L x L torus builder's id layout.
struct TorusGeometry {
    int L;

    explicit TorusGeometry(int L_) : L(L_) {}

    int wrap(int a) const { return ((a % L) + L) % L; }
    int vertex(int i, int j) const { return wrap(i) * L + wrap(j); }
    int hedge(int i, int j) const { return wrap(i) * L + wrap(j); }
    int uedge(int i, int j) const { return L * L + wrap(i) * L + wrap(j); }
    int face(int i, int j) const { return wrap(i) * L + wrap(j); }
};

inline CellComplex build_torus(int L, int d = 2) {
    if (L < 2)
        throw std::invalid_argument("build_torus: L must be >= 2");
    if (d < 2)
        throw std::invalid_argument("build_torus: modulus must be >= 2");
    TorusGeometry g(L);
    CellComplex c;
    c.num_vertices = L * L;
    c.default_modulus = d;
    c.declared_genus = 1;
    c.torus = TorusInfo{L};
    c.edges.resize(2 * L * L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            c.edges[g.hedge(i, j)] = {g.vertex(i, j), g.vertex(i, j + 1)};
            c.edges[g.uedge(i, j)] = {g.vertex(i, j), g.vertex(i + 1, j)};
        }
    c.faces.resize(L * L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            c.faces[g.face(i, j)].edges = {
                {g.hedge(i, j), +1},
                {g.uedge(i, j + 1), +1},
                {g.hedge(i + 1, j), -1},
                {g.uedge(i, j), -1},
            };
        }

    GeneratorHints hints;
    std::map<int, int> lambda, tau, nu, mu;
    for (int j = 0; j < L; ++j) lambda[g.hedge(0, j)] = 1;   // horizontal loop
    for (int i = 0; i < L; ++i) tau[g.uedge(i, 0)] = 1;      // vertical loop
    for (int j = 0; j < L; ++j) nu[g.uedge(0, j)] = 1;       // dual loop crossing tau
    for (int i = 0; i < L; ++i) mu[g.hedge(i, 0)] = 1;       // dual loop crossing lambda
    hints.cycles = {lambda, tau};
    hints.cocycles = {nu, mu};
    c.hints = std::move(hints);

    c.finalize();
    return c;
}

// The surface of the cube: 8 vertices, 12 edges, 6 faces, genus 0.
inline CellComplex build_sphere_cube(int d = 2) {
    if (d < 2)
        throw std::invalid_argument("build_sphere_cube: modulus must be >= 2");
    CellComplex c;
    c.num_vertices = 8;
    c.default_modulus = d;
    c.declared_genus = 0;
    c.edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 0},   // bottom ring
        {4, 5}, {5, 6}, {6, 7}, {7, 4},   // top ring
        {0, 4}, {1, 5}, {2, 6}, {3, 7},   // verticals
    };
    // all faces traversed so that consecutive edge cross products point outward
    c.faces.resize(6);
    c.faces[0].edges = {{3, -1}, {2, -1}, {1, -1}, {0, -1}};   // bottom
    c.faces[1].edges = {{4, +1}, {5, +1}, {6, +1}, {7, +1}};   // top
    c.faces[2].edges = {{0, +1}, {9, +1}, {4, -1}, {8, -1}};   // front
    c.faces[3].edges = {{2, +1}, {11, +1}, {6, -1}, {10, -1}}; // back
    c.faces[4].edges = {{1, +1}, {10, +1}, {5, -1}, {9, -1}};  // right
    c.faces[5].edges = {{8, +1}, {7, -1}, {11, -1}, {3, +1}};  // left
    c.hints = GeneratorHints{};  // genus 0: no generators
    c.finalize();
    return c;
}

// Genus-2 surface: remove one face from each of two 3x3 tori and glue the two
// boundary squares with opposite boundary orientations. Euler characteristic
// 14 - 32 + 16 = -2.
inline CellComplex build_genus2(int d = 2) {
    if (d < 2)
        throw std::invalid_argument("build_genus2: modulus must be >= 2");
    const int L = 3;
    TorusGeometry g(L);
    CellComplex a = build_torus(L, d);

    const int nv = a.num_vertices, ne = a.num_edges(), nf = a.num_faces();
    CellComplex c;
    c.num_vertices = 2 * nv;
    c.default_modulus = d;
    c.declared_genus = 2;
    c.edges.resize(2 * ne);
    for (int e = 0; e < ne; ++e) {
        c.edges[e] = a.edges[e];
        c.edges[ne + e] = {a.edges[e].tail + nv, a.edges[e].head + nv};
    }
    // removed faces: face(0,0) in each copy
    const int fa_removed = g.face(0, 0);
    for (int f = 0; f < nf; ++f) {
        if (f == fa_removed) continue;
        FaceRec fa = a.faces[f], fb = a.faces[f];
        for (auto& [e, s] : fb.edges) e += ne;
        c.faces.push_back(fa);
        c.faces.push_back(fb);
    }

    // boundary identification: A's removed square traversed forward matches
    // B's traversed backward. Pairs are orientation-aligned by construction.
    int a0 = g.vertex(0, 0), a1 = g.vertex(0, 1), a2 = g.vertex(1, 1), a3 = g.vertex(1, 0);
    std::vector<std::pair<int, int>> vertex_glue = {
        {a0, nv + g.vertex(0, 0)},
        {a1, nv + g.vertex(1, 0)},
        {a2, nv + g.vertex(1, 1)},
        {a3, nv + g.vertex(0, 1)},
    };
    std::vector<std::pair<int, int>> edge_glue = {
        {g.hedge(0, 0), ne + g.uedge(0, 0)},
        {g.uedge(0, 1), ne + g.hedge(1, 0)},
        {g.hedge(1, 0), ne + g.uedge(0, 1)},
        {g.uedge(0, 0), ne + g.hedge(0, 0)},
    };

    std::vector<int> vmap(c.num_vertices);
    std::iota(vmap.begin(), vmap.end(), 0);
    for (auto [keep, drop] : vertex_glue) vmap[drop] = keep;
    std::vector<int> emap(c.edges.size());
    std::iota(emap.begin(), emap.end(), 0);
    for (auto [keep, drop] : edge_glue) emap[drop] = keep;

    for (auto& e : c.edges) {
        e.tail = vmap[e.tail];
        e.head = vmap[e.head];
    }
    for (auto [keep, drop] : edge_glue) {
        if (c.edges[keep].tail != c.edges[drop].tail ||
            c.edges[keep].head != c.edges[drop].head)
            throw std::logic_error("build_genus2: glued edge orientations disagree");
    }

    // compact ids
    std::vector<int> vdense(c.num_vertices, -1), edense(c.edges.size(), -1);
    int vcount = 0;
    for (int v = 0; v < c.num_vertices; ++v)
        if (vmap[v] == v) vdense[v] = vcount++;
    int ecount = 0;
    std::vector<EdgeRec> new_edges;
    for (size_t e = 0; e < c.edges.size(); ++e)
        if (emap[e] == static_cast<int>(e)) {
            edense[e] = ecount++;
            new_edges.push_back({vdense[vmap[c.edges[e].tail]], vdense[vmap[c.edges[e].head]]});
        }
    auto edge_id = [&](int e) { return edense[emap[e]]; };

    for (auto& f : c.faces)
        for (auto& [e, s] : f.edges) e = edge_id(e);
    c.num_vertices = vcount;
    c.edges = std::move(new_edges);

    // generator loops placed away from the glued cells (row 2 / column 2)
    GeneratorHints hints;
    auto chain_a = [&](std::initializer_list<int> es) {
        std::map<int, int> m;
        for (int e : es) m[edge_id(e)] = 1;
        return m;
    };
    auto chain_b = [&](std::initializer_list<int> es) {
        std::map<int, int> m;
        for (int e : es) m[edge_id(ne + e)] = 1;
        return m;
    };
    auto lambda_A = chain_a({g.hedge(2, 0), g.hedge(2, 1), g.hedge(2, 2)});
    auto lambda_B = chain_b({g.hedge(2, 0), g.hedge(2, 1), g.hedge(2, 2)});
    auto tau_A = chain_a({g.uedge(0, 2), g.uedge(1, 2), g.uedge(2, 2)});
    auto tau_B = chain_b({g.uedge(0, 2), g.uedge(1, 2), g.uedge(2, 2)});
    auto nu_A = chain_a({g.uedge(2, 0), g.uedge(2, 1), g.uedge(2, 2)});
    auto nu_B = chain_b({g.uedge(2, 0), g.uedge(2, 1), g.uedge(2, 2)});
    auto mu_A = chain_a({g.hedge(0, 2), g.hedge(1, 2), g.hedge(2, 2)});
    auto mu_B = chain_b({g.hedge(0, 2), g.hedge(1, 2), g.hedge(2, 2)});
    hints.cycles = {lambda_A, lambda_B, tau_A, tau_B};
    hints.cocycles = {nu_A, nu_B, mu_A, mu_B};
    c.hints = std::move(hints);

    c.finalize();
    require_valid(c);
    return c;
}

} // namespace kitlab
