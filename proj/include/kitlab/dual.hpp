// Dual decomposition G* of a cell complex G.
//
// Ids are preserved across duality: dual vertex id = face id, dual edge id =
// edge id, dual face id = vertex id. The dual edge e* crosses e from the face
// on the right of e (the one where e carries sign -1) to the face on its left
// (sign +1). With faces traversed counterclockwise this realizes the
// right-handed (e, e*, n) convention with n the outward surface normal.
//
// Dual faces are assembled from the rotation system: at each vertex, corners
// of incident faces link every arriving edge to the departing edge within the
// same face; following those links enumerates the star of the vertex. The
// resulting signed dual-edge list carries sign +1 on edges pointing into the
// vertex, so the boundary of the dual face of v equals the coboundary of the
// indicator cochain of v. Taking the dual twice reproduces the original
// complex, including edge orientations.
#pragma once

#include "kitlab/cell_complex.hpp"

#include <map>
#include <stdexcept>

namespace kitlab {

struct DualComplex {
    CellComplex complex;  // dual vertex id = primal face id, etc.
};

inline DualComplex dualize(const CellComplex& c) {
    require_valid(c);

    DualComplex dual;
    CellComplex& dc = dual.complex;
    dc.num_vertices = c.num_faces();
    dc.default_modulus = c.default_modulus;

    // dual edges: right face -> left face
    dc.edges.resize(c.edges.size());
    for (int e = 0; e < c.num_edges(); ++e) {
        int left = -1, right = -1;
        for (auto [f, s] : c.edge_faces[e]) (s > 0 ? left : right) = f;
        if (left < 0 || right < 0)
            throw std::invalid_argument("dualize: edge without two signed face uses");
        dc.edges[e] = {right, left};
    }

    // corner links: for each vertex, map (arriving edge) -> departing edge
    std::vector<std::map<int, int>> next_edge(c.num_vertices);
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& fe = c.faces[f].edges;
        for (size_t k = 0; k < fe.size(); ++k) {
            auto [e_in, s_in] = fe[k];
            auto [e_out, s_out] = fe[(k + 1) % fe.size()];
            int corner_vertex = s_in > 0 ? c.edges[e_in].head : c.edges[e_in].tail;
            if (next_edge[corner_vertex].count(e_in))
                throw std::invalid_argument("dualize: duplicate corner at vertex " +
                                            std::to_string(corner_vertex));
            next_edge[corner_vertex][e_in] = e_out;
        }
    }

    dc.faces.resize(c.num_vertices);
    for (int v = 0; v < c.num_vertices; ++v) {
        if (c.vertex_edges[v].empty())
            throw std::invalid_argument("dualize: isolated vertex");
        int start = *std::min_element(c.vertex_edges[v].begin(), c.vertex_edges[v].end());
        FaceRec& df = dc.faces[v];
        int e = start;
        do {
            df.edges.push_back({e, c.vertex_sign(v, e)});
            auto it = next_edge[v].find(e);
            if (it == next_edge[v].end())
                throw std::invalid_argument("dualize: broken corner chain at vertex " +
                                            std::to_string(v));
            e = it->second;
        } while (e != start && df.edges.size() <= next_edge[v].size());
        if (e != start || df.edges.size() != next_edge[v].size())
            throw std::invalid_argument(
                "dualize: vertex link is not a single cycle at vertex " + std::to_string(v));
    }

    dc.finalize();
    require_valid(dc);
    return dual;
}

} // namespace kitlab
