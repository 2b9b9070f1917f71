// Polygon decompositions of closed orientable surfaces.
//
// A CellComplex stores vertices, oriented edges and oriented faces. Faces list
// their edges in traversal order with a sign: +1 when the edge orientation
// agrees with the face traversal, -1 otherwise. On a well-formed complex every
// edge joins two distinct vertices and is shared by exactly two distinct faces
// with opposite signs.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kitlab {

struct EdgeRec {
    int tail = -1;
    int head = -1;
};

struct FaceRec {
    // (edge id, sign) in traversal order around the face
    std::vector<std::pair<int, int>> edges;
};

// Representatives of the 2g homology/cohomology generators attached by the
// lattice builders. Order: alpha-type loops first, then beta-type loops.
// cocycles[i] is paired so that the chain in slot i crosses the cochain in the
// opposite block exactly once.
struct GeneratorHints {
    std::vector<std::map<int, int>> cycles;    // chains, edge id -> coefficient
    std::vector<std::map<int, int>> cocycles;  // cochains, dual edge id -> coefficient
};

struct TorusInfo {
    int L = 0;
};

struct CellComplex {
    int num_vertices = 0;
    std::vector<EdgeRec> edges;
    std::vector<FaceRec> faces;
    int default_modulus = 2;
    std::optional<int> declared_genus;
    std::optional<GeneratorHints> hints;
    std::optional<TorusInfo> torus;

    // derived incidence caches, filled by finalize()
    std::vector<std::vector<int>> vertex_edges;            // incident edges per vertex
    std::vector<std::vector<std::pair<int, int>>> edge_faces;  // (face, sign) uses per edge

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
    int euler_characteristic() const { return num_vertices - num_edges() + num_faces(); }
    int genus() const { return (2 - euler_characteristic()) / 2; }

    void finalize() {
        vertex_edges.assign(num_vertices, {});
        for (int e = 0; e < num_edges(); ++e) {
            if (edges[e].tail >= 0 && edges[e].tail < num_vertices)
                vertex_edges[edges[e].tail].push_back(e);
            if (edges[e].head >= 0 && edges[e].head < num_vertices &&
                edges[e].head != edges[e].tail)
                vertex_edges[edges[e].head].push_back(e);
        }
        edge_faces.assign(edges.size(), {});
        for (int f = 0; f < num_faces(); ++f)
            for (auto [e, s] : faces[f].edges)
                if (e >= 0 && e < num_edges()) edge_faces[e].push_back({f, s});
    }

    // +1 when v is the head of e (edge incoming), -1 when v is the tail.
    int vertex_sign(int v, int e) const {
        if (edges[e].head == v) return 1;
        if (edges[e].tail == v) return -1;
        return 0;
    }

    bool operator==(const CellComplex& o) const {
        if (num_vertices != o.num_vertices || edges.size() != o.edges.size() ||
            faces.size() != o.faces.size())
            return false;
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].tail != o.edges[e].tail || edges[e].head != o.edges[e].head)
                return false;
        for (size_t f = 0; f < faces.size(); ++f)
            if (faces[f].edges != o.faces[f].edges) return false;
        return true;
    }
};

// Incidence equality with identical ids, where face traversals may start at
// any point of the cycle (dual faces are assembled from their lowest edge).
inline bool same_incidence(const CellComplex& a, const CellComplex& b) {
    if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size() ||
        a.faces.size() != b.faces.size())
        return false;
    for (size_t e = 0; e < a.edges.size(); ++e)
        if (a.edges[e].tail != b.edges[e].tail || a.edges[e].head != b.edges[e].head)
            return false;
    for (size_t f = 0; f < a.faces.size(); ++f) {
        const auto& fa = a.faces[f].edges;
        const auto& fb = b.faces[f].edges;
        if (fa.size() != fb.size()) return false;
        bool matched = false;
        for (size_t shift = 0; shift < fb.size() && !matched; ++shift) {
            bool ok = true;
            for (size_t k = 0; k < fa.size(); ++k)
                if (fa[k] != fb[(k + shift) % fb.size()]) {
                    ok = false;
                    break;
                }
            matched = ok;
        }
        if (!matched) return false;
    }
    return true;
}

// Checks every structural invariant and returns one message per violation.
// An empty report means the complex is a valid decomposition of a closed
// orientable surface (up to the vertex-link condition, checked by dualize).
inline std::vector<std::string> validate(const CellComplex& c) {
    std::vector<std::string> issues;
    auto complain = [&](std::string msg) { issues.push_back(std::move(msg)); };

    for (int e = 0; e < c.num_edges(); ++e) {
        const auto& er = c.edges[e];
        if (er.tail < 0 || er.tail >= c.num_vertices || er.head < 0 ||
            er.head >= c.num_vertices) {
            complain("edge " + std::to_string(e) + ": endpoint out of range");
            continue;
        }
        if (er.tail == er.head)
            complain("edge " + std::to_string(e) + ": endpoints equal (self-loop)");
    }

    // face traversals must be closed walks
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& fe = c.faces[f].edges;
        if (fe.empty()) {
            complain("face " + std::to_string(f) + ": empty edge list");
            continue;
        }
        bool in_range = true;
        for (auto [e, s] : fe) {
            if (e < 0 || e >= c.num_edges()) {
                complain("face " + std::to_string(f) + ": edge id out of range");
                in_range = false;
            } else if (s != 1 && s != -1) {
                complain("face " + std::to_string(f) + ": sign must be +1 or -1");
                in_range = false;
            }
        }
        if (!in_range) continue;
        auto from = [&](int k) {
            auto [e, s] = fe[k];
            return s > 0 ? c.edges[e].tail : c.edges[e].head;
        };
        auto to = [&](int k) {
            auto [e, s] = fe[k];
            return s > 0 ? c.edges[e].head : c.edges[e].tail;
        };
        for (size_t k = 0; k < fe.size(); ++k)
            if (to(static_cast<int>(k)) != from(static_cast<int>((k + 1) % fe.size()))) {
                complain("face " + std::to_string(f) + ": edge list is not a closed walk");
                break;
            }
    }

    // every edge in exactly two distinct faces, once with each sign
    std::vector<std::vector<std::pair<int, int>>> uses(c.num_edges());
    for (int f = 0; f < c.num_faces(); ++f)
        for (auto [e, s] : c.faces[f].edges)
            if (e >= 0 && e < c.num_edges()) uses[e].push_back({f, s});
    for (int e = 0; e < c.num_edges(); ++e) {
        if (uses[e].size() != 2) {
            complain("edge " + std::to_string(e) + ": face-count " +
                     std::to_string(uses[e].size()) + " != 2");
            continue;
        }
        if (uses[e][0].first == uses[e][1].first)
            complain("edge " + std::to_string(e) + ": both face uses in one face");
        if (uses[e][0].second + uses[e][1].second != 0)
            complain("edge " + std::to_string(e) + ": face signs do not cancel");
    }

    // connectivity over the edge graph
    if (c.num_vertices > 0) {
        std::vector<char> seen(c.num_vertices, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < c.num_edges(); ++e) {
                const auto& er = c.edges[e];
                if (er.tail != v && er.head != v) continue;
                int w = er.tail == v ? er.head : er.tail;
                if (w >= 0 && w < c.num_vertices && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != c.num_vertices) complain("complex is not connected");
    } else {
        complain("complex has no vertices");
    }

    int chi = c.euler_characteristic();
    if ((2 - chi) % 2 != 0 || chi > 2)
        complain("Euler characteristic " + std::to_string(chi) +
                 " is not 2-2g for any genus g >= 0");
    else if (c.declared_genus && *c.declared_genus != (2 - chi) / 2)
        complain("declared genus " + std::to_string(*c.declared_genus) +
                 " does not match Euler characteristic " + std::to_string(chi));

    return issues;
}

inline void require_valid(const CellComplex& c) {
    auto issues = validate(c);
    if (!issues.empty()) {
        std::string msg = "invalid complex:";
        for (const auto& s : issues) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
}

// ---------------------------------------------------------------------------
// Regions: subsets of edges with derived interior and boundary vertex sets.

struct Region {
    std::set<int> edges;
};

inline std::set<int> interior_vertices(const CellComplex& c, const Region& r) {
    std::set<int> out;
    for (int v = 0; v < c.num_vertices; ++v) {
        bool all_in = true;
        for (int e : c.vertex_edges[v])
            if (!r.edges.count(e)) { all_in = false; break; }
        if (all_in && !c.vertex_edges[v].empty()) out.insert(v);
    }
    return out;
}

inline std::set<int> boundary_vertices(const CellComplex& c, const Region& r) {
    std::set<int> out;
    for (int v = 0; v < c.num_vertices; ++v) {
        bool any_in = false, any_out = false;
        for (int e : c.vertex_edges[v]) {
            if (r.edges.count(e)) any_in = true;
            else any_out = true;
        }
        if (any_in && any_out) out.insert(v);
    }
    return out;
}

inline Region region_complement(const CellComplex& c, const Region& r) {
    Region out;
    for (int e = 0; e < c.num_edges(); ++e)
        if (!r.edges.count(e)) out.edges.insert(e);
    return out;
}

} // namespace kitlab
