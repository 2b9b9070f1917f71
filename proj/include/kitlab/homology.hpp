// First homology of a cell complex with Z_d coefficients, computed through
// integer Smith normal forms so that composite moduli are handled exactly.
//
// Writing K for the lattice of integer 1-chains whose boundary vanishes mod d
// and L for the lattice spanned by face boundaries together with d*Z^E, the
// homology group is K/L. A basis of K is read off the SNF of the vertex-edge
// incidence matrix; expressing L in that basis and taking a second SNF yields
// the group structure, explicit generator representatives, and coordinates of
// any cycle in the generator basis.
#pragma once

#include "kitlab/chain.hpp"
#include "kitlab/dual.hpp"
#include "kitlab/smith.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kitlab {

inline IntMatrix boundary1_matrix(const CellComplex& c) {
    IntMatrix m(c.num_vertices, c.num_edges());
    for (int e = 0; e < c.num_edges(); ++e) {
        m.at(c.edges[e].head, e) += 1;
        m.at(c.edges[e].tail, e) -= 1;
    }
    return m;
}

inline IntMatrix boundary2_matrix(const CellComplex& c) {
    IntMatrix m(c.num_edges(), c.num_faces());
    for (int f = 0; f < c.num_faces(); ++f)
        for (auto [e, s] : c.faces[f].edges) m.at(e, f) += s;
    return m;
}

inline bool is_cycle(const CellComplex& c, const Chain& ch) {
    return boundary(c, ch).is_zero();
}

inline bool is_cocycle(const CellComplex& c, const Cochain& co) {
    return dual_boundary(c, co).is_zero();
}

struct HomologyDescriptor {
    int d = 2;
    int genus = 0;
    int betti = 0;
    int num_vertices = 0, num_edges = 0, num_faces = 0;

    std::vector<BigInt> divisors_d1, divisors_d2;  // elementary divisors over Z
    BigInt cycle_count, boundary_count, group_order;

    std::vector<Chain> generators;  // 2g representatives; class_of is their dual basis

    // class-reduction machinery
    IntMatrix V1inv;
    std::vector<BigInt> m;  // K-basis scaling factors
    IntMatrix P;
    IntMatrix Pinv;
    std::vector<BigInt> w;  // quotient divisors
    std::vector<int> slots;
    std::vector<std::vector<int>> Minv;  // generator-basis change, mod d

    SmithResult snf_d2;  // kept for boundary solves
};

namespace detail {

inline std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& x) {
    std::vector<BigInt> out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && x[j] != 0) acc += m.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

// Gauss-Jordan inverse over Z_d; pivots must be units, which holds whenever
// the columns form a basis of (Z_d)^n.
inline std::vector<std::vector<int>> invert_mod(std::vector<std::vector<int>> a, int d) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (std::gcd(a[r][col], d) == 1) { pivot = r; break; }
        if (pivot < 0)
            throw std::invalid_argument("invert_mod: matrix is not invertible mod d");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        int s = mod_inverse(a[col][col], d);
        for (int j = 0; j < n; ++j) {
            a[col][j] = mod_norm(static_cast<long long>(a[col][j]) * s, d);
            inv[col][j] = mod_norm(static_cast<long long>(inv[col][j]) * s, d);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            long long f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] = mod_norm(a[r][j] - f * a[col][j], d);
                inv[r][j] = mod_norm(inv[r][j] - f * inv[col][j], d);
            }
        }
    }
    return inv;
}

// Coordinates of an integer cycle vector in the quotient slots.
inline std::vector<int> snf_class_coords(const HomologyDescriptor& h,
                                         const std::vector<BigInt>& x) {
    std::vector<BigInt> y = mat_vec(h.V1inv, x);
    for (int i = 0; i < h.num_edges; ++i) {
        if (y[i] % h.m[i] != 0)
            throw std::invalid_argument("class coordinates: chain is not a cycle mod d");
        y[i] /= h.m[i];
    }
    std::vector<BigInt> yp = mat_vec(h.P, y);
    std::vector<int> out;
    out.reserve(h.slots.size());
    for (int s : h.slots) out.push_back(mod_norm(yp[s], static_cast<int>(h.w[s])));
    return out;
}

inline HomologyDescriptor homology_impl(const CellComplex& c, int d,
                                        const std::vector<std::map<int, int>>* hint_cycles) {
    if (d < 2) throw std::invalid_argument("homology: modulus must be >= 2");
    HomologyDescriptor h;
    h.d = d;
    h.genus = c.genus();
    h.num_vertices = c.num_vertices;
    h.num_edges = c.num_edges();
    h.num_faces = c.num_faces();

    const int E = h.num_edges, F = h.num_faces;
    IntMatrix d1 = boundary1_matrix(c);
    IntMatrix d2 = boundary2_matrix(c);

    // boundary-of-boundary must vanish identically over Z
    if (!(d1 * d2).is_zero())
        throw std::logic_error("homology: d1 * d2 != 0");

    SmithResult snf1 = smith_normal_form(d1);
    h.snf_d2 = smith_normal_form(d2);
    h.divisors_d1 = snf1.divisors;
    h.divisors_d2 = h.snf_d2.divisors;

    h.cycle_count = big_pow(d, static_cast<unsigned long>(E)) / image_order_mod(snf1, d);
    h.boundary_count = image_order_mod(h.snf_d2, d);

    // K = V1 * diag(m) Z^E with m_i = d / gcd(s_i, d)
    h.V1inv = snf1.Vinv;
    h.m.assign(E, 1);
    for (int i = 0; i < snf1.rank; ++i)
        h.m[i] = BigInt(d) / big_gcd(snf1.divisors[i], d);

    // express L = d2 Z^F + d Z^E in the K basis: W = diag(m)^-1 * V1inv * [d2 | dI]
    IntMatrix G(E, F + E);
    for (int i = 0; i < E; ++i) {
        for (int j = 0; j < F; ++j) G.at(i, j) = d2.at(i, j);
        G.at(i, F + i) = d;
    }
    IntMatrix T(E, F + E);
    for (int i = 0; i < E; ++i)
        for (int j = 0; j < F + E; ++j) {
            BigInt acc = 0;
            for (int k = 0; k < E; ++k) acc += h.V1inv.at(i, k) * G.at(k, j);
            if (acc % h.m[i] != 0)
                throw std::logic_error("homology: boundary lattice escapes the cycle lattice");
            T.at(i, j) = acc / h.m[i];
        }

    SmithResult snfW = smith_normal_form(T);
    if (snfW.rank != E)
        throw std::logic_error("homology: quotient is not finite");
    h.P = snfW.U;
    h.Pinv = snfW.Uinv;
    h.w.assign(E, 1);
    h.group_order = 1;
    for (int i = 0; i < E; ++i) {
        h.w[i] = snfW.S.at(i, i);
        h.group_order *= h.w[i];
        if (h.w[i] > 1) h.slots.push_back(i);
    }
    h.betti = static_cast<int>(h.slots.size());

    if (h.group_order != h.cycle_count / h.boundary_count)
        throw std::logic_error("homology: group order mismatch");
    if (h.betti != 2 * h.genus)
        throw std::logic_error("homology: betti number does not equal 2*genus");
    for (int s : h.slots)
        if (h.w[s] != d)
            throw std::logic_error("homology: group is not (Z_d)^2g");

    const int b = h.betti;
    if (hint_cycles) {
        if (static_cast<int>(hint_cycles->size()) != b)
            throw std::invalid_argument("homology: generator hint count != 2g");
        std::vector<std::vector<int>> M(b, std::vector<int>(b, 0));
        for (int j = 0; j < b; ++j) {
            Chain g(d);
            for (auto [e, v] : (*hint_cycles)[j]) g.set(e, v);
            if (!is_cycle(c, g))
                throw std::invalid_argument("homology: generator hint is not a cycle");
            std::vector<BigInt> x(E, 0);
            for (auto [e, v] : g.coef) x[e] = v;
            auto coords = snf_class_coords(h, x);
            for (int i = 0; i < b; ++i) M[i][j] = coords[i];
            h.generators.push_back(g);
        }
        h.Minv = invert_mod(M, d);
    } else {
        // representatives from the change of basis: columns of V1 diag(m) Pinv
        h.Minv.assign(b, std::vector<int>(b, 0));
        for (int i = 0; i < b; ++i) h.Minv[i][i] = 1;
        for (int s : h.slots) {
            Chain g(d);
            for (int r = 0; r < E; ++r) {
                BigInt acc = 0;
                for (int k = 0; k < E; ++k)
                    acc += snf1.V.at(r, k) * h.m[k] * h.Pinv.at(k, s);
                g.add(r, mod_norm(acc, d));
            }
            h.generators.push_back(g);
        }
    }
    return h;
}

} // namespace detail

inline HomologyDescriptor homology(const CellComplex& c, int d) {
    require_valid(c);
    return detail::homology_impl(c, d, c.hints ? &c.hints->cycles : nullptr);
}

// Cohomology = homology of the dual complex; cochains of G are chains of G*.
inline HomologyDescriptor cohomology(const CellComplex& c, int d) {
    DualComplex dual = dualize(c);
    return detail::homology_impl(dual.complex, d, c.hints ? &c.hints->cocycles : nullptr);
}

// Class of a cycle in the generator basis: (alpha_1..g, beta_1..g).
inline std::vector<int> class_of(const HomologyDescriptor& h, const Chain& ch) {
    if (ch.d != h.d) throw std::invalid_argument("class_of: modulus mismatch");
    std::vector<BigInt> x(h.num_edges, 0);
    for (auto [e, v] : ch.coef) {
        if (e < 0 || e >= h.num_edges)
            throw std::invalid_argument("class_of: edge id out of range");
        x[e] = v;
    }
    auto coords = detail::snf_class_coords(h, x);  // throws on non-cycles
    const int b = h.betti;
    std::vector<int> out(b, 0);
    for (int i = 0; i < b; ++i) {
        long long acc = 0;
        for (int j = 0; j < b; ++j) acc += static_cast<long long>(h.Minv[i][j]) * coords[j];
        out[i] = mod_norm(acc, h.d);
    }
    return out;
}

inline std::vector<int> class_of_cochain(const HomologyDescriptor& dual_h, const Cochain& co) {
    Chain as_chain(co.d);
    as_chain.coef = co.coef;
    return class_of(dual_h, as_chain);
}

// Solves d2 * x = ch (mod d); the witness is the canonical back-substitution
// solution. Returns nothing when ch is not a boundary.
inline std::optional<FaceChain> boundary_witness(const HomologyDescriptor& h, const Chain& ch) {
    if (ch.d != h.d) throw std::invalid_argument("boundary_witness: modulus mismatch");
    std::vector<int> b(h.num_edges, 0);
    for (auto [e, v] : ch.coef) b[e] = v;
    auto x = solve_mod(h.snf_d2, b, h.d);
    if (!x) return std::nullopt;
    FaceChain out(h.d);
    for (int f = 0; f < h.num_faces; ++f) out.set(f, (*x)[f]);
    return out;
}

inline bool is_boundary(const HomologyDescriptor& h, const Chain& ch) {
    return boundary_witness(h, ch).has_value();
}

// Convenience one-shot form (builds the SNF of d2 on the fly).
inline std::optional<FaceChain> boundary_witness(const CellComplex& c, const Chain& ch) {
    SmithResult snf2 = smith_normal_form(boundary2_matrix(c));
    std::vector<int> b(c.num_edges(), 0);
    for (auto [e, v] : ch.coef) b[e] = v;
    auto x = solve_mod(snf2, b, ch.d);
    if (!x) return std::nullopt;
    FaceChain out(ch.d);
    for (int f = 0; f < c.num_faces(); ++f) out.set(f, (*x)[f]);
    return out;
}

} // namespace kitlab
