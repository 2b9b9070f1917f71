// Symbolic generalized Pauli strings w^p X^x Z^z on the spins of a complex.
//
// x is a cochain of X exponents (one spin per edge, addressed through the
// edge <-> dual edge bijection) and z a chain of Z exponents. The normal order
// is fixed as w^p * X-part * Z-part; reordering Z^a past X^b on one spin costs
// w^{a*b}, which is the single relation everything else follows from.
#pragma once

#include "kitlab/chain.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace kitlab {

struct PauliString {
    int d = 2;
    int num_edges = 0;
    Cochain x;  // X exponents
    Chain z;    // Z exponents
    int phase = 0;

    PauliString() : x(2), z(2) {}
    PauliString(int d_, int num_edges_) : d(d_), num_edges(num_edges_), x(d_), z(d_) {}

    bool is_identity() const { return x.is_zero() && z.is_zero() && phase == 0; }
    bool operator==(const PauliString& o) const {
        return d == o.d && num_edges == o.num_edges && phase == o.phase && x == o.x &&
               z == o.z;
    }
};

inline void check_compatible(const PauliString& a, const PauliString& b) {
    if (a.d != b.d) throw std::invalid_argument("pauli: modulus mismatch");
    if (a.num_edges != b.num_edges)
        throw std::invalid_argument("pauli: operators live on different complexes");
}

inline PauliString pauli_identity(const CellComplex& c, int d) {
    return PauliString(d, c.num_edges());
}

inline PauliString pauli_x(const CellComplex& c, const Cochain& x) {
    PauliString p(x.d, c.num_edges());
    p.x = x;
    return p;
}

inline PauliString pauli_z(const CellComplex& c, const Chain& z) {
    PauliString p(z.d, c.num_edges());
    p.z = z;
    return p;
}

inline PauliString pauli_xz(const CellComplex& c, const Cochain& x, const Chain& z,
                            int phase = 0) {
    if (x.d != z.d) throw std::invalid_argument("pauli_xz: modulus mismatch");
    PauliString p(x.d, c.num_edges());
    p.x = x;
    p.z = z;
    p.phase = mod_norm(phase, x.d);
    return p;
}

// sum over spins of z(e) * x(e), the reordering exponent
inline int cross_phase(const Chain& z, const Cochain& x) {
    long long acc = 0;
    for (auto [e, v] : z.coef) acc += static_cast<long long>(v) * x.get(e);
    return mod_norm(acc, z.d);
}

inline PauliString multiply(const PauliString& a, const PauliString& b) {
    check_compatible(a, b);
    PauliString r(a.d, a.num_edges);
    r.x = a.x + b.x;
    r.z = a.z + b.z;
    r.phase = mod_norm(a.phase + b.phase + cross_phase(a.z, b.x), a.d);
    return r;
}

inline PauliString adjoint(const PauliString& a) {
    PauliString r(a.d, a.num_edges);
    r.x = -a.x;
    r.z = -a.z;
    r.phase = mod_norm(-a.phase + cross_phase(a.z, a.x), a.d);
    return r;
}

// Exact k-th power. Note a^d need not be the identity string: mixed strings
// can square to a phase (for d = 2, (XZ)^2 = w I), so no exponent reduction.
inline PauliString power(const PauliString& a, int k) {
    if (k < 0) return power(adjoint(a), -k);
    PauliString r(a.d, a.num_edges);
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

// exponent k with a b = w^k b a
inline int commutation_phase(const PauliString& a, const PauliString& b) {
    check_compatible(a, b);
    return mod_norm(cross_phase(a.z, b.x) - cross_phase(b.z, a.x), a.d);
}

// [[a,b]] = a b a^-1 b^-1, always a scalar for strings
inline int group_commutator_exponent(const PauliString& a, const PauliString& b) {
    PauliString c = multiply(multiply(a, b), multiply(adjoint(a), adjoint(b)));
    if (!c.x.is_zero() || !c.z.is_zero())
        throw std::logic_error("group_commutator_exponent: residue is not scalar");
    return c.phase;
}

// star operator a_v = X^{coboundary of 1_v} and plaquette operator b_f = Z^{df}
inline PauliString vertex_op(const CellComplex& c, int v, int d) {
    return pauli_x(c, covertex_coboundary(c, v, d));
}

inline PauliString face_op(const CellComplex& c, int f, int d) {
    return pauli_z(c, face_boundary(c, f, d));
}

inline PauliString string_for_walk(const CellComplex& c, const Walk& w, int k, int d) {
    return pauli_z(c, walk_chain(w, d, k));
}

inline PauliString string_for_cowalk(const CellComplex& c, const Cowalk& w, int k, int d) {
    return pauli_x(c, cowalk_cochain(w, d, k));
}

inline std::string to_text(const PauliString& p) {
    std::ostringstream out;
    out << "w^" << p.phase << " X[" << coef_text(p.x) << "] Z[" << coef_text(p.z) << "]";
    return out.str();
}

} // namespace kitlab
