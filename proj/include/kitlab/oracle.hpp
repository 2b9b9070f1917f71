// Dense state-vector engine over the full edge Hilbert space (C^d)^{tensor E}.
//
// This is the brute-force side of every cross-check: amplitudes are indexed by
// mixed-radix digit strings with one Z_d digit per edge (edge 0 least
// significant), operators act by digit shifts and exact root-of-unity phases,
// and reduced density matrices come from reshaping the amplitude vector.
#pragma once

#include "kitlab/homology.hpp"
#include "kitlab/projector.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace kitlab {

struct OracleLimits {
    size_t max_amplitudes = size_t{1} << 22;
    size_t max_density_dim = 4096;
    size_t max_group_enumeration = size_t{1} << 22;
};

using Amplitude = std::complex<double>;

struct StateVector {
    int d = 2;
    int num_edges = 0;
    std::vector<Amplitude> amp;

    size_t dim() const { return amp.size(); }
};

inline size_t state_dim(int d, int num_edges, const OracleLimits& lim = {}) {
    size_t dim = 1;
    for (int e = 0; e < num_edges; ++e) {
        dim *= static_cast<size_t>(d);
        if (dim > lim.max_amplitudes)
            throw std::invalid_argument("state_dim: amplitude count exceeds the size guard");
    }
    return dim;
}

inline StateVector basis_state(const CellComplex& c, int d, size_t index,
                               const OracleLimits& lim = {}) {
    StateVector sv;
    sv.d = d;
    sv.num_edges = c.num_edges();
    sv.amp.assign(state_dim(d, sv.num_edges, lim), Amplitude(0));
    sv.amp.at(index) = Amplitude(1);
    return sv;
}

// The all-zeros product state (every spin in l_0).
inline StateVector omega_state(const CellComplex& c, int d, const OracleLimits& lim = {}) {
    return basis_state(c, d, 0, lim);
}

inline StateVector random_state(const CellComplex& c, int d, std::mt19937& rng,
                                const OracleLimits& lim = {}) {
    StateVector sv;
    sv.d = d;
    sv.num_edges = c.num_edges();
    sv.amp.resize(state_dim(d, sv.num_edges, lim));
    std::normal_distribution<double> gauss(0.0, 1.0);
    double nrm = 0;
    for (auto& a : sv.amp) {
        a = Amplitude(gauss(rng), gauss(rng));
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : sv.amp) a /= nrm;
    return sv;
}

inline Amplitude inner(const StateVector& a, const StateVector& b) {
    if (a.d != b.d || a.dim() != b.dim())
        throw std::invalid_argument("inner: state shape mismatch");
    Amplitude acc = 0;
    for (size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
    return acc;
}

inline double norm(const StateVector& a) { return std::sqrt(std::abs(inner(a, a))); }

inline void add_scaled(StateVector& dst, const StateVector& src, Amplitude coef) {
    if (dst.dim() != src.dim()) throw std::invalid_argument("add_scaled: shape mismatch");
    for (size_t i = 0; i < dst.dim(); ++i) dst.amp[i] += coef * src.amp[i];
}

inline double distance(const StateVector& a, const StateVector& b) {
    double acc = 0;
    for (size_t i = 0; i < a.dim(); ++i) acc += std::norm(a.amp[i] - b.amp[i]);
    return std::sqrt(acc);
}

// w^p X^x Z^z on a basis index: Z first (phase from digits), then X (shift).
inline StateVector apply(const PauliString& p, const StateVector& sv) {
    if (p.d != sv.d) throw std::invalid_argument("apply: modulus mismatch");
    if (p.num_edges != sv.num_edges)
        throw std::invalid_argument("apply: operator lives on a different complex");
    const int d = p.d;
    std::vector<Amplitude> omega(d);
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * M_PI * k / d;
        omega[k] = Amplitude(std::cos(angle), std::sin(angle));
    }
    std::vector<size_t> stride(p.num_edges, 1);
    for (int e = 1; e < p.num_edges; ++e) stride[e] = stride[e - 1] * d;

    StateVector out;
    out.d = d;
    out.num_edges = sv.num_edges;
    out.amp.assign(sv.dim(), Amplitude(0));
    for (size_t i = 0; i < sv.dim(); ++i) {
        if (sv.amp[i] == Amplitude(0)) continue;
        long long phase = p.phase;
        long long target = static_cast<long long>(i);
        for (auto [e, ze] : p.z.coef)
            phase += static_cast<long long>(ze) * static_cast<int>((i / stride[e]) % d);
        for (auto [e, xe] : p.x.coef) {
            int digit = static_cast<int>((i / stride[e]) % d);
            int shifted = (digit + xe) % d;
            target += static_cast<long long>(shifted - digit) * static_cast<long long>(stride[e]);
        }
        out.amp[static_cast<size_t>(target)] += omega[mod_norm(phase, d)] * sv.amp[i];
    }
    return out;
}

inline StateVector apply(const ProjectorSum& s, const StateVector& sv) {
    if (s.d != sv.d || s.num_edges != sv.num_edges)
        throw std::invalid_argument("apply: operator/state mismatch");
    StateVector out;
    out.d = sv.d;
    out.num_edges = sv.num_edges;
    out.amp.assign(sv.dim(), Amplitude(0));
    for (const auto& [k, c] : s.terms) {
        PauliString p(s.d, s.num_edges);
        p.x.coef = k.first;
        p.z.coef = k.second;
        Amplitude coef = c.num.numeric() / std::pow(static_cast<double>(s.d), c.denom_pow);
        StateVector piece = apply(p, sv);
        add_scaled(out, piece, coef);
    }
    return out;
}

inline Amplitude expectation(const PauliString& p, const StateVector& sv) {
    return inner(sv, apply(p, sv));
}

// ---------------------------------------------------------------------------
// The coboundary group K and the explicit ground states.

struct GroupK {
    int d = 2;
    int num_edges = 0;
    std::vector<std::vector<int>> elements;  // X-exponent vectors, sorted

    BigInt order() const { return BigInt(elements.size()); }
};

// Enumerates the subgroup generated by the star operators of the vertices in
// S, as X-exponent cochains.
inline GroupK enumerate_K(const CellComplex& c, int d, const std::set<int>& vertices,
                          const OracleLimits& lim = {}) {
    GroupK g;
    g.d = d;
    g.num_edges = c.num_edges();
    std::vector<int> verts(vertices.begin(), vertices.end());
    size_t combos = 1;
    for (size_t i = 0; i < verts.size(); ++i) {
        combos *= static_cast<size_t>(d);
        if (combos > lim.max_group_enumeration)
            throw std::invalid_argument("enumerate_K: enumeration exceeds the size guard");
    }
    std::set<std::vector<int>> seen;
    std::vector<int> phi(verts.size(), 0);
    for (;;) {
        std::vector<int> co(c.num_edges(), 0);
        for (size_t k = 0; k < verts.size(); ++k) {
            if (phi[k] == 0) continue;
            int v = verts[k];
            for (int e : c.vertex_edges[v])
                co[e] = mod_norm(co[e] + c.vertex_sign(v, e) * phi[k], d);
        }
        seen.insert(std::move(co));
        size_t k = 0;
        while (k < phi.size() && ++phi[k] == d) phi[k++] = 0;
        if (k == phi.size()) break;
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

// Psi_0 = |K|^{-1/2} sum_{h in K} h Omega, built by walking a transversal of
// the global constraint prod_v a_v = 1 (fix the exponent of vertex 0 to 0).
inline StateVector ground_state_psi0(const CellComplex& c, int d,
                                     const OracleLimits& lim = {}) {
    StateVector sv;
    sv.d = d;
    sv.num_edges = c.num_edges();
    sv.amp.assign(state_dim(d, sv.num_edges, lim), Amplitude(0));

    std::vector<size_t> stride(sv.num_edges, 1);
    for (int e = 1; e < sv.num_edges; ++e) stride[e] = stride[e - 1] * d;

    const int nv = c.num_vertices;
    std::vector<int> phi(nv, 0);  // phi[0] stays 0
    BigInt count = big_pow(d, static_cast<unsigned long>(nv - 1));
    double coef = 1.0 / std::sqrt(static_cast<double>(count));
    for (;;) {
        size_t index = 0;
        for (int e = 0; e < sv.num_edges; ++e) {
            int digit = mod_norm(phi[c.edges[e].head] - phi[c.edges[e].tail], d);
            index += stride[e] * static_cast<size_t>(digit);
        }
        sv.amp[index] += coef;
        int k = 1;
        while (k < nv && ++phi[k] == d) phi[k++] = 0;
        if (k == nv) break;
    }
    return sv;
}

// The d^{2g} basis states: cohomology-class X strings applied to Psi_0.
// Index order: (alpha_1,...,alpha_g, beta_1,...,beta_g), alpha_1 fastest.
inline std::vector<StateVector> ground_basis(const CellComplex& c, int d,
                                             const OracleLimits& lim = {}) {
    HomologyDescriptor hco = cohomology(c, d);
    StateVector psi0 = ground_state_psi0(c, d, lim);
    const int b = hco.betti;
    std::vector<StateVector> basis;
    std::vector<int> label(b, 0);
    for (;;) {
        Cochain exponent(d);
        for (int i = 0; i < b; ++i)
            for (auto [e, v] : hco.generators[i].coef)
                exponent.add(e, static_cast<long long>(v) * label[i]);
        basis.push_back(apply(pauli_x(c, exponent), psi0));
        int k = 0;
        while (k < b && ++label[k] == d) label[k++] = 0;
        if (k == b) break;
    }
    return basis;
}

// Product of all vertex and face projectors applied to a state.
inline StateVector apply_ground_projector(const CellComplex& c, int d, StateVector sv) {
    for (int v = 0; v < c.num_vertices; ++v)
        sv = apply(vertex_projector(c, v, 0, d), sv);
    for (int f = 0; f < c.num_faces(); ++f)
        sv = apply(face_projector(c, f, 0, d), sv);
    return sv;
}

inline double ground_energy(const CellComplex& c) {
    return -static_cast<double>(c.num_vertices + c.num_faces());
}

inline StateVector hamiltonian_apply(const CellComplex& c, int d, const StateVector& sv) {
    StateVector out;
    out.d = sv.d;
    out.num_edges = sv.num_edges;
    out.amp.assign(sv.dim(), Amplitude(0));
    for (int v = 0; v < c.num_vertices; ++v)
        add_scaled(out, apply(vertex_projector(c, v, 0, d), sv), Amplitude(-1));
    for (int f = 0; f < c.num_faces(); ++f)
        add_scaled(out, apply(face_projector(c, f, 0, d), sv), Amplitude(-1));
    return out;
}

// ---------------------------------------------------------------------------
// Numerical rank via incremental orthogonalization. Residual magnitudes are
// required to be far from the threshold on both sides; anything ambiguous
// throws instead of guessing.
struct OrthoBasis {
    double tol = 1e-9;
    std::vector<StateVector> basis;

    // returns true when the vector enlarged the span
    bool add(StateVector v) {
        double original = norm(v);
        if (original == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) add_scaled(v, b, -inner(b, v));
        double residual = norm(v);
        if (residual > tol * original && residual < 1e-6 * original)
            throw std::runtime_error("OrthoBasis: ambiguous numerical rank");
        if (residual <= tol * original) return false;
        for (auto& a : v.amp) a /= residual;
        basis.push_back(std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(basis.size()); }
};

// Rank of the ground-space projector, probed with random vectors until the
// span saturates below the probe count.
inline int ground_projector_rank(const CellComplex& c, int d, unsigned seed = 20240401,
                                 const OracleLimits& lim = {}) {
    std::mt19937 rng(seed);
    size_t dim = state_dim(d, c.num_edges(), lim);
    size_t probes = 8;
    for (;;) {
        OrthoBasis ortho;
        for (size_t i = 0; i < probes; ++i) {
            StateVector r = random_state(c, d, rng, lim);
            ortho.add(apply_ground_projector(c, d, std::move(r)));
        }
        if (static_cast<size_t>(ortho.rank()) < probes || probes >= dim)
            return ortho.rank();
        probes *= 2;
    }
}

// ---------------------------------------------------------------------------
// Reduced density matrices and entanglement entropy.

// Reshapes the amplitudes into a (region digits) x (complement digits) matrix.
inline Eigen::MatrixXcd region_reshape(const StateVector& sv, const Region& region) {
    std::vector<int> inside(region.edges.begin(), region.edges.end());
    std::vector<int> outside;
    for (int e = 0; e < sv.num_edges; ++e)
        if (!region.edges.count(e)) outside.push_back(e);

    const int d = sv.d;
    size_t rows = 1, cols = 1;
    for (size_t i = 0; i < inside.size(); ++i) rows *= d;
    for (size_t i = 0; i < outside.size(); ++i) cols *= d;

    std::vector<size_t> stride(sv.num_edges, 1);
    for (int e = 1; e < sv.num_edges; ++e) stride[e] = stride[e - 1] * d;

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(rows), static_cast<long>(cols));
    for (size_t idx = 0; idx < sv.dim(); ++idx) {
        if (sv.amp[idx] == Amplitude(0)) continue;
        size_t r = 0, mult = 1;
        for (int e : inside) {
            r += mult * ((idx / stride[e]) % d);
            mult *= d;
        }
        size_t col = 0;
        mult = 1;
        for (int e : outside) {
            col += mult * ((idx / stride[e]) % d);
            mult *= d;
        }
        m(static_cast<long>(r), static_cast<long>(col)) = sv.amp[idx];
    }
    return m;
}

inline Eigen::MatrixXcd reduced_density(const StateVector& sv, const Region& region,
                                        const OracleLimits& lim = {}) {
    size_t rows = 1;
    for (size_t i = 0; i < region.edges.size(); ++i) {
        rows *= static_cast<size_t>(sv.d);
        if (rows > lim.max_density_dim)
            throw std::invalid_argument("reduced_density: matrix exceeds the size guard");
    }
    Eigen::MatrixXcd m = region_reshape(sv, region);
    return m * m.adjoint();
}

// Nonzero spectrum of the reduced state, from the smaller Gram factor.
inline std::vector<double> entanglement_spectrum(const StateVector& sv, const Region& region) {
    Eigen::MatrixXcd m = region_reshape(sv, region);
    Eigen::MatrixXcd gram = m.rows() <= m.cols() ? Eigen::MatrixXcd(m * m.adjoint())
                                                 : Eigen::MatrixXcd(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

inline double entropy_numeric(const StateVector& sv, const Region& region) {
    double s = 0;
    for (double lambda : entanglement_spectrum(sv, region))
        if (lambda > 1e-12) s -= lambda * std::log(lambda);
    return s;
}

// ---------------------------------------------------------------------------
// Elementary excitations.

// zeta = Z^k over the walk applied to a ground vector: a charge-anticharge
// pair at the walk endpoints with energy E_G + 2.
inline StateVector excite_z(const CellComplex& c, int d, const StateVector& ground,
                            const Walk& walk, int k) {
    if (walk.closed())
        throw std::invalid_argument("excite_z: walk endpoints must differ");
    if (mod_norm(k, d) == 0)
        throw std::invalid_argument("excite_z: exponent k must be nonzero mod d");
    return apply(string_for_walk(c, walk, k, d), ground);
}

inline StateVector excite_x(const CellComplex& c, int d, const StateVector& ground,
                            const Cowalk& cowalk, int k) {
    if (cowalk.closed())
        throw std::invalid_argument("excite_x: cowalk endpoints must differ");
    if (mod_norm(k, d) == 0)
        throw std::invalid_argument("excite_x: exponent k must be nonzero mod d");
    return apply(string_for_cowalk(c, cowalk, k, d), ground);
}

// Extracts q with op(state) = w^q * state; throws if the state is not an
// eigenvector at the given tolerance.
inline int phase_exponent_of(const PauliString& op, const StateVector& state,
                             double tol = 1e-9) {
    StateVector mapped = apply(op, state);
    double scale = norm(state);
    for (int q = 0; q < op.d; ++q) {
        double angle = 2.0 * M_PI * q / op.d;
        Amplitude target = Amplitude(std::cos(angle), std::sin(angle));
        StateVector copy = mapped;
        add_scaled(copy, state, -target);
        if (norm(copy) < tol * scale) return q;
    }
    throw std::runtime_error("phase_exponent_of: state is not a root-of-unity eigenvector");
}

// Text dump for diagnostics.
inline std::string to_text(const StateVector& sv, size_t max_entries = 32) {
    std::ostringstream out;
    out << "state d=" << sv.d << " edges=" << sv.num_edges << ":";
    size_t shown = 0;
    for (size_t i = 0; i < sv.dim() && shown < max_entries; ++i) {
        if (std::abs(sv.amp[i]) < 1e-14) continue;
        out << " [" << i << "] " << sv.amp[i].real() << (sv.amp[i].imag() < 0 ? "-" : "+")
            << std::abs(sv.amp[i].imag()) << "i;";
        ++shown;
    }
    return out.str();
}

} // namespace kitlab
