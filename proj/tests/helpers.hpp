// Shared test utilities: an independent dense-matrix realization of Pauli
// strings built from the defining one-spin actions (X l_i = l_{i+1},
// Z l_i = w^i l_i) via explicit Kronecker products. Deliberately separate from
// the library's matrix_of so the two can check each other.
#pragma once

#include "kitlab/pauli.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

namespace testutil {

using kitlab::mod_norm;

inline std::complex<double> omega_pow(int d, long long p) {
    double angle = 2.0 * M_PI * mod_norm(p, d) / d;
    return {std::cos(angle), std::sin(angle)};
}

inline Eigen::MatrixXcd one_spin_X(int d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) m((i + 1) % d, i) = 1.0;
    return m;
}

inline Eigen::MatrixXcd one_spin_Z(int d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = omega_pow(d, i);
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd m(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return m;
}

inline Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int k, int d) {
    int e = mod_norm(k, d);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

// w^p * (tensor of X^{x_e}) * (tensor of Z^{z_e}) over the support, first
// support edge = least significant digit.
inline Eigen::MatrixXcd ref_string_matrix(const kitlab::PauliString& p,
                                          const std::vector<int>& support) {
    const int d = p.d;
    Eigen::MatrixXcd xs(1, 1), zs(1, 1);
    xs(0, 0) = 1.0;
    zs(0, 0) = 1.0;
    for (int e : support) {
        xs = kron(matrix_power(one_spin_X(d), p.x.get(e), d), xs);
        zs = kron(matrix_power(one_spin_Z(d), p.z.get(e), d), zs);
    }
    return omega_pow(d, p.phase) * xs * zs;
}

inline kitlab::PauliString random_string(const kitlab::CellComplex& c, int d,
                                         std::mt19937& rng,
                                         const std::vector<int>& support) {
    kitlab::PauliString p(d, c.num_edges());
    for (int e : support) {
        p.x.set(e, static_cast<int>(rng() % d));
        p.z.set(e, static_cast<int>(rng() % d));
    }
    p.phase = static_cast<int>(rng() % d);
    return p;
}

} // namespace testutil
