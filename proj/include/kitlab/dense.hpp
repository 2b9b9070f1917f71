// Dense matrix realizations of symbolic operators on small edge subsets.
#pragma once

#include "kitlab/projector.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace kitlab {

inline std::complex<double> root_of_unity(int d, long long power) {
    double angle = 2.0 * M_PI * mod_norm(power, d) / d;
    return {std::cos(angle), std::sin(angle)};
}

namespace detail {

inline size_t checked_dim(int d, size_t n_spins, size_t guard) {
    size_t dim = 1;
    for (size_t i = 0; i < n_spins; ++i) {
        dim *= static_cast<size_t>(d);
        if (dim > guard)
            throw std::invalid_argument("matrix_of: support too large for dense storage");
    }
    return dim;
}

} // namespace detail

// Matrix of a string restricted to the given support edges (which must cover
// every edge the string acts on). Index digits run over the support in the
// order given, least significant first.
inline Eigen::MatrixXcd matrix_of(const PauliString& p, const std::vector<int>& support,
                                  size_t guard = 4096) {
    const int d = p.d;
    for (auto [e, v] : p.x.coef)
        if (std::find(support.begin(), support.end(), e) == support.end())
            throw std::invalid_argument("matrix_of: X support not covered");
    for (auto [e, v] : p.z.coef)
        if (std::find(support.begin(), support.end(), e) == support.end())
            throw std::invalid_argument("matrix_of: Z support not covered");

    size_t dim = detail::checked_dim(d, support.size(), guard);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    for (size_t idx = 0; idx < dim; ++idx) {
        size_t rest = idx, target = 0, stride = 1;
        long long zphase = p.phase;
        for (int e : support) {
            int digit = static_cast<int>(rest % d);
            rest /= d;
            zphase += static_cast<long long>(p.z.get(e)) * digit;
            int shifted = mod_norm(digit + p.x.get(e), d);
            target += stride * static_cast<size_t>(shifted);
            stride *= static_cast<size_t>(d);
        }
        m(static_cast<long>(target), static_cast<long>(idx)) = root_of_unity(d, zphase);
    }
    return m;
}

inline Eigen::MatrixXcd matrix_of(const ProjectorSum& s, const std::vector<int>& support,
                                  size_t guard = 4096) {
    size_t dim = detail::checked_dim(s.d, support.size(), guard);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    for (const auto& [k, c] : s.terms) {
        PauliString p(s.d, s.num_edges);
        p.x.coef = k.first;
        p.z.coef = k.second;
        std::complex<double> coef =
            c.num.numeric() / std::pow(static_cast<double>(s.d), c.denom_pow);
        m += coef * matrix_of(p, support, guard);
    }
    return m;
}

} // namespace kitlab
