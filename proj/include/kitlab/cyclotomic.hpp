// Exact arithmetic in Z[w], w = exp(2*pi*i/d), represented as multiplicity
// vectors over the powers w^0..w^{d-1}. Zero testing reduces the associated
// polynomial modulo the d-th cyclotomic polynomial, so identities involving
// vanishing sums of roots of unity are decided exactly for every d.
#pragma once

#include "kitlab/intmath.hpp"

#include <complex>
#include <map>
#include <vector>

namespace kitlab {

// Coefficients of the d-th cyclotomic polynomial, ascending degree.
inline const std::vector<BigInt>& cyclotomic_poly(int d) {
    static std::map<int, std::vector<BigInt>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, computed by exact division
    std::vector<BigInt> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    auto divide = [](std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        // exact division of polynomials with b monic
        std::vector<BigInt> q(a.size() - b.size() + 1, 0);
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            BigInt coef = a[i + b.size() - 1];
            q[i] = coef;
            if (coef == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= coef * b[j];
        }
        a = std::move(q);
    };
    for (int e = 1; e < d; ++e)
        if (d % e == 0) divide(num, cyclotomic_poly(e));
    return cache.emplace(d, std::move(num)).first->second;
}

// Sum of integer multiples of d-th roots of unity.
struct RootSum {
    int d = 2;
    std::vector<BigInt> m;  // multiplicity of w^k

    RootSum() : m(2, 0) {}
    explicit RootSum(int d_) : d(d_), m(d_, 0) {}

    static RootSum root(int d, int power, const BigInt& mult = 1) {
        RootSum r(d);
        r.m[mod_norm(power, d)] = mult;
        return r;
    }

    RootSum operator+(const RootSum& o) const {
        RootSum r(d);
        for (int k = 0; k < d; ++k) r.m[k] = m[k] + o.m[k];
        return r;
    }
    RootSum operator-(const RootSum& o) const {
        RootSum r(d);
        for (int k = 0; k < d; ++k) r.m[k] = m[k] - o.m[k];
        return r;
    }
    RootSum operator*(const RootSum& o) const {
        RootSum r(d);
        for (int i = 0; i < d; ++i) {
            if (m[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (o.m[j] == 0) continue;
                r.m[(i + j) % d] += m[i] * o.m[j];
            }
        }
        return r;
    }
    RootSum times_root(int power) const {
        RootSum r(d);
        for (int k = 0; k < d; ++k) r.m[mod_norm(k + power, d)] = m[k];
        return r;
    }
    RootSum conjugate() const {
        RootSum r(d);
        for (int k = 0; k < d; ++k) r.m[mod_norm(-k, d)] = m[k];
        return r;
    }
    RootSum scaled(const BigInt& s) const {
        RootSum r(d);
        for (int k = 0; k < d; ++k) r.m[k] = m[k] * s;
        return r;
    }

    bool is_zero() const {
        // remainder of sum m_k x^k modulo Phi_d(x)
        std::vector<BigInt> rem = m;
        const auto& phi = cyclotomic_poly(d);
        const int deg = static_cast<int>(phi.size()) - 1;
        for (int i = static_cast<int>(rem.size()) - 1; i >= deg; --i) {
            BigInt coef = rem[i];
            if (coef == 0) continue;
            for (int j = 0; j <= deg; ++j) rem[i - deg + j] -= coef * phi[j];
        }
        for (int i = 0; i < deg; ++i)
            if (rem[i] != 0) return false;
        return true;
    }

    bool operator==(const RootSum& o) const { return (*this - o).is_zero(); }

    std::complex<double> numeric() const {
        std::complex<double> acc = 0;
        for (int k = 0; k < d; ++k) {
            if (m[k] == 0) continue;
            double angle = 2.0 * M_PI * k / d;
            acc += static_cast<double>(m[k]) *
                   std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }
};

} // namespace kitlab
