// Integer matrices and Smith normal form over arbitrary-precision integers.
//
// smith_normal_form() returns S = U*M*V together with U, V and their inverses.
// Every decomposition is re-checked by multiplication before it is returned, so
// downstream homology and group-order computations can rely on it blindly.
#pragma once

#include "kitlab/intmath.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kitlab {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const BigInt& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v == 0; });
    }
};

struct SmithResult {
    IntMatrix S;            // diagonal, divisor chain d1 | d2 | ...
    IntMatrix U, Uinv;      // S = U * M * V
    IntMatrix V, Vinv;
    std::vector<BigInt> divisors;  // nonzero diagonal entries
    int rank = 0;
};

namespace detail {

struct SnfWork {
    IntMatrix S, U, Uinv, V, Vinv;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    // row i += q * row j
    void row_add(int i, int j, const BigInt& q) {
        if (q == 0) return;
        for (int c = 0; c < S.cols; ++c) S.at(i, c) += q * S.at(j, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) += q * U.at(j, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= q * Uinv.at(r, i);
    }
    // col i += q * col j
    void col_add(int i, int j, const BigInt& q) {
        if (q == 0) return;
        for (int r = 0; r < S.rows; ++r) S.at(r, i) += q * S.at(r, j);
        for (int r = 0; r < V.rows; ++r) V.at(r, i) += q * V.at(r, j);
        for (int c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) -= q * Vinv.at(i, c);
    }
    void row_negate(int i) {
        for (int c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
};

} // namespace detail

inline SmithResult smith_normal_form(const IntMatrix& M) {
    detail::SnfWork w;
    w.S = M;
    w.U = IntMatrix::identity(M.rows);
    w.Uinv = IntMatrix::identity(M.rows);
    w.V = IntMatrix::identity(M.cols);
    w.Vinv = IntMatrix::identity(M.cols);

    const int n = std::min(M.rows, M.cols);
    for (int t = 0; t < n; ++t) {
        // locate the entry of smallest nonzero magnitude in the trailing block
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < M.rows; ++i)
            for (int j = t; j < M.cols; ++j) {
                const BigInt& v = w.S.at(i, j);
                if (v == 0) continue;
                BigInt m = v < 0 ? BigInt(-v) : v;
                if (pi < 0 || m < best) { best = m; pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < M.rows; ++i) {
                if (w.S.at(i, t) == 0) continue;
                BigInt q = w.S.at(i, t) / w.S.at(t, t);
                w.row_add(i, t, -q);
                if (w.S.at(i, t) != 0) { w.row_swap(t, i); dirty = true; }
            }
            for (int j = t + 1; j < M.cols; ++j) {
                if (w.S.at(t, j) == 0) continue;
                BigInt q = w.S.at(t, j) / w.S.at(t, t);
                w.col_add(j, t, -q);
                if (w.S.at(t, j) != 0) { w.col_swap(t, j); dirty = true; }
            }
            if (!dirty) break;
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
    }

    // enforce d_i | d_{i+1} along the diagonal
    for (;;) {
        bool changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            BigInt a = w.S.at(i, i), b = w.S.at(i + 1, i + 1);
            if (a == 0 && b != 0) {
                w.row_swap(i, i + 1);
                w.col_swap(i, i + 1);
                changed = true;
                continue;
            }
            if (a == 0 || b % a == 0) continue;
            // fold b into position i and redo the local elimination
            w.col_add(i, i + 1, 1);
            for (;;) {
                BigInt q = w.S.at(i + 1, i) / w.S.at(i, i);
                w.row_add(i + 1, i, -q);
                if (w.S.at(i + 1, i) == 0) break;
                w.row_swap(i, i + 1);
            }
            for (;;) {
                BigInt q = w.S.at(i, i + 1) / w.S.at(i, i);
                w.col_add(i + 1, i, -q);
                if (w.S.at(i, i + 1) == 0) break;
                w.col_swap(i, i + 1);
            }
            if (w.S.at(i, i) < 0) w.row_negate(i);
            if (w.S.at(i + 1, i + 1) < 0) w.row_negate(i + 1);
            changed = true;
        }
        if (!changed) break;
    }

    SmithResult res;
    res.S = w.S;
    res.U = w.U;
    res.Uinv = w.Uinv;
    res.V = w.V;
    res.Vinv = w.Vinv;
    for (int i = 0; i < n; ++i)
        if (w.S.at(i, i) != 0) {
            res.divisors.push_back(w.S.at(i, i));
            ++res.rank;
        }

    // verification: decomposition and unimodularity, checked by multiplication
    if (!(res.U * M * res.V == res.S))
        throw std::logic_error("smith_normal_form: U*M*V != S");
    if (!(res.U * res.Uinv == IntMatrix::identity(M.rows)))
        throw std::logic_error("smith_normal_form: U not unimodular");
    if (!(res.V * res.Vinv == IntMatrix::identity(M.cols)))
        throw std::logic_error("smith_normal_form: V not unimodular");
    for (size_t i = 0; i + 1 < res.divisors.size(); ++i)
        if (res.divisors[i + 1] % res.divisors[i] != 0)
            throw std::logic_error("smith_normal_form: divisor chain violated");
    return res;
}

// Order of the image of Z^cols -> (Z_d)^rows induced by M, from its elementary
// divisors: prod_i d / gcd(s_i, d).
inline BigInt image_order_mod(const SmithResult& snf, int d) {
    BigInt order = 1;
    for (const BigInt& s : snf.divisors) order *= BigInt(d) / big_gcd(s, d);
    return order;
}

// Solve M x = b (mod d) given the SNF of M. Returns the canonical solution with
// entries in [0,d) or nothing when the system is inconsistent.
inline std::optional<std::vector<int>> solve_mod(const SmithResult& snf,
                                                 const std::vector<int>& b, int d) {
    const int rows = snf.U.rows, cols = snf.V.rows;
    if (static_cast<int>(b.size()) != rows)
        throw std::invalid_argument("solve_mod: rhs size mismatch");
    // c = U b (mod d)
    std::vector<int> c(rows, 0);
    for (int i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < rows; ++j) acc += snf.U.at(i, j) * b[j];
        c[i] = mod_norm(acc, d);
    }
    // back-substitute through the diagonal system S y = c (mod d)
    std::vector<int> y(cols, 0);
    const int n = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        bool diag_zero = i >= n || snf.S.at(i, i) == 0;
        if (diag_zero) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        int g = static_cast<int>(big_gcd(snf.S.at(i, i), d));
        if (c[i] % g != 0) return std::nullopt;
        int dg = d / g;
        if (dg == 1) continue;  // y[i] = 0 is the canonical choice
        int s_red = mod_norm(snf.S.at(i, i) / g, dg);
        y[i] = mod_norm(static_cast<long long>(c[i] / g) * mod_inverse(s_red, dg), dg);
    }
    // x = V y (mod d)
    std::vector<int> x(cols, 0);
    for (int i = 0; i < cols; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < cols; ++j) acc += snf.V.at(i, j) * y[j];
        x[i] = mod_norm(acc, d);
    }
    return x;
}

} // namespace kitlab
