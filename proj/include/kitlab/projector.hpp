// Formal sums of Pauli strings with exact coefficients from Z[w] / d^m.
//
// This is enough for the character-averaged projectors A_v(j), B_f(j) and
// their products: every coefficient that ever arises is a sum of roots of
// unity over a power-of-d denominator, and equality of such sums is decided
// exactly through the cyclotomic reduction in RootSum.
#pragma once

#include "kitlab/cyclotomic.hpp"
#include "kitlab/pauli.hpp"

#include <map>
#include <utility>

namespace kitlab {

struct ProjectorSum {
    int d = 2;
    int num_edges = 0;

    // value of a coefficient: num / d^denom_pow
    struct Coef {
        RootSum num;
        int denom_pow = 0;
    };
    using Key = std::pair<std::map<int, int>, std::map<int, int>>;  // (x, z) exponents
    std::map<Key, Coef> terms;

    ProjectorSum() = default;
    ProjectorSum(int d_, int num_edges_) : d(d_), num_edges(num_edges_) {}

    static ProjectorSum zero(int d, int num_edges) { return ProjectorSum(d, num_edges); }

    static ProjectorSum from_string(const PauliString& p, int extra_phase = 0,
                                    int denom_pow = 0) {
        ProjectorSum s(p.d, p.num_edges);
        Coef c{RootSum::root(p.d, p.phase + extra_phase), denom_pow};
        s.terms[{p.x.coef, p.z.coef}] = std::move(c);
        s.prune();
        return s;
    }

    void check_compatible(const ProjectorSum& o) const {
        if (d != o.d || num_edges != o.num_edges)
            throw std::invalid_argument("ProjectorSum: operand mismatch");
    }

    void add_term(const Key& key, const Coef& c) {
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = c;
            return;
        }
        // align denominators: a/d^p + b/d^q = (a d^(q-p) + b)/d^q for q >= p
        Coef& dst = it->second;
        int p = dst.denom_pow, q = c.denom_pow;
        int target = std::max(p, q);
        BigInt scale_dst = big_pow(d, static_cast<unsigned long>(target - p));
        BigInt scale_src = big_pow(d, static_cast<unsigned long>(target - q));
        dst.num = dst.num.scaled(scale_dst) + c.num.scaled(scale_src);
        dst.denom_pow = target;
    }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second.num.is_zero() ? terms.erase(it) : std::next(it);
    }

    ProjectorSum operator+(const ProjectorSum& o) const {
        check_compatible(o);
        ProjectorSum r = *this;
        for (const auto& [k, c] : o.terms) r.add_term(k, c);
        r.prune();
        return r;
    }

    ProjectorSum operator-(const ProjectorSum& o) const {
        check_compatible(o);
        ProjectorSum r = *this;
        for (const auto& [k, c] : o.terms)
            r.add_term(k, Coef{c.num.scaled(-1), c.denom_pow});
        r.prune();
        return r;
    }

    ProjectorSum operator*(const ProjectorSum& o) const {
        check_compatible(o);
        ProjectorSum r(d, num_edges);
        for (const auto& [ka, ca] : terms)
            for (const auto& [kb, cb] : o.terms) {
                PauliString a(d, num_edges), b(d, num_edges);
                a.x.coef = ka.first;
                a.z.coef = ka.second;
                b.x.coef = kb.first;
                b.z.coef = kb.second;
                PauliString ab = multiply(a, b);
                Coef c{(ca.num * cb.num).times_root(ab.phase),
                       ca.denom_pow + cb.denom_pow};
                r.add_term({ab.x.coef, ab.z.coef}, c);
            }
        r.prune();
        return r;
    }

    ProjectorSum adjoint_sum() const {
        ProjectorSum r(d, num_edges);
        for (const auto& [k, c] : terms) {
            PauliString p(d, num_edges);
            p.x.coef = k.first;
            p.z.coef = k.second;
            PauliString pa = adjoint(p);
            r.add_term({pa.x.coef, pa.z.coef},
                       Coef{c.num.conjugate().times_root(pa.phase), c.denom_pow});
        }
        r.prune();
        return r;
    }

    ProjectorSum scaled_by_root(int power) const {
        ProjectorSum r = *this;
        for (auto& [k, c] : r.terms) c.num = c.num.times_root(power);
        return r;
    }

    bool is_zero() const {
        for (const auto& [k, c] : terms)
            if (!c.num.is_zero()) return false;
        return true;
    }

    bool operator==(const ProjectorSum& o) const { return (*this - o).is_zero(); }

    size_t term_count() const { return terms.size(); }
};

inline ProjectorSum operator*(const ProjectorSum& s, const PauliString& p) {
    return s * ProjectorSum::from_string(p);
}

inline ProjectorSum operator*(const PauliString& p, const ProjectorSum& s) {
    return ProjectorSum::from_string(p) * s;
}

inline ProjectorSum identity_sum(const CellComplex& c, int d) {
    return ProjectorSum::from_string(pauli_identity(c, d));
}

// A_v(j) = (1/d) sum_k w^{kj} (a_v)^k; j = 0 is the ground-space projector A_v.
inline ProjectorSum vertex_projector(const CellComplex& c, int v, int j, int d) {
    ProjectorSum s(d, c.num_edges());
    PauliString av = vertex_op(c, v, d);
    for (int k = 0; k < d; ++k)
        s = s + ProjectorSum::from_string(power(av, k), mod_norm(1LL * k * j, d), 1);
    return s;
}

// B_f(j) = (1/d) sum_k w^{-kj} (b_f)^k, the projector onto face charge j.
inline ProjectorSum face_projector(const CellComplex& c, int f, int j, int d) {
    ProjectorSum s(d, c.num_edges());
    PauliString bf = face_op(c, f, d);
    for (int k = 0; k < d; ++k)
        s = s + ProjectorSum::from_string(power(bf, k), mod_norm(-1LL * k * j, d), 1);
    return s;
}

} // namespace kitlab
