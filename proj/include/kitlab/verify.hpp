// Self-check suite run by the command-line front end: every structural and
// algebraic identity the library is built on, evaluated on one complex, with
// one pass/fail result per check. The flip_dual option deliberately corrupts
// the star-operator orientation on even edges; a healthy build must then fail
// the commutation checks.
#pragma once

#include "kitlab/io.hpp"
#include "kitlab/topo.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace kitlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;      // skip dense-oracle checks
    bool flip_dual = false;  // negative control: corrupt star orientations
    unsigned seed = 20240401;
};

namespace detail {

inline PauliString verify_vertex_op(const CellComplex& c, int v, int d, bool flip) {
    Cochain co = covertex_coboundary(c, v, d);
    if (flip) {
        Cochain bad(d);
        for (auto [e, val] : co.coef) bad.set(e, e % 2 == 0 ? -val : val);
        co = bad;
    }
    return pauli_x(c, co);
}

} // namespace detail

inline std::vector<CheckResult> run_verify_suite(const CellComplex& c, int d,
                                                 const VerifyOptions& opt = {}) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    };
    auto expect = [](bool ok, const std::string& msg) {
        if (!ok) throw std::runtime_error(msg);
    };

    run("complex-validation", [&] {
        auto issues = validate(c);
        expect(issues.empty(), issues.empty() ? "" : issues.front());
        std::ostringstream os;
        os << "V=" << c.num_vertices << " E=" << c.num_edges() << " F=" << c.num_faces()
           << " genus=" << c.genus();
        return os.str();
    });

    run("dual-involution", [&] {
        CellComplex dd = dualize(dualize(c).complex).complex;
        expect(same_incidence(dd, c), "double dual changed the incidence structure");
        return std::string("(G*)* = G");
    });

    run("boundary-of-boundary", [&] {
        expect((boundary1_matrix(c) * boundary2_matrix(c)).is_zero(), "d1*d2 != 0");
        return std::string("d1*d2 = 0");
    });

    run("homology-rank", [&] {
        auto h = homology(c, d);
        auto hco = cohomology(c, d);
        expect(h.betti == 2 * c.genus(), "betti != 2g");
        expect(hco.betti == h.betti, "cohomology rank mismatch");
        std::ostringstream os;
        os << "b1 = " << h.betti << ", |H1| = " << h.group_order;
        return os.str();
    });

    run("star-plaquette-commutation", [&] {
        for (int v = 0; v < c.num_vertices; ++v) {
            PauliString av = detail::verify_vertex_op(c, v, d, opt.flip_dual);
            for (int f = 0; f < c.num_faces(); ++f)
                expect(commutation_phase(face_op(c, f, d), av) == 0,
                       "[b_f, a_v] != 0 at v=" + std::to_string(v) +
                           " f=" + std::to_string(f));
        }
        return std::string("all pairs commute");
    });

    run("cycle-star-commutation", [&] {
        auto h = homology(c, d);
        std::vector<Chain> cycles = h.generators;
        for (int f = 0; f < c.num_faces(); ++f) cycles.push_back(face_boundary(c, f, d));
        for (const Chain& gamma : cycles) {
            PauliString zg = pauli_z(c, gamma);
            for (int v = 0; v < c.num_vertices; ++v)
                expect(commutation_phase(zg, detail::verify_vertex_op(c, v, d,
                                                                      opt.flip_dual)) == 0,
                       "[Z_gamma, a_v] != 0 at v=" + std::to_string(v));
        }
        return std::string("cycles commute with all stars");
    });

    run("projector-orthogonality", [&] {
        ProjectorSum total = ProjectorSum::zero(d, c.num_edges());
        for (int j = 0; j < d; ++j) {
            ProjectorSum aj = vertex_projector(c, 0, j, d);
            expect(aj * aj == aj, "A(j) not idempotent");
            for (int k = 0; k < j; ++k)
                expect((aj * vertex_projector(c, 0, k, d)).is_zero(),
                       "A(j)A(k) != 0 for j != k");
            total = total + aj;
        }
        expect(total == identity_sum(c, d), "sum of A(j) != 1");
        return std::string("character projectors resolve the identity");
    });

    run("logical-relations", [&] {
        RelationReport rep = logical_algebra_check(c, d);
        expect(rep.powers_ok, "generator powers not trivial");
        expect(rep.zz_xx_commute, "Z-Z or X-X pair fails to commute");
        expect(rep.symplectic_ok, "commutator table is not symplectic");
        return std::string("4g generators satisfy the standard relations");
    });

    if (c.genus() >= 1) {
        run("braid-equivalence", [&] {
            BraidReport rep = braid(c, d, 1, 1);
            expect(rep.phase_exponent == mod_norm(-1, d), "braid exponent != -1");
            expect(rep.equivalence_ok, "loop/commutator equivalence failed");
            return std::string("braid phase = w^-1 = global commutator");
        });
    }

    run("entropy-area-law", [&] {
        // star of vertex 0 is a simple patch on every builder
        Region star;
        for (int e : c.vertex_edges[0]) star.edges.insert(e);
        EntropyReport rep = entropy(c, d, star);
        expect(rep.simple_region, "vertex star is not simple");
        expect(rep.exact_log_d_exponent.has_value() &&
                   *rep.exact_log_d_exponent == rep.boundary_count - 1,
               "S != (|dLambda|-1) log d");
        std::ostringstream os;
        os << "S = " << rep.boundary_count - 1 << " log " << d << " exactly";
        return os.str();
    });

    if (!opt.quick) {
        OracleLimits lim;

        run("oracle-ground-rank", [&] {
            BigInt dim = ground_dim(c, d);
            int rank = ground_projector_rank(c, d, opt.seed, lim);
            expect(BigInt(rank) == dim, "projector rank != d^2g");
            std::ostringstream os;
            os << "rank = " << rank;
            return os.str();
        });

        run("oracle-ground-basis", [&] {
            auto basis = ground_basis(c, d, lim);
            double worst = 0;
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = 0; j < basis.size(); ++j)
                    worst = std::max(worst,
                                     std::abs(inner(basis[i], basis[j]) -
                                              (i == j ? Amplitude(1) : Amplitude(0))));
            expect(worst < 1e-12, "Gram matrix deviates from identity");
            for (const auto& b : basis)
                for (int v = 0; v < c.num_vertices; ++v)
                    expect(distance(apply(vertex_op(c, v, d), b), b) < 1e-12,
                           "basis vector not stabilized");
            std::ostringstream os;
            os << basis.size() << " orthonormal stabilized states";
            return os.str();
        });

        run("oracle-entropy", [&] {
            StateVector psi0 = ground_state_psi0(c, d, lim);
            std::mt19937 rng(opt.seed);
            for (int trial = 0; trial < 5; ++trial) {
                Region r;
                for (int e = 0; e < c.num_edges(); ++e)
                    if (rng() % 2) r.edges.insert(e);
                EntropyReport rep = entropy(c, d, r);
                double numeric = entropy_numeric(psi0, r);
                expect(std::abs(rep.entropy - numeric) < 1e-9,
                       "counting formula disagrees with the reduced state");
            }
            return std::string("counting formula matches 5 sampled regions");
        });

        if (c.genus() >= 1) {
            run("oracle-braid", [&] {
                for (int k = 1; k < std::min(d, 3); ++k)
                    for (int l = 1; l < std::min(d, 3); ++l) {
                        BraidReport rep = braid(c, d, k, l);
                        expect(rep.phase_exponent ==
                                   oracle_braid_exponent(c, d, k, l, std::nullopt, lim),
                               "oracle braid phase mismatch");
                    }
                return std::string("oracle phases match the symbolic braid");
            });
        }

        run("oracle-excitation", [&] {
            StateVector psi0 = ground_state_psi0(c, d, lim);
            const auto& e0 = c.edges[0];
            Walk w = make_walk(c, e0.tail, {{0, 1}});
            StateVector zeta = excite_z(c, d, psi0, w, 1);
            StateVector h = hamiltonian_apply(c, d, zeta);
            StateVector want = zeta;
            for (auto& a : want.amp) a *= ground_energy(c) + 2.0;
            expect(distance(h, want) < 1e-12, "excitation energy != E_G + 2");
            return std::string("pair excitation at E_G + 2");
        });
    }

    return results;
}

} // namespace kitlab
