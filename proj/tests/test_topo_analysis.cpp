#include "kitlab/io.hpp"
#include "kitlab/topo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace kitlab;

namespace {

std::set<int> all_vertex_set(const CellComplex& c) {
    std::set<int> s;
    for (int v = 0; v < c.num_vertices; ++v) s.insert(v);
    return s;
}

Region random_region(const CellComplex& c, std::mt19937& rng) {
    Region r;
    for (int e = 0; e < c.num_edges(); ++e)
        if (rng() % 2) r.edges.insert(e);
    return r;
}

} // namespace

TEST_CASE("group orders from the star-exponent map", "[topo]") {
    SECTION("all vertices obey |K| = d^(V-1)") {
        CHECK(group_order(build_torus(3), 2, all_vertex_set(build_torus(3))) == 256);
        CHECK(group_order(build_torus(2), 2, all_vertex_set(build_torus(2))) == 8);
        CHECK(group_order(build_sphere_cube(), 3, all_vertex_set(build_sphere_cube())) ==
              big_pow(3, 7));
        CHECK(full_group_order(build_genus2(), 5) == big_pow(5, 13));
    }
    SECTION("empty set gives the trivial group") {
        CHECK(group_order(build_torus(2), 7, {}) == 1);
    }
    SECTION("orders match brute-force enumeration") {
        CellComplex t2 = build_torus(2);
        std::mt19937 rng(404);
        for (int d : {2, 3}) {
            for (int trial = 0; trial < 12; ++trial) {
                std::set<int> s;
                for (int v = 0; v < t2.num_vertices; ++v)
                    if (rng() % 2) s.insert(v);
                CHECK(group_order(t2, d, s) == enumerate_K(t2, d, s).order());
            }
            CHECK(group_order(t2, d, all_vertex_set(t2)) ==
                  enumerate_K(t2, d, all_vertex_set(t2)).order());
        }
    }
}

TEST_CASE("simplicity of regions", "[topo]") {
    CellComplex t3 = build_torus(3);
    TorusGeometry g(3);

    SECTION("vertex star is simple") {
        Region star;
        for (int e : t3.vertex_edges[g.vertex(1, 1)]) star.edges.insert(e);
        CHECK(is_simple(t3, 2, star));
        CHECK(is_simple(t3, 6, star));
    }
    SECTION("everything is not simple: the global constraint kills freeness") {
        Region full;
        for (int e = 0; e < t3.num_edges(); ++e) full.edges.insert(e);
        CHECK_FALSE(is_simple(t3, 2, full));
        CHECK_FALSE(is_simple(t3, 3, full));
    }
    SECTION("a region without interior vertices is trivially simple") {
        Region r;
        r.edges = {g.hedge(0, 0)};
        CHECK(interior_vertices(t3, r).empty());
        CHECK(is_simple(t3, 3, r));
    }
}

TEST_CASE("entropy reports", "[topo][entropy]") {
    CellComplex t3 = build_torus(3);
    TorusGeometry g(3);

    SECTION("area law with topological correction on a simple patch") {
        Region star;
        for (int e : t3.vertex_edges[g.vertex(1, 1)]) star.edges.insert(e);
        for (int d : {2, 3}) {
            EntropyReport rep = entropy(t3, d, star);
            CHECK(rep.simple_region);
            CHECK(rep.simple_complement);
            CHECK(rep.boundary_count == 4);
            REQUIRE(rep.exact_log_d_exponent.has_value());
            CHECK(*rep.exact_log_d_exponent == rep.boundary_count - 1);
            CHECK(std::abs(rep.entropy - 3 * std::log(static_cast<double>(d))) < 1e-12);
        }
    }

    SECTION("empty and full regions carry no entropy") {
        for (int d : {2, 5}) {
            EntropyReport none = entropy(t3, d, Region{});
            CHECK(none.entropy == 0.0);
            CHECK(none.ratio == BigRat(1));
            Region full;
            for (int e = 0; e < t3.num_edges(); ++e) full.edges.insert(e);
            EntropyReport everything = entropy(t3, d, full);
            CHECK(everything.entropy == 0.0);
        }
    }

    SECTION("region and complement have the same entropy") {
        std::mt19937 rng(2025);
        for (int trial = 0; trial < 10; ++trial) {
            Region r = random_region(t3, rng);
            EntropyReport a = entropy(t3, 3, r);
            EntropyReport b = entropy(t3, 3, region_complement(t3, r));
            CHECK(a.ratio == b.ratio);
        }
    }

    SECTION("counting formula matches the dense oracle on the 2x2 torus") {
        CellComplex t2 = build_torus(2);
        std::mt19937 rng(31337);
        for (int d : {2, 3}) {
            StateVector psi0 = ground_state_psi0(t2, d);
            for (int trial = 0; trial < 12; ++trial) {
                Region r = random_region(t2, rng);
                EntropyReport rep = entropy(t2, d, r);
                CHECK(std::abs(rep.entropy - entropy_numeric(psi0, r)) < 1e-9);
            }
        }
    }

    SECTION("non-contractible annulus entropy matches the oracle") {
        CellComplex t2 = build_torus(2);
        TorusGeometry g2(2);
        // a band winding the torus: both rows of horizontal edges in row 0,
        // plus the vertical edges between them
        Region band;
        band.edges = {g2.hedge(0, 0), g2.hedge(0, 1), g2.uedge(0, 0), g2.uedge(0, 1)};
        for (int d : {2, 3}) {
            EntropyReport rep = entropy(t2, d, band);
            StateVector psi0 = ground_state_psi0(t2, d);
            CHECK(std::abs(rep.entropy - entropy_numeric(psi0, band)) < 1e-9);
        }
    }

    SECTION("a thin complement also separates support from generated") {
        // the 2x2 plaquette block: its complement is so thin that pairs of
        // boundary stars act entirely inside the block, so the naive
        // (|boundary|-1) log d law overestimates the entropy
        Region block;
        for (int fi : {g.face(0, 0), g.face(0, 1), g.face(1, 0), g.face(1, 1)})
            for (auto [e, s] : t3.faces[fi].edges) block.edges.insert(e);
        EntropyReport rep = entropy(t3, 2, block);
        CHECK(rep.simple_region);
        CHECK(rep.simple_complement);
        CHECK_FALSE(rep.interior_matches_generated);
        CHECK(rep.boundary_count == 8);
        REQUIRE(rep.exact_log_d_exponent.has_value());
        CHECK(*rep.exact_log_d_exponent == 5);  // not |bd| - 1 = 7
    }

    SECTION("winding regions separate the support subgroup from the generated one") {
        // all vertical edges of the 3x3 torus: no vertex is interior, yet the
        // product of the stars down a full column acts only on horizontal
        // edges, so the support subgroups are nontrivial on both sides
        Region verticals;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) verticals.edges.insert(g.uedge(i, j));
        for (int d : {2, 3}) {
            EntropyReport rep = entropy(t3, d, verticals);
            CHECK(rep.generated_interior == 1);
            CHECK(rep.generated_complement == 1);
            CHECK(rep.order_interior == BigInt(d) * d);
            CHECK(rep.order_complement == BigInt(d) * d);
            CHECK_FALSE(rep.interior_matches_generated);
            // -log(d^2 d^2 / d^8) = 4 log d
            REQUIRE(rep.exact_log_d_exponent.has_value());
            CHECK(*rep.exact_log_d_exponent == 4);
        }
        // the dense oracle confirms the support-subgroup formula on the small torus
        CellComplex t2 = build_torus(2);
        TorusGeometry g2(2);
        Region vert2;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) vert2.edges.insert(g2.uedge(i, j));
        for (int d : {2, 3}) {
            EntropyReport rep = entropy(t2, d, vert2);
            CHECK_FALSE(rep.interior_matches_generated);
            StateVector psi0 = ground_state_psi0(t2, d);
            CHECK(std::abs(rep.entropy - entropy_numeric(psi0, vert2)) < 1e-9);
        }
    }
}

TEST_CASE("ground space dimension", "[topo]") {
    CHECK(ground_dim(build_torus(2), 5) == 25);
    CHECK(ground_dim(build_torus(3), 2) == 4);
    CHECK(ground_dim(build_genus2(), 2) == 16);
    CHECK(ground_dim(build_genus2(), 3) == 81);
    CHECK(ground_dim(build_sphere_cube(), 7) == 1);

    SECTION("matches the oracle projector rank") {
        CHECK(ground_dim(build_torus(2), 2) == ground_projector_rank(build_torus(2), 2));
        CHECK(ground_dim(build_torus(2), 3) == ground_projector_rank(build_torus(2), 3));
        CHECK(ground_dim(build_sphere_cube(), 2) ==
              ground_projector_rank(build_sphere_cube(), 2));
    }
}

TEST_CASE("logical algebra relations", "[topo][algebra]") {
    for (int d : {2, 3, 5}) {
        RelationReport torus = logical_algebra_check(build_torus(3), d);
        CHECK(torus.powers_ok);
        CHECK(torus.zz_xx_commute);
        CHECK(torus.symplectic_ok);
        REQUIRE(torus.zx_table.size() == 2);
        CHECK(torus.zx_table[0] == std::vector<int>{0, 1});
        CHECK(torus.zx_table[1] == std::vector<int>{1, 0});

        RelationReport g2 = logical_algebra_check(build_genus2(), d);
        CHECK(g2.powers_ok);
        CHECK(g2.zz_xx_commute);
        CHECK(g2.symplectic_ok);
        REQUIRE(g2.zx_table.size() == 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int expected = (i < 2 && j == 2 + i) || (i >= 2 && j == i - 2) ? 1 : 0;
                CHECK(g2.zx_table[i][j] == expected);
            }
    }
}

TEST_CASE("braiding phases", "[topo][braid]") {
    SECTION("canonical braid gives exponent -kl, verified via the equivalence") {
        for (int d : {2, 3, 4, 5}) {
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    BraidReport rep = braid(build_torus(3), d, k, l);
                    CHECK(rep.phase_exponent == mod_norm(-k * l, d));
                    CHECK(rep.tau_is_boundary);
                    CHECK(rep.boundary_reduction_ok);
                    CHECK(rep.crossing == mod_norm(-1, d));
                    if (k == 1 && l == 1) {
                        CHECK(rep.phase_exponent == mod_norm(-1, d));
                        CHECK(rep.commutator_exponent == mod_norm(-1, d));
                        CHECK(rep.equivalence_ok);
                    }
                }
        }
    }

    SECTION("no X particle means no phase") {
        BraidReport rep = braid(build_torus(3), 5, 3, 0);
        CHECK(rep.phase_exponent == 0);
    }

    SECTION("oracle phase extraction agrees for every k, l") {
        for (int d : {2, 3}) {
            CellComplex t2 = build_torus(2, d);
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    BraidReport rep = braid(t2, d, k, l);
                    CHECK(rep.phase_exponent == oracle_braid_exponent(t2, d, k, l));
                }
        }
    }

    SECTION("works on the genus-2 complex too") {
        BraidReport rep = braid(build_genus2(), 3, 1, 1);
        CHECK(rep.phase_exponent == 2);
        CHECK(rep.equivalence_ok);
    }

    SECTION("a non-boundary loop is rejected") {
        CellComplex t3 = build_torus(3);
        TorusGeometry g(3);
        BraidPlacement p = canonical_braid_placement(t3);
        // replace tau by a winding loop through the same vertex
        p.tau = make_walk(t3, g.vertex(0, 0),
                          {{g.hedge(0, 0), 1}, {g.hedge(0, 1), 1}, {g.hedge(0, 2), 1}});
        CHECK_THROWS_AS(braid(t3, 3, 1, 1, p), std::invalid_argument);
    }
}

TEST_CASE("charge detection through boundary loops", "[topo][charge]") {
    CellComplex t3 = build_torus(3);
    TorusGeometry g(3);
    const int d = 3;

    // X pair: cowalk from f(0,0) to f(2,2) staying outside the detected area
    Cowalk cw = make_cowalk(t3, g.face(0, 0),
                            {{g.uedge(0, 0), 1}, {g.hedge(0, 2), -1}});
    REQUIRE(cw.start() == g.face(0, 0));
    REQUIRE(cw.end() == g.face(2, 2));

    SECTION("loop enclosing the source face counts +kl") {
        Walk tau = enclosing_walk(t3, d, {g.face(0, 0)});
        for (int k = 1; k < d; ++k)
            for (int l = 1; l < d; ++l) {
                ChargeReport rep = charge_detect(t3, d, tau, cw, k, l);
                CHECK(rep.exponent == mod_norm(k * l, d));
            }
    }

    SECTION("loop enclosing neither endpoint sees nothing") {
        Walk tau = enclosing_walk(t3, d, {g.face(1, 1)});
        ChargeReport rep = charge_detect(t3, d, tau, cw, 1, 1);
        CHECK(rep.exponent == 0);
    }

    SECTION("loop enclosing both endpoints sees cancelling charges") {
        Cowalk near = make_cowalk(t3, g.face(0, 0), {{g.uedge(0, 1), -1}});
        REQUIRE(near.end() == g.face(0, 1));
        Walk tau = enclosing_walk(t3, d, {g.face(0, 0), g.face(0, 1)});
        ChargeReport rep = charge_detect(t3, d, tau, near, 1, 1);
        CHECK(rep.exponent == 0);
    }

    SECTION("dense oracle confirms the winding rule at oracle scale") {
        // torus(3) at d = 2 and torus(2) at d in {2, 3}
        {
            const int d2 = 2;
            Walk tau = enclosing_walk(t3, d2, {g.face(0, 0)});
            Cowalk cw2 = make_cowalk(t3, g.face(0, 0),
                                     {{g.uedge(0, 0), 1}, {g.hedge(0, 2), -1}});
            ChargeReport rep = charge_detect(t3, d2, tau, cw2, 1, 1);
            CHECK(rep.exponent == oracle_charge_exponent(t3, d2, tau, cw2, 1, 1));
            Walk far = enclosing_walk(t3, d2, {g.face(1, 1)});
            CHECK(charge_detect(t3, d2, far, cw2, 1, 1).exponent ==
                  oracle_charge_exponent(t3, d2, far, cw2, 1, 1));
        }
        CellComplex t2 = build_torus(2);
        TorusGeometry g2(2);
        for (int dd : {2, 3}) {
            Walk tau = enclosing_walk(t2, dd, {g2.face(0, 0)});
            Cowalk cw2 = make_cowalk(t2, g2.face(0, 0), {{g2.uedge(0, 0), 1}});
            REQUIRE(cw2.end() == g2.face(0, 1));
            for (int k = 1; k < dd; ++k)
                for (int l = 1; l < dd; ++l) {
                    ChargeReport rep = charge_detect(t2, dd, tau, cw2, k, l);
                    CHECK(rep.exponent == mod_norm(k * l, dd));
                    CHECK(rep.exponent ==
                          oracle_charge_exponent(t2, dd, tau, cw2, k, l));
                }
        }
    }

    SECTION("counterclockwise traversal flips the sign") {
        Walk tau = enclosing_walk(t3, d, {g.face(0, 0)}, false);
        ChargeReport rep = charge_detect(t3, d, tau, cw, 1, 1);
        CHECK(rep.exponent == mod_norm(-1, d));
    }

    SECTION("non-boundary loops are rejected") {
        Walk winding = make_walk(t3, g.vertex(0, 0),
                                 {{g.hedge(0, 0), 1}, {g.hedge(0, 1), 1}, {g.hedge(0, 2), 1}});
        CHECK_THROWS_AS(charge_detect(t3, d, winding, cw, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("a loaded complex drives the full symbolic pipeline", "[topo][io]") {
    // serialization drops the builder's generator hints, so this exercises the
    // generator extraction from the Smith change of basis end to end
    CellComplex loaded = load_complex(save_complex(build_torus(2, 3)));
    REQUIRE_FALSE(loaded.hints.has_value());
    const int d = 3;

    CHECK(ground_dim(loaded, d) == 9);
    RelationReport rel = logical_algebra_check(loaded, d);
    CHECK(rel.powers_ok);
    CHECK(rel.zz_xx_commute);

    BraidReport rep = braid(loaded, d, 1, 1);
    CHECK(rep.phase_exponent == mod_norm(-1, d));
    CHECK(rep.phase_exponent == oracle_braid_exponent(loaded, d, 1, 1));

    // extracted cocycle generators still produce an orthonormal ground basis
    auto basis = ground_basis(loaded, d);
    REQUIRE(basis.size() == 9);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            CHECK(std::abs(inner(basis[i], basis[j]) -
                           (i == j ? Amplitude(1) : Amplitude(0))) < 1e-12);

    Region r;
    r.edges = {0, 1, 4};
    StateVector psi0 = ground_state_psi0(loaded, d);
    CHECK(std::abs(entropy(loaded, d, r).entropy - entropy_numeric(psi0, r)) < 1e-9);
}

TEST_CASE("exchange statistics of composite particles", "[topo][exchange]") {
    SECTION("pure particles are bosons") {
        for (int d : {2, 3, 5}) {
            CellComplex t = build_torus(2, d);
            CHECK(exchange_phase(t, d, 1, 0).exponent == 0);
            CHECK(exchange_phase(t, d, 0, 1).exponent == 0);
            CHECK(exchange_phase(t, d, d - 1, 0).exponent == 0);
        }
    }

    SECTION("the composite at k=l=1 exchanges with phase exponent -1") {
        for (int d : {2, 3, 5}) {
            CellComplex t = build_torus(2, d);
            ExchangeReport rep = exchange_phase(t, d, 1, 1);
            CHECK(rep.exponent == mod_norm(-1, d));
            CHECK(rep.matches_minus_kl);
            CHECK(rep.exponent == oracle_exchange_exponent(t, d, 1, 1));
        }
    }

    SECTION("d=5 probe distinguishes the candidate formulas") {
        CellComplex t = build_torus(2, 5);
        ExchangeReport r11 = exchange_phase(t, 5, 1, 1);
        CHECK(r11.exponent == 4);  // = -1
        CHECK(r11.matches_minus_kl);
        CHECK_FALSE(r11.matches_minus_k_plus_l);

        ExchangeReport r12 = exchange_phase(t, 5, 1, 2);
        CHECK(r12.exponent == 3);  // = -2 = -kl
        CHECK(r12.matches_minus_kl);
        CHECK_FALSE(r12.matches_minus_k_plus_l);

        ExchangeReport r22 = exchange_phase(t, 5, 2, 2);
        CHECK(r22.exponent == 1);  // = -4; here -kl and -(k+l) coincide
        CHECK(r22.matches_minus_kl);
        CHECK(r22.matches_minus_k_plus_l);

        for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
            CHECK(exchange_phase(t, 5, k, l).exponent ==
                  oracle_exchange_exponent(t, 5, k, l));
    }

    SECTION("lattice size does not matter") {
        for (int d : {3, 5})
            for (int k = 1; k < 3; ++k)
                for (int l = 1; l < 3; ++l)
                    CHECK(exchange_phase(build_torus(2, d), d, k, l).exponent ==
                          exchange_phase(build_torus(4, d), d, k, l).exponent);
    }

    SECTION("exchange requires a lattice complex") {
        CHECK_THROWS_AS(exchange_phase(build_sphere_cube(), 3, 1, 1),
                        std::invalid_argument);
    }
}
