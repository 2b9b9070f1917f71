// Exact symbolic analysis: coboundary-group orders, entanglement entropy by
// counting, ground-space dimension, the logical operator algebra, braiding and
// charge-detection phases, and the operational exchange statistics of
// composite particles. Everything here is computed without state vectors; the
// oracle routines at the bottom re-derive the same quantities densely so the
// two routes can be compared exactly.
#pragma once

#include "kitlab/homology.hpp"
#include "kitlab/lattice.hpp"
#include "kitlab/oracle.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kitlab {

// ---------------------------------------------------------------------------
// Group orders via Smith normal form of the star-exponent map.

inline BigInt group_order(const CellComplex& c, int d, const std::set<int>& vertices) {
    if (vertices.empty()) return 1;
    IntMatrix m(c.num_edges(), static_cast<int>(vertices.size()));
    int col = 0;
    for (int v : vertices) {
        if (v < 0 || v >= c.num_vertices)
            throw std::invalid_argument("group_order: vertex id out of range");
        for (int e : c.vertex_edges[v]) m.at(e, col) += c.vertex_sign(v, e);
        ++col;
    }
    return image_order_mod(smith_normal_form(m), d);
}

inline BigInt full_group_order(const CellComplex& c, int d) {
    std::set<int> all;
    for (int v = 0; v < c.num_vertices; ++v) all.insert(v);
    return group_order(c, d, all);
}

inline bool is_simple(const CellComplex& c, int d, const Region& r) {
    std::set<int> interior = interior_vertices(c, r);
    return group_order(c, d, interior) ==
           big_pow(d, static_cast<unsigned long>(interior.size()));
}

// Order of the subgroup of K acting only inside the region: coboundaries that
// vanish on every edge of the complement. This contains the subgroup generated
// by interior stars, and can exceed it: on a torus, the product of the stars
// down a full winding column cancels its vertical edges and lands inside the
// horizontal band even though none of its vertices is interior. The reduced
// state factorizes over these support subgroups, not the generated ones.
inline BigInt support_group_order(const CellComplex& c, int d, const Region& r) {
    std::vector<int> rows;
    for (int e = 0; e < c.num_edges(); ++e)
        if (!r.edges.count(e)) rows.push_back(e);
    if (rows.empty()) return full_group_order(c, d);
    IntMatrix m(static_cast<int>(rows.size()), c.num_vertices);
    for (size_t i = 0; i < rows.size(); ++i) {
        const EdgeRec& e = c.edges[rows[i]];
        m.at(static_cast<int>(i), e.head) += 1;
        m.at(static_cast<int>(i), e.tail) -= 1;
    }
    BigInt kernel = big_pow(d, static_cast<unsigned long>(c.num_vertices)) /
                    image_order_mod(smith_normal_form(m), d);
    return kernel / d;  // quotient by the constant cochains
}

// ---------------------------------------------------------------------------
// Entanglement entropy from group counting.

struct EntropyReport {
    Region region;
    BigInt order_interior;        // |K_Lambda|, support subgroup
    BigInt order_complement;      // |K_Lambda^c|, support subgroup
    BigInt order_full;            // |K|
    BigInt generated_interior;    // subgroup generated by interior stars
    BigInt generated_complement;
    bool interior_matches_generated = false;  // support == generated, both sides
    BigRat ratio;                 // |K_Lambda||K_Lambda^c| / |K|, <= 1
    double entropy = 0;           // -log(ratio), natural log
    double entropy_over_log_d = 0;
    std::optional<int> exact_log_d_exponent;  // m with ratio = d^-m, when exact
    bool simple_region = false;
    bool simple_complement = false;
    int interior_count = 0;
    int complement_interior_count = 0;
    int boundary_count = 0;
};

namespace detail {

inline double big_log(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("big_log: nonpositive argument");
    double direct = x.convert_to<double>();
    if (std::isfinite(direct)) return std::log(direct);
    // scale down by powers of two
    unsigned long bits = boost::multiprecision::msb(x);
    BigInt scaled = x >> (bits - 52);
    return std::log(scaled.convert_to<double>()) +
           static_cast<double>(bits - 52) * std::log(2.0);
}

} // namespace detail

inline EntropyReport entropy(const CellComplex& c, int d, const Region& r) {
    EntropyReport rep;
    rep.region = r;
    Region rc = region_complement(c, r);
    std::set<int> inner = interior_vertices(c, r);
    std::set<int> outer = interior_vertices(c, rc);

    rep.order_interior = support_group_order(c, d, r);
    rep.order_complement = support_group_order(c, d, rc);
    rep.generated_interior = group_order(c, d, inner);
    rep.generated_complement = group_order(c, d, outer);
    rep.interior_matches_generated = rep.order_interior == rep.generated_interior &&
                                     rep.order_complement == rep.generated_complement;
    rep.order_full = full_group_order(c, d);
    rep.interior_count = static_cast<int>(inner.size());
    rep.complement_interior_count = static_cast<int>(outer.size());
    rep.boundary_count = static_cast<int>(boundary_vertices(c, r).size());

    rep.ratio = BigRat(rep.order_interior * rep.order_complement, rep.order_full);
    if (rep.ratio > 1)
        throw std::logic_error("entropy: subgroup orders exceed the full group");
    BigInt num = boost::multiprecision::numerator(rep.ratio);
    BigInt den = boost::multiprecision::denominator(rep.ratio);
    rep.entropy = detail::big_log(den) - detail::big_log(num);
    rep.entropy_over_log_d = rep.entropy / std::log(static_cast<double>(d));

    if (num == 1) {
        BigInt m = den;
        int expo = 0;
        while (m % d == 0) {
            m /= d;
            ++expo;
        }
        if (m == 1) rep.exact_log_d_exponent = expo;
    }
    rep.simple_region = rep.generated_interior ==
                        big_pow(d, static_cast<unsigned long>(inner.size()));
    rep.simple_complement = rep.generated_complement ==
                            big_pow(d, static_cast<unsigned long>(outer.size()));
    return rep;
}

// ---------------------------------------------------------------------------
// Ground-space dimension and logical operator algebra.

inline BigInt ground_dim(const CellComplex& c, int d) {
    return big_pow(d, static_cast<unsigned long>(homology(c, d).betti));
}

struct RelationReport {
    int d = 2;
    int genus = 0;
    bool powers_ok = false;        // every generator string to the d-th power is 1
    bool zz_xx_commute = false;    // Z-Z and X-X pairs commute
    bool symplectic_ok = false;    // Z-X table equals the standard pairing
    std::vector<std::vector<int>> zx_table;  // commutator exponents [[Z_i, X_j]]
    std::vector<std::string> z_names, x_names;
};

inline RelationReport logical_algebra_check(const CellComplex& c, int d) {
    RelationReport rep;
    rep.d = d;
    rep.genus = c.genus();
    HomologyDescriptor h = homology(c, d);
    HomologyDescriptor hco = cohomology(c, d);
    const int b = h.betti;
    const int g = rep.genus;

    std::vector<PauliString> zs, xs;
    for (int i = 0; i < b; ++i) {
        zs.push_back(pauli_z(c, h.generators[i]));
        Cochain xc(d);
        xc.coef = hco.generators[i].coef;
        xs.push_back(pauli_x(c, xc));
        rep.z_names.push_back(i < g ? "Z[a" + std::to_string(i + 1) + "]"
                                    : "Z[b" + std::to_string(i - g + 1) + "]");
        rep.x_names.push_back(i < g ? "X[a" + std::to_string(i + 1) + "]"
                                    : "X[b" + std::to_string(i - g + 1) + "]");
    }

    rep.powers_ok = true;
    for (const auto& s : zs) rep.powers_ok = rep.powers_ok && power(s, d).is_identity();
    for (const auto& s : xs) rep.powers_ok = rep.powers_ok && power(s, d).is_identity();

    rep.zz_xx_commute = true;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            if (commutation_phase(zs[i], zs[j]) != 0) rep.zz_xx_commute = false;
            if (commutation_phase(xs[i], xs[j]) != 0) rep.zz_xx_commute = false;
        }

    rep.zx_table.assign(b, std::vector<int>(b, 0));
    rep.symplectic_ok = true;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            rep.zx_table[i][j] = group_commutator_exponent(zs[i], xs[j]);
            int expected = 0;
            if (i < g && j == g + i) expected = 1;   // [[Z_{a_i}, X_{b_i}]] = w
            if (i >= g && j == i - g) expected = 1;  // [[Z_{b_i}, X_{a_i}]] = w
            if (rep.zx_table[i][j] != expected) rep.symplectic_ok = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Braiding.

struct BraidPlacement {
    int v = -1, v_tilde = -1;  // Z-pair endpoints
    int f = -1, f_tilde = -1;  // X-pair endpoints
    Walk walk;                 // v -> v_tilde
    Cowalk cowalk;             // f -> f_tilde
    Walk tau;                  // boundary loop through v
};

// Deterministic placement that works on any valid complex: take the face with
// the lowest id, run tau counterclockwise around it from its lowest corner,
// let the walk be the first step of tau and the cowalk the dual step out of
// the face across that same edge. tau then crosses the cowalk exactly once,
// with crossing number -1.
inline BraidPlacement canonical_braid_placement(const CellComplex& c) {
    BraidPlacement p;
    p.f = 0;
    const auto& fe = c.faces[p.f].edges;
    auto [e0, s0] = fe[0];

    int start = s0 > 0 ? c.edges[e0].tail : c.edges[e0].head;
    std::vector<std::pair<int, int>> steps(fe.begin(), fe.end());
    p.tau = make_walk(c, start, steps);
    p.v = start;
    p.walk = make_walk(c, start, {steps[0]});
    p.v_tilde = p.walk.end();

    int other = -1;
    for (auto [f2, s2] : c.edge_faces[e0])
        if (f2 != p.f) other = f2;
    p.f_tilde = other;
    p.cowalk = make_cowalk(c, p.f, {{e0, -s0}});
    return p;
}

struct BraidReport {
    int d = 2, k = 1, l = 1;
    BraidPlacement placement;
    int crossing = 0;              // <tau, unit cowalk cochain>
    int phase_exponent = 0;        // Z_tau^k past X^l: k*l*crossing
    bool tau_is_boundary = false;
    FaceChain witness;             // tau = boundary(witness)
    bool boundary_reduction_ok = false;  // Z_tau equals the product of plaquettes
    int commutator_exponent = 0;   // [[X_{1,0}, Z_{0,1}]] from the logical algebra
    bool equivalence_ok = false;   // phase equals commutator_exponent * k * l

    BraidReport() : witness(2) {}
};

inline BraidReport braid(const CellComplex& c, int d, int k, int l,
                         std::optional<BraidPlacement> placement = std::nullopt) {
    require_valid(c);
    BraidReport rep;
    rep.d = d;
    rep.k = mod_norm(k, d);
    rep.l = mod_norm(l, d);
    rep.placement = placement ? *placement : canonical_braid_placement(c);
    const BraidPlacement& p = rep.placement;

    Chain tau_chain = walk_chain(p.tau, d, 1);
    Cochain cowalk_unit = cowalk_cochain(p.cowalk, d, 1);

    // the loop must cross the cowalk in exactly one spin
    std::set<int> shared;
    for (auto [e, v] : tau_chain.coef)
        if (cowalk_unit.get(e) != 0) shared.insert(e);
    if (shared.size() != 1)
        throw std::invalid_argument("braid: loop must cross the cowalk exactly once");

    HomologyDescriptor h = homology(c, d);
    auto witness = boundary_witness(h, tau_chain);
    if (!witness)
        throw std::invalid_argument("braid: loop is not a boundary");
    rep.tau_is_boundary = true;
    rep.witness = *witness;

    // boundary reduction: Z over tau is exactly the product of plaquette
    // operators of the witness, so it acts as the identity on ground states
    PauliString ztau = pauli_z(c, tau_chain);
    PauliString plaquettes = pauli_identity(c, d);
    for (auto [f, w] : rep.witness.coef)
        plaquettes = multiply(plaquettes, power(face_op(c, f, d), w));
    rep.boundary_reduction_ok = ztau == plaquettes;

    rep.crossing = intersection(tau_chain, cowalk_unit);
    PauliString ztau_k = pauli_z(c, tau_chain.scaled(rep.k));
    PauliString xstr = string_for_cowalk(c, p.cowalk, rep.l, d);
    rep.phase_exponent = commutation_phase(ztau_k, xstr);

    // the same phase as the global commutator of logical generators
    if (c.genus() >= 1) {
        HomologyDescriptor hco = cohomology(c, d);
        Cochain nu1(d);
        nu1.coef = hco.generators[0].coef;
        // X of class (v_1, 0) against Z of class (0, v_1)
        PauliString x10 = pauli_x(c, nu1);
        PauliString z01 = pauli_z(c, h.generators[c.genus()]);
        rep.commutator_exponent = group_commutator_exponent(x10, z01);
        rep.equivalence_ok =
            rep.boundary_reduction_ok &&
            rep.phase_exponent ==
                mod_norm(static_cast<long long>(rep.commutator_exponent) * rep.k * rep.l, d) &&
            rep.phase_exponent == mod_norm(-static_cast<long long>(rep.k) * rep.l, d);
    }
    return rep;
}

// Dense cross-check: create the two-pair state and braid the Z particle
// around the X particle by actually applying the loop string.
inline int oracle_braid_exponent(const CellComplex& c, int d, int k, int l,
                                 std::optional<BraidPlacement> placement = std::nullopt,
                                 const OracleLimits& lim = {}) {
    BraidPlacement p = placement ? *placement : canonical_braid_placement(c);
    StateVector psi0 = ground_state_psi0(c, d, lim);
    PauliString pair = multiply(string_for_cowalk(c, p.cowalk, mod_norm(l, d), d),
                                string_for_walk(c, p.walk, mod_norm(k, d), d));
    StateVector phi = apply(pair, psi0);
    PauliString loop = pauli_z(c, walk_chain(p.tau, d, mod_norm(k, d)));
    return phase_exponent_of(loop, phi);
}

// ---------------------------------------------------------------------------
// Charge detection: a boundary loop picks up the enclosed X charge.

struct ChargeReport {
    int d = 2;
    int k = 1, l = 1;
    int winding_start = 0;  // witness coefficient at the cowalk's start face
    int winding_end = 0;    // ... and at its end face
    int exponent = 0;       // k*l*(winding_end - winding_start)
};

inline ChargeReport charge_detect(const CellComplex& c, int d, const Walk& tau,
                                  const Cowalk& cowalk, int k, int l) {
    if (!tau.closed()) throw std::invalid_argument("charge_detect: loop must be closed");
    Chain tau_chain = walk_chain(tau, d, 1);
    auto witness = boundary_witness(c, tau_chain);
    if (!witness)
        throw std::invalid_argument("charge_detect: loop must be a boundary");
    ChargeReport rep;
    rep.d = d;
    rep.k = mod_norm(k, d);
    rep.l = mod_norm(l, d);
    rep.winding_start = witness->get(cowalk.start());
    rep.winding_end = witness->get(cowalk.end());
    // identical to the commutation phase of Z^k_tau past the X string, by
    // the boundary/coboundary adjunction
    rep.exponent = mod_norm(
        static_cast<long long>(rep.k) * rep.l * (rep.winding_end - rep.winding_start), d);
    int direct = commutation_phase(pauli_z(c, tau_chain.scaled(rep.k)),
                                   string_for_cowalk(c, cowalk, rep.l, d));
    if (direct != rep.exponent)
        throw std::logic_error("charge_detect: winding rule disagrees with commutation");
    return rep;
}

// Closed walk around a disc-like patch of faces. Traverses the patch boundary
// clockwise by default, so that detecting a unit X charge inside gives +1.
// The rim is computed over the integers, since coefficients mod 2 cannot
// encode a traversal direction.
inline Walk enclosing_walk(const CellComplex& c, int, const std::set<int>& patch,
                           bool clockwise = true) {
    std::map<int, int> rim;  // edge -> integer coefficient of the patch boundary
    for (int f : patch)
        for (auto [e, s] : c.faces[f].edges) {
            rim[e] += clockwise ? -s : s;
            if (rim[e] == 0) rim.erase(e);
        }
    if (rim.empty())
        throw std::invalid_argument("enclosing_walk: patch has empty boundary");
    std::map<int, std::pair<int, int>> next;  // vertex -> (edge, direction)
    for (auto [e, v] : rim) {
        if (v != 1 && v != -1)
            throw std::invalid_argument("enclosing_walk: patch boundary is not simple");
        int from = v > 0 ? c.edges[e].tail : c.edges[e].head;
        if (next.count(from))
            throw std::invalid_argument("enclosing_walk: patch boundary is not simple");
        next[from] = {e, v};
    }
    int start = next.begin()->first;
    std::vector<std::pair<int, int>> steps;
    int at = start;
    for (size_t guard = 0; guard <= next.size(); ++guard) {
        auto it = next.find(at);
        if (it == next.end())
            throw std::invalid_argument("enclosing_walk: patch boundary is not connected");
        steps.push_back(it->second);
        auto [e, dir] = it->second;
        at = dir > 0 ? c.edges[e].head : c.edges[e].tail;
        if (at == start) break;
    }
    Walk walk = make_walk(c, start, steps);
    if (!walk.closed() || walk.steps.size() != rim.size())
        throw std::invalid_argument("enclosing_walk: patch boundary is not a single cycle");
    return walk;
}

inline int oracle_charge_exponent(const CellComplex& c, int d, const Walk& tau,
                                  const Cowalk& cowalk, int k, int l,
                                  const OracleLimits& lim = {}) {
    StateVector psi0 = ground_state_psi0(c, d, lim);
    StateVector xi = apply(string_for_cowalk(c, cowalk, mod_norm(l, d), d), psi0);
    PauliString loop = pauli_z(c, walk_chain(tau, d, mod_norm(k, d)));
    return phase_exponent_of(loop, xi);
}

// ---------------------------------------------------------------------------
// Exchange statistics of composite Z^k X^l particles.
//
// Two identical composites are created next to two parked antiparticles, then
// swapped by a three-move rotation through an auxiliary site. The exchange
// phase is the scalar between the executed process and the same final string
// configuration written down directly; everything happens in the lower-left
// 2x2 block of an L x L torus.

struct ExchangeReport {
    int d = 2, k = 1, l = 1;
    int exponent = 0;             // symbolic exchange phase exponent
    bool matches_minus_kl = false;
    bool matches_minus_k_plus_l = false;
};

namespace detail {

struct ExchangeStrings {
    PauliString process;  // moves composed onto the creation strings
    PauliString direct;   // the same worldlines written as single strings
};

inline ExchangeStrings exchange_strings(const CellComplex& c, int d, int k, int l) {
    if (!c.torus)
        throw std::invalid_argument("exchange: requires a torus lattice complex");
    TorusGeometry g(c.torus->L);

    // creation: dyons at A = (v00,f00) and B = (v01,f01), antiparticles parked
    // at (v11,f11)
    Walk wA = make_walk(c, g.vertex(1, 1),
                        {{g.hedge(1, 0), -1}, {g.uedge(0, 0), -1}});
    Cowalk cA = make_cowalk(c, g.face(1, 1),
                            {{g.uedge(1, 1), 1}, {g.hedge(1, 0), -1}});
    Walk wB = make_walk(c, g.vertex(1, 1), {{g.uedge(0, 1), -1}});
    Cowalk cB = make_cowalk(c, g.face(1, 1), {{g.hedge(1, 1), -1}});

    // moves: A -> C, B -> A, C -> B with C = (v10,f10)
    Walk m1w = make_walk(c, g.vertex(0, 0), {{g.uedge(0, 0), 1}});
    Cowalk m1c = make_cowalk(c, g.face(0, 0), {{g.hedge(1, 0), 1}});
    Walk m2w = make_walk(c, g.vertex(0, 1), {{g.hedge(0, 0), -1}});
    Cowalk m2c = make_cowalk(c, g.face(0, 1), {{g.uedge(0, 1), 1}});
    Walk m3w = make_walk(c, g.vertex(1, 0), {{g.hedge(1, 0), 1}, {g.uedge(0, 1), -1}});
    Cowalk m3c = make_cowalk(c, g.face(1, 0), {{g.uedge(1, 1), -1}, {g.hedge(1, 1), -1}});

    auto dyon = [&](const Cowalk& cw, const Walk& w) {
        return multiply(string_for_cowalk(c, cw, l, d), string_for_walk(c, w, k, d));
    };

    PauliString sA = dyon(cA, wA), sB = dyon(cB, wB);
    PauliString move1 = dyon(m1c, m1w), move2 = dyon(m2c, m2w), move3 = dyon(m3c, m3w);

    ExchangeStrings out;
    out.process =
        multiply(move3, multiply(move2, multiply(move1, multiply(sB, sA))));

    // direct strings along the net worldlines: particle 1 park->A->C->B,
    // particle 2 park->B->A
    Chain z1 = walk_chain(wA, d, k) + walk_chain(m1w, d, k) + walk_chain(m3w, d, k);
    Cochain x1 = cowalk_cochain(cA, d, l) + cowalk_cochain(m1c, d, l) +
                 cowalk_cochain(m3c, d, l);
    Chain z2 = walk_chain(wB, d, k) + walk_chain(m2w, d, k);
    Cochain x2 = cowalk_cochain(cB, d, l) + cowalk_cochain(m2c, d, l);
    out.direct = multiply(pauli_xz(c, x2, z2), pauli_xz(c, x1, z1));
    return out;
}

} // namespace detail

inline ExchangeReport exchange_phase(const CellComplex& c, int d, int k, int l) {
    ExchangeReport rep;
    rep.d = d;
    rep.k = mod_norm(k, d);
    rep.l = mod_norm(l, d);
    auto strings = detail::exchange_strings(c, d, rep.k, rep.l);
    if (!(strings.process.x == strings.direct.x) ||
        !(strings.process.z == strings.direct.z))
        throw std::logic_error("exchange_phase: worldline bookkeeping broke");
    rep.exponent = mod_norm(strings.process.phase - strings.direct.phase, d);
    rep.matches_minus_kl =
        rep.exponent == mod_norm(-static_cast<long long>(rep.k) * rep.l, d);
    rep.matches_minus_k_plus_l =
        rep.exponent == mod_norm(-(static_cast<long long>(rep.k) + rep.l), d);
    return rep;
}

// Same process executed on actual states, one move at a time.
inline int oracle_exchange_exponent(const CellComplex& c, int d, int k, int l,
                                    const OracleLimits& lim = {}) {
    auto strings = detail::exchange_strings(c, d, mod_norm(k, d), mod_norm(l, d));
    StateVector psi0 = ground_state_psi0(c, d, lim);
    StateVector process_state = apply(strings.process, psi0);
    StateVector direct_state = apply(strings.direct, psi0);
    // process = w^q * direct
    for (int q = 0; q < d; ++q) {
        StateVector probe = direct_state;
        double angle = 2.0 * M_PI * q / d;
        for (auto& a : probe.amp) a *= Amplitude(std::cos(angle), std::sin(angle));
        if (distance(probe, process_state) < 1e-9) return q;
    }
    throw std::runtime_error("oracle_exchange_exponent: states are not parallel");
}

} // namespace kitlab
