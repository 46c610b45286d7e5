#include "realk3/arith_props.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace realk3 {

namespace {

// lcm of every clause modulus; one series in this ring serves all clauses.
constexpr std::uint64_t kSweepModulus = 144;

bool divisible(int e, int m) { return e % m == 0; }

std::vector<std::uint64_t> residues_mod(const TruncatedSeries& s, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    if (s.ring().is_exact()) {
        for (const auto& x : s.exact_coeffs()) out.push_back(mpz_fdiv_ui(x.get_mpz_t(), m));
        return out;
    }
    if (s.ring().modulus() % m != 0)
        throw RingMismatch("cannot read " + s.ring().name() + " modulo " + std::to_string(m));
    for (auto x : s.residue_coeffs()) out.push_back(x % m);
    return out;
}

CheckReport compare_series(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.range = std::min(lhs.order(), rhs.order());
    for (std::size_t k = 0; k <= rep.range; ++k)
        if (lhs.coeff(k) != rhs.coeff(k)) rep.failing.push_back(k);
    rep.passed = rep.failing.empty();
    return rep;
}

TruncatedSeries parity_target(std::size_t order) {
    return ts_factor_product(8, -1, -3, order, CoefficientRing::residues(2));
}

}  // namespace

const std::vector<CongruenceClause>& all_clauses() {
    static const std::vector<CongruenceClause> clauses = {
        {ClauseId::mod2, "mod2", 2, true, [](int) { return true; }, [](std::size_t g) { return g % 8 != 0; }},
        {ClauseId::mod4, "mod4", 4, true, [](int e) { return divisible(e, 4); },
         [](std::size_t g) { return g % 4 != 0; }},
        {ClauseId::mod8, "mod8", 8, true, [](int e) { return divisible(e, 8); },
         [](std::size_t g) { return g % 2 != 0; }},
        {ClauseId::mod3, "mod3", 3, false, [](int e) { return divisible(e, 3); },
         [](std::size_t g) { return g % 3 != 0; }},
        {ClauseId::mod9, "mod9", 9, false, [](int e) { return divisible(e, 9); },
         [](std::size_t g) { return g % 6 == 4; }},
        {ClauseId::mod16, "mod16", 16, false, [](int e) { return divisible(e, 16); },
         [](std::size_t g) { return g % 2 == 1 && g > 1; }},
    };
    return clauses;
}

const CongruenceClause& clause(ClauseId id) {
    for (const auto& c : all_clauses())
        if (c.id == id) return c;
    throw std::logic_error("unknown clause id");
}

const CongruenceClause& clause_by_label(std::string_view label) {
    for (const auto& c : all_clauses())
        if (c.label == label) return c;
    throw std::invalid_argument("unknown clause '" + std::string(label) + "'");
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::not_applicable: return "not-applicable";
        case Status::fail: return "fail";
    }
    return "?";
}

Status status_from_string(std::string_view s) {
    if (s == "pass") return Status::pass;
    if (s == "not-applicable") return Status::not_applicable;
    if (s == "fail") return Status::fail;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

std::string_view to_string(Subclaim s) { return s == Subclaim::congruence ? "congruence" : "vanishing"; }

Subclaim subclaim_from_string(std::string_view s) {
    if (s == "congruence") return Subclaim::congruence;
    if (s == "vanishing") return Subclaim::vanishing;
    throw std::invalid_argument("unknown subclaim '" + std::string(s) + "'");
}

CongruenceReport check_clause(const CongruenceClause& c, int euler_real, const TruncatedSeries& w,
                              const TruncatedSeries& cg) {
    CongruenceReport rep;
    rep.clause = c.id;
    rep.modulus = c.modulus;
    rep.euler_real = euler_real;
    rep.g_max = std::min(w.order(), cg.order());
    if (!c.applies(euler_real)) {
        rep.status = Status::not_applicable;
        return rep;
    }

    const auto wm = residues_mod(w, c.modulus);
    const auto cm = residues_mod(cg, c.modulus);
    rep.congruence.asserted = c.asserts_congruence;
    rep.vanishing.asserted = true;
    for (std::size_t g = 1; g <= rep.g_max; ++g) {
        if (c.asserts_congruence && wm[g] != cm[g]) rep.violations.push_back({g, wm[g], cm[g], Subclaim::congruence});
        if (c.vanishing_filter(g) && (wm[g] != 0 || cm[g] != 0))
            rep.violations.push_back({g, wm[g], cm[g], Subclaim::vanishing});
    }
    auto sub_status = [&](Subclaim kind, bool asserted) {
        if (!asserted) return Status::not_applicable;
        bool bad = std::any_of(rep.violations.begin(), rep.violations.end(),
                               [kind](const Violation& v) { return v.subclaim == kind; });
        return bad ? Status::fail : Status::pass;
    };
    rep.congruence.status = sub_status(Subclaim::congruence, rep.congruence.asserted);
    rep.vanishing.status = sub_status(Subclaim::vanishing, true);
    rep.status = rep.violations.empty() ? Status::pass : Status::fail;
    return rep;
}

CongruenceReport check_clause(const CongruenceClause& c, const RealTopology& t, std::size_t g_max,
                              Arithmetic mode) {
    t.require_checked();
    if (g_max < 1) throw std::invalid_argument("congruence checks need g_max >= 1");
    if (!c.applies(t.euler_real())) {
        CongruenceReport rep;
        rep.clause = c.id;
        rep.modulus = c.modulus;
        rep.euler_real = t.euler_real();
        rep.g_max = g_max;
        rep.status = Status::not_applicable;
        return rep;
    }
    const auto ring = mode == Arithmetic::exact ? CoefficientRing::exact() : CoefficientRing::residues(c.modulus);
    return check_clause(c, t.euler_real(), welschinger_series(t, g_max, ring), yau_zaslow_series(g_max, ring));
}

std::vector<CongruenceReport> run_congruence_suite(const std::vector<RealTopology>& topologies, std::size_t g_max,
                                                   Arithmetic mode) {
    if (g_max < 1) throw std::invalid_argument("congruence checks need g_max >= 1");
    const auto ring =
        mode == Arithmetic::exact ? CoefficientRing::exact() : CoefficientRing::residues(kSweepModulus);
    const auto cg = yau_zaslow_series(g_max, ring);

    auto sorted = topologies;
    std::sort(sorted.begin(), sorted.end(),
              [](const RealTopology& a, const RealTopology& b) { return a.euler_real() < b.euler_real(); });

    std::vector<CongruenceReport> out;
    for (const auto& t : sorted) {
        t.require_checked();
        const auto w = welschinger_series(t, g_max, ring);
        for (const auto& c : all_clauses()) out.push_back(check_clause(c, t.euler_real(), w, cg));
    }
    return out;
}

std::vector<int> parity_sequence(std::size_t k) {
    const auto s = ts_factor_product(1, -1, -3, k, CoefficientRing::residues(2));
    std::vector<int> bits;
    bits.reserve(k + 1);
    for (auto x : s.residue_coeffs()) bits.push_back(static_cast<int>(x));
    return bits;
}

CheckReport check_lehner(std::size_t k_max) {
    if (k_max < 1) throw std::invalid_argument("check_lehner needs k_max >= 1");
    CheckReport rep;
    rep.name = "lehner";
    rep.range = k_max;
    // a(n) sits at q^(n+1).
    const auto qj2 = klein_qj_series(2 * k_max + 1, CoefficientRing::residues(2048));
    const auto qj3 = klein_qj_series(3 * k_max + 1, CoefficientRing::residues(243));
    std::vector<std::size_t> bad2;
    std::vector<std::size_t> bad3;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (j_coefficient(qj2, 2 * k) != 0) bad2.push_back(2 * k);
        if (j_coefficient(qj3, 3 * k) != 0) bad3.push_back(3 * k);
    }
    rep.failing = bad2;
    rep.failing.insert(rep.failing.end(), bad3.begin(), bad3.end());
    rep.passed = rep.failing.empty();
    rep.detail = "a(2k) mod 2^11: " + std::to_string(bad2.size()) + " violations; a(3k) mod 3^5: " +
                 std::to_string(bad3.size()) + " violations";
    return rep;
}

CheckReport check_j_congruence(std::size_t order, std::uint64_t m) {
    if (m != 16 && m != 9) throw std::invalid_argument("j-route congruence is stated mod 16 or mod 9, got " + std::to_string(m));
    const auto ring = CoefficientRing::residues(m);
    auto rep = compare_series("j-congruence-mod-" + std::to_string(m), yau_zaslow_series(order, ring),
                              klein_qj_series(order, ring));
    return rep;
}

CheckReport check_3dissection(long k, std::size_t order) {
    const auto s = ts_factor_product(1, -1, 3 * k, order, CoefficientRing::residues(9));
    CheckReport rep;
    rep.name = "3-dissection-k=" + std::to_string(k);
    rep.range = order;
    const auto& c = s.residue_coeffs();
    for (std::size_t e = 0; e <= order; ++e) {
        if (e % 3 == 1 && c[e] % 3 != 0) rep.failing.push_back(e);
        if (e % 3 == 2 && c[e] != 0) rep.failing.push_back(e);
    }
    rep.passed = rep.failing.empty();
    return rep;
}

CheckReport check_theta_ninth_power(std::size_t order) {
    const auto ring = CoefficientRing::residues(9);
    const auto s = ts_pow(gauss_theta_series(order, ring), 9);
    CheckReport rep;
    rep.name = "theta-ninth-power";
    rep.range = order;
    for (std::size_t e = 0; e <= order; ++e)
        if (e % 3 != 0 && !s.is_zero_at(e)) rep.failing.push_back(e);
    rep.passed = rep.failing.empty();
    return rep;
}

CheckReport check_cross_form(const RealTopology& t, std::size_t order) {
    t.require_checked();
    return compare_series("cross-form-e_R=" + std::to_string(t.euler_real()), welschinger_series(t, order),
                          welschinger_via_eta_quotient(t, order));
}

CheckReport check_gauss_identity(std::size_t order) {
    const auto ring = CoefficientRing::exact();
    auto lhs = ts_times_factor_product(ts_factor_product(1, -1, 2, order, ring), 2, -1, -1);
    return compare_series("gauss-identity", lhs, gauss_theta_series(order, ring));
}

CheckReport check_mod2_collapse(const RealTopology& t, std::size_t order) {
    t.require_checked();
    return compare_series("mod2-collapse-e_R=" + std::to_string(t.euler_real()),
                          welschinger_series(t, order, CoefficientRing::residues(2)), parity_target(order));
}

CheckReport check_mod2_collapse_complex(std::size_t order) {
    return compare_series("mod2-collapse-complex", yau_zaslow_series(order, CoefficientRing::residues(2)),
                          parity_target(order));
}

CheckReport check_parity_self_similarity(std::size_t order) {
    const auto ring = CoefficientRing::residues(2);
    const auto bits = parity_sequence(order / 8);
    std::vector<Integer> at8(order + 1), at16(order + 1);
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (8 * n <= order) at8[8 * n] = bits[n];
        if (16 * n <= order) at16[16 * n] = bits[n];
    }
    const auto lhs = TruncatedSeries::from_integers(std::span<const Integer>(at8), ring);
    const auto rhs_series = TruncatedSeries::from_integers(std::span<const Integer>(at16), ring);
    const auto jacobi = ts_times_factor_product(ts_factor_product(16, -1, 2, order, ring), 8, -1, -1);
    return compare_series("parity-self-similarity", lhs, ts_mul(jacobi, rhs_series));
}

ParityGapReport jacobi_parity_gaps(std::size_t order) {
    const auto ring = CoefficientRing::residues(2);
    const auto jacobi = ts_times_factor_product(ts_factor_product(16, -1, 2, order, ring), 8, -1, -1);
    ParityGapReport rep;
    std::vector<std::uint64_t> triangular(order + 1, 0);
    for (std::size_t n = 0; 4 * n * (n + 1) <= order; ++n) triangular[4 * n * (n + 1)] = 1;
    const auto& c = jacobi.residue_coeffs();
    for (std::size_t e = 0; e <= order; ++e) {
        if (c[e] != triangular[e]) rep.matches_triangular_form = false;
        if (c[e] == 1) {
            if (!rep.odd_exponents.empty()) rep.gaps.push_back(e - rep.odd_exponents.back());
            rep.odd_exponents.push_back(e);
        }
    }
    return rep;
}

}  // namespace realk3
