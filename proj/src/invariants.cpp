#include "realk3/invariants.hpp"

#include <cstdlib>

namespace realk3 {

InvariantTable compute_table(const std::vector<RealTopology>& topologies, std::size_t g_max) {
    InvariantTable table;
    table.g_max = g_max;
    std::vector<TruncatedSeries> columns;
    for (const auto& t : topologies) {
        t.require_checked();
        table.euler_reals.push_back(t.euler_real());
        columns.push_back(welschinger_series(t, g_max));
    }
    const auto complex = yau_zaslow_series(g_max);
    for (std::size_t g = 0; g <= g_max; ++g) {
        InvariantRow row;
        row.g = g;
        for (const auto& col : columns) row.w.push_back(col.exact_coeffs()[g]);
        row.c = complex.exact_coeffs()[g];
        table.rows.push_back(std::move(row));
    }
    return table;
}

MonotonicityReport verify_sign_monotonicity(const RealTopology& t, const TruncatedSeries& w) {
    t.require_checked();
    if (!w.ring().is_exact()) throw RingMismatch("monotonicity needs exact coefficients");
    const int er = t.euler_real();
    const auto& c = w.exact_coeffs();
    MonotonicityReport rep;
    rep.euler_real = er;
    rep.g_max = w.order();

    auto fail = [&rep](std::size_t g, std::string why) {
        rep.passed = false;
        rep.first_violation = g;
        rep.reason = std::move(why);
        return rep;
    };

    if (w.order() < 1) return rep;

    if (er < 0) {
        if (c[1] != -er) return fail(1, "w_1 = " + c[1].get_str() + " differs from |e_R|");
        for (std::size_t g = 1; g <= w.order(); ++g) {
            if (sgn(c[g]) <= 0) return fail(g, "w_g not positive");
            if (g > 1 && c[g] <= c[g - 1]) return fail(g, "w_g not above w_{g-1}");
        }
    } else if (er == 0) {
        for (std::size_t g = 1; g <= w.order(); ++g) {
            if (g % 2 == 1) {
                if (c[g] != 0) return fail(g, "odd-genus w_g nonzero");
                continue;
            }
            if (g == 2 && c[g] != 12) return fail(g, "w_2 differs from 12");
            if (sgn(c[g]) <= 0) return fail(g, "even-genus w_g not positive");
            if (g > 2 && c[g] <= c[g - 2]) return fail(g, "w_g not above w_{g-2}");
        }
    } else {
        if (c[1] != -er) return fail(1, "w_1 = " + c[1].get_str() + " differs from -e_R");
        Integer prev = 0;
        for (std::size_t g = 1; g <= w.order(); ++g) {
            Integer signed_value = (g % 2 == 0) ? Integer(c[g]) : Integer(-c[g]);
            if (sgn(signed_value) <= 0) return fail(g, "(-1)^g w_g not positive");
            if (g > 1 && signed_value <= prev) return fail(g, "|w_g| not above |w_{g-1}|");
            prev = signed_value;
        }
    }
    return rep;
}

MonotonicityReport verify_sign_monotonicity(const RealTopology& t, std::size_t g_max) {
    t.require_checked();
    if (g_max < 1) throw std::invalid_argument("monotonicity needs g_max >= 1");
    return verify_sign_monotonicity(t, welschinger_series(t, g_max));
}

BoundPair bounds_for(const RealTopology& t, std::size_t g) {
    t.require_checked();
    const auto w = welschinger_series(t, g);
    const auto c = yau_zaslow_series(g);
    return {g, abs(w.exact_coeffs()[g]), c.exact_coeffs()[g]};
}

Integer refined_count_bound(const Integer& known_negative, const Integer& welschinger) {
    if (sgn(known_negative) < 0) throw std::invalid_argument("number of known curves must be non-negative");
    if (sgn(known_negative + welschinger) < 0)
        throw std::invalid_argument("inconsistent inputs: k + w = " + Integer(known_negative + welschinger).get_str() +
                                    " would make n_+ negative");
    return 2 * known_negative + welschinger;
}

Integer tritangent_bound(long contractible_components) {
    if (contractible_components < 0) throw std::invalid_argument("component count must be non-negative");
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(contractible_components), 3);
    return 8 * binom;
}

DominanceReport check_dominance(std::size_t g_max) {
    DominanceReport rep;
    rep.g_max = g_max;
    const auto top = welschinger_series(RealTopology(kMinEulerReal), g_max);
    for (const auto& t : RealTopology::all()) {
        if (t.euler_real() == kMinEulerReal) continue;
        const auto w = welschinger_series(t, g_max);
        for (std::size_t g = 1; g <= g_max; ++g) {
            if (top.exact_coeffs()[g] < abs(w.exact_coeffs()[g])) {
                rep.holds = false;
                rep.counterexamples.emplace_back(t.euler_real(), g);
            }
        }
    }
    return rep;
}

}  // namespace realk3
