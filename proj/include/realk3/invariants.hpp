#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "realk3/eta_forms.hpp"

namespace realk3 {

/// One row per genus g: the signed real counts w_g (one per topology, in the
/// table's topology order) and the complex count c_g.
struct InvariantRow {
    std::size_t g = 0;
    std::vector<Integer> w;
    Integer c;

    friend bool operator==(const InvariantRow&, const InvariantRow&) = default;
};

struct InvariantTable {
    std::size_t g_max = 0;
    std::vector<int> euler_reals;
    std::vector<InvariantRow> rows;

    friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

InvariantTable compute_table(const std::vector<RealTopology>& topologies, std::size_t g_max);

/// Outcome of a sequence check: passes, or names the first offending genus.
struct MonotonicityReport {
    int euler_real = 0;
    std::size_t g_max = 0;
    bool passed = true;
    std::optional<std::size_t> first_violation;
    std::string reason;
};

/// Sign and strict-growth pattern of w_1, w_2, ... for the topology:
///   e_R < 0:  |e_R| = w_1 < w_2 < ...
///   e_R = 0:  w_odd = 0 and 12 = w_2 < w_4 < ...
///   e_R > 0:  (-1)^g w_g > 0 and e_R = -w_1 < w_2 < -w_3 < ...
MonotonicityReport verify_sign_monotonicity(const RealTopology& t, std::size_t g_max);
/// Same check against a precomputed exact series.
MonotonicityReport verify_sign_monotonicity(const RealTopology& t, const TruncatedSeries& w);

/// Bracketing pair |w_g| <= r_g <= c_g for the number r_g of real rational curves.
struct BoundPair {
    std::size_t g = 0;
    Integer lower;
    Integer upper;
};

BoundPair bounds_for(const RealTopology& t, std::size_t g);

/// Lower bound on the number of real rational curves when `known_negative`
/// curves of weight -1 are known and the signed count is `welschinger`:
/// n_- >= k and n_+ = n_- + w give n_+ + n_- >= 2k + w.
Integer refined_count_bound(const Integer& known_negative, const Integer& welschinger);

/// 8 * C(m, 3): eight tritangent planes per triple of contractible spheres.
Integer tritangent_bound(long contractible_components);

/// Empirical observation (not a theorem): w_g(e_R = -18) >= |w_g(e_R)| for
/// every other topology and 1 <= g <= g_max.
struct DominanceReport {
    std::size_t g_max = 0;
    bool holds = true;
    std::vector<std::pair<int, std::size_t>> counterexamples;  // (e_R, g), sorted by e_R then g
    static constexpr const char* level = "conjecture";
};

DominanceReport check_dominance(std::size_t g_max);

}  // namespace realk3
