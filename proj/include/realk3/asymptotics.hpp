#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "realk3/eta_forms.hpp"

namespace realk3 {

/// Number of partitions of n (pentagonal-number recurrence).
Integer partition_P(std::size_t n);
/// Number of partitions of n into distinct parts.
Integer partition_Q(std::size_t n);

/// P(0..n) in one pass.
std::vector<Integer> partition_P_table(std::size_t n);
/// Q(0..n); Q(n) = sum_k (-1)^k P(n - k(3k-1)) over all integers k.
std::vector<Integer> partition_Q_table(std::size_t n);

enum class PartitionKind { P, Q };

/// Leading Hardy-Ramanujan / Uspensky term, no correction terms:
///   P(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt 3)
///   Q(n) ~ exp(pi sqrt(n/3)) / (4 3^(1/4) n^(3/4))
double hr_estimate(PartitionKind kind, std::size_t n);

/// If log a_n ~ (a n)^alpha and log b_n ~ (b n)^alpha, the product series
/// has log p_n ~ (c n)^alpha with c = (a^t + b^t)^(1/t), t = alpha / (1 - alpha).
double convolution_exponent(double a, double b, double alpha);

/// log of |x| for a nonzero big integer, from its bit length and a normalized
/// double mantissa. Relative accuracy is close to double precision.
double log_abs(const Integer& x);

/// Growth model of log|w_n| (or log c_n for the complex count).
/// rho is the ratio of the real growth constant to the complex one.
struct AsymptoteModel {
    std::optional<int> euler_real;  // empty: complex count
    double rho = 1.0;

    static AsymptoteModel complex();
    static AsymptoteModel for_topology(const RealTopology& t);

    /// Predicted log count at index n. For e_R = 0 only even n are defined.
    double predict(std::size_t n) const;
};

/// rho = 1/2 for e_R >= 0 and sqrt((24 - 3 e_R) / 96) for e_R < 0.
double growth_ratio(const RealTopology& t);

/// Closed-form predictor; empty topology means the complex count:
///   complex  4 pi sqrt(n)
///   e_R < 0  pi sqrt(4 (24 - 3 e_R) / 24 * n)
///   e_R > 0  2 pi sqrt(n)
///   e_R = 0  2 pi sqrt(2 (n / 2)), n even
double predicted_log_count(const std::optional<RealTopology>& t, std::size_t n);

struct ConvergenceRow {
    std::size_t n = 0;
    bool skipped = false;
    std::string reason;
    double log_count = 0.0;
    double prediction = 0.0;
    double ratio = 0.0;
};

/// Exact counts are expanded once to max(points); rows where the count
/// vanishes are skipped with a reason.
std::vector<ConvergenceRow> convergence_report(const std::optional<RealTopology>& t,
                                               const std::vector<std::size_t>& points);

}  // namespace realk3
