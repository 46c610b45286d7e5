#include "realk3/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace realk3 {

using std::numbers::pi;

std::vector<Integer> partition_P_table(std::size_t n) {
    std::vector<Integer> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Integer acc = 0;
        // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, sign (-1)^(k+1).
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[m - g1];
                if (g2 <= m) acc += p[m - g2];
            } else {
                acc -= p[m - g1];
                if (g2 <= m) acc -= p[m - g2];
            }
        }
        p[m] = std::move(acc);
    }
    return p;
}

std::vector<Integer> partition_Q_table(std::size_t n) {
    const auto p = partition_P_table(n);
    std::vector<Integer> q(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        Integer acc = p[m];
        for (std::size_t k = 1;; ++k) {
            const std::size_t e1 = k * (3 * k - 1);
            if (e1 > m) break;
            const std::size_t e2 = k * (3 * k + 1);
            const int sign = k % 2 == 1 ? -1 : 1;
            if (sign > 0) {
                acc += p[m - e1];
                if (e2 <= m) acc += p[m - e2];
            } else {
                acc -= p[m - e1];
                if (e2 <= m) acc -= p[m - e2];
            }
        }
        q[m] = std::move(acc);
    }
    return q;
}

Integer partition_P(std::size_t n) { return partition_P_table(n)[n]; }

Integer partition_Q(std::size_t n) { return partition_Q_table(n)[n]; }

double hr_estimate(PartitionKind kind, std::size_t n) {
    if (n < 1) throw std::invalid_argument("hr_estimate needs n >= 1");
    const double x = static_cast<double>(n);
    if (kind == PartitionKind::P) return std::exp(pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
    return std::exp(pi * std::sqrt(x / 3.0)) / (4.0 * std::pow(3.0, 0.25) * std::pow(x, 0.75));
}

double convolution_exponent(double a, double b, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("growth constants must be positive");
    const double t = alpha / (1.0 - alpha);
    return std::pow(std::pow(a, t) + std::pow(b, t), 1.0 / t);
}

double log_abs(const Integer& x) {
    if (sgn(x) == 0) throw std::domain_error("log of zero");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());  // |mantissa| in [0.5, 1)
    return std::log(std::fabs(mantissa)) + static_cast<double>(exp2) * std::numbers::ln2;
}

double growth_ratio(const RealTopology& t) {
    const int er = t.euler_real();
    if (er >= 0) return 0.5;
    return std::sqrt(static_cast<double>(kEulerComplex - 3 * er) / (4.0 * kEulerComplex));
}

AsymptoteModel AsymptoteModel::complex() { return {}; }

AsymptoteModel AsymptoteModel::for_topology(const RealTopology& t) { return {t.euler_real(), growth_ratio(t)}; }

double AsymptoteModel::predict(std::size_t n) const {
    if (euler_real) return predicted_log_count(RealTopology::unchecked(*euler_real), n);
    return predicted_log_count(std::nullopt, n);
}

double predicted_log_count(const std::optional<RealTopology>& t, std::size_t n) {
    if (n < 1) throw std::invalid_argument("predictions need n >= 1");
    const double x = static_cast<double>(n);
    if (!t) return 4.0 * pi * std::sqrt(x);
    const int er = t->euler_real();
    if (er < 0) return pi * std::sqrt(4.0 * (kEulerComplex - 3.0 * er) / kEulerComplex * x);
    if (er > 0) return 2.0 * pi * std::sqrt(x);
    if (n % 2 != 0) throw std::invalid_argument("for e_R = 0 only even indices have a prediction");
    return 2.0 * pi * std::sqrt(2.0 * (x / 2.0));
}

std::vector<ConvergenceRow> convergence_report(const std::optional<RealTopology>& t,
                                               const std::vector<std::size_t>& points) {
    if (t) t->require_checked();
    if (points.empty()) return {};
    if (std::any_of(points.begin(), points.end(), [](std::size_t n) { return n < 1; }))
        throw std::invalid_argument("report points must be >= 1");
    const std::size_t top = *std::max_element(points.begin(), points.end());
    const auto series = t ? welschinger_series(*t, top) : yau_zaslow_series(top);

    std::vector<ConvergenceRow> rows;
    for (std::size_t n : points) {
        ConvergenceRow row;
        row.n = n;
        const auto& value = series.exact_coeffs()[n];
        if (sgn(value) == 0) {
            row.skipped = true;
            row.reason = "w_n = 0";
        } else {
            row.log_count = log_abs(value);
            row.prediction = predicted_log_count(t, n);
            row.ratio = row.log_count / row.prediction;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace realk3
