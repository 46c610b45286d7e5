#include "realk3/eta_forms.hpp"

#include <string>

namespace realk3 {

RealTopology::RealTopology(int euler_real, bool checked) : euler_real_(euler_real), checked_(checked) {
    if (euler_real % 2 != 0)
        throw InvalidTopology("e_R must be even, got " + std::to_string(euler_real));
    if (checked && (euler_real < kMinEulerReal || euler_real > kMaxEulerReal))
        throw InvalidTopology("e_R must lie in [-18, 20], got " + std::to_string(euler_real));
}

RealTopology::RealTopology(int euler_real) : RealTopology(euler_real, true) {}

RealTopology RealTopology::unchecked(int euler_real) { return RealTopology(euler_real, false); }

void RealTopology::require_checked() const {
    if (!checked_)
        throw InvalidTopology("e_R = " + std::to_string(euler_real_) +
                              " was built unchecked; theorem checks need e_R in [-18, 20]");
}

std::vector<RealTopology> RealTopology::all() {
    std::vector<RealTopology> out;
    for (int e = kMinEulerReal; e <= kMaxEulerReal; e += 2) out.emplace_back(e);
    return out;
}

TruncatedSeries yau_zaslow_series(std::size_t order, const CoefficientRing& ring) {
    return ts_factor_product(1, -1, -kEulerComplex, order, ring);
}

TruncatedSeries welschinger_series(const RealTopology& t, std::size_t order, const CoefficientRing& ring) {
    const int er = t.euler_real();
    auto s = ts_factor_product(1, +1, -er, order, ring);
    return ts_times_factor_product(std::move(s), 2, -1, -(kEulerComplex - er) / 2);
}

TruncatedSeries gauss_theta_series(std::size_t order, const CoefficientRing& ring) {
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) c[n * n] = (n % 2 == 0) ? 2 : -2;
    return TruncatedSeries::from_integers(std::span<const Integer>(c), ring);
}

TruncatedSeries inv_sqrt_delta_series(std::size_t order, const CoefficientRing& ring) {
    return ts_factor_product(2, -1, -12, order, ring);
}

TruncatedSeries welschinger_via_eta_quotient(const RealTopology& t, std::size_t order, const CoefficientRing& ring) {
    auto theta_power = ts_pow(gauss_theta_series(order, ring), t.euler_real() / 2);
    return ts_mul(inv_sqrt_delta_series(order, ring), theta_power);
}

Integer sigma3(long n) {
    if (n < 1) throw std::invalid_argument("sigma3 needs n >= 1, got " + std::to_string(n));
    Integer sum = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer dd = d;
        sum += dd * dd * dd;
        long e = n / d;
        if (e != d) {
            Integer ee = e;
            sum += ee * ee * ee;
        }
    }
    return sum;
}

TruncatedSeries eisenstein_e4_series(std::size_t order, const CoefficientRing& ring) {
    // Divisor sieve; cheaper than calling sigma3 per index.
    std::vector<Integer> c(order + 1);
    for (std::size_t d = 1; d <= order; ++d) {
        Integer cube = Integer(static_cast<unsigned long>(d));
        cube = cube * cube * cube;
        for (std::size_t k = d; k <= order; k += d) c[k] += cube;
    }
    for (std::size_t k = 1; k <= order; ++k) c[k] *= 240;
    c[0] = 1;
    return TruncatedSeries::from_integers(std::span<const Integer>(c), ring);
}

TruncatedSeries klein_qj_series(std::size_t order, const CoefficientRing& ring) {
    auto e4 = eisenstein_e4_series(order, ring);
    auto e4_cubed = ts_mul(ts_mul(e4, e4), e4);
    return ts_times_factor_product(std::move(e4_cubed), 1, -1, -kEulerComplex);
}

Integer j_coefficient(const TruncatedSeries& qj, std::size_t n) { return qj.coeff(n + 1); }

}  // namespace realk3
