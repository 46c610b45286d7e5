#pragma once

// q-expansions of the generating functions for complex and real rational
// curve counts on K3 surfaces, plus the classical series they are built from.
// All eta-type prefactors q^(1/24) are arranged to cancel, so every series
// here has integer exponents.

#include <cstddef>
#include <vector>

#include "realk3/series.hpp"

namespace realk3 {

/// Euler characteristic of the complex surface.
inline constexpr int kEulerComplex = 24;
inline constexpr int kMinEulerReal = -18;
inline constexpr int kMaxEulerReal = 20;

class InvalidTopology : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Euler characteristic e_R of the real locus. Always even; restricted to
/// [-18, 20] unless built with `unchecked`, which marks the value as
/// exploratory. Theorem checks refuse unchecked topologies.
class RealTopology {
public:
    explicit RealTopology(int euler_real);
    static RealTopology unchecked(int euler_real);

    int euler_real() const { return euler_real_; }
    static constexpr int euler_complex() { return kEulerComplex; }
    bool is_checked() const { return checked_; }

    /// Throws InvalidTopology for an unchecked topology.
    void require_checked() const;

    /// Every even e_R in [-18, 20], ascending.
    static std::vector<RealTopology> all();

    friend bool operator==(const RealTopology&, const RealTopology&) = default;

private:
    RealTopology(int euler_real, bool checked);

    int euler_real_;
    bool checked_;
};

/// prod (1 - q^s)^(-24): coefficient of q^g is c_g.
TruncatedSeries yau_zaslow_series(std::size_t order, const CoefficientRing& ring = CoefficientRing::exact());

/// prod (1 + q^r)^(-e_R) * prod (1 - q^(2s))^(-(24 - e_R)/2): coefficient of q^g is w_g.
TruncatedSeries welschinger_series(const RealTopology& t, std::size_t order,
                                   const CoefficientRing& ring = CoefficientRing::exact());

/// 1 + 2 sum_{n>=1} (-1)^n q^(n^2), i.e. eta(z)^2 / eta(2z).
TruncatedSeries gauss_theta_series(std::size_t order, const CoefficientRing& ring = CoefficientRing::exact());

/// q / sqrt(Delta(2z)) = prod (1 - q^(2n))^(-12).
TruncatedSeries inv_sqrt_delta_series(std::size_t order, const CoefficientRing& ring = CoefficientRing::exact());

/// The real generating function rebuilt as inv_sqrt_delta * theta^(e_R/2).
TruncatedSeries welschinger_via_eta_quotient(const RealTopology& t, std::size_t order,
                                             const CoefficientRing& ring = CoefficientRing::exact());

/// Sum of cubes of the divisors of n (n >= 1).
Integer sigma3(long n);

/// E4 = 1 + 240 sum sigma3(n) q^n.
TruncatedSeries eisenstein_e4_series(std::size_t order, const CoefficientRing& ring = CoefficientRing::exact());

/// q * j(q) = E4^3 * prod (1 - q^n)^(-24). Constant term 1; the coefficient
/// of q^(n+1) is the j-coefficient a(n).
TruncatedSeries klein_qj_series(std::size_t order, const CoefficientRing& ring = CoefficientRing::exact());

/// a(n) read from a q*j(q) expansion, with the +1 index shift applied.
Integer j_coefficient(const TruncatedSeries& qj, std::size_t n);

}  // namespace realk3
