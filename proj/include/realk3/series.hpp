#pragma once

// Truncated formal power series over Z or Z/mZ.
//
// Truncation contract: every series carries an explicit order N and stores
// the coefficients of q^0..q^N. Binary operations truncate to the smaller of
// the two orders instead of rejecting mismatched operands.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace realk3 {

using Integer = mpz_class;

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Either the exact integers or the residues modulo some m >= 2.
class CoefficientRing {
public:
    static CoefficientRing exact() { return CoefficientRing{}; }
    static CoefficientRing residues(std::uint64_t modulus);

    bool is_exact() const { return modulus_ == 0; }
    /// 0 for the exact ring.
    std::uint64_t modulus() const { return modulus_; }
    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing() = default;
    explicit CoefficientRing(std::uint64_t m) : modulus_(m) {}

    std::uint64_t modulus_ = 0;
};

/// Immutable truncated series. Residue coefficients are kept in [0, m).
class TruncatedSeries {
public:
    using ExactCoeffs = std::vector<Integer>;
    using ResidueCoeffs = std::vector<std::uint64_t>;

    /// The constant series 1 of the given order.
    static TruncatedSeries one(std::size_t order, const CoefficientRing& ring);
    static TruncatedSeries zero(std::size_t order, const CoefficientRing& ring);

    /// Builds a series from integer coefficients, reducing them into the ring.
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    static TruncatedSeries from_integers(std::span<const Integer> coeffs, const CoefficientRing& ring);
    static TruncatedSeries from_integers(std::initializer_list<long> coeffs,
                                         const CoefficientRing& ring = CoefficientRing::exact());

    TruncatedSeries(CoefficientRing ring, ExactCoeffs coeffs);
    TruncatedSeries(CoefficientRing ring, ResidueCoeffs coeffs);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t order() const { return size() - 1; }
    std::size_t size() const;

    /// Coefficient of q^k as an integer (the residue representative for
    /// residue rings). Throws std::out_of_range when k > order().
    Integer coeff(std::size_t k) const;
    bool is_zero_at(std::size_t k) const;

    /// Raw storage; precondition: ring().is_exact() (resp. not).
    const ExactCoeffs& exact_coeffs() const { return std::get<ExactCoeffs>(coeffs_); }
    const ResidueCoeffs& residue_coeffs() const { return std::get<ResidueCoeffs>(coeffs_); }

    std::vector<Integer> to_integers() const;

    /// Same ring and order and identical coefficients.
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    CoefficientRing ring_;
    std::variant<ExactCoeffs, ResidueCoeffs> coeffs_;
};

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_inverse(const TruncatedSeries& a);
TruncatedSeries ts_pow(const TruncatedSeries& a, long k);

/// prod_{s>=1} (1 + sign * q^(step*s))^exponent, truncated at q^order.
TruncatedSeries ts_factor_product(std::size_t step, int sign, long exponent, std::size_t order,
                                  const CoefficientRing& ring);

/// Multiplies `a` by the same product as ts_factor_product, without
/// materializing it. Used to chain several eta-type products cheaply.
TruncatedSeries ts_times_factor_product(TruncatedSeries a, std::size_t step, int sign, long exponent);

/// Reduces an exact series into Z/mZ.
TruncatedSeries ts_reduce_mod(const TruncatedSeries& a, std::uint64_t m);

/// Coefficients a_r, a_{r+j}, a_{r+2j}, ... up to the series order.
std::vector<Integer> ts_dissect(const TruncatedSeries& a, std::size_t j, std::size_t r);

/// Substitutes q -> q^k, keeping the order of `a` (terms beyond it are dropped).
TruncatedSeries ts_scale_exponents(const TruncatedSeries& a, std::size_t k);

std::string to_string(const TruncatedSeries& a);

}  // namespace realk3
