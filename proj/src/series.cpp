#include "realk3/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace realk3 {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 reduce(const Integer& x, u64 m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

// Inverse of a modulo m, or 0 if gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m) {
    Integer inv;
    Integer aa(static_cast<unsigned long>(a));
    Integer mm(static_cast<unsigned long>(m));
    if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0) return 0;
    return inv.get_ui();
}

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

template <typename C>
std::vector<std::size_t> nonzero_positions(const std::vector<C>& c, std::size_t limit) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i <= limit && i < c.size(); ++i)
        if (c[i] != 0) nz.push_back(i);
    return nz;
}

}  // namespace

CoefficientRing CoefficientRing::residues(std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    if (modulus > (u64{1} << 62)) throw std::invalid_argument("modulus too large for word arithmetic");
    return CoefficientRing{modulus};
}

std::string CoefficientRing::name() const {
    return is_exact() ? std::string("ZZ") : "ZZ/" + std::to_string(modulus_);
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, ExactCoeffs coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    if (!ring_.is_exact()) throw RingMismatch("exact coefficients given for " + ring_.name());
    if (exact_coeffs().empty()) throw std::invalid_argument("a series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, ResidueCoeffs coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    if (ring_.is_exact()) throw RingMismatch("residue coefficients given for ZZ");
    auto& c = std::get<ResidueCoeffs>(coeffs_);
    if (c.empty()) throw std::invalid_argument("a series needs at least one coefficient");
    for (auto& x : c) x %= ring_.modulus();
}

TruncatedSeries TruncatedSeries::zero(std::size_t order, const CoefficientRing& ring) {
    if (ring.is_exact()) return {ring, ExactCoeffs(order + 1)};
    return {ring, ResidueCoeffs(order + 1, 0)};
}

TruncatedSeries TruncatedSeries::one(std::size_t order, const CoefficientRing& ring) {
    if (ring.is_exact()) {
        ExactCoeffs c(order + 1);
        c[0] = 1;
        return {ring, std::move(c)};
    }
    ResidueCoeffs c(order + 1, 0);
    c[0] = 1 % ring.modulus();
    return {ring, std::move(c)};
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const Integer> coeffs, const CoefficientRing& ring) {
    if (coeffs.empty()) throw std::invalid_argument("a series needs at least one coefficient");
    if (ring.is_exact()) return {ring, ExactCoeffs(coeffs.begin(), coeffs.end())};
    ResidueCoeffs c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.push_back(reduce(x, ring.modulus()));
    return {ring, std::move(c)};
}

TruncatedSeries TruncatedSeries::from_integers(std::initializer_list<long> coeffs, const CoefficientRing& ring) {
    std::vector<Integer> v;
    for (long x : coeffs) v.emplace_back(x);
    return from_integers(std::span<const Integer>(v), ring);
}

std::size_t TruncatedSeries::size() const {
    return std::visit([](const auto& c) { return c.size(); }, coeffs_);
}

Integer TruncatedSeries::coeff(std::size_t k) const {
    if (k > order()) throw std::out_of_range("coefficient index " + std::to_string(k) + " beyond order");
    if (ring_.is_exact()) return exact_coeffs()[k];
    return Integer(static_cast<unsigned long>(residue_coeffs()[k]));
}

bool TruncatedSeries::is_zero_at(std::size_t k) const {
    if (k > order()) throw std::out_of_range("coefficient index " + std::to_string(k) + " beyond order");
    return std::visit([k](const auto& c) { return c[k] == 0; }, coeffs_);
}

std::vector<Integer> TruncatedSeries::to_integers() const {
    std::vector<Integer> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) out.push_back(coeff(k));
    return out;
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
    if (order >= a.order()) return a;
    if (a.ring().is_exact()) {
        const auto& c = a.exact_coeffs();
        return {a.ring(), TruncatedSeries::ExactCoeffs(c.begin(), c.begin() + order + 1)};
    }
    const auto& c = a.residue_coeffs();
    return {a.ring(), TruncatedSeries::ResidueCoeffs(c.begin(), c.begin() + order + 1)};
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());

    if (a.ring().is_exact()) {
        const auto& x = a.exact_coeffs();
        const auto& y = b.exact_coeffs();
        // Loop over the nonzero terms of the sparser operand.
        auto nzx = nonzero_positions(x, n);
        auto nzy = nonzero_positions(y, n);
        const bool swap = nzy.size() < nzx.size();
        const auto& sparse = swap ? y : x;
        const auto& dense = swap ? x : y;
        const auto& nz = swap ? nzy : nzx;
        TruncatedSeries::ExactCoeffs out(n + 1);
        for (std::size_t i : nz) {
            const mpz_srcptr s = sparse[i].get_mpz_t();
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (dense[j] == 0) continue;
                mpz_addmul(out[i + j].get_mpz_t(), s, dense[j].get_mpz_t());
            }
        }
        return {a.ring(), std::move(out)};
    }

    const u64 m = a.ring().modulus();
    const auto& x = a.residue_coeffs();
    const auto& y = b.residue_coeffs();
    auto nzx = nonzero_positions(x, n);
    auto nzy = nonzero_positions(y, n);
    const bool swap = nzy.size() < nzx.size();
    const auto& sparse = swap ? y : x;
    const auto& dense = swap ? x : y;
    const auto& nz = swap ? nzy : nzx;
    TruncatedSeries::ResidueCoeffs out(n + 1, 0);
    if (m <= (u64{1} << 31)) {
        for (std::size_t i : nz) {
            const u64 s = sparse[i];
            for (std::size_t j = 0; i + j <= n; ++j) out[i + j] = (out[i + j] + s * dense[j]) % m;
        }
    } else {
        for (std::size_t i : nz) {
            const u64 s = sparse[i];
            for (std::size_t j = 0; i + j <= n; ++j) out[i + j] = add_mod(out[i + j], mul_mod(s, dense[j], m), m);
        }
    }
    return {a.ring(), std::move(out)};
}

TruncatedSeries ts_inverse(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        const auto& x = a.exact_coeffs();
        if (x[0] != 1 && x[0] != -1)
            throw NotInvertible("constant term " + x[0].get_str() + " is not a unit in ZZ");
        const int c0 = x[0] == 1 ? 1 : -1;
        auto nz = nonzero_positions(x, n);
        TruncatedSeries::ExactCoeffs out(n + 1);
        out[0] = c0;
        Integer acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc = 0;
            for (std::size_t i : nz) {
                if (i == 0) continue;
                if (i > k) break;
                mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), out[k - i].get_mpz_t());
            }
            if (c0 == 1)
                mpz_neg(out[k].get_mpz_t(), acc.get_mpz_t());
            else
                out[k] = acc;
        }
        return {a.ring(), std::move(out)};
    }

    const u64 m = a.ring().modulus();
    const auto& x = a.residue_coeffs();
    const u64 inv0 = inverse_mod(x[0], m);
    if (inv0 == 0)
        throw NotInvertible("constant term " + std::to_string(x[0]) + " is not a unit in " + a.ring().name());
    auto nz = nonzero_positions(x, n);
    TruncatedSeries::ResidueCoeffs out(n + 1, 0);
    out[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        u64 acc = 0;
        for (std::size_t i : nz) {
            if (i == 0) continue;
            if (i > k) break;
            acc = add_mod(acc, mul_mod(x[i], out[k - i], m), m);
        }
        out[k] = mul_mod(sub_mod(0, acc, m), inv0, m);
    }
    return {a.ring(), std::move(out)};
}

TruncatedSeries ts_pow(const TruncatedSeries& a, long k) {
    if (k < 0) return ts_pow(ts_inverse(a), -k);
    TruncatedSeries result = TruncatedSeries::one(a.order(), a.ring());
    TruncatedSeries base = a;
    auto e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) result = ts_mul(result, base);
        e >>= 1;
        if (e > 0) base = ts_mul(base, base);
    }
    return result;
}

TruncatedSeries ts_times_factor_product(TruncatedSeries a, std::size_t step, int sign, long exponent) {
    if (step == 0) throw std::invalid_argument("factor step must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
    const std::size_t n = a.order();
    const unsigned long reps = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    if (reps == 0) return a;

    // Each factor (1 + sign q^k) is applied in place: multiplication runs
    // downwards, division by it (its inverse) runs upwards.
    if (a.ring().is_exact()) {
        auto c = a.exact_coeffs();
        for (std::size_t k = step; k <= n; k += step) {
            for (unsigned long r = 0; r < reps; ++r) {
                if (exponent > 0) {
                    for (std::size_t i = n; i >= k; --i) {
                        if (sign > 0)
                            mpz_add(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
                        else
                            mpz_sub(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
                    }
                } else {
                    for (std::size_t i = k; i <= n; ++i) {
                        if (sign > 0)
                            mpz_sub(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
                        else
                            mpz_add(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - k].get_mpz_t());
                    }
                }
            }
        }
        return {a.ring(), std::move(c)};
    }

    const u64 m = a.ring().modulus();
    auto c = a.residue_coeffs();
    const bool add = (exponent > 0) == (sign > 0);
    for (std::size_t k = step; k <= n; k += step) {
        for (unsigned long r = 0; r < reps; ++r) {
            if (exponent > 0) {
                for (std::size_t i = n; i >= k; --i) c[i] = add ? add_mod(c[i], c[i - k], m) : sub_mod(c[i], c[i - k], m);
            } else {
                for (std::size_t i = k; i <= n; ++i) c[i] = add ? add_mod(c[i], c[i - k], m) : sub_mod(c[i], c[i - k], m);
            }
        }
    }
    return {a.ring(), std::move(c)};
}

TruncatedSeries ts_factor_product(std::size_t step, int sign, long exponent, std::size_t order,
                                  const CoefficientRing& ring) {
    return ts_times_factor_product(TruncatedSeries::one(order, ring), step, sign, exponent);
}

TruncatedSeries ts_reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
    const auto ring = CoefficientRing::residues(m);
    if (!a.ring().is_exact()) throw RingMismatch("ts_reduce_mod expects an exact series, got " + a.ring().name());
    const auto& c = a.exact_coeffs();
    return TruncatedSeries::from_integers(std::span<const Integer>(c), ring);
}

std::vector<Integer> ts_dissect(const TruncatedSeries& a, std::size_t j, std::size_t r) {
    if (j == 0) throw std::invalid_argument("dissection modulus must be positive");
    if (r >= j) throw std::invalid_argument("residue " + std::to_string(r) + " must be below " + std::to_string(j));
    std::vector<Integer> out;
    for (std::size_t k = r; k <= a.order(); k += j) out.push_back(a.coeff(k));
    return out;
}

TruncatedSeries ts_scale_exponents(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("exponent scale must be positive");
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        TruncatedSeries::ExactCoeffs out(n + 1);
        const auto& c = a.exact_coeffs();
        for (std::size_t i = 0; i * k <= n; ++i) out[i * k] = c[i];
        return {a.ring(), std::move(out)};
    }
    TruncatedSeries::ResidueCoeffs out(n + 1, 0);
    const auto& c = a.residue_coeffs();
    for (std::size_t i = 0; i * k <= n; ++i) out[i * k] = c[i];
    return {a.ring(), std::move(out)};
}

std::string to_string(const TruncatedSeries& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < a.size(); ++k) os << (k ? ", " : "") << a.coeff(k).get_str();
    os << ']';
    if (!a.ring().is_exact()) os << " mod " << a.ring().modulus();
    return os.str();
}

}  // namespace realk3
