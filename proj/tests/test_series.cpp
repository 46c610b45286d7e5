#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "realk3/series.hpp"

using namespace realk3;

namespace {

const auto ZZ = CoefficientRing::exact();

TruncatedSeries exact(std::initializer_list<long> c) { return TruncatedSeries::from_integers(c); }

std::vector<Integer> ints(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return v;
}

TruncatedSeries from_poly(const oracle::Poly& p, const CoefficientRing& ring = ZZ) {
    return TruncatedSeries::from_integers(std::span<const Integer>(p), ring);
}

}  // namespace

TEST_CASE("coefficient rings") {
    CHECK(ZZ.is_exact());
    CHECK(CoefficientRing::residues(7).modulus() == 7);
    CHECK_THROWS_AS(CoefficientRing::residues(1), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientRing::residues(0), std::invalid_argument);
    CHECK(CoefficientRing::residues(5) != CoefficientRing::residues(7));
}

TEST_CASE("series construction keeps residues canonical") {
    auto s = TruncatedSeries::from_integers({-1, 7, 12}, CoefficientRing::residues(5));
    CHECK(s.to_integers() == ints({4, 2, 2}));
    CHECK(s.order() == 2);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
}

TEST_CASE("ts_mul") {
    SUBCASE("difference of squares") { CHECK(ts_mul(exact({1, 1, 0}), exact({1, -1, 0})) == exact({1, 0, -1})); }
    SUBCASE("identity") {
        auto s = exact({3, -2, 5, 7});
        CHECK(ts_mul(s, TruncatedSeries::one(3, ZZ)) == s);
    }
    SUBCASE("truncates to the smaller order") {
        CHECK(ts_mul(exact({1, 24, 324}), exact({1, 0})) == exact({1, 24}));
        CHECK(ts_mul(exact({1, 24, 324}), exact({1, 0, 0})).order() == 2);
    }
    SUBCASE("ring mismatch") {
        CHECK_THROWS_AS(ts_mul(exact({1}), TruncatedSeries::one(0, CoefficientRing::residues(3))), RingMismatch);
        CHECK_THROWS_AS(ts_mul(TruncatedSeries::one(0, CoefficientRing::residues(2)),
                               TruncatedSeries::one(0, CoefficientRing::residues(3))),
                        RingMismatch);
    }
    SUBCASE("residue ring") {
        auto m = CoefficientRing::residues(7);
        auto a = TruncatedSeries::from_integers({3, 4, 5}, m);
        auto b = TruncatedSeries::from_integers({6, 1, 2}, m);
        // 18, 3 + 24, 6 + 4 + 30 -> 4, 6, 5 (mod 7)
        CHECK(ts_mul(a, b).to_integers() == ints({4, 6, 5}));
    }
    SUBCASE("large modulus uses wide products") {
        const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
        auto m = CoefficientRing::residues(p);
        auto a = TruncatedSeries::from_integers({-1, -1}, m);
        // (p-1)^2 = 1 mod p, 2(p-1)^2 = 2
        CHECK(ts_mul(a, a).to_integers() == ints({1, 2}));
    }
}

TEST_CASE("ts_inverse") {
    CHECK(ts_inverse(exact({1, -1, 0, 0})) == exact({1, 1, 1, 1}));
    CHECK(ts_inverse(exact({1, 0, 0})) == exact({1, 0, 0}));
    CHECK(ts_inverse(exact({1, 1, 0})) == exact({1, -1, 1}));
    CHECK(ts_inverse(exact({-1, 2, 0})) == exact({-1, -2, -4}));
    CHECK_THROWS_AS(ts_inverse(exact({2, 1})), NotInvertible);
    CHECK_THROWS_AS(ts_inverse(exact({0, 1})), NotInvertible);

    auto m9 = CoefficientRing::residues(9);
    CHECK_THROWS_AS(ts_inverse(TruncatedSeries::from_integers({3, 1}, m9)), NotInvertible);
    auto a = TruncatedSeries::from_integers({2, 5, 1, 8}, m9);
    CHECK(ts_mul(a, ts_inverse(a)) == TruncatedSeries::one(3, m9));
}

TEST_CASE("ts_pow") {
    // Oracle: coefficient n of (1-q)^-24 is C(n+23, 23).
    std::vector<Integer> binom(3);
    for (unsigned long n = 0; n < 3; ++n) mpz_bin_uiui(binom[n].get_mpz_t(), n + 23, 23);
    CHECK(binom == ints({1, 24, 300}));
    auto base = exact({1, -1, 0});
    auto repeated = TruncatedSeries::one(2, ZZ);
    for (int i = 0; i < 24; ++i) repeated = ts_mul(repeated, ts_inverse(base));
    CHECK(repeated.to_integers() == binom);
    CHECK(ts_pow(base, -24).to_integers() == ints({1, 24, 300}));

    CHECK(ts_pow(exact({5, 3, 2}), 0) == exact({1, 0, 0}));
    CHECK_THROWS_AS(ts_pow(exact({2, 1}), -1), NotInvertible);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = from_poly(oracle::random_poly(rng, 12));
        CHECK(ts_pow(a, 2) == ts_mul(a, a));
        CHECK(ts_pow(a, 5) == ts_mul(ts_pow(a, 2), ts_pow(a, 3)));
    }
}

TEST_CASE("ts_factor_product") {
    CHECK(ts_factor_product(2, -1, -12, 4, ZZ).to_integers() == ints({1, 0, 12, 0, 90}));
    CHECK(ts_factor_product(1, -1, -24, 2, ZZ).to_integers() == ints({1, 24, 324}));
    CHECK(ts_factor_product(1, +1, 0, 3, ZZ).to_integers() == ints({1, 0, 0, 0}));
    CHECK(ts_factor_product(5, -1, 3, 0, ZZ).to_integers() == ints({1}));
    CHECK_THROWS_AS(ts_factor_product(0, -1, 1, 3, ZZ), std::invalid_argument);
    CHECK_THROWS_AS(ts_factor_product(1, 2, 1, 3, ZZ), std::invalid_argument);

    // Against closed-form binomial expansion of each factor.
    for (std::size_t step : {1, 2, 3})
        for (int sign : {-1, 1})
            for (long e : {-7, -1, 1, 4}) {
                CAPTURE(step);
                CAPTURE(sign);
                CAPTURE(e);
                CHECK(ts_factor_product(step, sign, e, 40, ZZ).to_integers() == oracle::eta_product(step, sign, e, 40));
            }
}

TEST_CASE("ts_reduce_mod") {
    CHECK(ts_reduce_mod(exact({1, 24, 324}), 2).to_integers() == ints({1, 0, 0}));
    CHECK(ts_reduce_mod(exact({1, -20, 192}), 4).to_integers() == ints({1, 0, 0}));
    CHECK(ts_reduce_mod(exact({0, 18, 192}), 3).to_integers() == ints({0, 0, 0}));
    CHECK(ts_reduce_mod(exact({-7}), 5).to_integers() == ints({3}));
    CHECK_THROWS_AS(ts_reduce_mod(exact({1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(ts_reduce_mod(TruncatedSeries::one(2, CoefficientRing::residues(4)), 2), RingMismatch);
}

TEST_CASE("ts_dissect") {
    CHECK(ts_dissect(exact({1, 2, 3, 4, 5}), 2, 0) == ints({1, 3, 5}));
    CHECK(ts_dissect(exact({1, 2, 3, 4, 5}), 1, 0) == ints({1, 2, 3, 4, 5}));
    CHECK(ts_dissect(exact({1, 2, 3, 4, 5}), 2, 1) == ints({2, 4}));
    CHECK_THROWS_AS(ts_dissect(exact({1, 2}), 2, 2), std::invalid_argument);

    // (1-q)^3 (1-q^2)^3 expanded by hand-rolled polynomial arithmetic.
    auto cube = oracle::truncated_mul(oracle::binomial_factor(1, -1, 3, 2), oracle::binomial_factor(2, -1, 3, 2), 2);
    REQUIRE(cube[2] == 0);
    CHECK(ts_dissect(ts_factor_product(1, -1, 3, 2, ZZ), 3, 2) == std::vector<Integer>{cube[2]});
}

TEST_CASE("algebraic properties on random operands") {
    std::mt19937_64 rng(20181024);
    std::uniform_int_distribution<int> order_dist(0, 25);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t na = order_dist(rng), nb = order_dist(rng), nc = order_dist(rng);
        auto pa = oracle::random_poly(rng, na), pb = oracle::random_poly(rng, nb), pc = oracle::random_poly(rng, nc);
        auto a = from_poly(pa), b = from_poly(pb), c = from_poly(pc);
        CHECK(ts_mul(a, b) == ts_mul(b, a));
        CHECK(ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c)));
        CHECK(ts_mul(a, b).to_integers() == oracle::truncated_mul(pa, pb, std::min(na, nb)));

        for (std::uint64_t m : {2u, 9u, 16u, 1000003u}) {
            CHECK(ts_reduce_mod(ts_mul(a, b), m) == ts_mul(ts_reduce_mod(a, m), ts_reduce_mod(b, m)));
        }

        pa[0] = (trial % 2) ? 1 : -1;
        auto unit = from_poly(pa);
        CHECK(ts_mul(unit, ts_inverse(unit)) == TruncatedSeries::one(na, ZZ));
        auto unit_mod = ts_reduce_mod(unit, 144);
        CHECK(ts_mul(unit_mod, ts_inverse(unit_mod)) == TruncatedSeries::one(na, CoefficientRing::residues(144)));
        CHECK(ts_reduce_mod(ts_inverse(unit), 144) == ts_inverse(unit_mod));
    }
}

TEST_CASE("factor product properties") {
    for (std::size_t step : {1, 2, 8})
        for (int sign : {-1, 1})
            for (long e : {1, 3, 12, 24}) {
                auto fwd = ts_factor_product(step, sign, e, 60, ZZ);
                auto back = ts_factor_product(step, sign, -e, 60, ZZ);
                CHECK(ts_mul(fwd, back) == TruncatedSeries::one(60, ZZ));
                CHECK(fwd == ts_pow(ts_factor_product(step, sign, 1, 60, ZZ), e));
                CHECK(back == ts_pow(ts_factor_product(step, sign, 1, 60, ZZ), -e));
                auto m = CoefficientRing::residues(16);
                CHECK(ts_factor_product(step, sign, -e, 60, m) == ts_reduce_mod(back, 16));
            }
}

TEST_CASE("scaling exponents and truncation") {
    auto s = exact({1, 2, 3, 4, 5, 6, 7});
    CHECK(ts_scale_exponents(s, 3).to_integers() == ints({1, 0, 0, 2, 0, 0, 3}));
    CHECK(truncate(s, 2) == exact({1, 2, 3}));
    CHECK(truncate(s, 10) == s);
    CHECK(to_string(exact({1, -2})) == "[1, -2]");
}
