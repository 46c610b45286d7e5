#include <doctest.h>

#include "realk3/invariants.hpp"
#include "table_a.hpp"

using namespace realk3;

TEST_CASE("compute_table reproduces the published table") {
    auto t = compute_table({RealTopology(0), RealTopology(-18), RealTopology(20)}, 20);
    REQUIRE(t.rows.size() == 21);
    CHECK(t.euler_reals == std::vector<int>{0, -18, 20});
    for (const auto& ref : table_a::rows) {
        const auto& row = t.rows[ref.g];
        CAPTURE(ref.g);
        CHECK(row.g == static_cast<std::size_t>(ref.g));
        CHECK(row.w[0] == Integer(ref.w_zero));
        CHECK(row.w[1] == Integer(ref.w_minus18));
        CHECK(row.w[2] == Integer(ref.w_plus20));
        CHECK(row.c == Integer(ref.c));
    }
    CHECK(t.rows[12].w[1] == 1273876088);
}

TEST_CASE("compute_table edge cases") {
    auto t = compute_table({RealTopology(0)}, 0);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].w == std::vector<Integer>{1});
    CHECK(t.rows[0].c == 1);
    CHECK_THROWS_AS(compute_table({RealTopology::unchecked(30)}, 4), InvalidTopology);

    auto wide = compute_table(RealTopology::all(), 60);
    for (const auto& row : wide.rows) CHECK(sgn(row.c) > 0);
    for (const auto& w : wide.rows[0].w) CHECK(w == 1);
}

TEST_CASE("sign and monotonicity pattern") {
    SUBCASE("table examples") {
        CHECK(verify_sign_monotonicity(RealTopology(20), 8).passed);
        CHECK(verify_sign_monotonicity(RealTopology(0), 20).passed);
        CHECK(verify_sign_monotonicity(RealTopology(-18), 1).passed);
    }
    SUBCASE("every topology to g = 300") {
        for (const auto& t : RealTopology::all()) {
            CAPTURE(t.euler_real());
            auto rep = verify_sign_monotonicity(t, 300);
            CHECK(rep.passed);
            CHECK_FALSE(rep.first_violation.has_value());
        }
    }
    SUBCASE("violations are located") {
        // A sequence that breaks strict growth at g = 3.
        auto fake = TruncatedSeries::from_integers({1, 2, 5, 5, 9});
        auto rep = verify_sign_monotonicity(RealTopology(-2), fake);
        CHECK_FALSE(rep.passed);
        REQUIRE(rep.first_violation.has_value());
        CHECK(*rep.first_violation == 3);

        auto wrong_start = TruncatedSeries::from_integers({1, 4, 5});
        CHECK(*verify_sign_monotonicity(RealTopology(-2), wrong_start).first_violation == 1);

        auto odd_nonzero = TruncatedSeries::from_integers({1, 0, 12, 1});
        CHECK(*verify_sign_monotonicity(RealTopology(0), odd_nonzero).first_violation == 3);

        auto sign_flip = TruncatedSeries::from_integers({1, -20, 192, 1200});
        CHECK(*verify_sign_monotonicity(RealTopology(20), sign_flip).first_violation == 3);
    }
    CHECK_THROWS_AS(verify_sign_monotonicity(RealTopology(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_sign_monotonicity(RealTopology::unchecked(-40), 5), InvalidTopology);
}

TEST_CASE("bounds") {
    auto b = bounds_for(RealTopology(20), 3);
    CHECK(b.lower == 1200);
    CHECK(b.upper == 3200);
    b = bounds_for(RealTopology(0), 5);
    CHECK(b.lower == 0);
    CHECK(b.upper == 176256);
    b = bounds_for(RealTopology(-18), 1);
    CHECK(b.lower == 18);
    CHECK(b.upper == 24);

    for (const auto& t : RealTopology::all())
        for (std::size_t g : {0u, 1u, 7u, 40u}) {
            auto p = bounds_for(t, g);
            CHECK(p.lower <= p.upper);
        }
}

TEST_CASE("refined count bound") {
    CHECK(refined_count_bound(160, -48) == 272);
    CHECK(refined_count_bound(17, 0) == 34);
    CHECK(refined_count_bound(160, -160) == 160);
    CHECK_THROWS_AS(refined_count_bound(10, -11), std::invalid_argument);
    CHECK_THROWS_AS(refined_count_bound(-1, 5), std::invalid_argument);
    for (long k = 0; k < 30; ++k)
        for (long w = -k; w <= 30; ++w) {
            auto r = refined_count_bound(k, w);
            CHECK(r >= k);
            if (k >= std::abs(w)) CHECK(r >= std::abs(w));
        }
}

TEST_CASE("tritangent bound") {
    CHECK(tritangent_bound(6) == 160);
    CHECK(tritangent_bound(3) == 8);
    CHECK(tritangent_bound(2) == 0);
    CHECK(tritangent_bound(0) == 0);
    CHECK(tritangent_bound(10) == 960);
    CHECK_THROWS_AS(tritangent_bound(-1), std::invalid_argument);
}

TEST_CASE("dominance of the most negative topology") {
    // |w_1| = e_R, so e_R = 20 beats 18 at g = 1; nothing else breaks it.
    auto rep = check_dominance(150);
    CHECK_FALSE(rep.holds);
    CHECK(rep.counterexamples == std::vector<std::pair<int, std::size_t>>{{20, 1}});
    CHECK(std::string(DominanceReport::level) == "conjecture");
}
