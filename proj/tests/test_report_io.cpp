#include <doctest.h>

#include <random>

#include "realk3/report_io.hpp"

using namespace realk3;

TEST_CASE("integers in JSON") {
    CHECK(integer_to_json(Integer(42)).is_number_integer());
    Integer huge("123456789012345678901234567890");
    CHECK(integer_to_json(huge).is_string());
    CHECK(integer_from_json(integer_to_json(huge)) == huge);
    CHECK(integer_from_json(integer_to_json(Integer(-7))) == -7);
    CHECK_THROWS_AS(integer_from_json(Json("12x")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("table JSON round trip, including values past 64 bits") {
    auto t = compute_table({RealTopology(0), RealTopology(-18), RealTopology(20)}, 80);
    auto j = table_to_json(t);
    CHECK(j["rows"][20]["c"].get<std::int64_t>() == 216108718571250);
    CHECK(j["rows"][80]["c"].is_string());
    CHECK(table_from_json(j) == t);
    CHECK(table_from_json(Json::parse(render_table(t, OutputFormat::json))) == t);
}

TEST_CASE("CSV and JSON carry the same numbers") {
    auto t = compute_table(RealTopology::all(), 30);
    const auto csv = render_table(t, OutputFormat::csv);
    const auto j = table_to_json(t);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line.rfind("g,w(-18),w(-16)", 0) == 0);
    std::size_t g = 0;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 22);
        CHECK(std::stoul(cells[0]) == g);
        for (std::size_t i = 0; i < 20; ++i)
            CHECK(Integer(cells[i + 1]) == integer_from_json(j["rows"][g]["w"][std::to_string(t.euler_reals[i])]));
        CHECK(Integer(cells[21]) == integer_from_json(j["rows"][g]["c"]));
        ++g;
    }
    CHECK(g == 31);
}

TEST_CASE("human table is exact and aligned") {
    auto t = compute_table({RealTopology(0), RealTopology(-18), RealTopology(20)}, 20);
    auto text = render_table(t, OutputFormat::human);
    CHECK(text.find("216108718571250") != std::string::npos);
    CHECK(text.find("9808358121720") != std::string::npos);
    CHECK(text.find("e_R=-18") != std::string::npos);
}

TEST_CASE("congruence report round trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        CongruenceReport r;
        const auto& c = all_clauses()[rng() % all_clauses().size()];
        r.clause = c.id;
        r.modulus = c.modulus;
        r.euler_real = -18 + 2 * static_cast<int>(rng() % 20);
        r.g_max = 1 + rng() % 1000;
        const auto nv = rng() % 4;
        for (std::size_t i = 0; i < nv; ++i)
            r.violations.push_back({1 + rng() % r.g_max, rng() % c.modulus, rng() % c.modulus,
                                    (rng() % 2) ? Subclaim::vanishing : Subclaim::congruence});
        r.status = r.violations.empty() ? Status::pass : Status::fail;
        r.congruence = {c.asserts_congruence, c.asserts_congruence ? r.status : Status::not_applicable};
        r.vanishing = {true, r.status};
        auto j = congruence_to_json(r);
        for (const char* key : {"suite", "clause", "e_R", "modulus", "g_max", "status", "violations"})
            CHECK(j.contains(key));
        CHECK(congruence_from_json(Json::parse(j.dump())) == r);
    }
    auto real = check_clause(clause(ClauseId::mod16), RealTopology(20), 10);
    CHECK(congruence_from_json(congruence_to_json(real)) == real);
}

TEST_CASE("check report and convergence round trip") {
    CheckReport r{"lehner", 100, false, {4, 8}, "detail"};
    CHECK(check_from_json(check_to_json(r, "congruences")) == r);

    auto rows = convergence_report(RealTopology(0), {7, 40, 300});
    auto back = convergence_from_json(Json::parse(convergence_to_json(rows).dump()));
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].skipped == rows[i].skipped);
        CHECK(back[i].reason == rows[i].reason);
        CHECK(back[i].log_count == rows[i].log_count);  // bit-exact
        CHECK(back[i].ratio == rows[i].ratio);
    }
    auto csv = render_convergence(rows, "e_R=0", OutputFormat::csv);
    CHECK(csv.rfind("n,log_count,prediction,ratio", 0) == 0);
    CHECK(csv.find("7,,,,w_n = 0") != std::string::npos);
    CHECK(format_6g(125.66370614359172) == "125.664");
}

TEST_CASE("format names") {
    CHECK(format_from_string("csv") == OutputFormat::csv);
    CHECK(format_from_string("structured-json") == OutputFormat::json);
    CHECK(format_from_string("human-table") == OutputFormat::human);
    CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
}
