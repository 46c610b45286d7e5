#include "realk3/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace realk3 {

OutputFormat format_from_string(std::string_view s) {
    if (s == "human" || s == "human-table") return OutputFormat::human;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json" || s == "structured-json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
        return out;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json table_to_json(const InvariantTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json w = Json::object();
        for (std::size_t i = 0; i < t.euler_reals.size(); ++i) w[std::to_string(t.euler_reals[i])] = integer_to_json(r.w[i]);
        rows.push_back({{"g", r.g}, {"w", std::move(w)}, {"c", integer_to_json(r.c)}});
    }
    return Json{{"rows", std::move(rows)}};
}

InvariantTable table_from_json(const Json& j) {
    InvariantTable t;
    const auto& rows = j.at("rows");
    if (rows.empty()) throw std::invalid_argument("table has no rows");
    for (const auto& [key, _] : rows.front().at("w").items()) t.euler_reals.push_back(std::stoi(key));
    for (const auto& r : rows) {
        InvariantRow row;
        row.g = r.at("g").get<std::size_t>();
        for (int e : t.euler_reals) row.w.push_back(integer_from_json(r.at("w").at(std::to_string(e))));
        row.c = integer_from_json(r.at("c"));
        t.rows.push_back(std::move(row));
    }
    t.g_max = t.rows.back().g;
    return t;
}

std::string render_table(const InvariantTable& t, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::json) {
        os << table_to_json(t).dump(2) << '\n';
        return os.str();
    }
    if (f == OutputFormat::csv) {
        os << "g";
        for (int e : t.euler_reals) os << ",w(" << e << ")";
        os << ",c\n";
        for (const auto& r : t.rows) {
            os << r.g;
            for (const auto& w : r.w) os << ',' << w.get_str();
            os << ',' << r.c.get_str() << '\n';
        }
        return os.str();
    }

    std::vector<std::string> header{"g"};
    for (int e : t.euler_reals) header.push_back("e_R=" + std::to_string(e));
    header.push_back("complex");
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : t.rows) {
        std::vector<std::string> line{std::to_string(r.g)};
        for (const auto& w : r.w) line.push_back(w.get_str());
        line.push_back(r.c.get_str());
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) os << "  ";
            os << std::string(width[i] - line[i].size(), ' ') << line[i];
        }
        os << '\n';
    };
    emit(header);
    for (const auto& line : cells) emit(line);
    return os.str();
}

Json congruence_to_json(const CongruenceReport& r, std::string_view suite) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"g", v.g}, {"w_mod", v.w_mod}, {"c_mod", v.c_mod}, {"subclaim", to_string(v.subclaim)}});
    auto sub = [](const SubclaimResult& s) { return s.asserted ? Json(to_string(s.status)) : Json("not-asserted"); };
    return Json{{"suite", suite},
                {"clause", clause(r.clause).label},
                {"e_R", r.euler_real},
                {"modulus", r.modulus},
                {"g_max", r.g_max},
                {"status", to_string(r.status)},
                {"violations", std::move(violations)},
                {"subclaims", {{"congruence", sub(r.congruence)}, {"vanishing", sub(r.vanishing)}}}};
}

CongruenceReport congruence_from_json(const Json& j) {
    CongruenceReport r;
    r.clause = clause_by_label(j.at("clause").get<std::string>()).id;
    r.euler_real = j.at("e_R").get<int>();
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.g_max = j.at("g_max").get<std::size_t>();
    r.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& v : j.at("violations"))
        r.violations.push_back({v.at("g").get<std::size_t>(), v.at("w_mod").get<std::uint64_t>(),
                                v.at("c_mod").get<std::uint64_t>(),
                                subclaim_from_string(v.at("subclaim").get<std::string>())});
    auto sub = [](const Json& s) {
        const auto text = s.get<std::string>();
        if (text == "not-asserted") return SubclaimResult{false, Status::not_applicable};
        return SubclaimResult{true, status_from_string(text)};
    };
    if (j.contains("subclaims")) {
        r.congruence = sub(j["subclaims"].at("congruence"));
        r.vanishing = sub(j["subclaims"].at("vanishing"));
    }
    return r;
}

Json check_to_json(const CheckReport& r, std::string_view suite) {
    return Json{{"suite", suite},
                {"check", r.name},
                {"range", r.range},
                {"status", r.passed ? "pass" : "fail"},
                {"failing", r.failing},
                {"detail", r.detail}};
}

CheckReport check_from_json(const Json& j) {
    CheckReport r;
    r.name = j.at("check").get<std::string>();
    r.range = j.at("range").get<std::size_t>();
    r.passed = j.at("status").get<std::string>() == "pass";
    r.failing = j.at("failing").get<std::vector<std::size_t>>();
    r.detail = j.value("detail", "");
    return r;
}

Json convergence_to_json(const std::vector<ConvergenceRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        if (r.skipped)
            out.push_back({{"n", r.n}, {"skipped", true}, {"reason", r.reason}});
        else
            out.push_back({{"n", r.n}, {"log_count", r.log_count}, {"prediction", r.prediction}, {"ratio", r.ratio}});
    }
    return out;
}

std::vector<ConvergenceRow> convergence_from_json(const Json& j) {
    std::vector<ConvergenceRow> rows;
    for (const auto& e : j) {
        ConvergenceRow r;
        r.n = e.at("n").get<std::size_t>();
        if (e.value("skipped", false)) {
            r.skipped = true;
            r.reason = e.at("reason").get<std::string>();
        } else {
            r.log_count = e.at("log_count").get<double>();
            r.prediction = e.at("prediction").get<double>();
            r.ratio = e.at("ratio").get<double>();
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string format_6g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string render_convergence(const std::vector<ConvergenceRow>& rows, std::string_view target, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::json) {
        os << Json{{"target", target}, {"rows", convergence_to_json(rows)}}.dump(2) << '\n';
        return os.str();
    }
    if (f == OutputFormat::csv) {
        char buf[128];
        os << "n,log_count,prediction,ratio,note\n";
        for (const auto& r : rows) {
            if (r.skipped) {
                os << r.n << ",,,," << r.reason << '\n';
                continue;
            }
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", r.log_count, r.prediction, r.ratio);
            os << r.n << ',' << buf << ",\n";
        }
        return os.str();
    }
    os << "target: " << target << '\n';
    char buf[160];
    std::snprintf(buf, sizeof buf, "%8s  %14s  %14s  %10s\n", "n", "log_count", "prediction", "ratio");
    os << buf;
    for (const auto& r : rows) {
        if (r.skipped) {
            std::snprintf(buf, sizeof buf, "%8zu  skipped (%s)\n", r.n, r.reason.c_str());
        } else {
            std::snprintf(buf, sizeof buf, "%8zu  %14s  %14s  %10s\n", r.n, format_6g(r.log_count).c_str(),
                          format_6g(r.prediction).c_str(), format_6g(r.ratio).c_str());
        }
        os << buf;
    }
    return os.str();
}

}  // namespace realk3
