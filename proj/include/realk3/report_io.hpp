#pragma once

// Rendering of tables and reports as human-readable text, CSV and JSON.
// Exact integers go into JSON as numbers when they fit in 64 bits and as
// decimal strings otherwise; the parsers accept either form.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "realk3/arith_props.hpp"
#include "realk3/asymptotics.hpp"
#include "realk3/invariants.hpp"

namespace realk3 {

using Json = nlohmann::ordered_json;

enum class OutputFormat { human, csv, json };
OutputFormat format_from_string(std::string_view s);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json table_to_json(const InvariantTable& t);
InvariantTable table_from_json(const Json& j);
std::string render_table(const InvariantTable& t, OutputFormat f);

Json congruence_to_json(const CongruenceReport& r, std::string_view suite = "congruences");
CongruenceReport congruence_from_json(const Json& j);

Json check_to_json(const CheckReport& r, std::string_view suite);
CheckReport check_from_json(const Json& j);

Json convergence_to_json(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> convergence_from_json(const Json& j);
std::string render_convergence(const std::vector<ConvergenceRow>& rows, std::string_view target, OutputFormat f);

/// Shortest decimal with 6 significant digits, as printed in human output.
std::string format_6g(double x);

}  // namespace realk3
