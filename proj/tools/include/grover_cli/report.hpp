#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace grover::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.3.0";

/// Decimal string with 12 significant digits.
std::string format_number(double x);

/// As format_number, but values within 1e-12 of zero print as "0".
std::string format_value(double x);

/// Parses a decimal string produced by format_number. Throws UsageError.
double parse_number(std::string_view text);

/// Rounds x to the value its 12-digit decimal string denotes, so that
/// serialization is exact.
double canonical(double x);

struct Tolerances {
  double identity = 1e-9;
  double amplitude = 1e-7;
  double cluster = 1e-6;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Validates positivity and canonicalizes every field. Throws UsageError.
Tolerances make_tolerances(double identity, double amplitude, double cluster);

struct RunReport {
  std::string command;
  std::string selector;
  Tolerances tolerances;
  Json results = Json::object();
  std::string version{kToolVersion};

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// {command, selector, tolerances, results, version}
Json to_json(const RunReport& report);

/// Inverse of to_json. Throws UsageError on schema violations.
RunReport report_from_json(const Json& j);

}  // namespace grover::cli
