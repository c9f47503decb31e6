#include "grover_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "grover_cli/selector.hpp"

namespace grover::cli {

std::string format_number(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_value(double x) { return format_number(std::abs(x) < 1e-12 ? 0.0 : x); }

double parse_number(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw UsageError("'" + s + "' is not a decimal number");
  }
  return value;
}

double canonical(double x) { return parse_number(format_number(x)); }

Tolerances make_tolerances(double identity, double amplitude, double cluster) {
  for (double t : {identity, amplitude, cluster}) {
    if (!(t > 0.0) || !(t < 1.0)) throw UsageError("tolerances must lie in (0, 1)");
  }
  return {canonical(identity), canonical(amplitude), canonical(cluster)};
}

Json to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["selector"] = report.selector;
  j["tolerances"] = {{"identity", format_number(report.tolerances.identity)},
                     {"amplitude", format_number(report.tolerances.amplitude)},
                     {"cluster", format_number(report.tolerances.cluster)}};
  j["results"] = report.results;
  j["version"] = report.version;
  return j;
}

RunReport report_from_json(const Json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.selector = j.at("selector").get<std::string>();
    const Json& t = j.at("tolerances");
    r.tolerances.identity = parse_number(t.at("identity").get<std::string>());
    r.tolerances.amplitude = parse_number(t.at("amplitude").get<std::string>());
    r.tolerances.cluster = parse_number(t.at("cluster").get<std::string>());
    r.results = j.at("results");
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace grover::cli
