#include "grover_cli/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "grover_cli/selector.hpp"

namespace grover::cli {
namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat_object(const Json& v) {
  return v.is_object() && std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat_object);
}

std::vector<std::string> columns_of(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  return cols;
}

void text_table(std::ostream& out, const Json& rows, const std::string& indent) {
  const auto cols = columns_of(rows);
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? scalar(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void text_value(std::ostream& out, const Json& v, const std::string& indent) {
  for (const auto& [key, item] : v.items()) {
    if (is_table(item)) {
      out << indent << key << ":\n";
      text_table(out, item, indent + "  ");
    } else if (item.is_array()) {
      std::string joined;
      for (const auto& x : item) joined += (joined.empty() ? "" : ", ") + (x.is_structured() ? x.dump() : scalar(x));
      out << indent << key << ": [" << joined << "]\n";
    } else if (item.is_object()) {
      out << indent << key << ":\n";
      text_value(out, item, indent + "  ");
    } else {
      out << indent << key << ": " << scalar(item) << '\n';
    }
  }
}

std::string csv_field(const Json& v) {
  std::string s = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

void csv_table(std::ostream& out, const Json& rows, const Json& prefix = Json::object()) {
  auto cols = columns_of(rows);
  std::vector<std::string> head;
  for (const auto& [key, _] : prefix.items()) head.push_back(key);
  std::string line;
  for (const auto& c : head) line += (line.empty() ? "" : ",") + c;
  for (const auto& c : cols) line += (line.empty() ? "" : ",") + c;
  out << line << '\n';
  for (const auto& row : rows) {
    line.clear();
    bool first = true;
    for (const auto& [_, val] : prefix.items()) {
      line += (first ? "" : ",") + csv_field(val);
      first = false;
    }
    for (const auto& c : cols) {
      line += (first ? "" : ",") + csv_field(row.contains(c) ? row[c] : Json(nullptr));
      first = false;
    }
    out << line << '\n';
  }
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError("unknown format '" + std::string(text) + "'; expected text, json or csv");
}

std::string render(const RunReport& report, Format format) {
  switch (format) {
    case Format::text: return render_text(report);
    case Format::json: return render_json(report);
    case Format::csv: return render_csv(report);
  }
  return {};
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n'
      << "selector: " << report.selector << '\n'
      << "tolerances: identity=" << format_number(report.tolerances.identity)
      << " amplitude=" << format_number(report.tolerances.amplitude)
      << " cluster=" << format_number(report.tolerances.cluster) << '\n'
      << "version: " << report.version << '\n'
      << "results:\n";
  text_value(out, report.results, "  ");
  return out.str();
}

std::string render_json(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_csv(const RunReport& report) {
  std::ostringstream out;
  const Json& r = report.results;
  if (report.command == "spectrum") {
    Json rows = Json::array();
    for (const char* source : {"adjacency", "discriminant", "evolution"}) {
      for (const auto& e : r.at(source).at("eigenvalues")) {
        rows.push_back({{"source", source},
                        {"value", e.contains("angle") ? e["angle"] : e["value"]},
                        {"multiplicity", e["multiplicity"]},
                        {"exact", r.at(source).at("exact")}});
      }
    }
    csv_table(out, rows);
  } else if (report.command == "period") {
    csv_table(out, r.at("spectral").value("evidence", Json::array()));
  } else if (report.command == "pst") {
    csv_table(out, r.at("certificates"));
  } else {
    bool first = true;
    for (const auto& [name, suite] : r.at("suites").items()) {
      if (!first) out << '\n';
      first = false;
      csv_table(out, suite.value("table", Json::array()), Json{{"suite", name}});
    }
  }
  return out.str();
}

}  // namespace grover::cli
