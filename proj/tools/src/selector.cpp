#include "grover_cli/selector.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "grover/errors.hpp"

namespace grover::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(std::string_view token, std::string_view selector) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError("selector '" + std::string(selector) + "': '" + std::string(token) +
                     "' is not an integer");
  }
  return value;
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t count,
                   std::string_view selector, std::string_view shape) {
  if (fields.size() != count) {
    throw UsageError("selector '" + std::string(selector) + "': expected " + std::string(shape));
  }
}

std::size_t positive_size(std::int64_t value, std::int64_t min, std::string_view what) {
  if (value < min) {
    throw ValidationError(std::string(what) + " must be >= " + std::to_string(min) + ", got " +
                          std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::uc: return "uc";
    case SelectorKind::cycle: return "cycle";
    case SelectorKind::complete: return "complete";
    case SelectorKind::circulant: return "circulant";
    case SelectorKind::hamming: return "hamming";
    case SelectorKind::kbip: return "kbip";
    case SelectorKind::ktri: return "ktri";
    case SelectorKind::file: return "file";
  }
  return "unknown";
}

Selector parse_selector(std::string_view text) {
  Selector sel;
  sel.text = std::string(text);
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("selector '" + sel.text + "': missing ':'");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);

  if (head == "file") {
    if (rest.empty()) throw UsageError("selector 'file:': missing path");
    sel.kind = SelectorKind::file;
    sel.path = std::string(rest);
    return sel;
  }

  const auto fields = split(rest, ':');
  if (head == "uc" || head == "cycle" || head == "complete") {
    expect_fields(fields, 1, text, std::string(head) + ":N");
    sel.kind = head == "uc" ? SelectorKind::uc
               : head == "cycle" ? SelectorKind::cycle
                                 : SelectorKind::complete;
    sel.params.push_back(parse_int(fields[0], text));
  } else if (head == "circulant") {
    expect_fields(fields, 2, text, "circulant:N:s1,s2,...");
    sel.kind = SelectorKind::circulant;
    sel.params.push_back(parse_int(fields[0], text));
    for (const auto token : split(fields[1], ',')) sel.params.push_back(parse_int(token, text));
  } else if (head == "named") {
    if (fields.empty() || fields[0].empty()) throw UsageError("selector '" + sel.text + "': missing family");
    if (fields[0] == "hamming") {
      expect_fields(fields, 3, text, "named:hamming:S:T");
      sel.kind = SelectorKind::hamming;
      sel.params = {parse_int(fields[1], text), parse_int(fields[2], text)};
    } else if (fields[0] == "kbip" || fields[0] == "ktri") {
      expect_fields(fields, 2, text, "named:" + std::string(fields[0]) + ":M");
      sel.kind = fields[0] == "kbip" ? SelectorKind::kbip : SelectorKind::ktri;
      sel.params = {parse_int(fields[1], text)};
    } else {
      throw UsageError("selector '" + sel.text + "': unknown family '" + std::string(fields[0]) + "'");
    }
  } else {
    throw UsageError("selector '" + sel.text + "': unknown kind '" + std::string(head) + "'");
  }
  return sel;
}

ResolvedGraph resolve(const Selector& selector) {
  const auto& p = selector.params;
  switch (selector.kind) {
    case SelectorKind::uc: {
      const std::int64_t n = static_cast<std::int64_t>(positive_size(p[0], 2, "uc order"));
      CirculantSpec spec = unitary_connection_set(n);
      return {cayley(spec), spec, n};
    }
    case SelectorKind::cycle: {
      const std::size_t n = positive_size(p[0], 3, "cycle length");
      CirculantSpec spec{n, {1, n - 1}};
      return {cayley(spec), spec, std::nullopt};
    }
    case SelectorKind::complete: {
      const std::size_t n = positive_size(p[0], 2, "complete graph order");
      CirculantSpec spec{n, std::vector<std::size_t>(n - 1)};
      std::iota(spec.connection_set.begin(), spec.connection_set.end(), std::size_t{1});
      return {cayley(spec), spec, std::nullopt};
    }
    case SelectorKind::circulant: {
      const std::size_t n = positive_size(p[0], 2, "circulant order");
      CirculantSpec spec{n, {}};
      for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] < 0) throw ValidationError("connection set entries must be non-negative");
        spec.connection_set.push_back(static_cast<std::size_t>(p[i]));
      }
      std::sort(spec.connection_set.begin(), spec.connection_set.end());
      spec.validate();
      return {cayley(spec), spec, std::nullopt};
    }
    case SelectorKind::hamming:
      return {named_graph(GraphFamily::hamming, p), std::nullopt, std::nullopt};
    case SelectorKind::kbip:
      return {named_graph(GraphFamily::complete_bipartite, p), std::nullopt, std::nullopt};
    case SelectorKind::ktri:
      return {named_graph(GraphFamily::complete_tripartite, p), std::nullopt, std::nullopt};
    case SelectorKind::file:
      return {read_edge_list_file(selector.path), std::nullopt, std::nullopt};
  }
  throw UsageError("unhandled selector kind");
}

}  // namespace grover::cli
