#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grover/graphs.hpp"

namespace grover::cli {

/// Malformed command line or selector text. Maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SelectorKind { uc, cycle, complete, circulant, hamming, kbip, ktri, file };

std::string_view to_string(SelectorKind kind);

struct Selector {
  SelectorKind kind = SelectorKind::uc;
  std::string text;
  std::vector<std::int64_t> params;  ///< N, then the connection set for circulants
  std::string path;                  ///< file selectors only
};

/// Grammar:
///   uc:N | cycle:N | complete:N | circulant:N:s1,s2,... |
///   named:hamming:S:T | named:kbip:M | named:ktri:M | file:PATH
/// Throws UsageError on anything that does not match.
Selector parse_selector(std::string_view text);

struct ResolvedGraph {
  Graph graph;
  std::optional<CirculantSpec> circulant;  ///< set for uc, cycle, complete, circulant
  std::optional<std::int64_t> uc_order;    ///< set for uc
};

/// Builds the graph. Invalid parameters raise ValidationError or DomainError.
ResolvedGraph resolve(const Selector& selector);

}  // namespace grover::cli
