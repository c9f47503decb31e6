#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>

#include "grover_cli/report.hpp"

namespace grover::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitConsistency = 3 };

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

struct Outcome {
  RunReport report;
  int exit_code = kExitOk;
};

/// Walks with more arcs than this are not built densely; brute-force checks
/// are skipped or refused above it.
inline constexpr std::size_t kMaxDenseArcs = 2400;

Outcome cmd_spectrum(std::string_view selector, const Tolerances& tol);

Outcome cmd_period(std::string_view selector, int tau_max, const Tolerances& tol);

/// tau_max defaults to 100; for periodic graphs the search stops at the period.
Outcome cmd_pst(std::string_view selector, std::optional<int> tau_max, const Tolerances& tol);

enum class Suite { thm36, thm42, thm46, sec5, all };

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);

struct VerifyOptions {
  Suite suite = Suite::all;
  std::optional<int> n_max;  ///< per-suite default when unset
  int samples = 200;
  int tau_max = 50;
  std::uint64_t seed = 20240917;
};

inline constexpr int kMaxSpectralSweep = 100;
inline constexpr int kMaxBruteforceSweep = 30;

Outcome cmd_verify(const VerifyOptions& options, const Tolerances& tol);

}  // namespace grover::cli
