#pragma once

#include <string>
#include <string_view>

#include "grover_cli/report.hpp"

namespace grover::cli {

enum class Format { text, json, csv };

Format parse_format(std::string_view text);

std::string render(const RunReport& report, Format format);

std::string render_text(const RunReport& report);
std::string render_json(const RunReport& report);

/// The report's main table: spectra for spectrum, spectral evidence for
/// period, certificates for pst, sweep tables for verify (one block per suite).
std::string render_csv(const RunReport& report);

}  // namespace grover::cli
