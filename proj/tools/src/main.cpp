#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grover_cli/commands.hpp"
#include "grover_cli/render.hpp"

int main(int argc, char** argv) {
  using namespace grover::cli;

  CLI::App app{"Grover walks on finite graphs: spectra, periodicity, perfect state transfer"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  double tol_identity = 1e-9;
  double tol_amplitude = 1e-7;
  double tol_cluster = 1e-6;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");
  app.add_option("--tol-identity", tol_identity, "Tolerance for U^tau = I and unitarity checks");
  app.add_option("--tol-amplitude", tol_amplitude, "Tolerance for PST amplitude moduli");
  app.add_option("--tol-cluster", tol_cluster, "Tolerance for clustering eigenvalues");

  std::string selector;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency, discriminant and evolution spectra");
  spectrum->add_option("selector", selector, "Graph selector")->required();

  int period_tau_max = 144;
  auto* period = app.add_subcommand("period", "Periodicity by spectral and brute-force methods");
  period->add_option("selector", selector, "Graph selector")->required();
  period->add_option("--tau-max", period_tau_max, "Brute-force search bound");

  std::optional<int> pst_tau_max;
  auto* pst = app.add_subcommand("pst", "Perfect state transfer certificates");
  pst->add_option("selector", selector, "Graph selector")->required();
  pst->add_option("--tau-max", pst_tau_max, "Search bound when the graph is not periodic (default 100)");

  std::string suite;
  VerifyOptions verify_options;
  std::optional<int> n_max;
  auto* verify = app.add_subcommand("verify", "Classification sweeps with a pass/fail table");
  verify->add_option("suite", suite, "thm36, thm42, thm46, sec5 or all")->required();
  verify->add_option("--n-max", n_max, "Sweep bound");
  verify->add_option("--samples", verify_options.samples, "Random circulants for thm42");
  verify->add_option("--tau-max", verify_options.tau_max, "Time bound for thm42");
  verify->add_option("--seed", verify_options.seed, "Random seed for thm42");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Tolerances tol = make_tolerances(tol_identity, tol_amplitude, tol_cluster);
    const Format fmt = parse_format(format);
    Outcome outcome;
    if (*spectrum) {
      outcome = cmd_spectrum(selector, tol);
    } else if (*period) {
      outcome = cmd_period(selector, period_tau_max, tol);
    } else if (*pst) {
      outcome = cmd_pst(selector, pst_tau_max, tol);
    } else {
      verify_options.suite = parse_suite(suite);
      verify_options.n_max = n_max;
      outcome = cmd_verify(verify_options, tol);
    }

    const std::string rendered = render(outcome.report, fmt);
    if (output.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(output);
      if (!file || !(file << rendered)) {
        std::cerr << "error: cannot write " << output << '\n';
        return kExitValidation;
      }
    }
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
