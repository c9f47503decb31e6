#include "grover_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "grover/grover.hpp"
#include "grover_cli/selector.hpp"

namespace grover::cli {
namespace {

constexpr double kAngleTol = 1e-7;
constexpr double kHoffmanTol = 1e-8;

using Cell = std::tuple<std::size_t, Vertex, Vertex>;  // (tau, u, v)

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

RunReport make_report(std::string command, std::string selector, const Tolerances& tol) {
  RunReport r;
  r.command = std::move(command);
  r.selector = std::move(selector);
  r.tolerances = tol;
  return r;
}

std::string join(const std::vector<std::size_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

Json graph_summary(const Graph& g, std::string_view kind) {
  Json j;
  j["kind"] = kind;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["arcs"] = 2 * g.edge_count();
  j["regular_degree"] = optional_json(g.regular_degree());
  j["bipartite"] = g.is_bipartite();
  return j;
}

Json spectrum_json(const SpectrumReport& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigenvalues) {
    eigs.push_back({{"value", format_value(e.value)}, {"multiplicity", e.multiplicity}});
  }
  return {{"exact", s.exact}, {"eigenvalues", eigs}};
}

Json evolution_json(const SpectrumReport& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigenvalues) {
    eigs.push_back({{"angle", format_value(e.value)},
                    {"re", format_value(std::cos(e.value))},
                    {"im", format_value(std::sin(e.value))},
                    {"multiplicity", e.multiplicity}});
  }
  return {{"exact", s.exact}, {"eigenvalues", eigs}};
}

Json periodicity_json(const PeriodicityReport& p) {
  Json j{{"periodic", p.periodic}, {"period", optional_json(p.period)}, {"method", to_string(p.method)}};
  if (!p.evidence.empty()) {
    Json ev = Json::array();
    for (const auto& e : p.evidence) {
      ev.push_back({{"angle", format_value(e.angle)}, {"order", optional_json(e.order)}});
    }
    j["evidence"] = ev;
  }
  return j;
}

RMatrix discriminant_matrix(const Graph& g) {
  RMatrix p = g.adjacency_matrix();
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (p(i, j) != 0.0) {
        p(i, j) /= std::sqrt(static_cast<double>(g.degree(static_cast<Vertex>(i)) *
                                                 g.degree(static_cast<Vertex>(j))));
      }
    }
  }
  return p;
}

struct Spectra {
  SpectrumReport adjacency;
  SpectrumReport discriminant;
  SpectrumReport evolution;
};

Spectra compute_spectra(const ResolvedGraph& rg, double cluster_tol) {
  const Graph& g = rg.graph;
  Spectra s;
  if (rg.uc_order) {
    s.adjacency = uc_spectrum(*rg.uc_order);
  } else if (rg.circulant) {
    s.adjacency = circulant_spectrum(*rg.circulant);
  } else {
    s.adjacency = numeric_spectrum(g.adjacency_matrix(), cluster_tol, SpectrumSource::adjacency);
  }
  if (const auto k = g.regular_degree()) {
    s.discriminant = s.adjacency.scaled(1.0 / static_cast<double>(*k), SpectrumSource::discriminant);
  } else {
    s.discriminant = numeric_spectrum(discriminant_matrix(g), cluster_tol, SpectrumSource::discriminant);
  }
  const auto mus = s.discriminant.expanded();
  s.evolution = spectral_map(mus, g.edge_count(), g.vertex_count(), g.is_bipartite(), cluster_tol);
  s.evolution.exact = s.discriminant.exact;
  return s;
}

bool dense_ok(const Graph& g) { return 2 * g.edge_count() <= kMaxDenseArcs; }

Json skipped(const Graph& g) {
  return {{"status", "skipped"},
          {"reason", std::to_string(2 * g.edge_count()) + " arcs exceeds the dense limit of " +
                         std::to_string(kMaxDenseArcs)}};
}

Json certificate_json(const PSTCertificate& c, const Graph& g) {
  Json j{{"source", c.source},
         {"target", c.target},
         {"time", c.time},
         {"phase_re", format_value(c.phase.real())},
         {"phase_im", format_value(c.phase.imag())},
         {"modulus", format_value(std::abs(c.phase))},
         {"method", to_string(c.method)}};
  if (!g.labels().empty()) {
    j["source_label"] = g.labels().at(c.source);
    j["target_label"] = g.labels().at(c.target);
  }
  return j;
}

struct CellComparison {
  std::size_t cells = 0;
  std::size_t mismatches = 0;
  std::set<Cell> by_criterion;
  std::optional<Cell> first_mismatch;
};

CellComparison compare_cells(std::span<const double> mu, const std::set<Cell>& by_bruteforce,
                             std::size_t horizon, double amplitude_tol) {
  CellComparison cmp;
  const std::size_t n = mu.size();
  for (std::size_t tau = 1; tau <= horizon; ++tau) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        ++cmp.cells;
        const bool crit = pst_criterion_indexed(mu, u, v, tau, amplitude_tol).pst;
        if (crit) cmp.by_criterion.emplace(tau, u, v);
        if (crit != by_bruteforce.contains({tau, u, v})) {
          ++cmp.mismatches;
          if (!cmp.first_mismatch) cmp.first_mismatch = Cell{tau, u, v};
        }
      }
    }
  }
  return cmp;
}

void require_range(int value, int lo, int hi, std::string_view what) {
  if (value < lo || value > hi) {
    throw ValidationError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(value));
  }
}

struct SuiteResult {
  bool passed = true;
  Json body = Json::object();
};

SuiteResult verify_thm36(int n_max, const Tolerances& tol) {
  require_range(n_max, 2, kMaxSpectralSweep, "thm36 n_max");
  SuiteResult out;
  Json rows = Json::array();
  Json periodic_at = Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const bool predicted = uc_periodicity_predicted(n);
    const auto phi = static_cast<std::size_t>(numtheory::euler_phi(n));
    const auto nv = static_cast<std::size_t>(n);
    const SpectrumReport disc =
        uc_spectrum(n).scaled(1.0 / static_cast<double>(phi), SpectrumSource::discriminant);
    const PeriodicityReport spectral = period_spectral(disc, nv * phi / 2, nv, n % 2 == 0);
    const PeriodicityReport closed = uc_period_closed_form(n);

    bool ok = spectral.periodic == predicted && closed.periodic == predicted &&
              spectral.period == closed.period;
    Json row{{"n", n},
             {"predicted", predicted},
             {"spectral_periodic", spectral.periodic},
             {"spectral_period", optional_json(spectral.period)},
             {"closed_form_period", optional_json(closed.period)}};
    if (n <= kMaxBruteforceSweep) {
      const Graph g = unitary_cayley(n);
      const WalkOperators ops = build_operators(g, arc_space(g), tol.identity);
      const PeriodicityReport brute = period_bruteforce(ops, kDefaultTauMax, tol.identity);
      ok = ok && brute.periodic == predicted && brute.period == spectral.period;
      row["bruteforce_periodic"] = brute.periodic;
      row["bruteforce_period"] = optional_json(brute.period);
    } else {
      row["bruteforce_periodic"] = nullptr;
      row["bruteforce_period"] = nullptr;
    }
    row["pass"] = ok;
    if (spectral.periodic) periodic_at.push_back(n);
    if (!ok && out.passed) {
      out.passed = false;
      out.body["counterexample"] = row;
    }
    rows.push_back(std::move(row));
  }
  out.body["n_max"] = n_max;
  out.body["bruteforce_up_to"] = std::min(n_max, kMaxBruteforceSweep);
  out.body["periodic_at"] = periodic_at;
  out.body["table"] = rows;
  return out;
}

CirculantSpec random_connected_circulant(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max) {
  std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
  std::bernoulli_distribution coin(0.4);
  while (true) {
    const std::size_t n = pick_n(rng);
    std::set<std::size_t> c;
    for (std::size_t s = 1; s <= n / 2; ++s) {
      if (coin(rng)) {
        c.insert(s);
        c.insert(n - s);
      }
    }
    if (c.empty()) continue;
    std::size_t g = n;
    for (std::size_t s : c) g = std::gcd(g, s);
    if (g == 1) return {n, {c.begin(), c.end()}};
  }
}

SuiteResult verify_thm42(const VerifyOptions& opt, int n_max, const Tolerances& tol) {
  require_range(n_max, 4, kMaxBruteforceSweep, "thm42 n_max");
  require_range(opt.samples, 1, 100000, "thm42 samples");
  require_range(opt.tau_max, 1, 1000, "thm42 tau_max");
  SuiteResult out;
  std::mt19937_64 rng(opt.seed);
  Json rows = Json::array();
  std::optional<std::tuple<std::size_t, std::size_t, Vertex, Vertex>> worst;  // (n, tau, u, v)
  Json counterexample;
  std::size_t total_cells = 0;
  for (int sample = 0; sample < opt.samples; ++sample) {
    const CirculantSpec spec = random_connected_circulant(rng, 4, static_cast<std::size_t>(n_max));
    const Graph g = cayley(spec);
    const WalkOperators ops = build_operators(g, arc_space(g), tol.identity);
    const auto horizon = static_cast<std::size_t>(opt.tau_max);
    std::set<Cell> by_bruteforce;
    for (const auto& c : pst_bruteforce(ops, horizon, tol.amplitude)) {
      by_bruteforce.emplace(c.time, c.source, c.target);
    }
    const auto mu = circulant_discriminant_indexed(spec);
    const CellComparison cmp = compare_cells(mu, by_bruteforce, horizon, tol.amplitude);
    total_cells += cmp.cells;
    rows.push_back({{"sample", sample},
                    {"n", spec.n},
                    {"connection_set", join(spec.connection_set)},
                    {"cells", cmp.cells},
                    {"bruteforce_pst", by_bruteforce.size()},
                    {"criterion_pst", cmp.by_criterion.size()},
                    {"mismatches", cmp.mismatches},
                    {"pass", cmp.mismatches == 0}});
    if (cmp.first_mismatch) {
      out.passed = false;
      const auto [tau, u, v] = *cmp.first_mismatch;
      const auto key = std::make_tuple(spec.n, tau, u, v);
      if (!worst || key < *worst) {
        worst = key;
        counterexample = {{"n", spec.n},
                          {"connection_set", join(spec.connection_set)},
                          {"u", u},
                          {"v", v},
                          {"tau", tau},
                          {"criterion", cmp.by_criterion.contains({tau, u, v})},
                          {"bruteforce", by_bruteforce.contains({tau, u, v})}};
      }
    }
  }
  out.body["n_range"] = {4, n_max};
  out.body["samples"] = opt.samples;
  out.body["tau_max"] = opt.tau_max;
  out.body["seed"] = opt.seed;
  out.body["cells"] = total_cells;
  if (!out.passed) out.body["counterexample"] = counterexample;
  out.body["table"] = rows;
  return out;
}

SuiteResult verify_thm46(int n_max, const Tolerances& tol) {
  require_range(n_max, 2, kMaxBruteforceSweep, "thm46 n_max");
  SuiteResult out;
  std::vector<UcPstVerdict> verdicts;
  try {
    verdicts = uc_pst_classification(n_max);
  } catch (const ConsistencyError& e) {
    out.passed = false;
    out.body["counterexample"] = {{"error", e.what()}};
    return out;
  }
  const std::set<std::int64_t> expected_all{2, 4, 6, 12};
  Json rows = Json::array();
  Json pst_at = Json::array();
  for (const auto& v : verdicts) {
    const bool expected = expected_all.contains(v.n);
    bool ok = v.pst == expected;
    if (v.n == 12) {
      ok = ok && v.certificates.size() == 12;
      for (const auto& c : v.certificates) {
        ok = ok && c.time == 6 && c.target == (c.source + 6) % 12 &&
             std::abs(std::abs(c.phase) - 1.0) <= tol.amplitude;
      }
    }
    const PeriodicityReport period = uc_period_closed_form(v.n);
    Json row{{"n", v.n},
             {"period", optional_json(period.period)},
             {"pst", v.pst},
             {"certificates", v.certificates.size()},
             {"reason", v.reason},
             {"pass", ok}};
    if (v.pst) pst_at.push_back(v.n);
    if (!ok && out.passed) {
      out.passed = false;
      out.body["counterexample"] = row;
    }
    rows.push_back(std::move(row));
  }
  out.body["n_max"] = n_max;
  out.body["pst_at"] = pst_at;
  out.body["table"] = rows;
  return out;
}

SuiteResult verify_sec5() {
  struct Fixture {
    std::string name;
    Graph graph;
    SpectrumReport adjacency;
    ClassificationCategory expected;
  };
  auto numeric = [](const Graph& g) { return numeric_spectrum(g.adjacency_matrix()); };
  const std::int64_t kbip[] = {3};
  const std::int64_t ktri[] = {2};
  const std::int64_t ham[] = {3, 3};
  const Graph c6 = cayley({6, {1, 5}});
  const Graph k33 = named_graph(GraphFamily::complete_bipartite, kbip);
  const Graph k222 = named_graph(GraphFamily::complete_tripartite, ktri);
  const Graph h33 = named_graph(GraphFamily::hamming, ham);
  const Graph uc12 = unitary_cayley(12);
  const std::vector<Fixture> fixtures{
      {"C6", c6, circulant_spectrum({6, {1, 5}}), ClassificationCategory::c6},
      {"K3,3", k33, numeric(k33), ClassificationCategory::complete_bipartite},
      {"K2,2,2", k222, numeric(k222), ClassificationCategory::complete_tripartite},
      {"H(3,3)", h33, numeric(h33), ClassificationCategory::spectrum_k_half_zero},
      {"UC(12)", uc12, uc_spectrum(12), ClassificationCategory::spectrum_pm_k_half_zero},
  };

  SuiteResult out;
  Json rows = Json::array();
  for (const auto& f : fixtures) {
    const Graph& g = f.graph;
    const int k = static_cast<int>(*g.regular_degree());
    const bool periodic = is_periodic_integral_regular(f.adjacency, k);
    const SpectrumReport disc = f.adjacency.scaled(1.0 / k, SpectrumSource::discriminant);
    const PeriodicityReport period =
        period_spectral(disc, g.edge_count(), g.vertex_count(), g.is_bipartite());
    const HoffmanResult hoffman = hoffman_check(g, f.adjacency, kHoffmanTol);
    const bool walk_regular = is_walk_regular(g, 8);
    const ClassificationLabel label =
        classify_integral_regular_periodic(f.adjacency, k, g.vertex_count(), g.is_bipartite());
    const bool ok = periodic && hoffman.residual < kHoffmanTol && walk_regular &&
                    label.category == f.expected;
    Json row{{"graph", f.name},
             {"degree", k},
             {"periodic", periodic},
             {"period", optional_json(period.period)},
             {"hoffman_residual", format_number(hoffman.residual)},
             {"walk_regular", walk_regular},
             {"label", to_string(label.category)},
             {"expected", to_string(f.expected)},
             {"pass", ok}};
    if (!ok && out.passed) {
      out.passed = false;
      out.body["counterexample"] = row;
    }
    rows.push_back(std::move(row));
  }

  Json checks = Json::array();
  {
    std::vector<double> distinct = numeric(h33).distinct();
    std::string observed;
    for (double d : distinct) observed += (observed.empty() ? "" : ",") + format_value(d);
    const bool ok = observed == "6,3,0,-3";
    checks.push_back({{"check", "H(3,3) distinct adjacency eigenvalues"},
                      {"expected", "6,3,0,-3"},
                      {"observed", observed},
                      {"pass", ok}});
    out.passed = out.passed && ok;
  }
  {
    const std::int64_t three[] = {3};
    const bool wr = is_walk_regular(named_graph(GraphFamily::path, three), 8);
    checks.push_back({{"check", "P3 walk-regular"}, {"expected", false}, {"observed", wr}, {"pass", !wr}});
    out.passed = out.passed && !wr;
  }
  out.body["checks"] = checks;
  out.body["table"] = rows;
  return out;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  if (dynamic_cast<const ConsistencyError*>(&e)) return kExitConsistency;
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const DomainError*>(&e)) {
    return kExitValidation;
  }
  return kExitConsistency;
}

Outcome cmd_spectrum(std::string_view text, const Tolerances& tol) {
  const Selector sel = parse_selector(text);
  const ResolvedGraph rg = resolve(sel);
  const Graph& g = rg.graph;
  const Spectra s = compute_spectra(rg, tol.cluster);

  Outcome out{make_report("spectrum", sel.text, tol)};
  Json& r = out.report.results;
  r["graph"] = graph_summary(g, to_string(sel.kind));
  r["adjacency"] = spectrum_json(s.adjacency);
  r["discriminant"] = spectrum_json(s.discriminant);
  r["evolution"] = evolution_json(s.evolution);
  if (dense_ok(g)) {
    const WalkOperators ops = build_operators(g, arc_space(g), tol.identity);
    const SpectrumReport numeric = numeric_evolution_spectrum(ops.evolution(), kAngleTol);
    const bool agree = same_angle_multiset(s.evolution.expanded(), numeric.expanded(), kAngleTol);
    r["spectral_map_check"] = {{"status", agree ? "agree" : "mismatch"},
                               {"angle_tolerance", format_number(kAngleTol)}};
    if (!agree) out.exit_code = kExitConsistency;
  } else {
    r["spectral_map_check"] = skipped(g);
  }
  return out;
}

Outcome cmd_period(std::string_view text, int tau_max, const Tolerances& tol) {
  if (tau_max < 1) throw UsageError("--tau-max must be >= 1");
  const Selector sel = parse_selector(text);
  const ResolvedGraph rg = resolve(sel);
  const Graph& g = rg.graph;
  const Spectra s = compute_spectra(rg, tol.cluster);
  const PeriodicityReport spectral =
      period_spectral(s.discriminant, g.edge_count(), g.vertex_count(), g.is_bipartite());

  Outcome out{make_report("period", sel.text, tol)};
  Json& r = out.report.results;
  r["graph"] = graph_summary(g, to_string(sel.kind));
  r["tau_max"] = tau_max;
  r["spectral"] = periodicity_json(spectral);

  bool agree = true;
  if (dense_ok(g)) {
    const WalkOperators ops = build_operators(g, arc_space(g), tol.identity);
    const PeriodicityReport brute = period_bruteforce(ops, tau_max, tol.identity);
    r["bruteforce"] = periodicity_json(brute);
    if (brute.periodic) {
      agree = spectral.period == brute.period;
    } else {
      // A spectral period beyond the search horizon is not a disagreement.
      agree = !spectral.periodic || *spectral.period > tau_max;
    }
  } else {
    r["bruteforce"] = skipped(g);
  }
  if (rg.uc_order) {
    const PeriodicityReport closed = uc_period_closed_form(*rg.uc_order);
    r["closed_form"] = periodicity_json(closed);
    agree = agree && closed.period == spectral.period;
  }
  r["periodic"] = spectral.periodic;
  r["period"] = optional_json(spectral.period);
  r["agree"] = agree;
  if (!agree) out.exit_code = kExitConsistency;
  return out;
}

Outcome cmd_pst(std::string_view text, std::optional<int> tau_max, const Tolerances& tol) {
  const int t_max = tau_max.value_or(kDefaultPstTauMax);
  if (t_max < 1) throw UsageError("--tau-max must be >= 1");
  const Selector sel = parse_selector(text);
  const ResolvedGraph rg = resolve(sel);
  const Graph& g = rg.graph;
  if (!dense_ok(g)) {
    throw ValidationError("pst: " + std::to_string(2 * g.edge_count()) +
                          " arcs exceeds the brute-force limit of " + std::to_string(kMaxDenseArcs));
  }
  const WalkOperators ops = build_operators(g, arc_space(g), tol.identity);
  const PeriodicityReport period = period_bruteforce(ops, kDefaultTauMax, tol.identity);
  const auto horizon = static_cast<std::size_t>(
      period.periodic ? std::min<std::int64_t>(*period.period, t_max) : t_max);
  auto certificates = pst_bruteforce(ops, horizon, tol.amplitude);

  Outcome out{make_report("pst", sel.text, tol)};
  Json& r = out.report.results;
  r["graph"] = graph_summary(g, to_string(sel.kind));
  r["periodic"] = period.periodic;
  r["period"] = optional_json(period.period);
  r["horizon"] = horizon;

  if (rg.circulant) {
    const CirculantSpec& spec = *rg.circulant;
    std::set<Cell> by_bruteforce;
    for (const auto& c : certificates) by_bruteforce.emplace(c.time, c.source, c.target);
    const auto mu = circulant_discriminant_indexed(spec);
    const CellComparison cmp = compare_cells(mu, by_bruteforce, horizon, tol.amplitude);
    for (auto& c : certificates) {
      if (cmp.by_criterion.contains({c.time, c.source, c.target})) c.method = PstMethod::both;
    }

    // Unimodularity and alternation depend on tau only; antipodality on v - u only.
    Json per_tau = Json::array();
    for (std::size_t tau = 1; tau <= horizon; ++tau) {
      const auto d = pst_criterion_indexed(mu, 0, spec.n / 2, tau, tol.amplitude).diagnostics;
      std::string signs;
      for (int b : d.sign_bits) signs += b ? '1' : '0';
      per_tau.push_back({{"tau", tau},
                         {"all_unimodular", d.all_unimodular},
                         {"alternating", d.alternating},
                         {"sign_bits", signs},
                         {"min_margin", format_value(d.min_margin)},
                         {"low_margin", d.low_margin}});
    }
    Json crit{{"connection_set", join(spec.connection_set)},
              {"no_go_equal_eigenvalues", pst_no_go_equal_eigs(spec)},
              {"cells", cmp.cells},
              {"mismatches", cmp.mismatches},
              {"per_tau", per_tau}};
    if (cmp.first_mismatch) {
      const auto [tau, u, v] = *cmp.first_mismatch;
      crit["counterexample"] = {{"u", u}, {"v", v}, {"tau", tau},
                                {"criterion", cmp.by_criterion.contains({tau, u, v})},
                                {"bruteforce", by_bruteforce.contains({tau, u, v})}};
      out.exit_code = kExitConsistency;
    }
    r["criterion"] = crit;
  }

  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(certificate_json(c, g));
  r["certificates"] = certs;
  return out;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::thm36: return "thm36";
    case Suite::thm42: return "thm42";
    case Suite::thm46: return "thm46";
    case Suite::sec5: return "sec5";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::thm36, Suite::thm42, Suite::thm46, Suite::sec5, Suite::all}) {
    if (text == to_string(s)) return s;
  }
  throw UsageError("unknown suite '" + std::string(text) + "'; expected thm36, thm42, thm46, sec5 or all");
}

Outcome cmd_verify(const VerifyOptions& options, const Tolerances& tol) {
  const bool all = options.suite == Suite::all;
  auto n_for = [&](int fallback, int cap) {
    if (!options.n_max) return fallback;
    return all ? std::min(*options.n_max, cap) : *options.n_max;
  };

  Outcome out{make_report("verify", std::string(to_string(options.suite)), tol)};
  Json suites = Json::object();
  bool passed = true;
  auto record = [&](Suite s, SuiteResult result) {
    passed = passed && result.passed;
    Json body{{"passed", result.passed}};
    body.update(result.body);
    suites[std::string(to_string(s))] = std::move(body);
  };
  if (all || options.suite == Suite::thm36) {
    record(Suite::thm36, verify_thm36(n_for(60, kMaxSpectralSweep), tol));
  }
  if (all || options.suite == Suite::thm42) {
    record(Suite::thm42, verify_thm42(options, n_for(20, kMaxBruteforceSweep), tol));
  }
  if (all || options.suite == Suite::thm46) {
    record(Suite::thm46, verify_thm46(n_for(24, kMaxBruteforceSweep), tol));
  }
  if (all || options.suite == Suite::sec5) record(Suite::sec5, verify_sec5());

  out.report.results["passed"] = passed;
  out.report.results["suites"] = std::move(suites);
  out.exit_code = passed ? kExitOk : kExitConsistency;
  return out;
}

}  // namespace grover::cli
