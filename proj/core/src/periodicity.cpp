#include "grover/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "grover/errors.hpp"
#include "grover/numtheory.hpp"

namespace grover {
namespace {

constexpr double kIntegralTol = 1e-6;

/// Distinct eigenvalues rounded to integers; throws if any is not integral.
std::set<std::int64_t> integral_values(const SpectrumReport& spectrum) {
  if (spectrum.source != SpectrumSource::adjacency) {
    throw DomainError("expected an adjacency spectrum");
  }
  std::set<std::int64_t> out;
  for (double v : spectrum.distinct()) {
    const double r = std::round(v);
    if (std::abs(v - r) > kIntegralTol) {
      throw DomainError("spectrum is not integral: eigenvalue " + std::to_string(v));
    }
    out.insert(static_cast<std::int64_t>(r));
  }
  return out;
}

std::int64_t lcm_of(const std::vector<OrderEvidence>& evidence) {
  std::int64_t result = 1;
  for (const auto& e : evidence) result = std::lcm(result, static_cast<std::int64_t>(*e.order));
  return result;
}

}  // namespace

std::string_view to_string(PeriodMethod method) {
  switch (method) {
    case PeriodMethod::spectral: return "spectral";
    case PeriodMethod::bruteforce: return "bruteforce";
    case PeriodMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

std::string_view to_string(ClassificationCategory category) {
  switch (category) {
    case ClassificationCategory::c6: return "C6";
    case ClassificationCategory::complete_bipartite: return "complete_bipartite";
    case ClassificationCategory::complete_tripartite: return "complete_tripartite";
    case ClassificationCategory::spectrum_k_half_zero: return "spectrum_k_half_zero";
    case ClassificationCategory::spectrum_pm_k_half_zero: return "spectrum_pm_k_half_zero";
    case ClassificationCategory::not_periodic: return "not_periodic";
  }
  return "unknown";
}

bool is_periodic_integral_regular(const SpectrumReport& spectrum, int k) {
  if (k < 1) throw DomainError("degree must be >= 1");
  const auto values = integral_values(spectrum);
  std::set<std::int64_t> allowed{k, -k, 0};
  if (k % 2 == 0) {
    allowed.insert(k / 2);
    allowed.insert(-k / 2);
  }
  return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return allowed.contains(v); });
}

std::optional<int> angle_order_of(double theta, int q_max, double tol) {
  const double turns = theta / (2.0 * std::numbers::pi);
  for (int q = 1; q <= q_max; ++q) {
    const double x = q * turns;
    if (std::abs(x - std::round(x)) * 2.0 * std::numbers::pi < tol) return q;
  }
  return std::nullopt;
}

std::optional<int> angle_order(double mu, int q_max, double tol) {
  if (std::abs(mu) > 1.0 + 1e-12) throw DomainError("angle_order: |mu| > 1");
  return angle_order_of(std::acos(std::clamp(mu, -1.0, 1.0)), q_max, tol);
}

PeriodicityReport period_spectral(const SpectrumReport& disc_spectrum, std::size_t edges,
                                  std::size_t vertices, bool bipartite, int q_max) {
  const std::vector<double> mus = disc_spectrum.expanded();
  const SpectrumReport evolution = spectral_map(mus, edges, vertices, bipartite);
  PeriodicityReport report;
  report.method = PeriodMethod::spectral;
  report.periodic = true;
  for (const auto& e : evolution.eigenvalues) {
    const auto order = angle_order_of(e.value, q_max);
    report.evidence.push_back({e.value, order});
    if (!order) report.periodic = false;
  }
  if (report.periodic) report.period = lcm_of(report.evidence);
  return report;
}

PeriodicityReport period_bruteforce(const WalkOperators& ops, int tau_max, double tol) {
  if (tau_max < 1) throw DomainError("period_bruteforce: tau_max must be >= 1");
  const auto m2 = static_cast<Eigen::Index>(ops.arc_count());
  const CMatrix identity = CMatrix::Identity(m2, m2);
  PeriodicityReport report;
  report.method = PeriodMethod::bruteforce;
  CMatrix power = identity;
  for (int tau = 1; tau <= tau_max; ++tau) {
    power = ops.apply_evolution(power);
    if (max_abs_diff(power, identity) < tol) {
      report.periodic = true;
      report.period = tau;
      return report;
    }
  }
  return report;
}

bool uc_periodicity_predicted(std::int64_t n) {
  if (n < 2) throw DomainError("uc_periodicity_predicted: n must be >= 2");
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

PeriodicityReport uc_period_closed_form(std::int64_t n) {
  if (n < 2) throw DomainError("uc_period_closed_form: n must be >= 2");
  const std::int64_t phi = numtheory::euler_phi(n);
  std::set<std::int64_t> lambdas;
  for (std::int64_t j = 0; j < n; ++j) lambdas.insert(numtheory::ramanujan_closed(j, n));

  PeriodicityReport report;
  report.method = PeriodMethod::closed_form;
  report.periodic = true;
  constexpr double pi = std::numbers::pi;
  std::set<std::pair<double, int>> seen;
  auto add = [&](double angle, std::optional<int> order) {
    if (order) {
      if (seen.emplace(angle, *order).second) report.evidence.push_back({angle, order});
    } else {
      report.evidence.push_back({angle, std::nullopt});
      report.periodic = false;
    }
  };
  for (std::int64_t lambda : lambdas) {
    // mu = lambda / phi; periodic values have 2 mu in {-2, -1, 0, 1, 2}.
    if ((2 * lambda) % phi != 0) {
      add(std::acos(static_cast<double>(lambda) / static_cast<double>(phi)), std::nullopt);
      continue;
    }
    switch (2 * lambda / phi) {
      case 2: add(0.0, 1); break;
      case 1: add(pi / 3, 6); add(5 * pi / 3, 6); break;
      case 0: add(pi / 2, 4); add(3 * pi / 2, 4); break;
      case -1: add(2 * pi / 3, 3); add(4 * pi / 3, 3); break;
      case -2: add(pi, 2); break;
      default: throw ConsistencyError("Ramanujan sum exceeds phi(n)");
    }
  }
  // Extra eigenvalues +1 (b1 copies) and -1 (b1 - 1 + [n even] copies);
  // UC(n) is bipartite exactly when n is even.
  const std::int64_t b1 = n * phi / 2 - n + 1;
  if (b1 > 0) add(0.0, 1);
  if (b1 - 1 + (n % 2 == 0 ? 1 : 0) > 0) add(pi, 2);
  std::sort(report.evidence.begin(), report.evidence.end(),
            [](const OrderEvidence& a, const OrderEvidence& b) { return a.angle < b.angle; });
  if (report.periodic) report.period = lcm_of(report.evidence);
  return report;
}

ClassificationLabel classify_integral_regular_periodic(const SpectrumReport& spectrum, int k,
                                                       std::size_t n, bool bipartite) {
  using C = ClassificationCategory;
  if (!is_periodic_integral_regular(spectrum, k)) return {C::not_periodic};
  const auto values = integral_values(spectrum);
  const std::int64_t kk = k;
  const std::int64_t h = kk / 2;
  auto is = [&](std::set<std::int64_t> expected) { return values == expected; };
  auto require_order = [&](std::size_t expected, const char* what) {
    if (n != expected) {
      throw DomainError(std::string(what) + " spectrum needs " + std::to_string(expected) +
                        " vertices, got " + std::to_string(n));
    }
  };
  auto unrealisable = [&]() -> ClassificationLabel {
    throw DomainError("no connected " + std::to_string(k) + "-regular " +
                      (bipartite ? "bipartite" : "non-bipartite") + " graph has this spectrum");
  };
  if (values.contains(-kk) != bipartite) {
    throw DomainError("-k is an eigenvalue exactly when the graph is bipartite");
  }

  if (k % 2 == 1) {
    // Odd degree: spectrum {+-k} (K_{1,1}) or {+-k, 0} (K_{k,k}).
    if (is({kk, -kk}) || is({kk, 0, -kk})) {
      require_order(2 * static_cast<std::size_t>(k), "K_{k,k}");
      return {C::complete_bipartite};
    }
    return unrealisable();
  }
  if (k == 2) {
    // The integral cycles C_3 = K_{1,1,1}, C_4 = K_{2,2} and C_6.
    if (is({2, -1})) return require_order(3, "C_3"), ClassificationLabel{C::complete_tripartite};
    if (is({2, 0, -2})) return require_order(4, "C_4"), ClassificationLabel{C::complete_bipartite};
    if (is({2, 1, -1, -2})) return require_order(6, "C_6"), ClassificationLabel{C::c6};
    return unrealisable();
  }
  if (!bipartite) {
    if (is({kk, 0, -h})) {
      require_order(3 * static_cast<std::size_t>(h), "K_{m,m,m}");
      return {C::complete_tripartite};
    }
    if (is({kk, h, 0, -h})) return {C::spectrum_k_half_zero};
    return unrealisable();
  }
  if (is({kk, 0, -kk})) {
    require_order(2 * static_cast<std::size_t>(k), "K_{k,k}");
    return {C::complete_bipartite};
  }
  if (is({kk, h, 0, -h, -kk})) return {C::spectrum_pm_k_half_zero};
  return unrealisable();
}

}  // namespace grover
