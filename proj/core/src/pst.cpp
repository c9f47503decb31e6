#include "grover/pst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <tuple>

#include "grover/errors.hpp"
#include "grover/periodicity.hpp"

namespace grover {
namespace {

constexpr double kLowMarginThreshold = 1e-3;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

CriterionResult evaluate_criterion(std::span<const double> mu, std::size_t n, Vertex u, Vertex v,
                                   std::size_t tau, double tol) {
  CriterionResult result;
  auto& diag = result.diagnostics;
  diag.antipodal = n % 2 == 0 && (u + n - v) % n == n / 2;

  diag.all_unimodular = true;
  diag.min_margin = 1.0;
  diag.chebyshev_values.reserve(mu.size());
  diag.sign_bits.reserve(mu.size());
  for (double m : mu) {
    const double t = chebyshev(tau, m);
    diag.chebyshev_values.push_back(t);
    diag.sign_bits.push_back(t < 0 ? 1 : 0);
    const double gap = 1.0 - std::abs(t);
    if (gap > tol) diag.all_unimodular = false;
    // Values that are exactly +-1 carry no ambiguity; report the closest
    // inexact one.
    if (std::abs(gap) > 1e-12) diag.min_margin = std::min(diag.min_margin, std::abs(gap));
  }
  diag.low_margin = diag.min_margin < kLowMarginThreshold;

  diag.alternating = true;
  for (std::size_t j = 0; j + 1 < diag.sign_bits.size(); ++j) {
    if (diag.sign_bits[j] == diag.sign_bits[j + 1]) {
      diag.alternating = false;
      break;
    }
  }
  result.pst = diag.antipodal && diag.all_unimodular && diag.alternating;
  return result;
}

}  // namespace

std::string_view to_string(PstMethod method) {
  switch (method) {
    case PstMethod::criterion: return "criterion";
    case PstMethod::bruteforce: return "bruteforce";
    case PstMethod::both: return "both";
  }
  return "unknown";
}

double chebyshev(std::size_t tau, double x) {
  if (tau == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (std::size_t i = 1; i < tau; ++i) {
    const double next = 2.0 * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

ChebyshevEval chebyshev_checked(std::size_t tau, double x, double tol) {
  const double value = chebyshev(tau, x);
  if (std::abs(x) <= 1.0) {
    const double trig = std::cos(static_cast<double>(tau) * std::acos(x));
    if (std::abs(trig - value) > tol) {
      throw ConsistencyError("T_" + std::to_string(tau) + "(" + std::to_string(x) +
                             ") recurrence and cosine forms differ");
    }
  }
  return {tau, x, value};
}

RMatrix chebyshev_of_discriminant(std::span<const Eigenprojector> projs, std::size_t tau) {
  return apply_spectral(projs, [tau](double mu) { return chebyshev(tau, mu); });
}

RMatrix transfer_block(const WalkOperators& ops, std::size_t tau, double tol) {
  CMatrix x = ops.boundary().adjoint();
  for (std::size_t step = 0; step < tau; ++step) x = ops.apply_evolution(x);
  const CMatrix block = ops.boundary() * x;
  if (block.size() > 0 && block.imag().cwiseAbs().maxCoeff() > tol) {
    throw ConsistencyError("d U^tau d* has a non-real entry");
  }
  const RMatrix real_block = block.real();
  const auto projs = eigenprojectors(ops.discriminant());
  const double err = max_abs_diff(real_block, chebyshev_of_discriminant(projs, tau));
  if (err > tol) {
    throw ConsistencyError("d U^" + std::to_string(tau) + " d* differs from T(P) by " +
                           std::to_string(err));
  }
  return real_block;
}

std::vector<double> circulant_discriminant_indexed(const CirculantSpec& spec) {
  SpectrumReport adj = circulant_spectrum(spec);
  const double degree = static_cast<double>(spec.connection_set.size());
  for (double& v : adj.indexed) v /= degree;
  return adj.indexed;
}

CriterionResult pst_criterion_indexed(std::span<const double> mu, Vertex u, Vertex v,
                                      std::size_t tau, double tol) {
  const std::size_t n = mu.size();
  if (u >= n || v >= n) throw DomainError("pst_criterion_indexed: vertex out of range");
  if (u == v) throw DomainError("pst_criterion_indexed: source and target coincide");
  if (tau == 0) throw DomainError("pst_criterion_indexed: tau must be positive");
  return evaluate_criterion(mu, n, u, v, tau, tol);
}

CriterionResult pst_criterion_circulant(const CirculantSpec& spec, Vertex u, Vertex v,
                                        std::size_t tau, double tol) {
  spec.validate();
  if (u >= spec.n || v >= spec.n) throw DomainError("pst_criterion_circulant: vertex out of range");
  if (u == v) throw DomainError("pst_criterion_circulant: source and target coincide");
  if (tau == 0) throw DomainError("pst_criterion_circulant: tau must be positive");
  const auto mu = circulant_discriminant_indexed(spec);
  return evaluate_criterion(mu, spec.n, u, v, tau, tol);
}

bool pst_necessary_filter(std::span<const double> support, std::size_t tau, double tol) {
  return std::all_of(support.begin(), support.end(), [&](double mu) {
    const double t = std::abs(chebyshev(tau, mu));
    return t >= 1.0 - tol && t <= 1.0 + tol;
  });
}

std::vector<PSTCertificate> pst_bruteforce(const WalkOperators& ops, std::size_t tau_max, double tol) {
  if (tau_max < 1) throw DomainError("pst_bruteforce: tau_max must be >= 1");
  const std::size_t n = ops.vertex_count();
  const auto projs = eigenprojectors(ops.discriminant());
  const CMatrix states = ops.boundary().adjoint();  // column u is d* e_u
  CMatrix evolved = states;
  std::vector<PSTCertificate> out;
  for (std::size_t tau = 1; tau <= tau_max; ++tau) {
    evolved = ops.apply_evolution(evolved);
    // amplitudes(v, u) = <U^tau d* e_u, d* e_v>
    const CMatrix amplitudes = states.adjoint() * evolved;
    const double err = max_abs_diff(RMatrix(amplitudes.real()), chebyshev_of_discriminant(projs, tau));
    if (err > 1e-8 || amplitudes.imag().cwiseAbs().maxCoeff() > 1e-8) {
      throw ConsistencyError("transfer amplitudes at tau=" + std::to_string(tau) +
                             " disagree with T_tau(P) by " + std::to_string(err));
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const Complex gamma = amplitudes(idx(v), idx(u));
        if (std::abs(gamma) >= 1.0 - tol) {
          out.push_back({u, v, tau, gamma, PstMethod::bruteforce});
        }
      }
    }
  }
  return out;
}

bool pst_no_go_equal_eigs(const CirculantSpec& spec) {
  const auto lambda = circulant_spectrum(spec).indexed;
  for (std::size_t j = 0; j + 1 < lambda.size(); ++j) {
    if (std::abs(lambda[j] - lambda[j + 1]) < 1e-9) return true;
  }
  return false;
}

std::vector<UcPstVerdict> uc_pst_classification(std::int64_t n_max) {
  if (n_max < 2) throw DomainError("uc_pst_classification: n_max must be >= 2");
  std::vector<UcPstVerdict> verdicts;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    UcPstVerdict verdict;
    verdict.n = n;
    const PeriodicityReport period = uc_period_closed_form(n);
    if (!period.periodic) {
      verdict.reason = "not periodic, so no PST on a vertex-transitive graph";
      verdicts.push_back(std::move(verdict));
      continue;
    }
    const auto horizon = static_cast<std::size_t>(*period.period);
    const CirculantSpec spec = unitary_connection_set(n);
    const auto nv = static_cast<std::size_t>(n);
    const bool no_go = pst_no_go_equal_eigs(spec);

    const auto mu = circulant_discriminant_indexed(spec);
    std::set<std::tuple<std::size_t, Vertex, Vertex>> by_criterion;
    for (std::size_t tau = 1; tau <= horizon; ++tau) {
      for (Vertex u = 0; u < nv; ++u) {
        for (Vertex v = 0; v < nv; ++v) {
          if (u != v && evaluate_criterion(mu, nv, u, v, tau, kDefaultAmplitudeTol).pst) {
            by_criterion.emplace(tau, u, v);
          }
        }
      }
    }

    const Graph g = cayley(spec);
    const WalkOperators ops = build_operators(g, arc_space(g));
    auto certificates = pst_bruteforce(ops, horizon);
    std::set<std::tuple<std::size_t, Vertex, Vertex>> by_bruteforce;
    for (auto& c : certificates) {
      by_bruteforce.emplace(c.time, c.source, c.target);
      c.method = PstMethod::both;
    }
    if (by_criterion != by_bruteforce) {
      throw ConsistencyError("UC(" + std::to_string(n) +
                             "): circulant criterion and brute-force search disagree");
    }
    if (no_go && !certificates.empty()) {
      throw ConsistencyError("UC(" + std::to_string(n) + "): certificates despite equal consecutive eigenvalues");
    }
    verdict.pst = !certificates.empty();
    verdict.certificates = std::move(certificates);
    if (verdict.pst) {
      verdict.reason = "criterion and brute force agree";
    } else if (n % 2 == 1) {
      verdict.reason = "n odd";
    } else if (no_go) {
      verdict.reason = "equal consecutive eigenvalues";
    } else {
      verdict.reason = "no time within one period satisfies the criterion";
    }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

}  // namespace grover
