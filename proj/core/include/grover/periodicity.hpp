#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "grover/spectra.hpp"
#include "grover/walk.hpp"

namespace grover {

inline constexpr int kDefaultQMax = 360;
inline constexpr int kDefaultTauMax = 144;

enum class PeriodMethod { spectral, bruteforce, closed_form };

std::string_view to_string(PeriodMethod method);

/// One distinct evolution eigenvalue e^{i angle} and its multiplicative order
/// (empty when no order up to q_max was found).
struct OrderEvidence {
  double angle = 0.0;
  std::optional<int> order;
};

struct PeriodicityReport {
  bool periodic = false;
  std::optional<std::int64_t> period;
  PeriodMethod method = PeriodMethod::spectral;
  std::vector<OrderEvidence> evidence;
};

/// Every distinct adjacency eigenvalue lies in {+-k, +-k/2, 0} (k/2 only for
/// even k). Throws DomainError if the spectrum is not integral within 1e-6.
bool is_periodic_integral_regular(const SpectrumReport& spectrum, int k);

/// Smallest positive q <= q_max with e^{i q arccos(mu)} = 1 within tol.
std::optional<int> angle_order(double mu, int q_max = kDefaultQMax, double tol = 1e-9);

/// Same, for an eigenvalue given by its angle.
std::optional<int> angle_order_of(double theta, int q_max = kDefaultQMax, double tol = 1e-9);

/// Periodicity from a discriminant spectrum via the spectral map: periodic iff
/// every evolution eigenvalue has finite order, period = lcm of the orders.
PeriodicityReport period_spectral(const SpectrumReport& disc_spectrum, std::size_t edges,
                                  std::size_t vertices, bool bipartite, int q_max = kDefaultQMax);

/// Smallest tau <= tau_max with ||U^tau - I||_max < tol.
PeriodicityReport period_bruteforce(const WalkOperators& ops, int tau_max = kDefaultTauMax,
                                    double tol = kDefaultIdentityTol);

/// n = 2^a 3^b with a + b >= 1.
bool uc_periodicity_predicted(std::int64_t n);

/// Period of UC(n) from its exact Ramanujan-sum spectrum. The discriminant
/// eigenvalues R(j,n)/phi(n) are rational; those in {0, +-1/2, +-1} have known
/// orders {4, 6 or 3, 1 or 2}, anything else makes the walk aperiodic.
PeriodicityReport uc_period_closed_form(std::int64_t n);

enum class ClassificationCategory {
  c6,
  complete_bipartite,
  complete_tripartite,
  spectrum_k_half_zero,
  spectrum_pm_k_half_zero,
  not_periodic,
};

std::string_view to_string(ClassificationCategory category);

struct ClassificationLabel {
  ClassificationCategory category = ClassificationCategory::not_periodic;

  friend bool operator==(const ClassificationLabel&, const ClassificationLabel&) = default;
};

/// Places a connected k-regular integral graph into one of the categories of
/// the periodic classification. Spectra that no graph can realise (for example
/// {2m, -m} with m >= 2) are rejected with DomainError.
ClassificationLabel classify_integral_regular_periodic(const SpectrumReport& spectrum, int k,
                                                       std::size_t n, bool bipartite);

}  // namespace grover
