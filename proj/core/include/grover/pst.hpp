#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grover/graphs.hpp"
#include "grover/spectra.hpp"
#include "grover/walk.hpp"

namespace grover {

inline constexpr double kDefaultAmplitudeTol = 1e-7;
inline constexpr int kDefaultPstTauMax = 100;

/// Chebyshev polynomial of the first kind by the three-term recurrence.
double chebyshev(std::size_t tau, double x);

struct ChebyshevEval {
  std::size_t degree = 0;
  double argument = 0.0;
  double value = 0.0;
};

/// Recurrence value, cross-checked against cos(tau arccos x) for |x| <= 1.
ChebyshevEval chebyshev_checked(std::size_t tau, double x, double tol = 1e-9);

/// d U^tau d*, verified against T_tau(P) evaluated through the eigenprojectors
/// of P. Throws ConsistencyError when they differ by more than tol.
RMatrix transfer_block(const WalkOperators& ops, std::size_t tau, double tol = 1e-8);

/// T_tau(P) = sum_r T_tau(mu_r) E_r.
RMatrix chebyshev_of_discriminant(std::span<const Eigenprojector> projs, std::size_t tau);

struct CriterionDiagnostics {
  bool antipodal = false;        ///< n even and u - v = n/2 (mod n)
  bool all_unimodular = false;   ///< T_tau(mu_j) = +-1 for every j
  bool alternating = false;      ///< sign bits strictly alternate in j
  std::vector<double> chebyshev_values;
  std::vector<int> sign_bits;    ///< k_j with T_tau(mu_j) ~ e^{i k_j pi}
  double min_margin = 0.0;       ///< smallest distance of a |T| from the pass threshold
  bool low_margin = false;       ///< min_margin below 1e-3
};

struct CriterionResult {
  bool pst = false;
  CriterionDiagnostics diagnostics;
};

/// PST between u and v at time tau on a circulant, decided from the indexed
/// discriminant eigenvalues mu_j = lambda_j / |C|.
CriterionResult pst_criterion_circulant(const CirculantSpec& spec, Vertex u, Vertex v,
                                        std::size_t tau, double tol = kDefaultAmplitudeTol);

/// mu_j = lambda_j / |C| in index order j = 0..n-1.
std::vector<double> circulant_discriminant_indexed(const CirculantSpec& spec);

/// Same verdict as pst_criterion_circulant, from precomputed indexed mu_j.
/// Avoids recomputing the spectrum when sweeping many (u, v, tau) cells.
CriterionResult pst_criterion_indexed(std::span<const double> mu, Vertex u, Vertex v,
                                      std::size_t tau, double tol = kDefaultAmplitudeTol);

/// |T_tau(mu)| >= 1 - tol for every mu in the support.
bool pst_necessary_filter(std::span<const double> support, std::size_t tau,
                          double tol = kDefaultAmplitudeTol);

enum class PstMethod { criterion, bruteforce, both };

std::string_view to_string(PstMethod method);

struct PSTCertificate {
  Vertex source = 0;
  Vertex target = 0;
  std::size_t time = 0;
  Complex phase{1.0, 0.0};
  PstMethod method = PstMethod::bruteforce;
};

/// Every (u, v, tau) with u != v, 1 <= tau <= tau_max and
/// |<U^tau d* e_u, d* e_v>| >= 1 - tol, sorted by (tau, u, v).
std::vector<PSTCertificate> pst_bruteforce(const WalkOperators& ops, std::size_t tau_max,
                                           double tol = kDefaultAmplitudeTol);

/// Some consecutive pair lambda_j = lambda_{j+1} in index order, which rules
/// out PST on the circulant.
bool pst_no_go_equal_eigs(const CirculantSpec& spec);

struct UcPstVerdict {
  std::int64_t n = 0;
  bool pst = false;
  std::vector<PSTCertificate> certificates;
  std::string reason;
};

/// For n = 2..n_max: periodicity gate, no-go filter, circulant criterion over
/// every (u, v, tau <= period), and a brute-force confirmation. Throws
/// ConsistencyError if criterion and brute force disagree.
std::vector<UcPstVerdict> uc_pst_classification(std::int64_t n_max);

}  // namespace grover
