#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "grover/graphs.hpp"
#include "grover/walk.hpp"

namespace grover {

inline constexpr double kDefaultClusterTol = 1e-6;

enum class SpectrumSource { adjacency, discriminant, evolution };

std::string_view to_string(SpectrumSource source);

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Eigenvalues with multiplicities, sorted descending.
///
/// For evolution spectra `value` is the angle theta in [0, 2 pi) of the
/// unimodular eigenvalue e^{i theta}, sorted ascending instead.
struct SpectrumReport {
  std::vector<Eigenvalue> eigenvalues;
  bool exact = false;
  SpectrumSource source = SpectrumSource::adjacency;
  /// lambda_0 .. lambda_{n-1} in character-index order; filled for circulants.
  std::vector<double> indexed;

  std::size_t dimension() const;
  std::vector<double> distinct() const;
  /// Every eigenvalue repeated by its multiplicity.
  std::vector<double> expanded() const;
  /// Same values scaled by a factor, e.g. adjacency -> discriminant via 1/k.
  SpectrumReport scaled(double factor, SpectrumSource new_source) const;
};

/// Groups values whose chain distance is within tol (after sorting descending)
/// and reports each group by its mean.
std::vector<Eigenvalue> cluster_eigenvalues(std::vector<double> values, double tol);

/// lambda_j = sum_{s in C} cos(2 pi j s / n) for j = 0..n-1.
SpectrumReport circulant_spectrum(const CirculantSpec& spec);

/// lambda_j = R(j, n), the Ramanujan sums; exact integers.
SpectrumReport uc_spectrum(std::int64_t n);

/// Symmetric eigensolver; throws DomainError on a non-symmetric input.
SpectrumReport numeric_spectrum(const RMatrix& m, double cluster_tol = kDefaultClusterTol,
                                SpectrumSource source = SpectrumSource::adjacency);

/// Evolution spectrum predicted from the discriminant eigenvalues. Each mu in
/// (-1, 1) contributes e^{+-i arccos mu}; mu = 1 and mu = -1 contribute 1 and
/// -1 once each. Then b1 = m - n + 1 extra copies of 1 and b1 - 1 + [bipartite]
/// extra copies of -1. Values within tol of +-1 are snapped to +-1; values
/// beyond 1 + tol are rejected.
SpectrumReport spectral_map(std::span<const double> disc_eigs, std::size_t edges,
                            std::size_t vertices, bool bipartite,
                            double tol = kDefaultClusterTol);

/// Numeric evolution spectrum of a unitary matrix as angles in [0, 2 pi),
/// clustered on the circle with the given angular tolerance.
SpectrumReport numeric_evolution_spectrum(const CMatrix& u, double angle_tol = 1e-7);

/// Angular distance on the unit circle.
double circular_distance(double a, double b);

/// True when the two angle multisets match one to one within tol.
bool same_angle_multiset(std::vector<double> a, std::vector<double> b, double tol);

struct Eigenprojector {
  double eigenvalue = 0.0;
  RMatrix projector;
};

/// Spectral decomposition P = sum mu_r E_r, eigenvalues descending.
std::vector<Eigenprojector> eigenprojectors(const RMatrix& p,
                                            double cluster_tol = kDefaultClusterTol);

/// sum_r f(mu_r) E_r for a scalar function f.
template <typename F>
RMatrix apply_spectral(std::span<const Eigenprojector> projs, F&& f) {
  RMatrix out = RMatrix::Zero(projs.front().projector.rows(), projs.front().projector.cols());
  for (const auto& e : projs) out += f(e.eigenvalue) * e.projector;
  return out;
}

/// Eigenvalues mu_r with ||E_r e_u|| > tol.
std::vector<double> eigenvalue_support(std::span<const Eigenprojector> projs, Vertex u,
                                       double tol = 1e-8);

struct HoffmanResult {
  bool holds = false;
  double residual = 0.0;
};

/// Checks q(A) = (q(k)/n) J with q(x) = prod over non-principal distinct
/// eigenvalues of (x - lambda_i). Requires a regular graph.
HoffmanResult hoffman_check(const Graph& g, const SpectrumReport& spectrum, double tol = 1e-8);

/// diag(A^r) constant for every r in 0..r_max, in exact integer arithmetic.
bool is_walk_regular(const Graph& g, int r_max = 8);

}  // namespace grover
