#include "grover/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "grover/errors.hpp"
#include "grover/numtheory.hpp"

namespace grover {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleMergeTol = 1e-7;
// Closed-form circulant eigenvalues only carry cosine round-off.
constexpr double kClosedFormMergeTol = 1e-9;

double canonical_angle(double theta, double tol) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  if (kTwoPi - theta < tol) theta = 0.0;
  return theta;
}

std::vector<Eigenvalue> cluster_angles(std::vector<double> angles, double tol) {
  for (double& a : angles) a = canonical_angle(a, tol);
  std::sort(angles.begin(), angles.end());
  std::vector<Eigenvalue> out;
  std::size_t i = 0;
  while (i < angles.size()) {
    std::size_t j = i + 1;
    double sum = angles[i];
    while (j < angles.size() && angles[j] - angles[j - 1] <= tol) sum += angles[j++];
    out.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return out;
}

}  // namespace

std::string_view to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::adjacency: return "adjacency";
    case SpectrumSource::discriminant: return "discriminant";
    case SpectrumSource::evolution: return "evolution";
  }
  return "unknown";
}

std::size_t SpectrumReport::dimension() const {
  std::size_t total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

std::vector<double> SpectrumReport::distinct() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.push_back(e.value);
  return out;
}

std::vector<double> SpectrumReport::expanded() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

SpectrumReport SpectrumReport::scaled(double factor, SpectrumSource new_source) const {
  SpectrumReport out = *this;
  out.source = new_source;
  for (auto& e : out.eigenvalues) e.value *= factor;
  for (double& v : out.indexed) v *= factor;
  if (factor < 0) std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

std::vector<Eigenvalue> cluster_eigenvalues(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<Eigenvalue> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= tol) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return out;
}

SpectrumReport circulant_spectrum(const CirculantSpec& spec) {
  spec.validate();
  SpectrumReport report;
  report.exact = true;
  report.source = SpectrumSource::adjacency;
  report.indexed.resize(spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) {
    double sum = 0.0;
    for (std::size_t s : spec.connection_set) {
      sum += std::cos(kTwoPi * static_cast<double>((j * s) % spec.n) / static_cast<double>(spec.n));
    }
    report.indexed[j] = sum;
  }
  report.eigenvalues = cluster_eigenvalues(report.indexed, kClosedFormMergeTol);
  return report;
}

SpectrumReport uc_spectrum(std::int64_t n) {
  if (n < 2) throw DomainError("uc_spectrum needs n >= 2, got " + std::to_string(n));
  SpectrumReport report;
  report.exact = true;
  report.source = SpectrumSource::adjacency;
  report.indexed.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    report.indexed.push_back(static_cast<double>(numtheory::ramanujan_closed(j, n)));
  }
  // Integer values: tolerance zero merges exact duplicates only.
  report.eigenvalues = cluster_eigenvalues(report.indexed, 0.0);
  return report;
}

SpectrumReport numeric_spectrum(const RMatrix& m, double cluster_tol, SpectrumSource source) {
  if (m.rows() != m.cols()) throw DomainError("numeric_spectrum: matrix is not square");
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("numeric_spectrum: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver failed");
  const auto& ev = solver.eigenvalues();
  SpectrumReport report;
  report.exact = false;
  report.source = source;
  report.eigenvalues = cluster_eigenvalues(std::vector<double>(ev.data(), ev.data() + ev.size()), cluster_tol);
  return report;
}

SpectrumReport spectral_map(std::span<const double> disc_eigs, std::size_t edges,
                            std::size_t vertices, bool bipartite, double tol) {
  if (edges + 1 < vertices) {
    throw DomainError("spectral_map: a connected graph needs m >= n - 1");
  }
  std::vector<double> angles;
  angles.reserve(2 * edges);
  for (double mu : disc_eigs) {
    if (std::abs(mu) > 1.0 + tol) {
      throw DomainError("spectral_map: discriminant eigenvalue " + std::to_string(mu) +
                        " outside [-1, 1]");
    }
    if (mu >= 1.0 - tol) {
      angles.push_back(0.0);
    } else if (mu <= -1.0 + tol) {
      angles.push_back(std::numbers::pi);
    } else {
      const double theta = std::acos(mu);
      angles.push_back(theta);
      angles.push_back(kTwoPi - theta);
    }
  }
  const std::size_t b1 = edges - vertices + 1;
  angles.insert(angles.end(), b1, 0.0);
  const std::size_t minus_ones = b1 + (bipartite ? 1 : 0);
  if (minus_ones > 0) angles.insert(angles.end(), minus_ones - 1, std::numbers::pi);

  SpectrumReport report;
  report.exact = false;
  report.source = SpectrumSource::evolution;
  report.eigenvalues = cluster_angles(std::move(angles), kAngleMergeTol);
  return report;
}

SpectrumReport numeric_evolution_spectrum(const CMatrix& u, double angle_tol) {
  Eigen::ComplexEigenSolver<CMatrix> solver(u, false);
  if (solver.info() != Eigen::Success) throw ConsistencyError("complex eigensolver failed");
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(u.rows()));
  for (const Complex& z : solver.eigenvalues()) angles.push_back(std::arg(z));
  SpectrumReport report;
  report.exact = false;
  report.source = SpectrumSource::evolution;
  report.eigenvalues = cluster_angles(std::move(angles), angle_tol);
  return report;
}

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

bool same_angle_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  for (double& x : a) x = canonical_angle(x, tol);
  for (double& x : b) x = canonical_angle(x, tol);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (circular_distance(a[i], b[i]) > tol) return false;
  }
  return true;
}

std::vector<Eigenprojector> eigenprojectors(const RMatrix& p, double cluster_tol) {
  if (p.rows() != p.cols() || p.rows() == 0) throw DomainError("eigenprojectors: bad shape");
  if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("eigenprojectors: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(p);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver failed");
  const auto& values = solver.eigenvalues();  // ascending
  const auto& vectors = solver.eigenvectors();
  std::vector<Eigenprojector> out;
  Eigen::Index i = values.size() - 1;
  while (i >= 0) {
    Eigen::Index j = i - 1;
    while (j >= 0 && values(j + 1) - values(j) <= cluster_tol) --j;
    // Columns j+1 .. i form one eigenspace.
    const Eigen::Index count = i - j;
    const RMatrix basis = vectors.middleCols(j + 1, count);
    out.push_back({values.segment(j + 1, count).mean(), basis * basis.transpose()});
    i = j;
  }
  return out;
}

std::vector<double> eigenvalue_support(std::span<const Eigenprojector> projs, Vertex u, double tol) {
  std::vector<double> out;
  for (const auto& e : projs) {
    if (static_cast<Eigen::Index>(u) >= e.projector.cols()) {
      throw DomainError("eigenvalue_support: vertex " + std::to_string(u) + " out of range");
    }
    if (e.projector.col(static_cast<Eigen::Index>(u)).norm() > tol) out.push_back(e.eigenvalue);
  }
  return out;
}

HoffmanResult hoffman_check(const Graph& g, const SpectrumReport& spectrum, double tol) {
  const auto k = g.regular_degree();
  if (!k) throw DomainError("hoffman_check: graph is not regular");
  if (spectrum.source != SpectrumSource::adjacency) {
    throw DomainError("hoffman_check: needs an adjacency spectrum");
  }
  const std::vector<double> values = spectrum.distinct();
  const double kd = static_cast<double>(*k);
  if (values.empty() || std::abs(values.front() - kd) > 1e-6) {
    throw DomainError("hoffman_check: largest eigenvalue is not the degree");
  }
  const RMatrix a = g.adjacency_matrix();
  const auto n = a.rows();
  RMatrix q = RMatrix::Identity(n, n);
  double qk = 1.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    q = q * (a - values[i] * RMatrix::Identity(n, n));
    qk *= kd - values[i];
  }
  const RMatrix target = RMatrix::Constant(n, n, qk / static_cast<double>(n));
  const double residual = max_abs_diff(q, target);
  return {residual < tol, residual};
}

bool is_walk_regular(const Graph& g, int r_max) {
  if (r_max < 0) throw DomainError("is_walk_regular: r_max must be >= 0");
  using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  // Entries of A^r are bounded by max_degree^(r-1) times n; stay clear of overflow.
  double bound = static_cast<double>(n);
  for (int r = 0; r < r_max; ++r) bound *= static_cast<double>(max_degree);
  if (bound > 1e18) throw DomainError("is_walk_regular: walk counts overflow 64-bit integers");

  const IMatrix a = g.adjacency_matrix().cast<std::int64_t>();
  IMatrix power = IMatrix::Identity(n, n);
  for (int r = 1; r <= r_max; ++r) {
    power = power * a;
    const auto diag = power.diagonal();
    if ((diag.array() != diag(0)).any()) return false;
  }
  return true;
}

}  // namespace grover
