#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "grover/graphs.hpp"

namespace grover {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultIdentityTol = 1e-9;

/// Unit-norm amplitude vector over the arcs of a graph.
struct ArcState {
  CVector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// The Grover walk matrices of one graph:
///   boundary d (n x 2m), d_{x,a} = deg(x)^{-1/2} [x = t(a)]
///   shift S (2m x 2m),    S_{a,b} = [a = b^{-1}]
///   evolution U = S (2 d* d - I)
///   discriminant P = d S d*
///
/// Immutable after construction. For regular graphs P is built as A / k from
/// the adjacency matrix so the identity P = A / k holds bit for bit; d S d* is
/// still computed and checked against it.
class WalkOperators {
 public:
  WalkOperators(const Graph& g, const ArcSpace& arcs, double tol = kDefaultIdentityTol);

  const Graph& graph() const { return graph_; }
  const ArcSpace& arcs() const { return arcs_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const CMatrix& boundary() const { return boundary_; }
  const CMatrix& shift() const { return shift_; }
  const CMatrix& evolution() const { return evolution_; }
  const RMatrix& discriminant() const { return discriminant_; }

  /// Closed-form entry U_{ab} = 2 / deg t(b) [o(a) = t(b)] - [a = b^{-1}].
  double evolution_entry(std::size_t a, std::size_t b) const;

  /// U * x using the arc structure of U: O(arcs * cols) per call instead of a
  /// dense product.
  CMatrix apply_evolution(const CMatrix& x) const;

 private:
  Graph graph_;
  ArcSpace arcs_;
  CMatrix boundary_;
  CMatrix shift_;
  CMatrix evolution_;
  RMatrix discriminant_;
};

/// Throws ConsistencyError if unitarity, d d* = I or the U entry formula fails
/// at the given tolerance.
WalkOperators build_operators(const Graph& g, const ArcSpace& arcs,
                              double tol = kDefaultIdentityTol);

/// d* e_u: amplitude deg(u)^{-1/2} on every arc into u.
ArcState vertex_state(const WalkOperators& ops, Vertex u);

/// U^tau applied to a state.
ArcState evolve(const WalkOperators& ops, const ArcState& state, std::size_t tau);

/// U^tau by binary exponentiation on dense matrices.
CMatrix matrix_power(const WalkOperators& ops, std::size_t tau);

/// Entrywise max |a_ij - b_ij|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(const RMatrix& a, const RMatrix& b);

}  // namespace grover
