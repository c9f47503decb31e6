#include "grover/walk.hpp"

#include <cmath>
#include <string>

#include "grover/errors.hpp"

namespace grover {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const RMatrix& a, const RMatrix& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

WalkOperators::WalkOperators(const Graph& g, const ArcSpace& arcs, double tol)
    : graph_(g), arcs_(arcs) {
  if (arcs_.vertex_count() != g.vertex_count() || arcs_.size() != 2 * g.edge_count()) {
    throw DomainError("arc space does not belong to this graph");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t m2 = arcs_.size();

  boundary_ = CMatrix::Zero(idx(n), idx(m2));
  for (std::size_t a = 0; a < m2; ++a) {
    const Vertex t = arcs_.arc(a).terminus;
    boundary_(idx(t), idx(a)) = 1.0 / std::sqrt(static_cast<double>(g.degree(t)));
  }

  shift_ = CMatrix::Zero(idx(m2), idx(m2));
  for (std::size_t a = 0; a < m2; ++a) shift_(idx(a), idx(arcs_.inverse(a))) = 1.0;

  // d* d has entries [t(a) = t(b)] / deg t(a). Building it from 1/deg rather
  // than from products of square roots keeps 2 d*d - I exact in binary, so the
  // row permutation by S reproduces the closed-form entries bit for bit.
  CMatrix reflect = -CMatrix::Identity(idx(m2), idx(m2));
  for (Vertex x = 0; x < n; ++x) {
    const double w = 2.0 / static_cast<double>(g.degree(x));
    for (std::size_t a : arcs_.inbound(x)) {
      for (std::size_t b : arcs_.inbound(x)) reflect(idx(a), idx(b)) += w;
    }
  }
  evolution_ = CMatrix(idx(m2), idx(m2));
  for (std::size_t a = 0; a < m2; ++a) evolution_.row(idx(a)) = reflect.row(idx(arcs_.inverse(a)));

  const CMatrix gram = boundary_.adjoint() * boundary_;
  const double gram_err = max_abs_diff(CMatrix(2.0 * gram - CMatrix::Identity(idx(m2), idx(m2))), reflect);
  if (gram_err > tol) {
    throw ConsistencyError("2 d*d - I differs from its rational form by " + std::to_string(gram_err));
  }

  const RMatrix dsd = (boundary_ * shift_ * boundary_.adjoint()).real();
  if (auto k = g.regular_degree()) {
    discriminant_ = g.adjacency_matrix() / static_cast<double>(*k);
    const double err = max_abs_diff(dsd, discriminant_);
    if (err > tol) throw ConsistencyError("d S d* differs from A/k by " + std::to_string(err));
  } else {
    discriminant_ = dsd;
  }
}

double WalkOperators::evolution_entry(std::size_t a, std::size_t b) const {
  const Arc& arc_b = arcs_.arc(b);
  double value = 0.0;
  if (arcs_.arc(a).origin == arc_b.terminus) {
    value += 2.0 / static_cast<double>(graph_.degree(arc_b.terminus));
  }
  if (a == arcs_.inverse(b)) value -= 1.0;
  return value;
}

CMatrix WalkOperators::apply_evolution(const CMatrix& x) const {
  if (x.rows() != idx(arc_count())) {
    throw DomainError("apply_evolution: expected " + std::to_string(arc_count()) + " rows");
  }
  const std::size_t n = vertex_count();
  // Row a of U x is (2 / deg o(a)) * sum_{b : t(b) = o(a)} x_b - x_{a^{-1}}.
  CMatrix sums = CMatrix::Zero(idx(n), x.cols());
  for (std::size_t b = 0; b < arc_count(); ++b) {
    sums.row(idx(arcs_.arc(b).terminus)) += x.row(idx(b));
  }
  for (Vertex v = 0; v < n; ++v) sums.row(idx(v)) *= 2.0 / static_cast<double>(graph_.degree(v));
  CMatrix out(x.rows(), x.cols());
  for (std::size_t a = 0; a < arc_count(); ++a) {
    out.row(idx(a)) = sums.row(idx(arcs_.arc(a).origin)) - x.row(idx(arcs_.inverse(a)));
  }
  return out;
}

WalkOperators build_operators(const Graph& g, const ArcSpace& arcs, double tol) {
  WalkOperators ops(g, arcs, tol);
  const auto m2 = idx(ops.arc_count());
  const auto n = idx(ops.vertex_count());

  const double unitary_err =
      max_abs_diff(CMatrix(ops.evolution() * ops.evolution().adjoint()), CMatrix::Identity(m2, m2));
  if (unitary_err > tol) {
    throw ConsistencyError("U U* - I residual " + std::to_string(unitary_err));
  }
  const double bound_err =
      max_abs_diff(CMatrix(ops.boundary() * ops.boundary().adjoint()), CMatrix::Identity(n, n));
  if (bound_err > tol) throw ConsistencyError("d d* - I residual " + std::to_string(bound_err));

  for (Eigen::Index a = 0; a < m2; ++a) {
    for (Eigen::Index b = 0; b < m2; ++b) {
      const double expected = ops.evolution_entry(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (ops.evolution()(a, b) != Complex(expected, 0.0)) {
        throw ConsistencyError("U entry (" + std::to_string(a) + "," + std::to_string(b) +
                               ") differs from the closed-form entry");
      }
    }
  }
  return ops;
}

ArcState vertex_state(const WalkOperators& ops, Vertex u) {
  if (u >= ops.vertex_count()) {
    throw DomainError("vertex " + std::to_string(u) + " out of range");
  }
  return ArcState{ops.boundary().row(idx(u)).adjoint()};
}

ArcState evolve(const WalkOperators& ops, const ArcState& state, std::size_t tau) {
  CMatrix x = state.amplitudes;
  for (std::size_t step = 0; step < tau; ++step) x = ops.apply_evolution(x);
  return ArcState{x.col(0)};
}

CMatrix matrix_power(const WalkOperators& ops, std::size_t tau) {
  const auto m2 = idx(ops.arc_count());
  CMatrix result = CMatrix::Identity(m2, m2);
  CMatrix base = ops.evolution();
  while (tau > 0) {
    if (tau & 1U) result = result * base;
    tau >>= 1U;
    if (tau > 0) base = base * base;
  }
  return result;
}

}  // namespace grover
