#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grover/errors.hpp"
#include "grover/spectra.hpp"
#include "grover/walk.hpp"
#include "support/corpus.hpp"

using namespace grover;

namespace {

WalkOperators ops_of(const Graph& g) { return build_operators(g, arc_space(g)); }

Graph cycle(std::int64_t n) { return named_graph(GraphFamily::cycle, std::vector<std::int64_t>{n}); }

// |<a, b>| = 1 for unit vectors means equal up to a phase; returns that phase.
Complex phase_between(const ArcState& a, const ArcState& b) { return b.amplitudes.dot(a.amplitudes); }

}  // namespace

TEST(BuildOperators, K2EvolutionIsSwap) {
  const auto ops = ops_of(unitary_cayley(2));
  CMatrix expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(ops.evolution(), expected);
}

TEST(BuildOperators, RegularDiscriminantIsScaledAdjacencyExactly) {
  for (const auto& entry : fixtures::corpus()) {
    const auto k = entry.graph.regular_degree();
    if (!k) continue;
    const auto ops = ops_of(entry.graph);
    const RMatrix expected = entry.graph.adjacency_matrix() / static_cast<double>(*k);
    EXPECT_EQ(max_abs_diff(ops.discriminant(), expected), 0.0) << entry.name;
  }
}

TEST(BuildOperators, C4DiscriminantSpectrum) {
  const auto ops = ops_of(cycle(4));
  const auto spec = numeric_spectrum(ops.discriminant());
  ASSERT_EQ(spec.eigenvalues.size(), 3u);
  EXPECT_NEAR(spec.eigenvalues[0].value, 1.0, 1e-12);
  EXPECT_NEAR(spec.eigenvalues[1].value, 0.0, 1e-12);
  EXPECT_EQ(spec.eigenvalues[1].multiplicity, 2u);
  EXPECT_NEAR(spec.eigenvalues[2].value, -1.0, 1e-12);
}

TEST(BuildOperators, CorpusInvariants) {
  for (const auto& entry : fixtures::corpus()) {
    const auto ops = ops_of(entry.graph);
    const auto m2 = static_cast<Eigen::Index>(ops.arc_count());
    const auto n = static_cast<Eigen::Index>(ops.vertex_count());
    EXPECT_LT(max_abs_diff(CMatrix(ops.evolution() * ops.evolution().adjoint()), CMatrix::Identity(m2, m2)), 1e-9)
        << entry.name;
    EXPECT_LT(max_abs_diff(CMatrix(ops.boundary() * ops.boundary().adjoint()), CMatrix::Identity(n, n)), 1e-12)
        << entry.name;
    EXPECT_EQ(ops.shift() * ops.shift(), CMatrix::Identity(m2, m2));
    // Entry formula holds exactly on every entry.
    for (Eigen::Index a = 0; a < m2; ++a) {
      for (Eigen::Index b = 0; b < m2; ++b) {
        ASSERT_EQ(ops.evolution()(a, b).real(),
                  ops.evolution_entry(static_cast<std::size_t>(a), static_cast<std::size_t>(b)))
            << entry.name;
      }
    }
    // Evolution also equals the literal product S (2 d* d - I).
    const CMatrix literal =
        ops.shift() * (2.0 * ops.boundary().adjoint() * ops.boundary() - CMatrix::Identity(m2, m2));
    EXPECT_LT(max_abs_diff(literal, ops.evolution()), 1e-12) << entry.name;
    // P symmetric with spectrum inside [-1, 1].
    EXPECT_EQ(ops.discriminant(), ops.discriminant().transpose());
    const auto spec = numeric_spectrum(ops.discriminant(), 1e-6, SpectrumSource::discriminant);
    EXPECT_LE(spec.eigenvalues.front().value, 1.0 + 1e-12);
    EXPECT_GE(spec.eigenvalues.back().value, -1.0 - 1e-12);
  }
}

TEST(BuildOperators, StructuredProductMatchesDense) {
  std::mt19937 rng(7);
  std::normal_distribution<double> normal;
  for (const auto& entry : fixtures::corpus()) {
    const auto ops = ops_of(entry.graph);
    CMatrix x(static_cast<Eigen::Index>(ops.arc_count()), 3);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Complex(normal(rng), normal(rng));
    EXPECT_LT(max_abs_diff(ops.apply_evolution(x), CMatrix(ops.evolution() * x)), 1e-12) << entry.name;
  }
}

TEST(VertexState, Examples) {
  const auto k2 = ops_of(unitary_cayley(2));
  const auto s = vertex_state(k2, 0);
  // Arc (1,0) has index 1.
  EXPECT_EQ(s.amplitudes(0), Complex(0.0));
  EXPECT_EQ(s.amplitudes(1), Complex(1.0));

  const auto c4 = ops_of(cycle(4));
  const auto s4 = vertex_state(c4, 0);
  const auto in10 = *c4.arcs().index_of(1, 0);
  const auto in30 = *c4.arcs().index_of(3, 0);
  for (std::size_t a = 0; a < c4.arc_count(); ++a) {
    const double expected = (a == in10 || a == in30) ? 1.0 / std::sqrt(2.0) : 0.0;
    EXPECT_NEAR(std::abs(s4.amplitudes(static_cast<Eigen::Index>(a))), expected, 1e-15);
  }

  const auto uc12 = ops_of(unitary_cayley(12));
  const auto s12 = vertex_state(uc12, 0);
  for (Vertex from : {1u, 5u, 7u, 11u}) {
    EXPECT_NEAR(s12.amplitudes(static_cast<Eigen::Index>(*uc12.arcs().index_of(from, 0))).real(), 0.5, 1e-15);
  }
  EXPECT_NEAR(s12.norm(), 1.0, 1e-15);
  EXPECT_THROW(vertex_state(uc12, 12), DomainError);
}

TEST(Evolve, Examples) {
  const auto k2 = ops_of(unitary_cayley(2));
  const auto s0 = vertex_state(k2, 0);
  EXPECT_EQ(evolve(k2, s0, 0).amplitudes, s0.amplitudes);
  const Complex g1 = phase_between(evolve(k2, s0, 1), vertex_state(k2, 1));
  EXPECT_NEAR(std::abs(g1 - Complex(1.0)), 0.0, 1e-12);

  const auto c6 = ops_of(cycle(6));
  const Complex g3 = phase_between(evolve(c6, vertex_state(c6, 0), 3), vertex_state(c6, 3));
  EXPECT_NEAR(std::abs(g3), 1.0, 1e-12);
}

TEST(Evolve, PreservesNorm) {
  for (const auto& entry : fixtures::corpus()) {
    const auto ops = ops_of(entry.graph);
    for (Vertex u = 0; u < ops.vertex_count(); u += 3) {
      const auto s = vertex_state(ops, u);
      for (std::size_t tau : {1u, 5u, 17u, 40u}) {
        EXPECT_NEAR(evolve(ops, s, tau).norm(), 1.0, 1e-9) << entry.name;
      }
    }
  }
}

TEST(MatrixPower, Examples) {
  const auto k2 = ops_of(unitary_cayley(2));
  EXPECT_EQ(matrix_power(k2, 0), CMatrix::Identity(2, 2));
  EXPECT_LT(max_abs_diff(matrix_power(k2, 2), CMatrix::Identity(2, 2)), 1e-15);
  const auto c4 = ops_of(cycle(4));
  EXPECT_LT(max_abs_diff(matrix_power(c4, 4), CMatrix::Identity(8, 8)), 1e-9);
}

TEST(MatrixPower, AgreesWithRepeatedApplication) {
  const auto ops = ops_of(named_graph(GraphFamily::hamming, std::vector<std::int64_t>{2, 3}));
  const auto m2 = static_cast<Eigen::Index>(ops.arc_count());
  CMatrix stepped = CMatrix::Identity(m2, m2);
  for (std::size_t tau = 1; tau <= 13; ++tau) {
    stepped = ops.apply_evolution(stepped);
    EXPECT_LT(max_abs_diff(matrix_power(ops, tau), stepped), 1e-12) << tau;
  }
}
