#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "grover/errors.hpp"
#include "grover/periodicity.hpp"
#include "grover/pst.hpp"
#include "support/corpus.hpp"
#include "support/random_circulant.hpp"

using namespace grover;

namespace {

Graph named(GraphFamily f, std::vector<std::int64_t> p) { return named_graph(f, p); }

WalkOperators ops_of(const Graph& g) { return build_operators(g, arc_space(g)); }

}  // namespace

TEST(Chebyshev, Examples) {
  EXPECT_EQ(chebyshev(0, 0.7), 1.0);
  EXPECT_NEAR(chebyshev(6, 0.0), -1.0, 1e-15);
  EXPECT_NEAR(chebyshev(3, 0.5), -1.0, 1e-15);
  EXPECT_NEAR(chebyshev(4, -0.5), -0.5, 1e-15);
  EXPECT_EQ(chebyshev(2, 3.0), 17.0);  // outside [-1, 1]: 2 x^2 - 1
}

TEST(Chebyshev, RecurrenceMatchesCosineOnGrid) {
  double worst = 0.0;
  for (std::size_t tau = 0; tau <= 64; ++tau) {
    for (int i = 0; i < 10000; ++i) {
      const double x = -1.0 + 2.0 * i / 9999.0;
      worst = std::max(worst, std::abs(chebyshev(tau, x) - std::cos(static_cast<double>(tau) * std::acos(x))));
    }
  }
  EXPECT_LT(worst, 1e-9);
  EXPECT_NO_THROW(chebyshev_checked(40, 0.3));
}

TEST(TransferBlock, Examples) {
  const auto c6 = ops_of(named(GraphFamily::cycle, {6}));
  EXPECT_LT(max_abs_diff(transfer_block(c6, 0), RMatrix::Identity(6, 6)), 1e-12);
  EXPECT_LT(max_abs_diff(transfer_block(c6, 1), c6.discriminant()), 1e-12);
  // Fourier oracle: (1/n) sum_j cos(3 * 2 pi j / 6) cos(2 pi j (u - v) / 6).
  double oracle = 0.0;
  for (int j = 0; j < 6; ++j) oracle += std::cos(3.0 * 2.0 * M_PI * j / 6.0) * std::cos(2.0 * M_PI * j * 3.0 / 6.0);
  oracle /= 6.0;
  EXPECT_NEAR(oracle, 1.0, 1e-12);
  EXPECT_NEAR(transfer_block(c6, 3)(0, 3), oracle, 1e-12);
  EXPECT_NEAR(std::abs(transfer_block(c6, 3)(0, 3)), 1.0, 1e-12);
}

TEST(TransferBlock, ChebyshevIdentityOnCorpus) {
  for (const auto& entry : fixtures::corpus()) {
    const auto ops = ops_of(entry.graph);
    for (std::size_t tau = 0; tau <= 20; ++tau) {
      EXPECT_NO_THROW(transfer_block(ops, tau)) << entry.name << " tau=" << tau;
    }
  }
}

TEST(Criterion, Examples) {
  EXPECT_TRUE(pst_criterion_circulant({6, {1, 5}}, 0, 3, 3).pst);
  EXPECT_TRUE(pst_criterion_circulant(unitary_connection_set(12), 0, 6, 6).pst);
  const auto miss = pst_criterion_circulant({6, {1, 5}}, 0, 2, 3);
  EXPECT_FALSE(miss.pst);
  EXPECT_FALSE(miss.diagnostics.antipodal);
  EXPECT_TRUE(miss.diagnostics.all_unimodular);
  EXPECT_TRUE(miss.diagnostics.alternating);
  EXPECT_THROW(pst_criterion_circulant({6, {1, 5}}, 2, 2, 3), DomainError);
}

TEST(Criterion, DiagnosticsForUc12) {
  const auto r = pst_criterion_circulant(unitary_connection_set(12), 0, 6, 4);
  EXPECT_TRUE(r.diagnostics.antipodal);
  EXPECT_FALSE(r.diagnostics.all_unimodular);  // T_4(-1/2) = -1/2
  EXPECT_FALSE(r.pst);
  const auto ok = pst_criterion_circulant(unitary_connection_set(12), 3, 9, 6);
  EXPECT_TRUE(ok.pst);
  EXPECT_FALSE(ok.diagnostics.low_margin);
  EXPECT_EQ(ok.diagnostics.sign_bits.size(), 12u);
}

TEST(NecessaryFilter, Examples) {
  const std::vector<double> support{1, 0.5, 0, -0.5, -1};
  EXPECT_TRUE(pst_necessary_filter(support, 6));
  EXPECT_FALSE(pst_necessary_filter(support, 4));
  const std::vector<double> one{1};
  for (std::size_t tau = 1; tau < 30; ++tau) EXPECT_TRUE(pst_necessary_filter(one, tau));
}

TEST(Bruteforce, Examples) {
  const auto k2 = pst_bruteforce(ops_of(unitary_cayley(2)), 1);
  ASSERT_EQ(k2.size(), 2u);
  EXPECT_EQ(k2[0].source, 0u);
  EXPECT_EQ(k2[0].target, 1u);
  EXPECT_EQ(k2[0].time, 1u);
  EXPECT_NEAR(std::abs(k2[0].phase - Complex(1.0)), 0.0, 1e-12);

  const auto c4 = pst_bruteforce(ops_of(named(GraphFamily::cycle, {4})), 2);
  const bool has = std::any_of(c4.begin(), c4.end(), [](const PSTCertificate& c) {
    return c.source == 0 && c.target == 2 && c.time == 2;
  });
  EXPECT_TRUE(has);

  EXPECT_TRUE(pst_bruteforce(ops_of(named(GraphFamily::complete, {3})), 3).empty());
}

TEST(Bruteforce, CertificatesArePhaseConsistentAndSymmetric) {
  for (const auto& entry : fixtures::corpus()) {
    const auto ops = ops_of(entry.graph);
    const auto certs = pst_bruteforce(ops, 24);
    std::set<std::tuple<std::size_t, Vertex, Vertex>> seen;
    for (const auto& c : certs) seen.emplace(c.time, c.source, c.target);
    for (const auto& c : certs) {
      EXPECT_NEAR(std::abs(c.phase), 1.0, 1e-7);
      const CVector moved = evolve(ops, vertex_state(ops, c.source), c.time).amplitudes;
      const CVector target = vertex_state(ops, c.target).amplitudes;
      EXPECT_LT((moved - c.phase * target).norm(), 1e-7) << entry.name;
      EXPECT_TRUE(seen.contains({c.time, c.target, c.source})) << entry.name;
    }
  }
}

TEST(Bruteforce, PstOnVertexTransitiveImpliesPeriodic) {
  for (const auto& entry : fixtures::corpus()) {
    if (entry.name.rfind("UC", 0) != 0 && entry.name.rfind("Cay", 0) != 0 && entry.name[0] != 'C' &&
        entry.name[0] != 'K' && entry.name[0] != 'H' && entry.name != "Q3") {
      continue;
    }
    if (entry.name == "K2,3") continue;  // not vertex-transitive
    const auto ops = ops_of(entry.graph);
    if (!pst_bruteforce(ops, 40).empty()) {
      EXPECT_TRUE(period_bruteforce(ops).periodic) << entry.name;
    }
  }
}

TEST(NoGo, Examples) {
  EXPECT_TRUE(pst_no_go_equal_eigs(unitary_connection_set(8)));
  for (std::int64_t n : {3, 5, 7, 9, 15}) EXPECT_TRUE(pst_no_go_equal_eigs(unitary_connection_set(n))) << n;
  for (std::size_t n : {5u, 7u, 11u}) EXPECT_TRUE(pst_no_go_equal_eigs({n, {1, n - 1}})) << n;
  // Oracle enumeration: 2 cos(2 pi j / 6) for j = 0..5 is 2, 1, -1, -2, -1, 1.
  EXPECT_FALSE(pst_no_go_equal_eigs({6, {1, 5}}));
}

TEST(CriterionVsBruteforce, RandomCirculants) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const CirculantSpec spec = fixtures::random_connected_circulant(rng, 4, 14);
    const auto ops = ops_of(cayley(spec));
    const auto certs = pst_bruteforce(ops, 30);
    std::set<std::tuple<std::size_t, Vertex, Vertex>> brute;
    for (const auto& c : certs) brute.emplace(c.time, c.source, c.target);
    for (std::size_t tau = 1; tau <= 30; ++tau) {
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = 0; v < spec.n; ++v) {
          if (u == v) continue;
          EXPECT_EQ(pst_criterion_circulant(spec, u, v, tau).pst, brute.contains({tau, u, v}))
              << "n=" << spec.n << " tau=" << tau << " u=" << u << " v=" << v;
        }
      }
    }
  }
}

TEST(UcClassification, PstExactlyAt2_4_6_12) {
  const auto verdicts = uc_pst_classification(24);
  std::set<std::int64_t> with_pst;
  for (const auto& v : verdicts) {
    if (v.pst) with_pst.insert(v.n);
  }
  EXPECT_EQ(with_pst, (std::set<std::int64_t>{2, 4, 6, 12}));
  EXPECT_EQ(verdicts[9 - 2].reason, "n odd");
  EXPECT_EQ(verdicts[24 - 2].reason, "equal consecutive eigenvalues");
  for (const auto& c : verdicts[12 - 2].certificates) {
    EXPECT_EQ(c.time, 6u);
    EXPECT_EQ(c.target, (c.source + 6) % 12);
    EXPECT_EQ(c.method, PstMethod::both);
  }
  EXPECT_EQ(verdicts[12 - 2].certificates.size(), 12u);
}

TEST(Criterion, IndexedFormMatchesSpecForm) {
  const CirculantSpec spec{10, {1, 3, 7, 9}};
  const auto mu = circulant_discriminant_indexed(spec);
  ASSERT_EQ(mu.size(), 10u);
  EXPECT_DOUBLE_EQ(mu[0], 1.0);
  for (std::size_t tau = 1; tau <= 12; ++tau) {
    for (Vertex v = 1; v < 10; ++v) {
      EXPECT_EQ(pst_criterion_indexed(mu, 0, v, tau).pst, pst_criterion_circulant(spec, 0, v, tau).pst);
    }
  }
  EXPECT_THROW(pst_criterion_indexed(mu, 0, 10, 1), DomainError);
}
