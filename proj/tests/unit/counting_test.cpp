#include "oddcycle/constructions.hpp"
#include "oddcycle/counting.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/spectral.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace oddcycle;

TEST(WalkTable, Examples) {
  const auto k3 = walk_table(complete_graph(3), 2);
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex y = 0; y < 3; ++y) EXPECT_EQ(k3.at(x, y), x == y ? 2 : 1);
  const auto c4 = walk_table(cycle_graph(4), 2);
  EXPECT_EQ(c4.at(0, 2), 2);
  EXPECT_EQ(c4.at(0, 1), 0);
  EXPECT_EQ(c4.at(0, 0), 2);
  const auto id = walk_table(paley(13), 0);
  for (Vertex x = 0; x < 13; ++x)
    for (Vertex y = 0; y < 13; ++y) EXPECT_EQ(id.at(x, y), x == y ? 1 : 0);
}

TEST(WalkTable, MatchesNaivePowersAndRowSums) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_graph(1 + rng.below(12), rng.unit(), rng);
    const auto a = oracle::adjacency(g);
    auto p = a;
    for (unsigned k = 1; k <= 6; ++k) {
      const auto w = walk_table(g, k);
      for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = 0; y < g.vertex_count(); ++y) EXPECT_EQ(w.at(x, y), p[x][y]);
      p = oracle::multiply(p, a);
    }
  }
  for (const auto &[name, g] : builtin_corpus()) {
    const auto d = degree_profile(g).regular_degree;
    if (!d || g.vertex_count() > 40) continue;
    for (unsigned k = 0; k <= 5; ++k) {
      const auto w = walk_table(g, k);
      for (Vertex x = 0; x < g.vertex_count(); ++x)
        EXPECT_EQ(w.row_sum(x), boost::multiprecision::pow(Count(*d), k)) << name;
    }
  }
}

TEST(WalkTable, WidensOnOverflow) {
  // (A^k)_{00} on K_n is ((n-1)^k + (n-1)(-1)^k) / n.
  const std::size_t n = 40;
  const unsigned k = 14;
  const auto w = walk_table(complete_graph(n), k);
  EXPECT_TRUE(w.wide());
  const Count m1 = n - 1;
  const Count diag = (boost::multiprecision::pow(m1, k) + m1) / n;
  EXPECT_EQ(w.at(0, 0), diag);
  EXPECT_FALSE(walk_table(complete_graph(5), 3).wide());
}

TEST(HomCountCycle, Examples) {
  EXPECT_EQ(hom_count_cycle(complete_graph(3), 3), 6);
  EXPECT_EQ(hom_count_cycle(cycle_graph(5), 4), 30);
  EXPECT_EQ(hom_count_cycle(complete_graph(4), 2), 12);
  EXPECT_EQ(hom_count_cycle(cycle_graph(4), 4), 32);
  EXPECT_THROW(hom_count_cycle(complete_graph(3), 1), InputError);
}

TEST(HomCountCycle, BigIntegerFallbackIsExact) {
  for (std::size_t n : {30, 60}) {
    for (unsigned m : {11u, 12u, 17u}) {
      const Count m1 = n - 1;
      Count expected = boost::multiprecision::pow(m1, m) + m1 * (m % 2 == 0 ? 1 : -1);
      EXPECT_EQ(hom_count_cycle(complete_graph(n), m), expected) << n << " " << m;
    }
  }
}

TEST(HomCountCycle, MatchesNaiveTraceOnRandomGraphs) {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(1 + rng.below(14), rng.unit(), rng);
    for (unsigned m = 2; m <= 9; ++m) EXPECT_EQ(hom_count_cycle(g, m), oracle::closed_walks(g, m));
  }
}

TEST(HomCountPath, Examples) {
  EXPECT_EQ(hom_count_path(complete_graph(3), 1), 6);
  EXPECT_EQ(hom_count_path(complete_graph(3), 2), 12);
  EXPECT_EQ(hom_count_path(paley(13), 0), 13);
  EXPECT_EQ(hom_count_path(paley(13), 3), 13 * 6 * 6 * 6);
}

TEST(RootedOddCycles, Examples) {
  EXPECT_EQ(rooted_odd_cycle_counts(complete_graph(3), 1), std::vector<Count>(3, 2));
  EXPECT_EQ(rooted_odd_cycle_counts(cycle_graph(5), 1), std::vector<Count>(5, 0));
  EXPECT_EQ(rooted_odd_cycle_counts(cycle_graph(5), 2), std::vector<Count>(5, 2));
  EXPECT_THROW(rooted_odd_cycle_counts(cycle_graph(5), 0), InputError);
}

TEST(RootedOddCycles, SumToTraceAndMatchDiagonal) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_graph(1 + rng.below(12), rng.unit(), rng);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto rooted = rooted_odd_cycle_counts(g, k);
      auto p = oracle::adjacency(g);
      const auto a = p;
      for (unsigned i = 1; i < 2 * k + 1; ++i) p = oracle::multiply(p, a);
      Count total = 0;
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        EXPECT_EQ(rooted[x], p[x][x]);
        total += rooted[x];
      }
      EXPECT_EQ(total, hom_count_cycle(g, 2 * k + 1));
    }
  }
}

TEST(InjectiveCycles, Examples) {
  EXPECT_EQ(injective_count_cycle(complete_graph(4), 3), 24);
  EXPECT_EQ(injective_count_cycle(cycle_graph(5), 3), 0);
  EXPECT_EQ(injective_count_cycle(cycle_graph(5), 5), 10);
  EXPECT_THROW(injective_count_cycle(cycle_graph(5), 2), InputError);
}

TEST(InjectiveCycles, MatchesNaiveAndNeverExceedsHom) {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(1 + rng.below(9), rng.unit(), rng);
    for (unsigned m = 3; m <= 7; ++m) {
      const auto inj = injective_count_cycle(g, m);
      EXPECT_EQ(inj, oracle::naive_injective_cycles(g, m));
      EXPECT_LE(inj, hom_count_cycle(g, m));
    }
  }
  // All triangle homomorphisms into K_4 are injective; 4-cycles into K_3 are not.
  EXPECT_EQ(injective_count_cycle(complete_graph(4), 3), hom_count_cycle(complete_graph(4), 3));
  EXPECT_LT(injective_count_cycle(complete_graph(3), 4), hom_count_cycle(complete_graph(3), 4));
}

TEST(InjectiveCycles, KnownTriangleCountOfPaley) {
  // Paley(q) has q(q-1)(q-5)/48 triangles.
  for (std::uint64_t q : {13, 29, 101}) {
    EXPECT_EQ(injective_count_cycle(paley(q), 3), Count(q * (q - 1) * (q - 5) / 48 * 6)) << q;
  }
}

TEST(InjectiveCycles, BudgetExhaustion) {
  EXPECT_THROW(injective_count_cycle(complete_graph(12), 9, 1000), ResourceError);
}

TEST(FindCycle, ReturnsValidCycleOrNothing) {
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(3 + rng.below(10), rng.unit() * 0.6, rng);
    for (unsigned m = 3; m <= 6; ++m) {
      const auto c = find_cycle(g, m);
      EXPECT_EQ(c.has_value(), oracle::naive_injective_cycles(g, m) > 0);
      if (!c) continue;
      ASSERT_EQ(c->size(), m);
      std::vector<Vertex> sorted = *c;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      for (unsigned i = 0; i < m; ++i) EXPECT_TRUE(g.adjacent((*c)[i], (*c)[(i + 1) % m]));
    }
  }
  EXPECT_FALSE(find_cycle(complete_bipartite(4, 4), 5).has_value());
}

TEST(FigureEight, Examples) {
  EXPECT_EQ(figure_eight_hom_count(cycle_graph(5), 1, 1), 0);
  EXPECT_EQ(figure_eight_hom_count(complete_graph(4), 1, 1), 72);
  const auto cert = certify_ndl(complete_graph(4));
  EXPECT_NEAR(figure_eight_bound(cert, 1, 1), 234.75, 1e-9);
  const auto check = figure_eight_bound_check(cert, complete_graph(4), 1, 1);
  EXPECT_EQ(check.count, 72);
  EXPECT_TRUE(check.holds);
  EXPECT_THROW(figure_eight_bound_check(cert, cycle_graph(4), 1, 1), CertificationError);
}

TEST(FigureEight, BoundHoldsOnCorpus) {
  for (const auto &[name, g] : builtin_corpus()) {
    if (!degree_profile(g).regular_degree || g.vertex_count() > 40) continue;
    const auto cert = certify_ndl(g);
    for (unsigned q = 1; q <= 2; ++q)
      for (unsigned r = 1; r <= 2; ++r) EXPECT_TRUE(figure_eight_bound_check(cert, g, q, r).holds) << name;
  }
}

TEST(BruteHom, Examples) {
  EXPECT_EQ(brute_hom_count(cycle_graph(3), complete_graph(3)), 6u);
  EXPECT_EQ(brute_hom_count(cycle_graph(4), cycle_graph(4)), 32u);
  EXPECT_EQ(brute_hom_count(path_graph(2), complete_graph(3)), 12u);
  EXPECT_THROW(brute_hom_count(cycle_graph(9), complete_graph(3)), ResourceError);
  EXPECT_THROW(brute_hom_count(cycle_graph(3), complete_graph(13)), ResourceError);
}

TEST(BruteHom, MatchesUnprunedEnumeration) {
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_graph(1 + rng.below(5), rng.unit(), rng);
    const auto g = oracle::random_graph(1 + rng.below(7), rng.unit(), rng);
    EXPECT_EQ(brute_hom_count(h, g), oracle::naive_hom(h, g));
  }
}

TEST(HomCount, DispatcherAgreesWithBruteOnCorpus) {
  std::vector<Pattern> patterns;
  for (unsigned m = 2; m <= 7; ++m) patterns.push_back(Pattern::cycle(m));
  for (unsigned m = 0; m <= 6; ++m) patterns.push_back(Pattern::path(m));
  patterns.push_back(Pattern::figure_eight(1, 1));
  patterns.push_back(Pattern::figure_eight(2, 1));
  for (const auto &[name, g] : builtin_corpus()) {
    if (g.vertex_count() > 8) continue;
    for (const auto &h : patterns)
      EXPECT_EQ(hom_count(h, g), brute_hom_count(h.graph(), g)) << name << " " << h.name();
  }
}

TEST(CountReport, FieldsAndDensity) {
  const auto rep = count_report("K4", complete_graph(4), Pattern::cycle(3), true);
  EXPECT_EQ(rep.hom, 24);
  EXPECT_EQ(rep.injective, std::optional<Count>(24));
  EXPECT_NEAR(rep.density, 24.0 / 64.0, 1e-15);
  const auto path = count_report("K4", complete_graph(4), Pattern::path(2), false);
  EXPECT_FALSE(path.injective.has_value());
  EXPECT_THROW(count_report("K4", complete_graph(4), Pattern::path(2), true), InputError);
}
