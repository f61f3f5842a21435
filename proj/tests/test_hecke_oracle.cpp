#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "printers.hpp"
#include "oracles.hpp"
#include "wcell/cell_builder.hpp"
#include "wcell/hecke.hpp"
#include "wcell/kl_oracle.hpp"
#include "wcell/wgraph_checks.hpp"

using namespace wcell;
using LP = LaurentPolynomial;

TEST(Laurent, Arithmetic) {
  LP q = LP::q(), qi = LP::q_inv();
  EXPECT_EQ(q * qi, LP(1));
  EXPECT_EQ((q - qi) * (q + qi), q * q - qi * qi);
  EXPECT_EQ(q.bar(), qi);
  EXPECT_EQ((q + LP(3)).bar().bar(), q + LP(3));
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ((q * q).max_degree(), 2);
  EXPECT_EQ(LP::monomial(-2, 5).coefficient(-2), 5);
  EXPECT_EQ(q.shifted(2), LP::monomial(3));
  EXPECT_EQ(-q + q, LP());
  EXPECT_EQ(LP::monomial(0, 0), LP());
}

TEST(Hecke, SingletonGraphs) {
  // Trivial and sign representations.
  SColoredGraph triv(4, {GeneratorSet{}}), sign(4, {GeneratorSet{1, 2, 3}});
  EXPECT_TRUE(verify_hecke_relations(triv).ok());
  EXPECT_TRUE(verify_hecke_relations(sign).ok());
  auto m = module_matrices(sign);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0].at(0, 0), -LP::q_inv());
  EXPECT_EQ(module_matrices(triv)[1].at(0, 0), LP::q());
}

TEST(Hecke, BuiltGraphsSatisfyRelations) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      EXPECT_TRUE(verify_hecke_relations(build_cell_graph(lambda)).ok()) << lambda.to_string();
}

TEST(Hecke, CorruptionIsCaught) {
  SColoredGraph g = build_cell_graph(Partition{2, 2});
  std::vector<MuEntry> mu(g.entries().begin(), g.entries().end());
  ASSERT_FALSE(mu.empty());
  mu.front().w += 1;
  SColoredGraph bad(g.n(), g.taus(), mu, g.labels());
  EXPECT_FALSE(verify_hecke_relations(bad).ok());
}

TEST(KL, DegreeBoundAndConstantTerm) {
  KLTable kl = kl_polynomials(5);
  for (int y = 0; y < kl.size(); ++y)
    for (int w = 0; w < kl.size(); ++w) {
      const auto& p = kl.poly(y, w);
      bool below = bruhat_leq(kl.element(y), kl.element(w));
      EXPECT_EQ(!p.empty(), below);
      if (!below) continue;
      EXPECT_EQ(p.front(), 1);
      int d = kl.length(w) - kl.length(y);
      if (y != w) EXPECT_LE(2 * (static_cast<int>(p.size()) - 1), d - 1);
      if (d == 1) {
        EXPECT_EQ(p.size(), 1u);
        EXPECT_EQ(kl.mu(y, w), 1);
      }
    }
}

TEST(KL, MatchesSlowRecursion) {
  for (int n = 1; n <= 4; ++n) {
    KLTable kl = kl_polynomials(n);
    oracle::SlowKL slow(n);
    for (int y = 0; y < kl.size(); ++y)
      for (int w = 0; w < kl.size(); ++w) ASSERT_EQ(kl.P(kl.element(y), kl.element(w)), slow.P(y, w));
  }
}

TEST(KL, FirstNontrivialPolynomial) {
  // P_{x,w} = 1 + q for x = 1324, w = 3412 in S_4.
  KLTable kl = kl_polynomials(4);
  EXPECT_EQ(kl.P(Permutation{1, 3, 2, 4}, Permutation{3, 4, 1, 2}), LP(1) + LP::q());
  EXPECT_EQ(kl.P(Permutation::identity(4), Permutation{3, 4, 1, 2}), LP(1) + LP::q());
}

TEST(KL, LeftCellGraphSizes) {
  KLTable kl = kl_polynomials(5);
  for (const auto& lambda : partitions_of(5)) {
    SColoredGraph g = kl_left_cell_graph(kl, lambda);
    EXPECT_EQ(static_cast<std::uint64_t>(g.num_vertices()), oracle::hook_count(lambda));
    EXPECT_EQ(cells(g).blocks.size(), 1u);
  }
  EXPECT_THROW(kl_left_cell_graph(kl, Partition{2, 2}), std::invalid_argument);
}

TEST(KL, RegularGraphIsAdmissibleAndOrdered) {
  for (int n = 1; n <= 4; ++n) {
    SColoredGraph g = kl_regular_graph(kl_polynomials(n));
    for (const auto& rep : check_all_rules(g)) EXPECT_TRUE(rep.ok()) << n << " " << rep.rule;
    EXPECT_TRUE(check_ordered(g).ok()) << n;
    EXPECT_TRUE(verify_hecke_relations(g).ok()) << n;
  }
}

TEST(KL, BoundIsEnforced) {
  EXPECT_THROW(kl_polynomials(5, 4), BoundExceeded);
  EXPECT_THROW(kl_left_cell_graph(Partition{3, 2}, 4), BoundExceeded);
  setenv("WCELL_ORACLE_MAX", "3", 1);
  EXPECT_EQ(oracle_bound(), 3);
  EXPECT_THROW(kl_polynomials(4), BoundExceeded);
  unsetenv("WCELL_ORACLE_MAX");
  EXPECT_EQ(oracle_bound(), 6);
}
