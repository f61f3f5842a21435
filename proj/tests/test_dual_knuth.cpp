#include <gtest/gtest.h>

#include "printers.hpp"
#include "oracles.hpp"
#include "wcell/cell_builder.hpp"
#include "wcell/dual_knuth.hpp"

using namespace wcell;

namespace {

StandardTableau T(const char* text) { return StandardTableau::parse(text); }

GeneratorSet above(GeneratorSet d, int k) {
  GeneratorSet out;
  for (int i : d.to_vector())
    if (i > k) out.insert(i);
  return out;
}

}  // namespace

TEST(DKMoves, HookTwoOne) {
  StandardTableau a = T("1 3/2"), b = T("1 2/3");
  auto ma = dk_moves_out(a), mb = dk_moves_out(b);
  ASSERT_EQ(ma.size() + mb.size(), 1u);
  const DKMove& m = ma.empty() ? mb.front() : ma.front();
  EXPECT_EQ(m.index, 2);
  EXPECT_EQ(m.target, apply_s(m.index, m.source));
  EXPECT_EQ(dk_moves_from(a).size(), 1u);
  EXPECT_EQ(dk_moves_from(b).size(), 1u);
}

TEST(DKMoves, SymmetricAndDescentShape) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      std::size_t ends = 0;
      for (const auto& t : enumerate_std(lambda))
        for (const DKMove& m : dk_moves_from(t)) {
          ++ends;
          EXPECT_TRUE(m.source == t || m.target == t);
          EXPECT_EQ(dk_move_kind(m.source, m.target, m.index), m.kind);
          EXPECT_FALSE(descent_set(m.source).subset_of(descent_set(m.target)));
          EXPECT_FALSE(descent_set(m.target).subset_of(descent_set(m.source)));
        }
      EXPECT_EQ(ends % 2, 0u);
    }
}

TEST(DKMoves, NeighbourMatchesBruteForce) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& v : enumerate_std(lambda))
        for (int k = 1; k + 2 <= n; ++k) {
          GeneratorSet d = descent_set(v);
          if (d.contains(k) == d.contains(k + 1)) {
            EXPECT_THROW(k_neighbour(v, k), std::invalid_argument);
            continue;
          }
          auto cand = oracle::neighbour_brute(v, k);
          ASSERT_EQ(cand.size(), 1u) << v.to_string() << " k=" << k;
          StandardTableau w = k_neighbour(v, k);
          EXPECT_EQ(w, cand.front());
          EXPECT_EQ(k_neighbour(w, k), v);
        }
}

TEST(Restriction, Examples) {
  StandardTableau t = T("1 2 3/4 5");
  EXPECT_EQ(restriction_number(T("1 2 5/3/4"), t), 2);
  EXPECT_EQ(restriction_number(T("1 2 3/4/5"), t), 4);
  EXPECT_EQ(restriction_number(t, t), 5);
}

TEST(Restriction, ProbablePairsHaveFavourableMembers) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = enumerate_std(lambda);
      for (const auto& u : tabs)
        for (const auto& t : tabs)
          if (u != t && descent_set(t).proper_subset_of(descent_set(u)) && tableau_dominance_leq(u, t))
            EXPECT_FALSE(favourable_set(u, t).empty()) << u.to_string() << " " << t.to_string();
    }
}

TEST(Favourable, SetMatchesBruteForce) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = enumerate_std(lambda);
      for (const auto& u : tabs)
        for (const auto& t : tabs) {
          if (u == t || !is_favourable(u, t)) continue;
          std::set<std::pair<std::vector<int>, std::vector<int>>> got;
          for (const auto& [v, x] : favourable_set(u, t)) got.insert({v.columns(), x.columns()});
          EXPECT_EQ(got, oracle::favourable_brute(u, t)) << u.to_string() << " " << t.to_string();
        }
    }
}

TEST(Favourable, MembersKeepTailsAndDescents) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = enumerate_std(lambda);
      for (const auto& u : tabs)
        for (const auto& t : tabs) {
          if (u == t || !is_favourable(u, t)) continue;
          int k = restriction_number(u, t);
          auto set = favourable_set(u, t);
          ASSERT_FALSE(set.empty());
          for (const auto& [v, x] : set) {
            EXPECT_EQ(restrict_gt(v, k), restrict_gt(u, k));
            EXPECT_EQ(restrict_gt(x, k), restrict_gt(t, k));
            EXPECT_EQ(restrict_leq(v, k), restrict_leq(x, k));
            EXPECT_EQ(above(descent_set(v), k), above(descent_set(u), k));
            EXPECT_EQ(above(descent_set(x), k), above(descent_set(t), k));
            EXPECT_EQ(restriction_number(v, x), k);
            EXPECT_TRUE(is_favourable(v, x));
          }
          auto rep = favourable_rep(u, t);
          EXPECT_NE(std::find(set.begin(), set.end(), rep), set.end());
        }
    }
}

TEST(Approximates, ExtremesAreMembers) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = enumerate_std(lambda);
      for (const auto& u : tabs)
        for (const auto& t : tabs) {
          if (u == t || !is_favourable(u, t)) continue;
          int k = restriction_number(u, t);
          auto app = approximates(u, t);
          auto lo = minimal_approximate(u, t), hi = maximal_approximate(u, t);
          EXPECT_EQ(app.empty(), !lo.has_value());
          EXPECT_EQ(app.empty(), !hi.has_value());
          if (app.empty()) continue;
          EXPECT_NE(std::find(app.begin(), app.end(), *lo), app.end());
          EXPECT_NE(std::find(app.begin(), app.end(), *hi), app.end());
          for (const auto& [v, x] : app) {
            EXPECT_EQ(v.col(k), t.col(k + 1) - 1);
            StandardTableau pv = restrict_leq(v, k - 1), plo = restrict_leq(lo->first, k - 1);
            StandardTableau phi = restrict_leq(hi->first, k - 1);
            if (pv.shape() == plo.shape()) {
              EXPECT_TRUE(tableau_dominance_leq(plo, pv) || plo == pv);
              EXPECT_TRUE(tableau_dominance_leq(pv, phi) || pv == phi);
            }
          }
        }
    }
}

TEST(PairedClasses, HookAgainstHook) {
  auto classes = paired_classes(Partition{3, 1}, Partition{2, 1, 1});
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 1, 1, 1, 1, 1}));
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  EXPECT_EQ(total, 9u);
}

TEST(PairedClasses, DiagonalIsOneClass) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto classes = paired_classes(lambda, lambda);
      for (const auto& c : classes) {
        bool has_diag = std::any_of(c.begin(), c.end(), [](const auto& p) { return p.first == p.second; });
        if (!has_diag) continue;
        EXPECT_EQ(c.size(), count_std(lambda));
        for (const auto& p : c) EXPECT_EQ(p.first, p.second);
      }
    }
}

TEST(PairedClasses, DominanceIsConstant) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& c : paired_classes(lambda, lambda)) {
        bool first = tableau_dominance_leq(c.front().first, c.front().second);
        for (const auto& p : c) EXPECT_EQ(tableau_dominance_leq(p.first, p.second), first);
      }
}

TEST(Probable, RepresentativeSatisfiesRecursionHypotheses) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      CellBuilder b(lambda);
      for (auto [u, t] : b.probable_pairs()) {
        auto [u0, t0] = favourable_rep(b.tableaux()[u], b.tableaux()[t]);
        int i = restriction_number(u0, t0), j = descent_data(t0).sd.max();
        EXPECT_LT(i, j);
        if (j == i + 1) EXPECT_NE(t0.col(j - 1), t0.col(j + 1));
      }
    }
}

TEST(Probable, NoneBelowFive) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_TRUE(CellBuilder(lambda).probable_pairs().empty());
  EXPECT_EQ(CellBuilder(Partition{3, 2}).probable_pairs().size(), 1u);
  EXPECT_EQ(CellBuilder(Partition{2, 2, 1}).probable_pairs().size(), 1u);
}

TEST(Probable, DescentsSeparateSmallCells) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = enumerate_std(lambda);
      for (const auto& u : tabs)
        for (const auto& t : tabs)
          if (descent_set(u) == descent_set(t)) EXPECT_EQ(u, t);
    }
}
