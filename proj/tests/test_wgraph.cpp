#include <gtest/gtest.h>

#include <map>

#include "printers.hpp"
#include "oracles.hpp"
#include "wcell/cell_builder.hpp"
#include "wcell/kl_oracle.hpp"
#include "wcell/wgraph_checks.hpp"

using namespace wcell;

namespace {

bool passes(const CheckReport& r) { return r.ok(); }

SColoredGraph with_entries(const SColoredGraph& g, std::vector<MuEntry> extra, bool replace = false) {
  std::map<std::pair<int, int>, long long> mu;
  for (const MuEntry& e : g.entries()) mu[{e.from, e.to}] = e.w;
  for (const MuEntry& e : extra) {
    if (replace) mu[{e.from, e.to}] = e.w;
    else mu[{e.from, e.to}] += e.w;
  }
  std::vector<MuEntry> out;
  for (auto [k, w] : mu) out.push_back({k.first, k.second, w});
  return SColoredGraph(g.n(), g.taus(), std::move(out), g.labels());
}

}  // namespace

TEST(Graph, ConstructionValidates) {
  EXPECT_THROW(SColoredGraph(3, {GeneratorSet{3}}), std::invalid_argument);
  EXPECT_THROW(SColoredGraph(3, {GeneratorSet{}, GeneratorSet{1}}, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(SColoredGraph(3, {GeneratorSet{}, GeneratorSet{1}}, {{0, 1, 1}, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(SColoredGraph(3, {GeneratorSet{}}, {{0, 1, 1}}), std::invalid_argument);
  SColoredGraph g(3, {GeneratorSet{}, GeneratorSet{1}}, {{1, 0, 1}, {0, 1, 0}});
  EXPECT_EQ(g.entries().size(), 1u);
}

TEST(Graph, ArcsAndEdges) {
  // Arc 0 -> 1 from mu(1,0); 1 and 2 joined by a simple edge.
  SColoredGraph g(3, {GeneratorSet{}, GeneratorSet{1}, GeneratorSet{2}}, {{1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
  EXPECT_TRUE(g.is_arc(0, 1));
  EXPECT_FALSE(g.is_arc(1, 0));
  auto as = arcs(g);
  EXPECT_EQ(as.size(), 3u);
  EXPECT_EQ(edges(g), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(simple_edges(g), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(arcs_from(g, 0), (std::vector<Arc>{{0, 1, 1}}));
  auto cd = cells(g);
  ASSERT_EQ(cd.blocks.size(), 2u);
  EXPECT_EQ(cd.blocks[0], std::vector<int>{0});
  EXPECT_EQ(cd.blocks[1], (std::vector<int>{1, 2}));
  EXPECT_TRUE(cd.leq(1, 0));
  EXPECT_FALSE(cd.leq(0, 1));
}

TEST(Graph, CellsOfRegularGraphSmallRank) {
  KLTable kl = kl_polynomials(3);
  SColoredGraph g = kl_regular_graph(kl);
  auto cd = cells(g);
  EXPECT_EQ(cd.blocks.size(), 4u);
  int top = cd.block_of[kl.index(Permutation::identity(3))];
  int bottom = cd.block_of[kl.index(Permutation{3, 2, 1})];
  for (std::size_t c = 0; c < cd.blocks.size(); ++c) {
    EXPECT_TRUE(cd.leq(static_cast<int>(c), top));
    EXPECT_TRUE(cd.leq(bottom, static_cast<int>(c)));
  }
  // Left cells are the fibres of the recording tableau.
  for (int x = 0; x < kl.size(); ++x)
    for (int y = 0; y < kl.size(); ++y)
      EXPECT_EQ(cd.block_of[x] == cd.block_of[y], rs(kl.element(x)).q == rs(kl.element(y)).q);
}

TEST(Graph, MoleculeTypesOfRegularGraph) {
  KLTable kl = kl_polynomials(4);
  SColoredGraph g = kl_regular_graph(kl);
  std::map<std::string, std::size_t> count;
  for (const auto& mt : molecule_types(g)) {
    ASSERT_TRUE(mt.type.has_value());
    ++count[mt.type->to_string()];
    for (std::size_t k = 0; k < mt.part.size(); ++k) EXPECT_EQ(g.tau(mt.part[k]), descent_set(mt.image[k]));
  }
  for (const auto& lambda : partitions_of(4)) EXPECT_EQ(count[lambda.to_string()], count_std(lambda));
}

TEST(Graph, DisjointUnionHasTwoTypes) {
  SColoredGraph a = build_cell_graph(Partition{2, 1}), b = build_cell_graph(Partition{3});
  std::vector<GeneratorSet> tau = a.taus();
  for (GeneratorSet t : b.taus()) tau.push_back(t);
  std::vector<MuEntry> mu(a.entries().begin(), a.entries().end());
  for (const MuEntry& e : b.entries()) mu.push_back({e.from + a.num_vertices(), e.to + a.num_vertices(), e.w});
  SColoredGraph g(3, tau, mu);
  auto types = molecule_types(g);
  ASSERT_EQ(types.size(), 2u);
  EXPECT_EQ(*types[0].type, (Partition{2, 1}));
  EXPECT_EQ(*types[1].type, (Partition{3}));
  EXPECT_EQ(simple_parts(g).size(), 2u);
}

TEST(Graph, UntypedMolecule) {
  // Simple edge whose colours match no dual equivalence graph.
  SColoredGraph g(4, {GeneratorSet{1}, GeneratorSet{2, 3}}, {{0, 1, 1}, {1, 0, 1}});
  auto types = molecule_types(g);
  ASSERT_EQ(types.size(), 1u);
  EXPECT_FALSE(types[0].type.has_value());
}

TEST(Restrict, FullAndEmpty) {
  SColoredGraph g = build_cell_graph(Partition{3, 2});
  SColoredGraph full = restrict_to(g, GeneratorSet{1, 2, 3, 4});
  std::vector<int> id(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) id[v] = v;
  EXPECT_TRUE(graphs_equal_under(g, full, id));
  SColoredGraph none = restrict_to(g, GeneratorSet{});
  EXPECT_TRUE(none.entries().empty());
}

TEST(Restrict, ParabolicStaysWGraph) {
  for (const auto& lambda : {Partition{2, 2}, Partition{3, 2}, Partition{3, 2, 1}}) {
    SColoredGraph g = build_cell_graph(lambda);
    for (GeneratorSet j : {GeneratorSet{1, 2}, GeneratorSet{1, 3}, GeneratorSet{2}}) {
      SColoredGraph r = restrict_to(g, j);
      // Bonding is skipped: it asks for partners coloured by generators outside J.
      for (const auto& rep : check_all_rules(r))
        if (rep.rule != "bonding") EXPECT_TRUE(rep.ok()) << rep.rule;
      // Simple parts of the restriction refine those of the original.
      auto big = simple_parts(g);
      std::vector<int> part_of(g.num_vertices());
      for (std::size_t p = 0; p < big.size(); ++p)
        for (int v : big[p]) part_of[v] = static_cast<int>(p);
      for (const auto& part : simple_parts(r))
        for (int v : part) EXPECT_EQ(part_of[v], part_of[part.front()]);
    }
  }
}

TEST(Checks, BuiltGraphsPass) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      SColoredGraph g = build_cell_graph(lambda);
      for (const auto& rep : check_all_rules(g)) EXPECT_TRUE(rep.ok()) << lambda.to_string() << " " << rep.rule;
      EXPECT_TRUE(check_ordered(g).ok()) << lambda.to_string();
    }
}

TEST(Checks, FixturesFail) {
  SColoredGraph neg(3, {GeneratorSet{}, GeneratorSet{1}}, {{1, 0, -1}});
  EXPECT_FALSE(passes(check_admissible(neg)));
  SColoredGraph asym(3, {GeneratorSet{1}, GeneratorSet{2}}, {{0, 1, 1}});
  EXPECT_FALSE(passes(check_admissible(asym)));
  SColoredGraph triangle(4, {GeneratorSet{1}, GeneratorSet{2}, GeneratorSet{3}},
                         {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 1}, {2, 0, 1}});
  EXPECT_FALSE(passes(check_admissible(triangle)));
  SColoredGraph unbonded(4, {GeneratorSet{1}, GeneratorSet{3}}, {{0, 1, 1}, {1, 0, 1}});
  EXPECT_FALSE(passes(check_compatibility(unbonded)));
  SColoredGraph heavy(3, {GeneratorSet{1}, GeneratorSet{2}}, {{0, 1, 2}, {1, 0, 2}});
  EXPECT_FALSE(passes(check_simplicity(heavy)));
  EXPECT_TRUE(passes(check_compatibility(heavy)));
  SColoredGraph lonely(3, {GeneratorSet{1}});
  EXPECT_FALSE(passes(check_bonding(lonely)));
  SColoredGraph twice(3, {GeneratorSet{1}, GeneratorSet{2}, GeneratorSet{2}},
                      {{0, 1, 1}, {1, 0, 1}, {0, 2, 1}, {2, 0, 1}});
  EXPECT_FALSE(passes(check_bonding(twice)));
}

TEST(Checks, CorruptedWeightBreaksPolygon) {
  SColoredGraph g = build_cell_graph(Partition{3, 2});
  ASSERT_TRUE(check_polygon(g, 2).ok());
  bool caught = false;
  for (const MuEntry& e : g.entries()) {
    SColoredGraph bad = with_entries(g, {{e.from, e.to, 1}});
    auto r2 = check_polygon(bad, 2), r3 = check_polygon(bad, 3);
    caught = caught || !r2.ok() || !r3.ok();
    if (!r2.ok()) {
      ASSERT_TRUE(r2.polygon.has_value());
      const PolygonWitness& w = *r2.polygon;
      EXPECT_NE(w.n_ij, w.n_ji);
      EXPECT_EQ(oracle::polygon_brute(bad, w.u, w.v, w.i, w.j, 2), w.n_ij);
      EXPECT_EQ(oracle::polygon_brute(bad, w.u, w.v, w.j, w.i, 2), w.n_ji);
    }
  }
  EXPECT_TRUE(caught);
}

TEST(Checks, PolygonSumsMatchBruteForce) {
  std::vector<SColoredGraph> graphs{build_cell_graph(Partition{3, 2}), build_cell_graph(Partition{2, 2, 1}),
                                    build_cell_graph(Partition{3, 1, 1})};
  graphs.push_back(with_entries(graphs[0], {{1, 0, 2}, {0, 3, 1}}));
  for (const SColoredGraph& g : graphs)
    for (int r : {2, 3})
      for (int i = 1; i < g.n(); ++i)
        for (int j = 1; j < g.n(); ++j) {
          if (i == j) continue;
          for (int u = 0; u < g.num_vertices(); ++u) {
            if (g.tau(u).contains(i) || g.tau(u).contains(j)) continue;
            auto sums = polygon_sums(g, u, i, j, r);
            for (int v = 0; v < g.num_vertices(); ++v) {
              if (!g.tau(v).contains(i) || !g.tau(v).contains(j)) continue;
              long long got = sums.count(v) ? sums.at(v) : 0;
              EXPECT_EQ(got, oracle::polygon_brute(g, u, v, i, j, r));
            }
          }
        }
}

TEST(Checks, OrderedDetectsUpwardWeight) {
  SColoredGraph g = build_cell_graph(Partition{3, 2});
  ASSERT_TRUE(check_ordered(g).ok());
  // tau_lambda is the dominance minimum, so a weight into it from a non-neighbour points up.
  const auto& labels = g.labels();
  const StandardTableau tau = minimal_tableau(Partition{3, 2});
  ASSERT_TRUE(labels[0]->tableau == tau);
  int other = -1;
  for (int v = 1; v < g.num_vertices() && other < 0; ++v) {
    bool adjacent = false;
    for (int i = 1; i < g.n(); ++i)
      if (auto x = try_apply_s(i, tau); x && *x == labels[v]->tableau) adjacent = true;
    if (!adjacent && g.mu(v, 0) == 0) other = v;
  }
  ASSERT_GE(other, 0);
  SColoredGraph bad = with_entries(g, {{other, 0, 1}});
  EXPECT_FALSE(check_ordered(bad).ok());
  SColoredGraph unlabelled(g.n(), g.taus(), std::vector<MuEntry>(g.entries().begin(), g.entries().end()));
  EXPECT_FALSE(check_ordered(unlabelled).ok());
}

TEST(Graph, EqualUnder) {
  SColoredGraph g = build_cell_graph(Partition{2, 1});
  EXPECT_TRUE(graphs_equal_under(g, g, {0, 1}));
  EXPECT_THROW(graphs_equal_under(g, g, {0, 0}), std::invalid_argument);
  EXPECT_THROW(graphs_equal_under(g, g, {0}), std::invalid_argument);
  EXPECT_FALSE(graphs_equal_under(g, g, {1, 0}));
}
