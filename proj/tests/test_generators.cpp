#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "token_spectra/families.hpp"
#include "token_spectra/generators.hpp"

using namespace token_spectra;

TEST(GeneratorsTest, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]) << "n=" << n;
}

TEST(GeneratorsTest, TreeCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    auto ts = trees(n);
    EXPECT_EQ(ts.size(), expected[n - 1]) << "n=" << n;
    for (const auto& t : ts) {
      EXPECT_EQ(t.size() + 1, t.order());
      EXPECT_TRUE(t.is_connected());
    }
  }
}

TEST(GeneratorsTest, RepresentativesAreDistinctAndConnected) {
  auto gs = connected_graphs(6);
  std::set<std::uint64_t> codes;
  for (const auto& g : gs) {
    EXPECT_TRUE(g.is_connected());
    codes.insert(canonical_code(g));
  }
  EXPECT_EQ(codes.size(), gs.size());
}

TEST(GeneratorsTest, OutputIsDeterministic) {
  EXPECT_EQ(connected_graphs(5), connected_graphs(5));
  EXPECT_EQ(trees(7), trees(7));
}

TEST(GeneratorsTest, CanonicalCodeIsRelabelingInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(8, 0.4, rng);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
  }
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(star_graph(4)));
}

TEST(GeneratorsTest, RandomGraphsAreSeeded) {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    Graph ga = random_connected_graph(7, 0.3, a);
    EXPECT_TRUE(ga.is_connected());
    EXPECT_EQ(ga, random_connected_graph(7, 0.3, b));
  }
}

TEST(GeneratorsTest, UnitUniformRange) {
  std::mt19937_64 rng(1);
  double lo = 1, hi = 0;
  for (int i = 0; i < 10000; ++i) {
    double u = unit_uniform(rng);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_LT(lo, 0.01);
  EXPECT_GT(hi, 0.99);
}
