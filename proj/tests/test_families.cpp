#include <gtest/gtest.h>

#include <vector>

#include "token_spectra/error.hpp"
#include "token_spectra/families.hpp"
#include "token_spectra/spectra.hpp"

using namespace token_spectra;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidParameter;
}

}  // namespace

TEST(FamiliesTest, StandardSizes) {
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(star_graph(5).size(), 4u);
  EXPECT_EQ(star_graph(5).degrees()[0], 4);
  Graph kb = complete_bipartite_graph(2, 3);
  EXPECT_EQ(kb.size(), 6u);
  EXPECT_FALSE(kb.has_edge(0, 1));
  EXPECT_FALSE(kb.has_edge(2, 3));
  EXPECT_EQ(code_of([] { cycle_graph(2); }), ErrorCode::InvalidParameter);
}

TEST(FamiliesTest, ParseFamily) {
  EXPECT_EQ(parse_family("cycle"), Family::Cycle);
  EXPECT_EQ(parse_family("complete_bipartite"), Family::CompleteBipartite);
  EXPECT_FALSE(parse_family("wheel").has_value());
  std::vector<int> p{3, 4};
  EXPECT_EQ(build_standard(Family::CompleteBipartite, p), complete_bipartite_graph(3, 4));
  std::vector<int> one{3};
  EXPECT_EQ(code_of([&] { build_standard(Family::CompleteBipartite, one); }), ErrorCode::InvalidParameter);
}

TEST(FamiliesTest, KiteLabels) {
  Kite k = build_kite({complete_graph(3), 0, 3, 3});
  EXPECT_EQ(k.graph.order(), 12u);
  EXPECT_EQ(k.graph.size(), 3u + 9u);
  EXPECT_EQ(k.tail(1, 1), 3);
  EXPECT_EQ(k.tail(2, 1), 6);
  EXPECT_EQ(k.tail(3, 3), 11);
  EXPECT_EQ(k.level(2), (std::vector<Vertex>{4, 7, 10}));
  EXPECT_TRUE(k.graph.has_edge(0, 3));
  EXPECT_TRUE(k.graph.has_edge(3, 4));
  EXPECT_FALSE(k.graph.has_edge(5, 6));
  EXPECT_EQ(code_of([&] { k.tail(4, 1); }), ErrorCode::OutOfRange);
}

TEST(FamiliesTest, KiteSpecValidation) {
  EXPECT_EQ(code_of([] { build_kite({complete_graph(3), 0, 1, 2}); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { build_kite({complete_graph(3), 3, 2, 2}); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { build_kite({complete_graph(3), 0, 2, 0}); }), ErrorCode::InvalidSpec);
}

// C_4 head, three tails of length three, against a hand-written Laplacian
// whose tail vertices are numbered depth-major (4 + 3(j-1) + (i-1)).
TEST(FamiliesTest, KiteLaplacianMatchesDepthMajorMatrix) {
  const int expected[13][13] = {
      {5, -1, 0, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},     {-1, 0, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 0, 0, 0, 2, 0, 0, -1, 0, 0, 0, 0, 0},     {-1, 0, 0, 0, 0, 2, 0, 0, -1, 0, 0, 0, 0},
      {-1, 0, 0, 0, 0, 0, 2, 0, 0, -1, 0, 0, 0},     {0, 0, 0, 0, -1, 0, 0, 2, 0, 0, -1, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0, 2, 0, 0, -1, 0},     {0, 0, 0, 0, 0, 0, -1, 0, 0, 2, 0, 0, -1},
      {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0},      {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1}};
  Kite k = build_kite({cycle_graph(4), 0, 3, 3});
  std::vector<Vertex> ours(13);
  for (int v = 0; v < 4; ++v) ours[v] = v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) ours[4 + 3 * (j - 1) + (i - 1)] = k.tail(i, j);
  SymMatrix l = laplacian(k.graph);
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b) EXPECT_EQ(l(ours[a], ours[b]), expected[a][b]) << a << "," << b;
}

TEST(FamiliesTest, Superkite) {
  Graph tree(3, {{0, 1}, {0, 2}});
  Graph g = build_superkite(complete_graph(3), 1, tree, 0, 2);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 3u + 4u);
  EXPECT_EQ(g.degrees()[1], 2 + 4);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(1, 6));
  EXPECT_EQ(code_of([&] { build_superkite(complete_graph(3), 0, cycle_graph(3), 0, 2); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([&] { build_superkite(complete_graph(3), 0, tree, 0, 1); }), ErrorCode::InvalidSpec);
}

TEST(FamiliesTest, CutCliqueJoin) {
  std::vector<Graph> comps{Graph(1), path_graph(2)};
  Graph g = build_cut_clique_join(2, comps);
  EXPECT_EQ(g.order(), 5u);
  // K_2 (1) + K_2 component (1) + full join 2 * 3
  EXPECT_EQ(g.size(), 8u);
  std::vector<Graph> k2s{complete_graph(2), complete_graph(2)};
  EXPECT_EQ(build_cut_clique_join(2, k2s).size(), 11u);
  std::vector<Graph> lone{Graph(1)};
  EXPECT_EQ(code_of([&] { build_cut_clique_join(2, lone); }), ErrorCode::TooFewComponents);
}

TEST(FamiliesTest, ExtendedCycle) {
  std::vector<Edge> chords{{1, 4}};
  Graph g = build_extended_cycle(5, 5, chords);
  EXPECT_EQ(g.size(), 6u);
  std::vector<Edge> cycle_edge{{2, 3}};
  EXPECT_EQ(code_of([&] { build_extended_cycle(5, 5, cycle_edge); }), ErrorCode::DuplicateEdge);
  std::vector<Edge> wrong{{1, 3}};
  EXPECT_EQ(code_of([&] { build_extended_cycle(5, 5, wrong); }), ErrorCode::InvalidChord);
  EXPECT_EQ(code_of([&] { build_extended_cycle(5, 4, chords); }), ErrorCode::InvalidParameter);
  std::vector<Edge> even{{1, 5}};
  EXPECT_EQ(build_extended_cycle(6, 6, even).size(), 7u);
  std::vector<Edge> outside{{1, 6}};
  EXPECT_EQ(code_of([&] { build_extended_cycle(6, 7, outside); }), ErrorCode::InvalidParameter);
}

TEST(FamiliesTest, BipartiteExtension) {
  Graph star = build_bipartite_extension(2, 3, BipartiteMode::star_y());
  EXPECT_EQ(star.size(), 6u + 3u);
  EXPECT_TRUE(star.has_edge(2, 4));
  Graph plus = build_bipartite_extension(3, 3, BipartiteMode::plus_x({{0, 1}}));
  EXPECT_EQ(plus.size(), 10u);
  EXPECT_EQ(code_of([] { build_bipartite_extension(3, 2, BipartiteMode::star_y()); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { build_bipartite_extension(1, 3, BipartiteMode::star_y()); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { build_bipartite_extension(2, 3, BipartiteMode::plus_x({{0, 2}})); }),
            ErrorCode::InvalidParameter);
}
