#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "token_spectra/error.hpp"
#include "token_spectra/families.hpp"
#include "token_spectra/generators.hpp"
#include "token_spectra/spectra.hpp"
#include "token_spectra/verify.hpp"

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

Graph y_plus() { return add_edges(oracle::y_graph(), std::vector<Edge>{{0, 1}}); }

KiteSpec c4_kite() { return {cycle_graph(4), 0, 3, 3}; }

// K_3 head, three tails of length three, with v13-v23 and v11-v31.
struct CounterexampleKite {
  Kite kite = build_kite({complete_graph(3), 0, 3, 3});
  std::vector<Edge> added{make_edge(kite.tail(1, 3), kite.tail(2, 3)), make_edge(kite.tail(1, 1), kite.tail(3, 1))};
  Graph plus = add_edges(kite.graph, added);
};

Graph wheelish_head() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}}); }

}  // namespace

TEST(ContainmentTest, ExactSmallCases) {
  auto y = check_spectral_containment(oracle::y_graph(), 2, ContainmentMode::Exact);
  EXPECT_TRUE(y.passed());
  auto k4 = check_spectral_containment(complete_graph(4), 2, ContainmentMode::Exact);
  EXPECT_TRUE(k4.passed());
  EXPECT_EQ(k4.witnesses["quotient_degree"], 2);
  auto k1 = check_spectral_containment(cycle_graph(5), 1, ContainmentMode::Exact);
  EXPECT_TRUE(k1.passed());
  EXPECT_EQ(k1.witnesses["quotient_degree"], 0);
}

TEST(ContainmentTest, FloatMode) {
  auto c = check_spectral_containment(oracle::y_graph(), 2, ContainmentMode::Float);
  EXPECT_TRUE(c.passed());
  EXPECT_LT(c.witnesses["max_deviation"].get<double>(), 1e-9);
}

TEST(ContainmentTest, CapIsEnforced) {
  CheckOptions opts;
  opts.cap = 5;
  EXPECT_EQ(code_of([&] { check_spectral_containment(path_graph(5), 2, ContainmentMode::Exact, opts); }),
            ErrorCode::CapExceeded);
}

TEST(AlphaTokenTest, Examples) {
  auto yp = check_alpha_token_equality(y_plus(), 2);
  EXPECT_TRUE(yp.passed());
  EXPECT_NEAR(yp.witnesses["alpha_g"].get<double>(), 0.5188, 5e-5);
  EXPECT_NEAR(yp.witnesses["alpha_token"].get<double>(), 0.5188, 5e-5);

  auto ks = check_alpha_token_equality(build_bipartite_extension(2, 3, BipartiteMode::star_y()), 2);
  EXPECT_TRUE(ks.passed());
  EXPECT_NEAR(ks.witnesses["alpha_g"].get<double>(), 3.0, 1e-9);

  auto star = check_alpha_token_equality(star_graph(5), 2);
  EXPECT_TRUE(star.passed());
  EXPECT_NEAR(star.witnesses["alpha_token"].get<double>(), 1.0, 1e-9);
}

TEST(AlphaTokenTest, TreesExhaustive) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& t : trees(n))
      for (int k = 1; k <= n / 2; ++k) EXPECT_TRUE(check_alpha_token_equality(t, k).passed());
}

TEST(EdgeAddIffTest, LeavesOfY) {
  auto c = check_edge_add_alpha_iff(oracle::y_graph(), 0, 1);
  EXPECT_TRUE(c.passed());
  EXPECT_TRUE(c.witnesses["lhs_alpha_equal"].get<bool>());
  EXPECT_TRUE(c.witnesses["rhs_equal_pair"].get<bool>());
}

TEST(EdgeAddIffTest, PathEnds) {
  auto c = check_edge_add_alpha_iff(path_graph(3), 0, 2);
  EXPECT_TRUE(c.passed());
  EXPECT_FALSE(c.witnesses["lhs_alpha_equal"].get<bool>());
  EXPECT_FALSE(c.witnesses["rhs_equal_pair"].get<bool>());
  EXPECT_NEAR(c.witnesses["alpha_before"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(c.witnesses["alpha_after"].get<double>(), 3.0, 1e-9);
}

TEST(EdgeAddIffTest, CounterexampleKite) {
  CounterexampleKite f;
  const Edge e = f.added[0];
  Graph minus = remove_edges(f.plus, std::vector<Edge>{e});
  auto c = check_edge_add_alpha_iff(minus, e.u, e.v);
  EXPECT_TRUE(c.passed());
  EXPECT_FALSE(c.witnesses["lhs_alpha_equal"].get<bool>());
  EXPECT_FALSE(c.witnesses["rhs_equal_pair"].get<bool>());
  EXPECT_NEAR(c.witnesses["alpha_before"].get<double>(), 0.1981, 5e-5);
  EXPECT_NEAR(c.witnesses["alpha_after"].get<double>(), 0.2679, 5e-5);
}

TEST(EdgeAddIffTest, Errors) {
  EXPECT_EQ(code_of([] { check_edge_add_alpha_iff(path_graph(3), 0, 1); }), ErrorCode::EdgeExists);
  EXPECT_EQ(code_of([] { check_edge_add_alpha_iff(path_graph(3), 1, 1); }), ErrorCode::SelfLoop);
}

TEST(EdgeAddIffTest, AllPairsOnTrees) {
  int both_true = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& t : trees(n))
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (t.has_edge(u, v)) continue;
          auto c = check_edge_add_alpha_iff(t, u, v);
          EXPECT_TRUE(c.passed());
          if (c.witnesses["lhs_alpha_equal"].get<bool>()) ++both_true;
        }
  EXPECT_GT(both_true, 0);
}

// alpha(G + uv) == alpha(G) and alpha(F_k(G)) == alpha(G) give alpha(F_k(G + uv)) == alpha(G + uv).
TEST(EdgeAddIffTest, TransferToTokenGraph) {
  int transfers = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& t : trees(n))
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (t.has_edge(u, v)) continue;
          if (!check_edge_add_alpha_iff(t, u, v).witnesses["lhs_alpha_equal"].get<bool>()) continue;
          Graph plus = add_edges(t, std::vector<Edge>{{u, v}});
          for (int k = 2; k <= n / 2; ++k) {
            if (!check_alpha_token_equality(t, k).passed()) continue;
            EXPECT_TRUE(check_alpha_token_equality(plus, k).passed());
            ++transfers;
          }
        }
  EXPECT_GT(transfers, 0);
}

TEST(ShaoPendantTest, YWithLeafEdge) {
  Kite k = build_kite({path_graph(3), 0, 2, 1});
  std::vector<Edge> add{make_edge(k.tail(1, 1), k.tail(2, 1))};
  auto c = check_shao_pendant(k, add);
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.witnesses["alpha_g"].get<double>(), 0.5188, 5e-5);
  EXPECT_NEAR(c.witnesses["theta_r"].get<double>(), 1.0, 1e-12);
}

TEST(ShaoPendantTest, ThetaCaseIsUnmet) {
  CounterexampleKite f;
  auto c = check_shao_pendant(f.kite, f.added);
  EXPECT_EQ(c.verdict, Verdict::PreconditionUnmet);
  EXPECT_NEAR(c.witnesses["alpha_g"].get<double>(), 0.1981, 5e-5);
}

TEST(ShaoPendantTest, StarDecidedByPrecondition) {
  Kite k = build_kite({Graph(1), 0, 3, 1});
  std::vector<Edge> add{make_edge(k.tail(1, 1), k.tail(2, 1))};
  EXPECT_EQ(check_shao_pendant(k, add).verdict, Verdict::PreconditionUnmet);
}

TEST(ShaoPendantTest, RejectsCrossDepthEdge) {
  Kite k = build_kite({complete_graph(3), 0, 2, 2});
  std::vector<Edge> bad{make_edge(k.tail(1, 1), k.tail(2, 2))};
  EXPECT_EQ(code_of([&] { check_shao_pendant(k, bad); }), ErrorCode::MalformedEdgeSet);
}

TEST(KiteIffTest, Examples) {
  auto spider = check_kite_alpha_iff({Graph(1), 0, 3, 2});
  EXPECT_TRUE(spider.passed());
  EXPECT_TRUE(spider.witnesses["lambda1_head"].is_null());
  EXPECT_NEAR(spider.witnesses["alpha_g"].get<double>(), theta(2, 2), 1e-9);

  auto c4 = check_kite_alpha_iff(c4_kite());
  EXPECT_TRUE(c4.passed());
  EXPECT_NEAR(c4.witnesses["lambda1_head"].get<double>(), 2 - std::sqrt(2.0), 1e-9);

  auto w = check_kite_alpha_iff({wheelish_head(), 0, 2, 3});
  EXPECT_TRUE(w.passed());
  EXPECT_NEAR(w.witnesses["lambda1_head"].get<double>(), 0.284, 5e-4);
}

TEST(KiteIffTest, BothSidesFalse) {
  // A long path head pulls lambda_1 of its submatrix far below theta_1 = 1.
  auto c = check_kite_alpha_iff({path_graph(8), 0, 2, 1});
  EXPECT_TRUE(c.passed());
  EXPECT_FALSE(c.witnesses["lhs_alpha_is_theta"].get<bool>());
  EXPECT_FALSE(c.witnesses["rhs_head_at_least_theta"].get<bool>());
}

TEST(SymmetrizerTest, MatchesDepthMajorHalves) {
  SymMatrix s = build_kite_symmetrizer(c4_kite());
  Kite k = build_kite(c4_kite());
  // Depth-major labels: head 0..3, then v_{ij} at 4 + 3(j-1) + (i-1).
  std::vector<Vertex> ours(13);
  for (int v = 0; v < 4; ++v) ours[v] = v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) ours[4 + 3 * (j - 1) + (i - 1)] = k.tail(i, j);
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b) {
      double want = 0;
      if (a == b) want = 2;
      const bool pa = a >= 4 && (a - 4) % 3 != 0, pb = b >= 4 && (b - 4) % 3 != 0;
      if (pa && pb && (a - 4) / 3 == (b - 4) / 3) want = 1;
      EXPECT_EQ(s(ours[a], ours[b]), want) << a << "," << b;
    }
}

// With s = 2 every U_j is a single vertex, so S is the identity.
TEST(SymmetrizerTest, TwoPathsGiveIdentity) {
  SymMatrix s = build_kite_symmetrizer({Graph(1), 0, 2, 2});
  EXPECT_TRUE(s.dense().isIdentity());
}

TEST(SymmetrizerTest, Commutes) {
  EXPECT_TRUE(check_symmetrizer_commutation(c4_kite()).passed());
  auto c = check_symmetrizer_commutation({Graph(1), 0, 2, 2});
  EXPECT_TRUE(c.passed());
  EXPECT_TRUE(c.witnesses["commutes"].get<bool>());
  EXPECT_EQ(c.witnesses["commutator_max"], 0);
}

TEST(KitePersistenceTest, LevelEdges) {
  Kite k = build_kite(c4_kite());
  std::vector<Edge> add;
  for (int j = 1; j <= 3; ++j) add.push_back(make_edge(k.tail(2, j), k.tail(3, j)));
  auto c = check_kite_persistence(c4_kite(), add);
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.witnesses["alpha_g_plus"].get<double>(), theta(3, 3), 1e-9);
  std::vector<Edge> path_one{make_edge(k.tail(1, 1), k.tail(2, 1))};
  EXPECT_EQ(code_of([&] { check_kite_persistence(c4_kite(), path_one); }), ErrorCode::MalformedEdgeSet);
}

TEST(CutCliqueTest, Examples) {
  std::vector<Graph> singles(4, Graph(1));
  auto star = check_cut_clique(1, singles, {}, 2);
  EXPECT_TRUE(star.passed());
  EXPECT_NEAR(star.witnesses["alpha_token"].get<double>(), 1.0, 1e-9);

  std::vector<Graph> k2s{complete_graph(2), complete_graph(2)};
  auto two = check_cut_clique(2, k2s, {}, 2);
  EXPECT_TRUE(two.passed());
  EXPECT_NEAR(two.witnesses["alpha_g"].get<double>(), 2.0, 1e-9);

  std::vector<Edge> removed{{0, 2}};
  auto partial = check_cut_clique(2, k2s, removed, 2);
  EXPECT_TRUE(partial.passed());
  EXPECT_FALSE(partial.witnesses["full_join"].get<bool>());
  EXPECT_LT(partial.witnesses["alpha_g"].get<double>(), 2.0);
}

TEST(CutCliqueTest, RejectsNonJoinEdge) {
  std::vector<Graph> k2s{complete_graph(2), complete_graph(2)};
  std::vector<Edge> inside{{2, 3}};
  EXPECT_EQ(code_of([&] { check_cut_clique(2, k2s, inside, 2); }), ErrorCode::MalformedEdgeSet);
}

TEST(PendantBoundTest, Examples) {
  EXPECT_TRUE(check_pendant_bound(path_graph(3), 2).passed());
  auto k4 = check_pendant_bound(complete_graph(4), 2);
  EXPECT_TRUE(k4.passed());
  EXPECT_NEAR(k4.witnesses["alpha_token_g_k"].get<double>(), 4.0, 1e-9);
  EXPECT_TRUE(check_pendant_bound(cycle_graph(5), 2).passed());
  EXPECT_EQ(check_pendant_bound(path_graph(3), 3).verdict, Verdict::PreconditionUnmet);
}

TEST(InterlacingTest, Examples) {
  EXPECT_TRUE(check_interlacing(oracle::y_graph(), 0, 1).passed());
  EXPECT_TRUE(check_interlacing(Graph(4, {{0, 1}, {2, 3}}), 1, 2).passed());
  Graph k4_minus = remove_edges(complete_graph(4), std::vector<Edge>{{0, 1}});
  auto c = check_interlacing(k4_minus, 0, 1);
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.witnesses["spectrum_g_plus"].back().get<double>(), 4.0, 1e-9);
  EXPECT_NEAR(c.witnesses["trace_gain"].get<double>(), 2.0, 1e-9);
}

TEST(BipartiteExtensionTest, Examples) {
  auto a = check_bipartite_extension(2, 3, BipartiteMode::plus_x({{0, 1}}), 2);
  EXPECT_TRUE(a.passed());
  EXPECT_NEAR(a.witnesses["alpha_token"].get<double>(), 2.0, 1e-9);
  auto b = check_bipartite_extension(2, 2, BipartiteMode::star_y(), 2);
  EXPECT_TRUE(b.passed());
  EXPECT_NEAR(b.witnesses["alpha_g"].get<double>(), 2.0, 1e-9);
  auto c = check_bipartite_extension(1, 4, BipartiteMode::plus_x({}), 3);
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.witnesses["alpha_g"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(check_bipartite_extension(1, 4, BipartiteMode::star_y(), 2).verdict, Verdict::PreconditionUnmet);
}

TEST(KiteCorollaryTest, CycleHead) {
  KiteCorollaryParams p;
  p.variant = KiteCorollaryParams::Variant::CycleHead;
  p.h = 4;
  p.paths = 3;
  p.length = 3;
  auto c = check_kite_corollaries(p);
  EXPECT_TRUE(c.passed());
  EXPECT_TRUE(c.witnesses["cycle_path_identity"].get<bool>());

  p.h = 2 * p.length + 2;
  EXPECT_EQ(check_kite_corollaries(p).verdict, Verdict::PreconditionUnmet);
}

TEST(KiteCorollaryTest, BipartiteHeadClosedForm) {
  KiteCorollaryParams p;
  p.variant = KiteCorollaryParams::Variant::BipartiteHead;
  p.h1 = 1;
  p.h2 = 3;
  p.paths = 2;
  p.length = 3;
  p.root_side = 2;
  auto c = check_kite_corollaries(p);
  EXPECT_NE(c.verdict, Verdict::Fail);
  EXPECT_NEAR(c.witnesses["closed_form"].get<double>(), (4 - std::sqrt(12.0)) / 2, 1e-9);
  EXPECT_NEAR(c.witnesses["lambda1_head"].get<double>(), (4 - std::sqrt(12.0)) / 2, 1e-9);

  p.root_side = 1;
  auto d = check_kite_corollaries(p);
  EXPECT_NE(d.verdict, Verdict::Fail);
  EXPECT_NEAR(d.witnesses["lambda1_head"].get<double>(), 1.0, 1e-9);
}

TEST(SuffConditionTest, Examples) {
  Graph spider = build_kite({Graph(1), 0, 3, 2}).graph;
  auto s = check_suffcondition(spider, 0);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.witnesses["branch"], "equal");
  EXPECT_NEAR(s.witnesses["alpha_g"].get<double>(), 0.3820, 5e-5);

  auto p = check_suffcondition(path_graph(5), 1);
  EXPECT_EQ(p.verdict, Verdict::PreconditionUnmet);
  EXPECT_EQ(p.witnesses["branch"], "bapat-pati");
  EXPECT_TRUE(p.witnesses["below_second"].get<bool>());

  auto star = check_suffcondition(star_graph(4), 0);
  EXPECT_TRUE(star.passed());
  EXPECT_NEAR(star.witnesses["alpha_g"].get<double>(), 1.0, 1e-9);

  EXPECT_EQ(check_suffcondition(cycle_graph(5), 0).verdict, Verdict::PreconditionUnmet);
}

TEST(MerrisTest, SymmetricLeaves) {
  auto add = check_merris(oracle::y_graph(), 0, 1);
  EXPECT_TRUE(add.passed());
  EXPECT_EQ(add.witnesses["operation"], "add");
  auto rm = check_merris(y_plus(), 0, 1);
  EXPECT_TRUE(rm.passed());
  EXPECT_EQ(rm.witnesses["operation"], "remove");
}

TEST(MerrisTest, RandomPairs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(7, 0.4, rng);
    int u = static_cast<int>(rng() % 7), v = static_cast<int>(rng() % 6);
    if (v >= u) ++v;
    EXPECT_TRUE(check_merris(g, u, v).passed());
  }
}

TEST(EmbeddingTest, SmallGraphs) {
  EXPECT_TRUE(check_embedding(oracle::y_graph(), 2).passed());
  EXPECT_TRUE(check_embedding(cycle_graph(6), 3).passed());
  auto c = check_embedding(complete_graph(5), 2);
  EXPECT_TRUE(c.passed());
  EXPECT_GT(c.witnesses["kernel_vectors"].get<int>(), 0);
}

TEST(ThetaTableTest, FirstTen) {
  for (int r = 1; r <= 10; ++r) EXPECT_TRUE(check_theta_table(r).passed()) << r;
}

TEST(CertificateTest, JsonSchema) {
  auto c = check_alpha_token_equality(oracle::y_graph(), 2);
  nlohmann::json j = c;
  for (const char* key : {"check_id", "graph", "verdict", "witnesses", "tolerances", "runtime_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["check_id"], "alpha-token");
  EXPECT_EQ(j["graph"]["n"], 5);
  EXPECT_EQ(j["graph"]["edges_hash"], oracle::y_graph().fingerprint_hex());
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["tolerances"]["alpha_rel"], 1e-7);
  auto back = j.get<Certificate>();
  EXPECT_EQ(nlohmann::json(back), j);
}

TEST(CertificateTest, Deterministic) {
  auto strip = [](Certificate c) {
    c.runtime_ms = 0;
    return nlohmann::json(c).dump();
  };
  EXPECT_EQ(strip(check_edge_add_alpha_iff(oracle::y_graph(), 0, 1)),
            strip(check_edge_add_alpha_iff(oracle::y_graph(), 0, 1)));
  EXPECT_EQ(strip(check_embedding(cycle_graph(5), 2)), strip(check_embedding(cycle_graph(5), 2)));
  EXPECT_EQ(strip(check_symmetrizer_commutation(c4_kite())), strip(check_symmetrizer_commutation(c4_kite())));
}

TEST(CertificateTest, VerdictStrings) {
  EXPECT_EQ(to_string(Verdict::PreconditionUnmet), "precondition_unmet");
  EXPECT_EQ(parse_verdict("fail"), Verdict::Fail);
  EXPECT_FALSE(parse_verdict("maybe").has_value());
}
