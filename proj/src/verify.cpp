#include "token_spectra/verify.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "token_spectra/exact.hpp"
#include "verify_util.hpp"

namespace token_spectra {

using detail::alpha_equal;
using detail::alpha_of;
using detail::alpha_tolerance;
using detail::poll;
using detail::require_vertex;

nlohmann::json tolerances_json(const CheckOptions& opts) {
  return {{"resid", opts.spectral.resid}, {"group", opts.spectral.group}, {"ortho", opts.spectral.ortho},
          {"alpha_rel", opts.alpha_rel},  {"pair_tol", opts.pair_tol},    {"value_tol", opts.value_tol}};
}

namespace {

CertificateBuilder start(const char* id, const Graph& g, const CheckOptions& opts) {
  CertificateBuilder b(id, g);
  b.tolerances() = tolerances_json(opts);
  return b;
}

}  // namespace

Certificate check_spectral_containment(const Graph& g, int k, ContainmentMode mode, const CheckOptions& opts) {
  auto b = start("containment", g, opts);
  const TokenGraph tg = token_graph(g, k, opts.cap);
  auto& w = b.witnesses();
  w["k"] = k;
  w["mode"] = mode == ContainmentMode::Exact ? "exact" : "float";
  w["token_n"] = tg.graph.order();

  if (mode == ContainmentMode::Exact) {
    const IntPoly pg = char_poly(laplacian(g), opts.stop);
    const IntPoly pf = char_poly(laplacian(tg.graph), opts.stop);
    const DivisionResult d = poly_divides(pg, pf);
    w["phi_g"] = pg;
    w["quotient_degree"] = d.divides ? d.quotient.degree() : -1;
    if (!d.divides) w["remainder"] = d.remainder;
    return b.finish(d.divides ? Verdict::Pass : Verdict::Fail);
  }

  poll(opts);
  const std::vector<double> a = eigenvalues(laplacian(g));
  poll(opts);
  const std::vector<double> f = eigenvalues(laplacian(tg.graph));
  // Sorted greedy matching; each token eigenvalue is used at most once.
  std::size_t j = 0;
  double worst = 0.0;
  auto unmatched = nlohmann::json::array();
  for (double x : a) {
    const double tol = detail::value_tolerance(x, opts);
    while (j < f.size() && f[j] < x - tol) ++j;
    if (j < f.size() && f[j] <= x + tol) {
      worst = std::max(worst, std::abs(f[j] - x));
      ++j;
    } else {
      unmatched.push_back(x);
    }
  }
  w["spectrum_g"] = a;
  w["max_deviation"] = worst;
  if (!unmatched.empty()) w["unmatched"] = unmatched;
  return b.finish(unmatched.empty() ? Verdict::Pass : Verdict::Fail);
}

Certificate check_alpha_token_equality(const Graph& g, int k, const CheckOptions& opts) {
  auto b = start("alpha-token", g, opts);
  const TokenGraph tg = token_graph(g, k, opts.cap);
  const double ag = alpha_of(g, opts);
  const double af = alpha_of(tg.graph, opts);
  auto& w = b.witnesses();
  w["k"] = k;
  w["token_n"] = tg.graph.order();
  w["alpha_g"] = ag;
  w["alpha_token"] = af;
  w["difference"] = af - ag;
  return b.finish(alpha_equal(af, ag, opts) ? Verdict::Pass : Verdict::Fail);
}

Certificate check_edge_add_alpha_iff(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "u and v coincide");
  if (g.has_edge(u, v)) throw Error(ErrorCode::EdgeExists, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  auto b = start("edge-add-iff", g, opts);
  const Edge e = make_edge(u, v);
  const Graph gp = add_edges(g, std::span<const Edge>(&e, 1));

  const FiedlerSpace fs = algebraic_connectivity(g, opts.spectral);
  const double after = alpha_of(gp, opts);
  const bool lhs = alpha_equal(after, fs.value, opts);
  const std::pair<Vertex, Vertex> pair{u, v};
  const EqualPairResult rhs = eigenspace_has_equal_pair(fs.basis, std::span(&pair, 1), opts.pair_tol);

  auto& w = b.witnesses();
  w["u"] = u;
  w["v"] = v;
  w["alpha_before"] = fs.value;
  w["alpha_after"] = after;
  w["fiedler_multiplicity"] = fs.basis.cols();
  w["lhs_alpha_equal"] = lhs;
  w["rhs_equal_pair"] = rhs.found;
  w["smallest_singular"] = rhs.smallest_singular;
  if (rhs.found) w["fiedler_witness"] = detail::vector_json(rhs.witness);
  return b.finish(lhs == rhs.found ? Verdict::Pass : Verdict::Fail);
}

Certificate check_cut_clique(int r, std::span<const Graph> components, std::span<const Edge> removed_join_edges, int k,
                             const CheckOptions& opts) {
  const Graph full = build_cut_clique_join(r, components);
  for (const auto& e : removed_join_edges) {
    const Edge c = make_edge(e.u, e.v);
    if (!(c.u < r && c.v >= r) || !full.has_edge(c.u, c.v)) {
      throw Error(ErrorCode::MalformedEdgeSet,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a clique-component join edge");
    }
  }
  std::vector<Edge> removed;
  for (const auto& e : removed_join_edges) removed.push_back(make_edge(e.u, e.v));
  const Graph g = removed.empty() ? full : remove_edges(full, removed);
  const bool full_join = removed.empty();

  auto b = start("cut-clique", g, opts);
  auto& w = b.witnesses();
  const double a = alpha_of(g, opts);
  const double tol = alpha_tolerance(r, opts);
  w["r"] = r;
  w["k"] = k;
  w["components"] = components.size();
  w["full_join"] = full_join;
  w["alpha_g"] = a;
  bool ok = a <= r + tol;
  if (full_join) {
    const TokenGraph tg = token_graph(g, k, opts.cap);
    const double af = alpha_of(tg.graph, opts);
    w["token_n"] = tg.graph.order();
    w["alpha_token"] = af;
    ok = ok && std::abs(a - r) <= tol && std::abs(af - r) <= tol;
  } else {
    w["removed_join_edges"] = detail::edges_json(removed);
    w["gap"] = r - a;
    w["strict"] = a < r - tol;
  }
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

Certificate check_pendant_bound(const Graph& g, int k, const CheckOptions& opts) {
  if (g.order() == 0) throw Error(ErrorCode::TooSmall, "pendant bound needs a nonempty graph");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  edges.push_back({0, n});
  const Graph h(g.order() + 1, std::move(edges));

  auto b = start("pendant-bound", g, opts);
  auto& w = b.witnesses();
  w["k"] = k;
  w["pendant_attached_to"] = 0;
  if (k < 2 || 2 * k > static_cast<int>(h.order())) {
    w["reason"] = "requires 2 <= k <= |V(H)|/2";
    return b.finish(Verdict::PreconditionUnmet);
  }
  const double ah = alpha_of(token_graph(h, k, opts.cap).graph, opts);
  const double prev = alpha_of(token_graph(g, k - 1, opts.cap).graph, opts);
  const double same = alpha_of(token_graph(g, k, opts.cap).graph, opts);
  const double bound = std::min(prev, same) + 1.0;
  w["alpha_token_h"] = ah;
  w["alpha_token_g_k_minus_1"] = prev;
  w["alpha_token_g_k"] = same;
  w["bound"] = bound;
  return b.finish(ah <= bound + alpha_tolerance(bound, opts) ? Verdict::Pass : Verdict::Fail);
}

Certificate check_interlacing(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "u and v coincide");
  if (g.has_edge(u, v)) throw Error(ErrorCode::EdgeExists, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  auto b = start("interlacing", g, opts);
  const Edge e = make_edge(u, v);
  const Graph gp = add_edges(g, std::span<const Edge>(&e, 1));
  poll(opts);
  const std::vector<double> a = eigenvalues(laplacian(g));
  const std::vector<double> c = eigenvalues(laplacian(gp));
  const std::size_t n = a.size();

  // Worst signed violation over the chain a_i <= c_i <= a_{i+1}, c_n <= a_n + 2.
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t worst_at = 0;
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double upper = i + 1 < n ? a[i + 1] : a[i] + 2.0;
    const double tol = detail::value_tolerance(upper, opts);
    const double viol = std::max(a[i] - c[i], c[i] - upper);
    if (viol > worst) {
      worst = viol;
      worst_at = i;
    }
    ok = ok && viol <= tol;
  }
  const double trace_gain = std::accumulate(c.begin(), c.end(), 0.0) - std::accumulate(a.begin(), a.end(), 0.0);
  ok = ok && std::abs(trace_gain - 2.0) <= detail::value_tolerance(static_cast<double>(n), opts);

  auto& w = b.witnesses();
  w["u"] = u;
  w["v"] = v;
  w["spectrum_g"] = a;
  w["spectrum_g_plus"] = c;
  w["worst_violation"] = worst;
  w["worst_index"] = worst_at;
  w["trace_gain"] = trace_gain;
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

Certificate check_bipartite_extension(int n1, int n2, const BipartiteMode& mode, int k, const CheckOptions& opts) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::InvalidParameter, "part sizes must be positive");
  const bool star = mode.kind == BipartiteMode::Kind::StarY;
  const bool pre = n1 <= n2 && (!star || n1 >= 2);
  const Graph g = pre ? build_bipartite_extension(n1, n2, mode) : complete_bipartite_graph(n1, n2);
  auto b = start("bipartite-ext", g, opts);
  auto& w = b.witnesses();
  w["n1"] = n1;
  w["n2"] = n2;
  w["mode"] = star ? "star_Y" : "plus_X";
  w["k"] = k;
  if (!pre) {
    w["reason"] = star ? "requires 2 <= n1 <= n2" : "requires 1 <= n1 <= n2";
    return b.finish(Verdict::PreconditionUnmet);
  }
  if (!star) w["t"] = mode.x_edges.size();
  const double expected = star ? n2 : n1;
  const TokenGraph tg = token_graph(g, k, opts.cap);
  const double ag = alpha_of(g, opts);
  const double af = alpha_of(tg.graph, opts);
  w["expected"] = expected;
  w["alpha_g"] = ag;
  w["alpha_token"] = af;
  w["token_n"] = tg.graph.order();
  const bool ok = alpha_equal(ag, expected, opts) && alpha_equal(af, expected, opts);
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

Certificate check_suffcondition(const Graph& g, Vertex cut_vertex, const CheckOptions& opts) {
  require_vertex(g, cut_vertex);
  auto b = start("suffcondition", g, opts);
  auto& w = b.witnesses();
  w["cut_vertex"] = cut_vertex;

  std::vector<Vertex> rest;
  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x)
    if (x != cut_vertex) rest.push_back(x);
  const InducedSubgraph sub = induced_subgraph(g, rest);
  const auto comps = sub.graph.components();
  w["components"] = comps.size();
  if (comps.size() < 2 || !g.is_connected()) {
    w["reason"] = "vertex does not cut a connected graph";
    return b.finish(Verdict::PreconditionUnmet);
  }
  const SymMatrix l = laplacian(g);
  std::vector<double> lam;
  for (const auto& comp : comps) {
    std::vector<int> original;
    for (Vertex local : comp) original.push_back(rest[local]);
    lam.push_back(smallest_eigenvalue(principal_submatrix(l, original)));
  }
  std::vector<double> sorted = lam;
  std::sort(sorted.begin(), sorted.end());
  const double a = alpha_of(g, opts);
  w["component_lambda1"] = lam;
  w["alpha_g"] = a;

  if (alpha_equal(sorted[0], sorted[1], opts)) {
    w["branch"] = "equal";
    return b.finish(alpha_equal(a, sorted[0], opts) ? Verdict::Pass : Verdict::Fail);
  }
  w["branch"] = "bapat-pati";
  const bool below = a < sorted[1] + alpha_tolerance(sorted[1], opts);
  w["below_second"] = below;
  return b.finish(below ? Verdict::PreconditionUnmet : Verdict::Fail);
}

Certificate check_merris(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "u and v coincide");
  auto b = start("merris", g, opts);
  const Edge e = make_edge(u, v);
  const bool present = g.has_edge(u, v);
  const Graph gp = present ? remove_edges(g, std::span<const Edge>(&e, 1)) : add_edges(g, std::span<const Edge>(&e, 1));
  poll(opts);
  const Spectrum s = eig_sym(laplacian(g), opts.spectral);
  const std::vector<double> other = eigenvalues(laplacian(gp));
  const SymMatrix lp = laplacian(gp);

  const std::pair<Vertex, Vertex> pair{u, v};
  int tested = 0;
  bool ok = true;
  auto missing = nlohmann::json::array();
  for (const auto& grp : s.groups) {
    const EqualPairResult r = eigenspace_has_equal_pair(grp.basis, std::span(&pair, 1), opts.pair_tol);
    if (!r.found) continue;
    ++tested;
    const double resid = (lp.dense() * r.witness - grp.value * r.witness).norm();
    const bool kept = detail::has_value_near(other, grp.value, opts);
    if (!kept) {
      ok = false;
      missing.push_back({{"value", grp.value}, {"residual", resid}});
    }
  }
  auto& w = b.witnesses();
  w["u"] = u;
  w["v"] = v;
  w["operation"] = present ? "remove" : "add";
  w["groups"] = s.groups.size();
  w["groups_with_equal_pair"] = tested;
  w["spectrum_g"] = s.values;
  w["spectrum_toggled"] = other;
  if (!missing.empty()) w["missing"] = missing;
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

namespace {

std::size_t token_edge_count(std::size_t n, std::size_t m, int k) {
  if (k < 1 || static_cast<std::size_t>(k) + 1 > n) return 0;
  return m * binomial(static_cast<int>(n) - 2, k - 1);
}

}  // namespace

Certificate check_embedding(const Graph& g, int k, const CheckOptions& opts) {
  auto b = start("embedding", g, opts);
  const TokenGraph tg = token_graph(g, k, opts.cap);
  const SubsetCodec& codec = tg.codec;
  const int n = codec.n();
  poll(opts);
  const Spectrum s = eig_sym(laplacian(tg.graph), opts.spectral);

  // Subset membership and the induced edge counts of H_v, H'_v.
  std::vector<std::vector<Vertex>> members;
  for_each_subset(n, k, [&](const std::vector<Vertex>& sub) { members.push_back(sub); });
  auto contains = [&](std::size_t idx, Vertex v) {
    return std::binary_search(members[idx].begin(), members[idx].end(), v);
  };

  bool ok = true;
  int vectors = 0;
  double worst_sum = 0.0;
  auto edge_checks = nlohmann::json::array();
  for (Vertex v = 0; v < n; ++v) {
    std::size_t in = 0, out = 0;
    for (const auto& e : tg.graph.edges()) {
      const bool a = contains(e.u, v), c = contains(e.v, v);
      if (a && c) ++in;
      if (!a && !c) ++out;
    }
    std::size_t m_rest = 0;
    for (const auto& e : g.edges())
      if (e.u != v && e.v != v) ++m_rest;
    const std::size_t want_in = token_edge_count(g.order() - 1, m_rest, k - 1);
    const std::size_t want_out = token_edge_count(g.order() - 1, m_rest, k);
    ok = ok && in == want_in && out == want_out;
    edge_checks.push_back({in, want_in, out, want_out});
  }

  for (const auto& grp : s.groups) {
    poll(opts);
    const Eigen::Index d = grp.basis.cols();
    Eigen::MatrixXd proj(n, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      const Eigen::VectorXd col = grp.basis.col(c);
      const auto p = binomial_project(codec, std::span<const double>(col.data(), col.size()));
      for (int i = 0; i < n; ++i) proj(i, c) = p[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c < sv.size() && sv(c) > opts.pair_tol) continue;
      const Eigen::VectorXd wv = grp.basis * svd.matrixV().col(c);
      ++vectors;
      double total = 0.0;
      for (Eigen::Index i = 0; i < wv.size(); ++i) total += wv(i);
      for (Vertex v = 0; v < n; ++v) {
        double with = 0.0;
        for (Eigen::Index i = 0; i < wv.size(); ++i)
          if (contains(static_cast<std::size_t>(i), v)) with += wv(i);
        const double without = total - with;
        worst_sum = std::max({worst_sum, std::abs(with), std::abs(without)});
      }
    }
  }
  ok = ok && worst_sum <= opts.value_tol;

  auto& w = b.witnesses();
  w["k"] = k;
  w["token_n"] = tg.graph.order();
  w["kernel_vectors"] = vectors;
  w["max_restricted_sum"] = worst_sum;
  w["edge_counts"] = edge_checks;  // per v: [|E(H_v)|, expected, |E(H'_v)|, expected]
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

Certificate check_theta_table(int r, const CheckOptions& opts) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "theta table needs r >= 1");
  const Graph p = path_graph(r + 1);
  auto b = start("theta-table", p, opts);
  const int drop[] = {0};
  const double t = theta(r, r);
  const double lam = smallest_eigenvalue(principal_submatrix_without(laplacian(p), drop));
  auto& w = b.witnesses();
  w["r"] = r;
  w["theta"] = t;
  w["lambda1"] = lam;
  w["difference"] = lam - t;
  return b.finish(std::abs(lam - t) <= detail::value_tolerance(t, opts) ? Verdict::Pass : Verdict::Fail);
}

}  // namespace token_spectra
