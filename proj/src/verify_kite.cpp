#include <cmath>
#include <limits>
#include <string>

#include "token_spectra/exact.hpp"
#include "token_spectra/verify.hpp"
#include "verify_util.hpp"

namespace token_spectra {

using detail::alpha_equal;
using detail::alpha_of;
using detail::alpha_tolerance;

namespace {

struct TailPos {
  int path;   // 1-based
  int depth;  // 1-based
};

TailPos tail_pos(const Kite& kite, Vertex v) {
  const int off = v - kite.head_order;
  return {off / kite.length + 1, off % kite.length + 1};
}

bool is_tail(const Kite& kite, Vertex v) {
  return v >= kite.head_order && v < kite.head_order + kite.paths * kite.length;
}

// Edges joining two tail vertices of one depth; with `skip_first`, path 1 is
// excluded (the U_j sets).
void require_level_edges(const Kite& kite, std::span<const Edge> edges, bool skip_first) {
  for (const auto& e : edges) {
    const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (!is_tail(kite, e.u) || !is_tail(kite, e.v) || e.u == e.v) {
      throw Error(ErrorCode::MalformedEdgeSet, "edge " + name + " does not join two tail vertices");
    }
    const TailPos a = tail_pos(kite, e.u), b = tail_pos(kite, e.v);
    if (a.depth != b.depth) throw Error(ErrorCode::MalformedEdgeSet, "edge " + name + " joins different depths");
    if (skip_first && (a.path == 1 || b.path == 1)) {
      throw Error(ErrorCode::MalformedEdgeSet, "edge " + name + " touches the first path");
    }
  }
}

Graph with_edges(const Graph& g, std::span<const Edge> edges) {
  try {
    return add_edges(g, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedEdgeSet, e.what());
  }
}

double head_lambda1(const Graph& head, Vertex root) {
  const Vertex drop[] = {root};
  return smallest_eigenvalue(principal_submatrix_without(laplacian(head), drop));
}

nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

CertificateBuilder start(const char* id, const Graph& g, const CheckOptions& opts) {
  CertificateBuilder b(id, g);
  b.tolerances() = tolerances_json(opts);
  return b;
}

}  // namespace

Certificate check_shao_pendant(const Kite& kite, std::span<const Edge> added, const CheckOptions& opts) {
  require_level_edges(kite, added, false);
  const Graph gp = with_edges(kite.graph, added);
  auto b = start("shao-pendant", kite.graph, opts);
  auto& w = b.witnesses();
  const double t = theta(kite.length, kite.length);
  const double a = alpha_of(kite.graph, opts);
  w["theta_r"] = t;
  w["alpha_g"] = a;
  w["added_edges"] = detail::edges_json(added);
  if (alpha_equal(a, t, opts)) {
    w["reason"] = "alpha(G) equals theta_r";
    w["alpha_g_plus"] = alpha_of(gp, opts);
    return b.finish(Verdict::PreconditionUnmet);
  }
  const double ap = alpha_of(gp, opts);
  w["alpha_g_plus"] = ap;
  return b.finish(alpha_equal(ap, a, opts) ? Verdict::Pass : Verdict::Fail);
}

Certificate check_kite_alpha_iff(const KiteSpec& spec, const CheckOptions& opts) {
  const Kite kite = build_kite(spec);
  auto b = start("kite-iff", kite.graph, opts);
  const double t = theta(spec.length, spec.length);
  const double a = alpha_of(kite.graph, opts);
  const double lam = head_lambda1(spec.head, spec.root);
  const bool lhs = alpha_equal(a, t, opts);
  const bool rhs = lam >= t - alpha_tolerance(t, opts);
  auto& w = b.witnesses();
  w["theta_r"] = t;
  w["alpha_g"] = a;
  w["lambda1_head"] = finite_or_null(lam);
  w["lhs_alpha_is_theta"] = lhs;
  w["rhs_head_at_least_theta"] = rhs;
  return b.finish(lhs == rhs ? Verdict::Pass : Verdict::Fail);
}

SymMatrix build_kite_symmetrizer(const KiteSpec& spec) {
  const Kite kite = build_kite(spec);
  const int s = kite.paths;
  SymMatrix m(kite.graph.order());
  for (Vertex v = 0; v < kite.head_order; ++v) m.set(v, v, s - 1);
  for (int j = 1; j <= kite.length; ++j) {
    m.set(kite.tail(1, j), kite.tail(1, j), s - 1);
    for (int a = 2; a <= s; ++a)
      for (int c = a; c <= s; ++c) m.set(kite.tail(a, j), kite.tail(c, j), 1.0);
  }
  return m;
}

Certificate check_symmetrizer_commutation(const KiteSpec& spec, const CheckOptions& opts) {
  const Kite kite = build_kite(spec);
  auto b = start("symmetrizer", kite.graph, opts);
  const SymMatrix l = laplacian(kite.graph);
  const SymMatrix s2 = build_kite_symmetrizer(spec);
  const IntMatrix li = l.to_integer(), si = s2.to_integer();
  const IntMatrix comm = li * si - si * li;
  const bool commutes = comm.cwiseAbs().maxCoeff() == 0;

  const double scale = kite.paths - 1;
  const Eigen::MatrixXd s = s2.dense() / scale;
  detail::poll(opts);
  const Spectrum spectrum = eig_sym(l, opts.spectral);

  bool ok = commutes;
  auto groups = nlohmann::json::array();
  for (const auto& g : spectrum.groups) {
    const Eigen::MatrixXd img = s * g.basis;
    const double invariance = (l.dense() * img - g.value * img).cwiseAbs().maxCoeff();
    Eigen::Index best = 0;
    const double norm = img.colwise().norm().maxCoeff(&best);
    // Equal U_j coordinates in the largest image column.
    double spread = 0.0;
    if (norm > opts.pair_tol) {
      const Eigen::VectorXd x = img.col(best) / norm;
      for (int j = 1; j <= kite.length; ++j)
        for (int i = 3; i <= kite.paths; ++i) spread = std::max(spread, std::abs(x(kite.tail(i, j)) - x(kite.tail(2, j))));
    }
    const double tol = detail::value_tolerance(g.value, opts);
    const bool good = invariance <= tol && norm > opts.pair_tol && spread <= tol;
    ok = ok && good;
    groups.push_back({{"value", g.value},
                      {"mult", g.multiplicity},
                      {"invariance_residual", invariance},
                      {"image_norm", norm},
                      {"level_spread", spread},
                      {"ok", good}});
  }
  auto& w = b.witnesses();
  w["paths"] = kite.paths;
  w["length"] = kite.length;
  w["scale"] = kite.paths - 1;
  w["commutes"] = commutes;
  w["commutator_max"] = comm.cwiseAbs().maxCoeff();
  w["groups"] = groups;
  return b.finish(ok ? Verdict::Pass : Verdict::Fail);
}

Certificate check_kite_persistence(const KiteSpec& spec, std::span<const Edge> added, const CheckOptions& opts) {
  const Kite kite = build_kite(spec);
  require_level_edges(kite, added, true);
  const Graph gp = with_edges(kite.graph, added);
  auto b = start("kite-persistence", kite.graph, opts);
  detail::poll(opts);
  const Spectrum sg = eig_sym(laplacian(kite.graph), opts.spectral);
  const std::vector<double> sp = eigenvalues(laplacian(gp));
  auto missing = nlohmann::json::array();
  for (double x : sg.distinct_values())
    if (!detail::has_value_near(sp, x, opts)) missing.push_back(x);
  const double a = sg.values.size() > 1 ? sg.group_of(1).value : 0.0;
  const double ap = alpha_of(gp, opts);
  auto& w = b.witnesses();
  w["added_edges"] = detail::edges_json(added);
  w["distinct_g"] = sg.distinct_values();
  w["spectrum_g_plus"] = sp;
  w["alpha_g"] = a;
  w["alpha_g_plus"] = ap;
  if (!missing.empty()) w["missing"] = missing;
  return b.finish(missing.empty() && alpha_equal(ap, a, opts) ? Verdict::Pass : Verdict::Fail);
}

Certificate check_kite_corollaries(const KiteCorollaryParams& p, const CheckOptions& opts) {
  using Variant = KiteCorollaryParams::Variant;
  const bool cycle = p.variant == Variant::CycleHead;
  KiteSpec spec;
  spec.paths = p.paths;
  spec.length = p.length;
  int root_side_size = 0, other_side_size = 0;
  if (cycle) {
    if (p.h < 3) throw Error(ErrorCode::InvalidParameter, "cycle head needs h >= 3");
    spec.head = cycle_graph(p.h);
    spec.root = 0;
  } else {
    if (p.h1 < 1 || p.h2 < 1 || (p.root_side != 1 && p.root_side != 2)) {
      throw Error(ErrorCode::InvalidParameter, "bipartite head needs h1, h2 >= 1 and root side 1 or 2");
    }
    spec.head = complete_bipartite_graph(p.h1, p.h2);
    spec.root = p.root_side == 1 ? 0 : p.h1;
    root_side_size = p.root_side == 1 ? p.h1 : p.h2;
    other_side_size = p.root_side == 1 ? p.h2 : p.h1;
  }
  const Kite kite = build_kite(spec);
  const auto h = static_cast<int>(spec.head.order());
  for (const auto& e : p.head_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= h || e.v >= h) {
      throw Error(ErrorCode::MalformedEdgeSet, "head edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " leaves the head");
    }
  }
  require_level_edges(kite, p.tail_edges, true);
  std::vector<Edge> extra = p.head_edges;
  extra.insert(extra.end(), p.tail_edges.begin(), p.tail_edges.end());
  const Graph gp = with_edges(kite.graph, extra);

  auto b = start(cycle ? "kite-cycle" : "kite-bipartite", gp, opts);
  auto& w = b.witnesses();
  const double t = theta(p.length, p.length);
  const double lam = head_lambda1(spec.head, spec.root);
  w["variant"] = cycle ? "cycle_head" : "bipartite_head";
  w["h"] = h;
  w["theta_r"] = t;
  w["lambda1_head"] = lam;
  w["k"] = p.k;

  if (cycle) {
    if (p.h > 2 * p.length + 1) {
      w["reason"] = "requires h <= 2r + 1";
      return b.finish(Verdict::PreconditionUnmet);
    }
    const bool identity = cycle_path_identity_check(p.h);
    w["cycle_path_identity"] = identity;
    if (!identity) return b.finish(Verdict::Fail);
  } else {
    const double hh = h;
    const double closed = 0.5 * (hh - std::sqrt(hh * hh - 4.0 * other_side_size));
    const double closed_root_side = 0.5 * (hh - std::sqrt(hh * hh - 4.0 * root_side_size));
    w["closed_form"] = closed;
    w["closed_form_root_side"] = closed_root_side;
    if (std::abs(closed - lam) > detail::value_tolerance(lam, opts)) return b.finish(Verdict::Fail);
    if (lam < t - alpha_tolerance(t, opts)) {
      w["reason"] = "lambda_1 of the head submatrix is below theta_r";
      return b.finish(Verdict::PreconditionUnmet);
    }
  }

  const double ah = alpha_of(spec.head, opts);
  const double ahf = alpha_of(token_graph(spec.head, p.k, opts.cap).graph, opts);
  w["alpha_head"] = ah;
  w["alpha_head_token"] = ahf;
  if (!alpha_equal(ahf, ah, opts)) {
    w["reason"] = "alpha(H) differs from alpha(F_k(H))";
    return b.finish(Verdict::PreconditionUnmet);
  }
  const double ag = alpha_of(gp, opts);
  const double agf = alpha_of(token_graph(gp, p.k, opts.cap).graph, opts);
  w["alpha_g_plus"] = ag;
  w["alpha_g_plus_token"] = agf;
  w["alpha_g_plus_is_theta"] = alpha_equal(ag, t, opts);
  return b.finish(alpha_equal(agf, ag, opts) ? Verdict::Pass : Verdict::Fail);
}

}  // namespace token_spectra
