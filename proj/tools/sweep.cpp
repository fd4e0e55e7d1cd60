#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "cli.hpp"
#include "token_spectra/error.hpp"
#include "token_spectra/generators.hpp"

namespace token_spectra::cli {

namespace {

const std::set<std::string> kGraphChecks = {"containment", "alpha-token",   "pendant-bound", "embedding",
                                            "edge-add-iff", "interlacing", "merris",        "suffcondition"};
const std::set<std::string> kKiteChecks = {"kite-iff", "symmetrizer", "shao-pendant", "kite-persistence"};
const std::set<std::string> kKChecks = {"containment", "alpha-token", "pendant-bound", "embedding", "bipartite-ext", "cut-clique"};

const std::map<std::string, std::set<std::string>> kFamilyChecks = {
    {"theta", {"theta-table"}},
    {"bipartite_ext", {"bipartite-ext"}},
    {"cutclique", {"cut-clique"}},
    {"kite", kKiteChecks},
};

const std::set<std::string> kFamilies = {"trees", "connected", "random", "path",  "cycle",        "complete",
                                         "star",  "complete_bipartite", "kite", "theta", "bipartite_ext", "cutclique"};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, "sweep spec: " + msg); }

Range range_of(const nlohmann::json& params, const char* key, std::optional<Range> fallback = std::nullopt) {
  if (!params.contains(key)) {
    if (fallback) return *fallback;
    bad(std::string("missing range '") + key + "'");
  }
  const auto& v = params.at(key);
  Range r;
  if (v.is_number_integer()) {
    r.lo = r.hi = v.get<int>();
  } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    r.lo = v[0].get<int>();
    r.hi = v[1].get<int>();
  } else {
    bad(std::string("range '") + key + "' must be an integer or [lo, hi]");
  }
  if (r.lo > r.hi) bad(std::string("range '") + key + "' is empty");
  return r;
}

struct Instance {
  std::string label;
  Graph graph;
  std::optional<KiteSpec> kite;
  int theta_r = 0;
  int n1 = 0, n2 = 0;
  std::optional<BipartiteMode> mode;
  int clique_r = 0;
  std::vector<Graph> components;
};

Instance make_instance(std::string label, Graph g) {
  Instance inst;
  inst.label = std::move(label);
  inst.graph = std::move(g);
  return inst;
}

struct Task {
  std::size_t instance = 0;
  std::string check;
  int k = 0;
  int u = -1, v = -1;
  std::vector<Edge> added;
};

Task make_task(std::size_t instance, const std::string& check, int k = 0, int u = -1, int v = -1) {
  Task t;
  t.instance = instance;
  t.check = check;
  t.k = k;
  t.u = u;
  t.v = v;
  return t;
}

std::string spec_label(const std::string& family, std::initializer_list<int> params) {
  std::string s = family + ":";
  bool first = true;
  for (int p : params) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s;
}

std::vector<Instance> build_instances(const SweepSpec& spec, std::mt19937_64& rng) {
  const auto& p = spec.params;
  std::vector<Instance> out;
  const std::string& f = spec.family;
  if (f == "trees" || f == "connected") {
    const Range n = range_of(p, "n");
    for (int m = n.lo; m <= n.hi; ++m) {
      const auto gs = f == "trees" ? trees(m) : connected_graphs(m);
      for (std::size_t i = 0; i < gs.size(); ++i) out.push_back(make_instance(f + ":" + std::to_string(m) + "#" + std::to_string(i), gs[i]));
    }
  } else if (f == "random") {
    const Range n = range_of(p, "n");
    const double prob = p.value("p", 0.5);
    const int count = p.value("count", 100);
    if (count < 1) bad("count must be positive");
    for (int i = 0; i < count; ++i) {
      const int m = n.lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n.hi - n.lo + 1));
      out.push_back(make_instance("gnp:" + std::to_string(m) + "#" + std::to_string(i), random_connected_graph(m, prob, rng)));
    }
  } else if (f == "path" || f == "cycle" || f == "complete" || f == "star") {
    const Range n = range_of(p, "n");
    const Family fam = *parse_family(f);
    for (int m = n.lo; m <= n.hi; ++m) {
      const int params[] = {m};
      out.push_back(make_instance(spec_label(f, {m}), build_standard(fam, params)));
    }
  } else if (f == "complete_bipartite") {
    const Range a = range_of(p, "n1"), b = range_of(p, "n2");
    for (int x = a.lo; x <= a.hi; ++x)
      for (int y = b.lo; y <= b.hi; ++y) out.push_back(make_instance(spec_label(f, {x, y}), complete_bipartite_graph(x, y)));
  } else if (f == "kite") {
    const Graph head = parse_graph_spec(p.value("head", std::string("complete:1")));
    const int root = p.value("root", 0);
    const Range s = range_of(p, "s"), r = range_of(p, "r");
    for (int si = s.lo; si <= s.hi; ++si)
      for (int ri = r.lo; ri <= r.hi; ++ri) {
        KiteSpec ks{head, root, si, ri};
        Instance inst = make_instance(
            "kite:" + p.value("head", std::string("complete:1")) + "/s" + std::to_string(si) + "r" + std::to_string(ri),
            build_kite(ks).graph);
        inst.kite = ks;
        out.push_back(std::move(inst));
      }
  } else if (f == "theta") {
    const Range r = range_of(p, "r");
    for (int ri = r.lo; ri <= r.hi; ++ri) {
      Instance inst = make_instance("theta:" + std::to_string(ri), path_graph(ri + 1));
      inst.theta_r = ri;
      out.push_back(std::move(inst));
    }
  } else if (f == "bipartite_ext") {
    const Range a = range_of(p, "n1"), b = range_of(p, "n2");
    const std::string mode = p.value("mode", std::string("plus_x"));
    if (mode != "plus_x" && mode != "star_y") bad("mode must be plus_x or star_y");
    const int t = p.value("t", 0);
    for (int x = a.lo; x <= a.hi; ++x)
      for (int y = b.lo; y <= b.hi; ++y) {
        Instance inst = make_instance(spec_label(f, {x, y}), complete_bipartite_graph(x, y));
        inst.n1 = x;
        inst.n2 = y;
        if (mode == "star_y") {
          inst.mode = BipartiteMode::star_y();
        } else {
          std::vector<Edge> xe;
          for_each_subset(x, 2, [&](const std::vector<Vertex>& e) {
            if (static_cast<int>(xe.size()) < t) xe.push_back({e[0], e[1]});
          });
          inst.mode = BipartiteMode::plus_x(std::move(xe));
        }
        if (x <= y && (mode == "plus_x" || x >= 2)) inst.graph = build_bipartite_extension(x, y, *inst.mode);
        out.push_back(std::move(inst));
      }
  } else if (f == "cutclique") {
    const Range r = range_of(p, "r");
    if (!p.contains("menus") || !p["menus"].is_array() || p["menus"].empty()) bad("cutclique needs a non-empty 'menus' list");
    for (int ri = r.lo; ri <= r.hi; ++ri) {
      for (std::size_t mi = 0; mi < p["menus"].size(); ++mi) {
        const auto comps = parse_components(p["menus"][mi].get<std::vector<std::string>>());
        Instance inst = make_instance("cutclique:r" + std::to_string(ri) + "/menu" + std::to_string(mi), build_cut_clique_join(ri, comps));
        inst.clique_r = ri;
        inst.components = comps;
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

// Vertex pairs for the u,v checks: non-edges, or all pairs for merris.
std::vector<std::pair<int, int>> pick_pairs(const Graph& g, bool non_edges, const std::string& how, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> all;
  const auto n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!non_edges || !g.has_edge(a, b)) all.emplace_back(a, b);
  if (how == "all" || all.empty()) return all;
  return {all[rng() % all.size()]};
}

std::vector<Task> build_tasks(const SweepSpec& spec, const std::vector<Instance>& insts, std::mt19937_64& rng) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const Instance& inst = insts[i];
    const int n = static_cast<int>(inst.graph.order());
    for (const auto& c : spec.checks) {
      if (kKChecks.count(c)) {
        for (int k = spec.k.lo; k <= spec.k.hi; ++k) {
          if (k < 1 || k > n - 1) continue;
          tasks.push_back(make_task(i, c, k));
        }
      } else if (c == "edge-add-iff" || c == "interlacing" || c == "merris") {
        for (auto [u, v] : pick_pairs(inst.graph, c != "merris", spec.pairs, rng)) tasks.push_back(make_task(i, c, 0, u, v));
      } else if (c == "shao-pendant" || c == "kite-persistence") {
        const Kite kite = build_kite(*inst.kite);
        Task t = make_task(i, c);
        // One random same-depth pair; U_j pairs only for persistence.
        const int first = c == "shao-pendant" ? 1 : 2;
        if (kite.paths - first + 1 >= 2) {
          const int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(kite.length));
          std::vector<Vertex> level;
          for (int a = first; a <= kite.paths; ++a) level.push_back(kite.tail(a, j));
          const std::size_t x = rng() % level.size();
          std::size_t y = rng() % (level.size() - 1);
          if (y >= x) ++y;
          t.added.push_back(make_edge(level[x], level[y]));
        }
        tasks.push_back(std::move(t));
      } else {
        tasks.push_back(make_task(i, c));
      }
    }
  }
  return tasks;
}

Certificate run_task(const Task& t, const Instance& inst, const SweepSpec& spec, const CheckOptions& opts) {
  const std::string& c = t.check;
  const Graph& g = inst.graph;
  if (c == "containment")
    return check_spectral_containment(g, t.k, spec.exact ? ContainmentMode::Exact : ContainmentMode::Float, opts);
  if (c == "alpha-token") return check_alpha_token_equality(g, t.k, opts);
  if (c == "pendant-bound") return check_pendant_bound(g, t.k, opts);
  if (c == "embedding") return check_embedding(g, t.k, opts);
  if (c == "edge-add-iff") return check_edge_add_alpha_iff(g, t.u, t.v, opts);
  if (c == "interlacing") return check_interlacing(g, t.u, t.v, opts);
  if (c == "merris") return check_merris(g, t.u, t.v, opts);
  if (c == "suffcondition") {
    // First vertex whose removal disconnects the graph; vertex 0 otherwise.
    Vertex cut = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      std::vector<Vertex> rest;
      for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x)
        if (x != v) rest.push_back(x);
      if (induced_subgraph(g, rest).graph.components().size() >= 2) {
        cut = v;
        break;
      }
    }
    return check_suffcondition(g, cut, opts);
  }
  if (c == "kite-iff") return check_kite_alpha_iff(*inst.kite, opts);
  if (c == "symmetrizer") return check_symmetrizer_commutation(*inst.kite, opts);
  if (c == "shao-pendant") return check_shao_pendant(build_kite(*inst.kite), t.added, opts);
  if (c == "kite-persistence") return check_kite_persistence(*inst.kite, t.added, opts);
  if (c == "theta-table") return check_theta_table(inst.theta_r, opts);
  if (c == "bipartite-ext") return check_bipartite_extension(inst.n1, inst.n2, *inst.mode, t.k, opts);
  if (c == "cut-clique") return check_cut_clique(inst.clique_r, inst.components, {}, t.k, opts);
  throw Error(ErrorCode::InvalidSpec, "unknown check " + c);
}

std::string scalar_witnesses(const nlohmann::json& w) {
  nlohmann::json out = nlohmann::json::object();
  for (auto it = w.begin(); it != w.end(); ++it)
    if (it->is_primitive()) out[it.key()] = *it;
  return out.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

SweepSpec parse_sweep_spec(const nlohmann::json& j) {
  if (!j.is_object()) bad("top level must be an object");
  SweepSpec s;
  if (!j.contains("family")) bad("missing 'family'");
  const auto& fam = j["family"];
  if (fam.is_string()) {
    s.family = fam.get<std::string>();
  } else if (fam.is_object() && fam.contains("kind")) {
    s.family = fam["kind"].get<std::string>();
    s.params = fam;
  } else {
    bad("'family' must be a name or an object with 'kind'");
  }
  if (!kFamilies.count(s.family)) bad("unknown family '" + s.family + "'");
  s.k = range_of(j, "k", Range{1, 1});
  if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty()) bad("'checks' must be a non-empty list");
  s.checks = j["checks"].get<std::vector<std::string>>();
  const auto special = kFamilyChecks.find(s.family);
  for (const auto& c : s.checks) {
    const bool graph_check = kGraphChecks.count(c) > 0;
    const bool family_check = special != kFamilyChecks.end() && special->second.count(c) > 0;
    const bool theta_family = s.family == "theta";
    if (!(family_check || (graph_check && !theta_family))) bad("check '" + c + "' does not apply to family '" + s.family + "'");
  }
  s.seed = j.value("seed", std::uint64_t{1});
  s.exact = j.value("exact", true);
  s.pairs = j.value("pairs", std::string("random"));
  if (s.pairs != "random" && s.pairs != "all") bad("'pairs' must be random or all");
  // Range-shaped family fields are validated when instances are built; check
  // the obvious ones now so errors surface before any work.
  for (const char* key : {"n", "n1", "n2", "s", "r"})
    if (s.params.contains(key)) (void)range_of(s.params, key);
  return s;
}

SweepReport run_sweep(const SweepSpec& spec, const CheckOptions& opts, int jobs) {
  std::mt19937_64 rng(spec.seed);
  const std::vector<Instance> insts = build_instances(spec, rng);
  const std::vector<Task> tasks = build_tasks(spec, insts, rng);

  SweepReport report;
  report.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const Instance& inst = insts[t.instance];
      SweepRow& row = report.rows[i];
      row.instance = t.instance;
      row.label = inst.label;
      row.n = inst.graph.order();
      row.m = inst.graph.size();
      row.edges_hash = inst.graph.fingerprint_hex();
      row.check_id = t.check;
      row.k = t.k;
      row.u = t.u;
      row.v = t.v;
      try {
        const Certificate cert = run_task(t, inst, spec, opts);
        row.verdict = std::string(to_string(cert.verdict));
        row.runtime_ms = cert.runtime_ms;
        row.detail = scalar_witnesses(cert.witnesses);
      } catch (const Error& e) {
        row.verdict = e.code() == ErrorCode::CapExceeded ? "cap_exceeded" : "error";
        row.detail = e.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  std::map<std::string, std::map<std::string, int>> by_check;
  std::map<std::string, int> totals = {{"pass", 0}, {"fail", 0}, {"precondition_unmet", 0}, {"cap_exceeded", 0}, {"error", 0}};
  for (const auto& row : report.rows) {
    ++totals[row.verdict];
    ++by_check[row.check_id][row.verdict];
  }
  report.summary = {{"family", spec.family},
                    {"seed", spec.seed},
                    {"instances", insts.size()},
                    {"rows", report.rows.size()},
                    {"totals", totals},
                    {"by_check", by_check},
                    {"tolerances", tolerances_json(opts)}};
  if (totals["fail"] > 0 || totals["error"] > 0) {
    report.exit_code = kExitFail;
  } else if (totals["cap_exceeded"] > 0) {
    report.exit_code = kExitCap;
  }
  return report;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "instance,label,n,m,edges_hash,check_id,k,u,v,verdict,runtime_ms,detail\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << csv_field(r.label) << ',' << r.n << ',' << r.m << ',' << r.edges_hash << ',' << r.check_id
        << ',' << r.k << ',' << r.u << ',' << r.v << ',' << r.verdict << ',' << r.runtime_ms << ',' << csv_field(r.detail)
        << '\n';
  }
}

}  // namespace token_spectra::cli
