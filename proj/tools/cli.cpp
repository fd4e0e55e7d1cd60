#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "token_spectra/edge_list.hpp"
#include "token_spectra/error.hpp"
#include "token_spectra/exact.hpp"

namespace token_spectra::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("graph spec needs the form family:params, got '" + spec + "'");
  const auto fam = parse_family(spec.substr(0, colon));
  if (!fam) throw UsageError("unknown graph family '" + spec.substr(0, colon) + "'");
  std::vector<int> params;
  for (const auto& p : split(spec.substr(colon + 1), ',')) params.push_back(to_int(p));
  return build_standard(*fam, params);
}

Graph load_graph(const std::string& arg) {
  if (arg == "-") return read_edge_list(std::cin);
  const auto colon = arg.find(':');
  if (colon != std::string::npos && parse_family(arg.substr(0, colon))) return parse_graph_spec(arg);
  return read_edge_list_file(arg);
}

std::vector<Graph> parse_components(const std::vector<std::string>& tokens) {
  std::vector<Graph> out;
  for (const auto& t : tokens) {
    if (t.size() > 1 && t[0] == 'x' && t.find(':') == std::string::npos) {
      if (out.empty()) throw UsageError("repetition '" + t + "' has no component before it");
      const int times = to_int(t.substr(1));
      if (times < 1) throw UsageError("repetition count must be positive");
      const Graph last = out.back();
      for (int i = 1; i < times; ++i) out.push_back(last);
    } else {
      out.push_back(parse_graph_spec(t));
    }
  }
  return out;
}

Edge parse_edge(const std::string& text) {
  const char sep = text.find(',') != std::string::npos ? ',' : '-';
  const auto parts = split(text, sep);
  if (parts.size() != 2) throw UsageError("edge must look like u,v: '" + text + "'");
  return make_edge(to_int(parts[0]), to_int(parts[1]));
}

std::uint64_t resolve_cap(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TOKEN_SPECTRA_CAP"); env && *env) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TOKEN_SPECTRA_CAP is not a number: '") + env + "'");
  }
  return kDefaultTokenCap;
}

namespace {

struct Common {
  std::optional<double> tol;
  std::optional<double> group_tol;
  std::optional<std::uint64_t> cap;
  bool pretty = false;
  bool exact = false;
  std::string out_path;
};

void add_tolerance_flags(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.tol, "Equality tolerance (relative)");
  sub->add_option("--group-tol", c.group_tol, "Eigenvalue grouping tolerance (relative)");
  sub->add_option("--cap", c.cap, "Largest token graph order (default: $TOKEN_SPECTRA_CAP or 200000)");
  sub->add_flag("--pretty", c.pretty, "Human-readable output");
}

CheckOptions make_options(const Common& c) {
  CheckOptions o;
  if (c.tol) o.alpha_rel = o.value_tol = *c.tol;
  if (c.group_tol) o.spectral.group = *c.group_tol;
  o.cap = resolve_cap(c.cap);
  return o;
}

std::vector<Edge> parse_edges(const std::vector<std::string>& items) {
  std::vector<Edge> out;
  for (const auto& s : items) out.push_back(parse_edge(s));
  return out;
}

// Parameters for construct and verify, all optional at parse time.
struct Params {
  std::string family;
  std::vector<std::string> positional;
  std::string graph;
  std::optional<int> k, u, v, r, s, root, cut, n1, n2, h, h1, h2, nu, copies, tree_root;
  int root_side = 1;
  std::string head, tree, mode = "plus_x";
  std::vector<std::string> comps, chords, added, head_edges, x_edges, removed;
};

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string("missing required option ") + flag);
  return v;
}

KiteSpec kite_spec(const Params& p) {
  return KiteSpec{load_graph(need(p.head, "--head")), p.root.value_or(0), need(p.s, "-s"), need(p.r, "-r")};
}

BipartiteMode bipartite_mode(const Params& p) {
  if (p.mode == "star_y") return BipartiteMode::star_y();
  if (p.mode == "plus_x") return BipartiteMode::plus_x(parse_edges(p.x_edges));
  throw UsageError("--mode must be plus_x or star_y");
}

Graph construct(const Params& p) {
  const std::string& f = p.family;
  std::vector<int> nums;
  for (const auto& s : p.positional) nums.push_back(to_int(s));
  if (const auto fam = parse_family(f)) return build_standard(*fam, nums);
  if (f == "kite") return build_kite(kite_spec(p)).graph;
  if (f == "superkite") {
    return build_superkite(load_graph(need(p.head, "--head")), p.root.value_or(0), load_graph(need(p.tree, "--tree")),
                           p.tree_root.value_or(0), need(p.copies, "--copies"));
  }
  if (f == "cutclique") return build_cut_clique_join(need(p.r, "-r"), parse_components(p.comps));
  if (f == "extcycle") {
    if (nums.size() != 1) throw UsageError("extcycle takes the cycle order as its only parameter");
    return build_extended_cycle(nums[0], need(p.nu, "--nu"), parse_edges(p.chords));
  }
  if (f == "bipartite-ext") return build_bipartite_extension(need(p.n1, "--n1"), need(p.n2, "--n2"), bipartite_mode(p));
  throw UsageError("unknown constructor '" + f + "'");
}

Certificate dispatch(const std::string& id, const Params& p, const CheckOptions& opts, bool exact) {
  auto graph = [&] { return load_graph(need(p.graph, "--graph")); };
  if (id == "containment")
    return check_spectral_containment(graph(), need(p.k, "-k"), exact ? ContainmentMode::Exact : ContainmentMode::Float, opts);
  if (id == "alpha-token") return check_alpha_token_equality(graph(), need(p.k, "-k"), opts);
  if (id == "edge-add-iff") return check_edge_add_alpha_iff(graph(), need(p.u, "-u"), need(p.v, "-v"), opts);
  if (id == "interlacing") return check_interlacing(graph(), need(p.u, "-u"), need(p.v, "-v"), opts);
  if (id == "merris") return check_merris(graph(), need(p.u, "-u"), need(p.v, "-v"), opts);
  if (id == "pendant-bound") return check_pendant_bound(graph(), need(p.k, "-k"), opts);
  if (id == "embedding") return check_embedding(graph(), need(p.k, "-k"), opts);
  if (id == "suffcondition") return check_suffcondition(graph(), need(p.cut, "--cut"), opts);
  if (id == "theta-table") return check_theta_table(need(p.r, "-r"), opts);
  if (id == "kite-iff") return check_kite_alpha_iff(kite_spec(p), opts);
  if (id == "symmetrizer") return check_symmetrizer_commutation(kite_spec(p), opts);
  if (id == "shao-pendant") return check_shao_pendant(build_kite(kite_spec(p)), parse_edges(p.added), opts);
  if (id == "kite-persistence") return check_kite_persistence(kite_spec(p), parse_edges(p.added), opts);
  if (id == "cut-clique") {
    return check_cut_clique(need(p.r, "-r"), parse_components(p.comps), parse_edges(p.removed), need(p.k, "-k"), opts);
  }
  if (id == "bipartite-ext") {
    return check_bipartite_extension(need(p.n1, "--n1"), need(p.n2, "--n2"), bipartite_mode(p), need(p.k, "-k"), opts);
  }
  if (id == "kite-cycle" || id == "kite-bipartite") {
    KiteCorollaryParams c;
    c.variant = id == "kite-cycle" ? KiteCorollaryParams::Variant::CycleHead : KiteCorollaryParams::Variant::BipartiteHead;
    if (id == "kite-cycle") {
      c.h = need(p.h, "--order");
    } else {
      c.h1 = need(p.h1, "--h1");
      c.h2 = need(p.h2, "--h2");
      c.root_side = p.root_side;
    }
    c.paths = need(p.s, "-s");
    c.length = need(p.r, "-r");
    c.head_edges = parse_edges(p.head_edges);
    c.tail_edges = parse_edges(p.added);
    c.k = p.k.value_or(2);
    return check_kite_corollaries(c, opts);
  }
  throw UsageError("unknown check id '" + id + "'");
}

void print_pretty_json(std::ostream& out, const nlohmann::json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_pretty_json(out, *it, prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  out << std::left << std::setw(28) << prefix << ' ' << j.dump() << '\n';
}

void emit(std::ostream& out, const nlohmann::json& j, bool pretty) {
  if (pretty) {
    print_pretty_json(out, j, "");
  } else {
    out << j.dump() << '\n';
  }
}

void register_params(CLI::App* sub, Params& p) {
  sub->add_option("--graph", p.graph, "Edge-list file, '-' for stdin, or family:params");
  sub->add_option("-k", p.k, "Token count");
  sub->add_option("-u", p.u, "First vertex");
  sub->add_option("-v", p.v, "Second vertex");
  sub->add_option("-r", p.r, "Tail length, clique order, or table row");
  sub->add_option("-s", p.s, "Number of tail paths");
  sub->add_option("--head", p.head, "Kite head (family:params or file)");
  sub->add_option("--root", p.root, "Root vertex of the head");
  sub->add_option("--comp", p.comps, "Cut-clique components; 'xN' repeats the previous one")->expected(1, 1 << 20);
  sub->add_option("--remove", p.removed, "Join edge u,v to drop (repeatable)");
  sub->add_option("--add", p.added, "Tail edge u,v to add (repeatable)");
  sub->add_option("--head-edge", p.head_edges, "Head edge u,v to add (repeatable)");
  sub->add_option("--n1", p.n1, "Size of part X");
  sub->add_option("--n2", p.n2, "Size of part Y");
  sub->add_option("--mode", p.mode, "plus_x or star_y");
  sub->add_option("--x-edge", p.x_edges, "Edge u,v inside X (repeatable)");
  sub->add_option("--cut", p.cut, "Cut vertex");
  sub->add_option("--order", p.h, "Cycle head order");
  sub->add_option("--h1", p.h1, "Bipartite head part 1");
  sub->add_option("--h2", p.h2, "Bipartite head part 2");
  sub->add_option("--root-side", p.root_side, "Bipartite head part holding the root (1 or 2)");
}

int run_construct(const Params& p, const Common& c, std::ostream& out) {
  const Graph g = construct(p);
  std::vector<std::string> comments = {"construct " + p.family};
  if (c.out_path.empty()) {
    write_edge_list(out, g, comments);
  } else {
    std::ofstream f(c.out_path);
    if (!f) throw UsageError("cannot write " + c.out_path);
    write_edge_list(f, g, comments);
  }
  return kExitOk;
}

int run_token(const Params& p, const Common& c, std::ostream& out) {
  const Graph g = load_graph(need(p.graph, "--graph"));
  const int k = need(p.k, "-k");
  const TokenGraph tg = token_graph(g, k, resolve_cap(c.cap));
  const std::vector<std::string> comments = {"token base_n=" + std::to_string(g.order()) + " k=" + std::to_string(k) + " codec=colex"};
  if (c.out_path.empty()) {
    write_edge_list(out, tg.graph, comments);
  } else {
    std::ofstream f(c.out_path);
    if (!f) throw UsageError("cannot write " + c.out_path);
    write_edge_list(f, tg.graph, comments);
  }
  return kExitOk;
}

int run_spectrum(const Params& p, const Common& c, std::ostream& out) {
  Graph g = load_graph(need(p.graph, "--graph"));
  if (p.k) g = token_graph(g, *p.k, resolve_cap(c.cap)).graph;
  SpectralTolerances tol;
  if (c.tol) tol.resid = *c.tol;
  if (c.group_tol) tol.group = *c.group_tol;
  const Spectrum s = eig_sym(laplacian(g), tol);
  nlohmann::json j = {{"graph", {{"n", g.order()}, {"edges_hash", g.fingerprint_hex()}}}, {"spectrum", s}};
  if (g.order() >= 2) j["alpha"] = s.group_of(1).first == 0 ? 0.0 : s.group_of(1).value;
  if (c.exact) j["char_poly"] = char_poly(laplacian(g));

  if (!c.pretty) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "n = " << g.order() << ", m = " << g.size() << '\n';
  out << std::left << std::setw(6) << "index" << std::setw(22) << "eigenvalue" << "mult\n";
  for (const auto& grp : s.groups) {
    out << std::setw(6) << grp.first << std::setw(22) << std::setprecision(12) << grp.value << grp.multiplicity << '\n';
  }
  if (j.contains("alpha")) out << "alpha = " << std::setprecision(12) << j["alpha"].get<double>() << '\n';
  if (c.exact) out << "char_poly = " << char_poly(laplacian(g)).to_string() << '\n';
  return kExitOk;
}

int run_verify(const std::string& id, const Params& p, const Common& c, std::ostream& out) {
  const Certificate cert = dispatch(id, p, make_options(c), c.exact);
  emit(out, nlohmann::json(cert), c.pretty);
  return cert.verdict == Verdict::Fail ? kExitFail : kExitOk;
}

int run_sweep_cmd(const std::string& file, std::optional<std::uint64_t> seed, int jobs, const std::string& csv_path,
                  const std::string& summary_path, const Common& c, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read sweep file " + file);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("sweep file: ") + e.what());
  }
  SweepSpec spec = parse_sweep_spec(j);
  if (seed) spec.seed = *seed;
  CheckOptions opts = make_options(c);
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    opts.alpha_rel = t.value("alpha_rel", opts.alpha_rel);
    opts.value_tol = t.value("value_tol", opts.value_tol);
    opts.pair_tol = t.value("pair_tol", opts.pair_tol);
    opts.spectral.group = t.value("group", opts.spectral.group);
    opts.spectral.resid = t.value("resid", opts.spectral.resid);
  }
  if (!c.cap && j.contains("cap")) opts.cap = j["cap"].get<std::uint64_t>();
  if (c.tol) opts.alpha_rel = opts.value_tol = *c.tol;
  if (c.group_tol) opts.spectral.group = *c.group_tol;

  const SweepReport report = run_sweep(spec, opts, jobs);
  if (csv_path.empty()) {
    write_csv(out, report.rows);
  } else {
    std::ofstream f(csv_path);
    if (!f) throw UsageError("cannot write " + csv_path);
    write_csv(f, report.rows);
  }
  std::ostream* summary = &err;
  std::ofstream sf;
  if (!summary_path.empty()) {
    sf.open(summary_path);
    if (!sf) throw UsageError("cannot write " + summary_path);
    summary = &sf;
  }
  if (c.pretty) {
    *summary << "family " << spec.family << ", " << report.summary["instances"] << " instances, " << report.rows.size()
             << " rows\n";
    for (auto it = report.summary["by_check"].begin(); it != report.summary["by_check"].end(); ++it) {
      *summary << std::left << std::setw(20) << it.key() << it.value().dump() << '\n';
    }
  } else {
    *summary << report.summary.dump() << '\n';
  }
  return report.exit_code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian spectra of graphs and their token graphs"};
  app.name("token-spectra");
  app.require_subcommand(1);

  Common common;
  Params params;
  std::string check_id, sweep_file, csv_path, summary_path;
  std::optional<std::uint64_t> seed;
  int jobs = 1;

  auto* construct_cmd = app.add_subcommand("construct", "Build a graph and write its edge list");
  construct_cmd->add_option("family", params.family, "path|cycle|complete|star|complete_bipartite|kite|superkite|cutclique|extcycle|bipartite-ext")
      ->required();
  construct_cmd->add_option("params", params.positional, "Integer parameters of standard families");
  register_params(construct_cmd, params);
  construct_cmd->add_option("--tree", params.tree, "Superkite tree (family:params or file)");
  construct_cmd->add_option("--tree-root", params.tree_root, "Root of the superkite tree");
  construct_cmd->add_option("--copies", params.copies, "Number of tree copies");
  construct_cmd->add_option("--nu", params.nu, "Chord sum for extended cycles");
  construct_cmd->add_option("--chord", params.chords, "Chord i,j with i + j = nu (repeatable)");
  construct_cmd->add_option("-o,--output", common.out_path, "Write to a file instead of stdout");

  auto* token_cmd = app.add_subcommand("token", "Write the edge list of F_k(G)");
  token_cmd->add_option("--graph", params.graph, "Edge-list file, '-' for stdin, or family:params")->required();
  token_cmd->add_option("-k", params.k, "Token count")->required();
  token_cmd->add_option("--cap", common.cap, "Largest token graph order");
  token_cmd->add_option("-o,--output", common.out_path, "Write to a file instead of stdout");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum as JSON");
  spectrum_cmd->add_option("--graph", params.graph, "Edge-list file, '-' for stdin, or family:params")->required();
  spectrum_cmd->add_option("-k", params.k, "Use the k-token graph instead");
  spectrum_cmd->add_flag("--exact", common.exact, "Include the exact characteristic polynomial");
  add_tolerance_flags(spectrum_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run one check and print its certificate");
  verify_cmd->add_option("check", check_id, "Check id")->required();
  register_params(verify_cmd, params);
  verify_cmd->add_flag("--exact", common.exact, "Exact arithmetic where the check supports it");
  verify_cmd->add_option("--seed", seed, "Accepted for symmetry with sweep; checks are deterministic");
  add_tolerance_flags(verify_cmd, common);

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a JSON sweep file; CSV rows on stdout, JSON summary on stderr");
  sweep_cmd->add_option("file", sweep_file, "Sweep specification (JSON)")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", seed, "Override the file's seed");
  sweep_cmd->add_option("--csv", csv_path, "Write CSV rows to a file");
  sweep_cmd->add_option("--summary", summary_path, "Write the JSON summary to a file");
  add_tolerance_flags(sweep_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return run_construct(params, common, out);
    if (*token_cmd) return run_token(params, common, out);
    if (*spectrum_cmd) return run_spectrum(params, common, out);
    if (*verify_cmd) return run_verify(check_id, params, common, out);
    if (*sweep_cmd) return run_sweep_cmd(sweep_file, seed, jobs, csv_path, summary_path, common, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::CapExceeded: return kExitCap;
      case ErrorCode::NoConvergence:
      case ErrorCode::Cancelled: return kExitFail;
      default: return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace token_spectra::cli
