#include "token_spectra/families.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "token_spectra/error.hpp"

namespace token_spectra {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite" || name == "bipartite") return Family::CompleteBipartite;
  if (name == "star") return Family::Star;
  return std::nullopt;
}

Graph path_graph(int n) {
  require(n >= 1, ErrorCode::InvalidParameter, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, ErrorCode::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 1, ErrorCode::InvalidParameter, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, ErrorCode::InvalidParameter, "complete bipartite needs n1, n2 >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) edges.push_back({i, n1 + j});
  return Graph(n1 + n2, std::move(edges));
}

Graph star_graph(int n) {
  require(n >= 1, ErrorCode::InvalidParameter, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, std::move(edges));
}

Graph build_standard(Family family, std::span<const int> params) {
  const std::size_t want = family == Family::CompleteBipartite ? 2 : 1;
  require(params.size() == want, ErrorCode::InvalidParameter,
          "expected " + std::to_string(want) + " parameter(s), got " + std::to_string(params.size()));
  switch (family) {
    case Family::Path: return path_graph(params[0]);
    case Family::Cycle: return cycle_graph(params[0]);
    case Family::Complete: return complete_graph(params[0]);
    case Family::CompleteBipartite: return complete_bipartite_graph(params[0], params[1]);
    case Family::Star: return star_graph(params[0]);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

Vertex Kite::tail(int path, int depth) const {
  if (path < 1 || path > paths || depth < 1 || depth > length) {
    throw Error(ErrorCode::OutOfRange,
                "tail index (" + std::to_string(path) + "," + std::to_string(depth) + ") outside kite");
  }
  return head_order + (path - 1) * length + (depth - 1);
}

std::vector<Vertex> Kite::level(int depth) const {
  std::vector<Vertex> out;
  for (int i = 1; i <= paths; ++i) out.push_back(tail(i, depth));
  return out;
}

Kite build_kite(const KiteSpec& spec) {
  const auto h = static_cast<int>(spec.head.order());
  require(h >= 1, ErrorCode::InvalidSpec, "kite head must be nonempty");
  require(spec.root >= 0 && spec.root < h, ErrorCode::InvalidSpec, "root outside head");
  require(spec.paths >= 2, ErrorCode::InvalidSpec, "kite needs s >= 2 tail paths");
  require(spec.length >= 1, ErrorCode::InvalidSpec, "kite needs tail length r >= 1");

  Kite kite{Graph{}, h, spec.root, spec.paths, spec.length};
  std::vector<Edge> edges = spec.head.edges();
  for (int i = 1; i <= spec.paths; ++i) {
    Vertex prev = spec.root;
    for (int j = 1; j <= spec.length; ++j) {
      Vertex cur = kite.tail(i, j);
      edges.push_back(make_edge(prev, cur));
      prev = cur;
    }
  }
  kite.graph = Graph(h + spec.paths * spec.length, std::move(edges));
  return kite;
}

Graph build_superkite(const Graph& head, Vertex root, const Graph& tree, Vertex tree_root, int copies) {
  const auto h = static_cast<int>(head.order());
  const auto t = static_cast<int>(tree.order());
  require(root >= 0 && root < h, ErrorCode::InvalidSpec, "root outside head");
  require(copies >= 2, ErrorCode::InvalidSpec, "superkite needs s >= 2 trees");
  require(tree_root >= 0 && tree_root < t, ErrorCode::InvalidSpec, "tree root outside tree");
  if (tree.size() + 1 != tree.order() || !tree.is_connected()) {
    throw Error(ErrorCode::NotATree, "tail graph is not a tree");
  }

  // BFS order of the tree from its root; position 0 is the root itself.
  const auto adj = tree.adjacency();
  std::vector<int> order;
  std::vector<int> pos(t, -1);
  std::deque<int> queue{tree_root};
  pos[tree_root] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : adj[x]) {
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(order.size() + queue.size());
        queue.push_back(y);
      }
    }
  }

  std::vector<Edge> edges = head.edges();
  const int per_copy = t - 1;
  for (int c = 0; c < copies; ++c) {
    auto label = [&](int tree_vertex) {
      return pos[tree_vertex] == 0 ? root : h + c * per_copy + (pos[tree_vertex] - 1);
    };
    for (const auto& e : tree.edges()) edges.push_back(make_edge(label(e.u), label(e.v)));
  }
  return Graph(h + copies * per_copy, std::move(edges));
}

Graph build_cut_clique_join(int r, std::span<const Graph> components) {
  require(r >= 1, ErrorCode::InvalidParameter, "clique order r must be >= 1");
  if (components.size() < 2) throw Error(ErrorCode::TooFewComponents, "cut-clique join needs >= 2 components");
  Graph g = complete_graph(r);
  for (const auto& c : components) g = disjoint_union(g, c);
  std::vector<Edge> join;
  for (int a = 0; a < r; ++a)
    for (int b = r; b < static_cast<int>(g.order()); ++b) join.push_back({a, b});
  return add_edges(g, join);
}

Graph build_extended_cycle(int n, int nu, std::span<const Edge> chords) {
  require(n >= 3, ErrorCode::InvalidParameter, "cycle needs n >= 3");
  const bool nu_ok = (n % 2 == 1) ? nu == n : (nu == n || nu == n - 1);
  require(nu_ok, ErrorCode::InvalidParameter, "nu=" + std::to_string(nu) + " not allowed for n=" + std::to_string(n));
  for (const auto& c : chords) {
    if (c.u < 0 || c.v < 0 || c.u >= n || c.v >= n) {
      throw Error(ErrorCode::OutOfRange, "chord endpoint outside [0, n)");
    }
    if (c.u + c.v != nu || c.u == c.v) {
      throw Error(ErrorCode::InvalidChord,
                  "chord (" + std::to_string(c.u) + "," + std::to_string(c.v) + ") has i+j != " + std::to_string(nu));
    }
  }
  return add_edges(cycle_graph(n), chords);
}

Graph build_bipartite_extension(int n1, int n2, const BipartiteMode& mode) {
  require(n1 >= 1 && n1 <= n2, ErrorCode::InvalidParameter, "need 1 <= n1 <= n2");
  Graph g = complete_bipartite_graph(n1, n2);
  if (mode.kind == BipartiteMode::Kind::StarY) {
    require(n1 >= 2, ErrorCode::InvalidParameter, "star_Y needs n1 >= 2");
    std::vector<Edge> y;
    for (int a = n1; a < n1 + n2; ++a)
      for (int b = a + 1; b < n1 + n2; ++b) y.push_back({a, b});
    return add_edges(g, y);
  }
  const long max_t = static_cast<long>(n1) * (n1 - 1) / 2;
  require(static_cast<long>(mode.x_edges.size()) <= max_t, ErrorCode::InvalidParameter, "t exceeds n1(n1-1)/2");
  for (const auto& e : mode.x_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n1 || e.v >= n1) {
      throw Error(ErrorCode::InvalidParameter, "edge outside side X");
    }
  }
  return add_edges(g, mode.x_edges);
}

}  // namespace token_spectra
