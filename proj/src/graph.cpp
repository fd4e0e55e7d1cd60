#include "token_spectra/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "token_spectra/error.hpp"

namespace token_spectra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::SizeMismatch: return "size-mismatch";
    case ErrorCode::EdgeOverlap: return "edge-overlap";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::NotATree: return "not-a-tree";
    case ErrorCode::TooFewComponents: return "too-few-components";
    case ErrorCode::InvalidChord: return "invalid-chord";
    case ErrorCode::WrongCardinality: return "wrong-cardinality";
    case ErrorCode::KOutOfRange: return "k-out-of-range";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::TooSmall: return "too-small";
    case ErrorCode::ZeroVector: return "zero-vector";
    case ErrorCode::NonIntegerInput: return "non-integer-input";
    case ErrorCode::ZeroDivisorPolynomial: return "zero-divisor-polynomial";
    case ErrorCode::EdgeExists: return "edge-exists";
    case ErrorCode::MalformedEdgeSet: return "malformed-edge-set";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::Cancelled: return "cancelled";
  }
  return "unknown";
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
  }
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    check_vertex(n_, e.u);
    check_vertex(n_, e.v);
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(*dup));
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<int> slot(n_, -1);
  for (std::size_t v = 0; v < n_; ++v) {
    int root = find(static_cast<int>(v));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

std::uint64_t Graph::fingerprint() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(n_);
  for (const auto& e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

std::string Graph::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
  return buf;
}

Graph add_edges(const Graph& g, std::span<const Edge> new_edges) {
  for (const auto& e : new_edges) {
    check_vertex(g.order(), e.u);
    check_vertex(g.order(), e.v);
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    if (g.has_edge(e.u, e.v)) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(e) + " already present");
  }
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), new_edges.begin(), new_edges.end());
  return Graph(g.order(), std::move(all));
}

Graph remove_edges(const Graph& g, std::span<const Edge> gone) {
  std::vector<Edge> drop;
  for (const auto& e : gone) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::InvalidParameter, "edge " + edge_str(e) + " not present");
    drop.push_back(make_edge(e.u, e.v));
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return Graph(g.order(), std::move(kept));
}

Graph edge_union(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) {
    throw Error(ErrorCode::SizeMismatch,
                std::to_string(g1.order()) + " vs " + std::to_string(g2.order()) + " vertices");
  }
  std::vector<Edge> common;
  std::set_intersection(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw Error(ErrorCode::EdgeOverlap, "shared edge " + edge_str(common.front()));
  std::vector<Edge> all = g1.edges();
  all.insert(all.end(), g2.edges().begin(), g2.edges().end());
  return Graph(g1.order(), std::move(all));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto shift = static_cast<Vertex>(g1.order());
  std::vector<Edge> all = g1.edges();
  for (const auto& e : g2.edges()) all.push_back({e.u + shift, e.v + shift});
  return Graph(g1.order() + g2.order(), std::move(all));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> keep(vs.begin(), vs.end());
  for (Vertex v : keep) check_vertex(g.order(), v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  InducedSubgraph out;
  out.index_map.assign(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) out.index_map[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = out.index_map[e.u], b = out.index_map[e.v];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  out.graph = Graph(keep.size(), std::move(edges));
  return out;
}

std::size_t boundary_degree(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : vs) {
    check_vertex(g.order(), v);
    in[v] = 1;
  }
  std::size_t count = 0;
  for (const auto& e : g.edges()) count += (in[e.u] != in[e.v]) ? 1 : 0;
  return count;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw Error(ErrorCode::SizeMismatch, "permutation length differs from order");
  std::vector<char> seen(g.order(), 0);
  for (Vertex p : perm) {
    check_vertex(g.order(), p);
    if (seen[p]++) throw Error(ErrorCode::InvalidParameter, "not a permutation");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), std::move(edges));
}

}  // namespace token_spectra
