#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace token_spectra {

using Vertex = int;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Returns the edge with endpoints ordered; does not validate.
inline Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on vertices [0, n) with a canonical sorted edge set.
///
/// Immutable after construction: every perturbation returns a new Graph, so
/// instances can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n) {}

  // Validates range, loops and duplicates; the input order is irrelevant.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const noexcept;
  std::vector<int> degrees() const;
  std::vector<std::vector<Vertex>> adjacency() const;
  bool is_connected() const;

  // Connected components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;

  // FNV-1a over the canonical edge list; equal graphs hash equally.
  std::uint64_t fingerprint() const noexcept;
  std::string fingerprint_hex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

Graph add_edges(const Graph& g, std::span<const Edge> new_edges);
Graph remove_edges(const Graph& g, std::span<const Edge> gone);

// Union of two edge-disjoint graphs on the same vertex set.
Graph edge_union(const Graph& g1, const Graph& g2);

// Disjoint union with g2's vertices shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
  Graph graph;
  // old label -> new label, -1 when the vertex was dropped.
  std::vector<int> index_map;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

// Number of edges with exactly one endpoint in vs.
std::size_t boundary_degree(const Graph& g, std::span<const Vertex> vs);

// Applies a vertex permutation: vertex i becomes perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace token_spectra
