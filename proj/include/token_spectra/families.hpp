#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "token_spectra/graph.hpp"

namespace token_spectra {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star };

std::optional<Family> parse_family(std::string_view name);

// path/cycle/complete/star take the vertex count; complete_bipartite takes
// (n1, n2) with parts [0, n1) and [n1, n1 + n2). star:N is K_{1,N-1} centered at 0.
Graph build_standard(Family family, std::span<const int> params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int n1, int n2);
Graph star_graph(int n);

/// Head graph with `paths` pendant paths of `length` vertices each, all rooted
/// at `root`.
struct KiteSpec {
  Graph head;
  Vertex root = 0;
  int paths = 2;   // s
  int length = 1;  // r
};

/// Labels of a built kite. Head vertices keep their labels; tail vertex
/// v_{ij} (path i, depth j, both 1-based) is head_order + (i-1)*length + (j-1).
struct Kite {
  Graph graph;
  int head_order = 0;
  Vertex root = 0;
  int paths = 0;
  int length = 0;

  Vertex tail(int path, int depth) const;
  // Vertices v_{1j}, ..., v_{sj} at depth j.
  std::vector<Vertex> level(int depth) const;
  bool is_head(Vertex v) const noexcept { return v < head_order; }
};

Kite build_kite(const KiteSpec& spec);

// s copies of a rooted tree glued at the head's root. Non-root tree vertices
// are labeled copy-major, BFS-order-minor (neighbors visited ascending).
Graph build_superkite(const Graph& head, Vertex root, const Graph& tree, Vertex tree_root, int copies);

// K_r on labels [0, r), then each component in order, with every clique vertex
// joined to every component vertex.
Graph build_cut_clique_join(int r, std::span<const Graph> components);

// C_n plus chords {i, j} with i + j = nu. nu must be n (n odd) or n / n-1 (n even).
Graph build_extended_cycle(int n, int nu, std::span<const Edge> chords);

struct BipartiteMode {
  enum class Kind { PlusX, StarY };
  Kind kind = Kind::PlusX;
  std::vector<Edge> x_edges;  // PlusX only, inside [0, n1)

  static BipartiteMode plus_x(std::vector<Edge> edges) { return {Kind::PlusX, std::move(edges)}; }
  static BipartiteMode star_y() { return {Kind::StarY, {}}; }
};

// K_{n1,n2} (X = [0,n1), Y = [n1,n1+n2)) with internal edges per mode.
Graph build_bipartite_extension(int n1, int n2, const BipartiteMode& mode);

}  // namespace token_spectra
