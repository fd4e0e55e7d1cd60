#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "token_spectra/graph.hpp"

namespace token_spectra {

// One representative per isomorphism class of connected graphs on n vertices,
// 1 <= n <= 8. Output order is deterministic.
std::vector<Graph> connected_graphs(int n);

// One representative per isomorphism class of trees on n vertices, 1 <= n <= 10.
std::vector<Graph> trees(int n);

// Isomorphism-invariant code: the smallest upper-triangle bitmask over all
// degree-respecting relabelings. n <= 11.
std::uint64_t canonical_code(const Graph& g);

// Erdos-Renyi G(n, p) resampled until connected. The stream is fully
// determined by the generator state.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit_uniform(std::mt19937_64& rng);

}  // namespace token_spectra
