#include "token_spectra/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "token_spectra/error.hpp"

namespace token_spectra {

namespace {

constexpr int kMaxCanonical = 11;

int pair_index(int a, int b) {  // a < b
  return b * (b - 1) / 2 + a;
}

Graph decode(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a)
      if (code >> pair_index(a, b) & 1U) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

// All graphs on n vertices up to isomorphism, grown one vertex at a time.
const std::vector<std::uint64_t>& all_graph_codes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> level = {0};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph g = decode(m - 1, code);
      for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
        std::vector<Edge> edges = g.edges();
        for (int a = 0; a < m - 1; ++a)
          if (nb >> a & 1U) edges.push_back({a, m - 1});
        next.insert(canonical_code(Graph(m, std::move(edges))));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return cache.emplace(n, std::move(level)).first->second;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n > kMaxCanonical) throw Error(ErrorCode::OutOfRange, "canonical form supports n <= 11");
  if (n <= 1) return 0;
  const auto adj = g.adjacency();
  const auto deg = g.degrees();

  // Vertex invariant: degree, then sorted neighbour degrees.
  std::vector<std::pair<std::vector<int>, Vertex>> keyed;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key = {deg[v]};
    std::vector<int> nd;
    for (Vertex w : adj[v]) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::vector<Vertex>> classes;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
    classes.back().push_back(keyed[i].second);
  }

  std::vector<int> pos(n);
  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    int p = 0;
    for (const auto& c : classes)
      for (Vertex v : c) pos[v] = p++;
    std::uint64_t code = 0;
    for (const auto& e : g.edges()) {
      const int a = std::min(pos[e.u], pos[e.v]), b = std::max(pos[e.u], pos[e.v]);
      code |= std::uint64_t{1} << pair_index(a, b);
    }
    best = std::min(best, code);
    // Odometer over the per-class permutations.
    std::size_t i = 0;
    while (i < classes.size() && !std::next_permutation(classes[i].begin(), classes[i].end())) ++i;
    if (i == classes.size()) break;
  }
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::OutOfRange, "connected_graphs supports 1 <= n <= 8");
  std::vector<Graph> out;
  for (std::uint64_t code : all_graph_codes(n)) {
    Graph g = decode(n, code);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> trees(int n) {
  if (n < 1 || n > 10) throw Error(ErrorCode::OutOfRange, "trees supports 1 <= n <= 10");
  std::vector<std::uint64_t> level = {0};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph t = decode(m - 1, code);
      for (Vertex a = 0; a < m - 1; ++a) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({a, m - 1});
        next.insert(canonical_code(Graph(m, std::move(edges))));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) out.push_back(decode(n, code));
  return out;
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "random graph needs n >= 1");
  if (!(p > 0.0 && p <= 1.0) && n > 1) throw Error(ErrorCode::InvalidParameter, "edge probability must be in (0, 1]");
  while (true) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (unit_uniform(rng) < p) edges.push_back({a, b});
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
}

}  // namespace token_spectra
