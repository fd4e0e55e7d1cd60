#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "token_spectra/graph.hpp"

namespace token_spectra {

inline constexpr std::uint64_t kDefaultTokenCap = 200000;

// Pascal table up to n = 64; entries that overflow 64 bits are flagged.
class BinomialTable {
 public:
  static constexpr int kMaxN = 64;

  static const BinomialTable& instance();

  // Throws out-of-range if C(n, k) does not fit in 64 bits.
  std::uint64_t operator()(int n, int k) const;

 private:
  BinomialTable();
  std::vector<std::uint64_t> table_;
  std::vector<char> overflow_;
};

std::uint64_t binomial(int n, int k);

/// Colexicographic ranking of k-subsets of [0, n):
/// rank(S) = sum_j C(s_j, j + 1) over sorted elements s_0 < s_1 < ...
class SubsetCodec {
 public:
  SubsetCodec(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t count() const noexcept { return count_; }

  std::uint64_t rank(std::span<const Vertex> subset) const;
  std::vector<Vertex> unrank(std::uint64_t index) const;

 private:
  int n_;
  int k_;
  std::uint64_t count_;
};

struct TokenGraph {
  Graph base;
  int k = 0;
  Graph graph;
  SubsetCodec codec;
};

// F_k(g). Edges come from (base edge, (k-1)-subset of the rest) pairs, so the
// cost is |E| * C(n-2, k-1) rather than a pairwise scan.
TokenGraph token_graph(const Graph& g, int k, std::uint64_t cap = kDefaultTokenCap);

// (Bx)_A = sum_{j in A} x_j, without materializing B.
std::vector<double> binomial_lift(const SubsetCodec& codec, std::span<const double> x);

// (B^T w)_j = sum_{A containing j} w_A.
std::vector<double> binomial_project(const SubsetCodec& codec, std::span<const double> w);

// Token-graph vertices (ranks) whose subset contains / avoids v.
std::vector<std::uint64_t> subsets_containing(const SubsetCodec& codec, Vertex v);
std::vector<std::uint64_t> subsets_avoiding(const SubsetCodec& codec, Vertex v);

// Calls fn(const std::vector<Vertex>&) for every k-subset of [0, n) in colex order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<Vertex> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    fn(static_cast<const std::vector<Vertex>&>(s));
    // Colex successor: bump the first element that can move up.
    int i = 0;
    while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
    if (i == k) return;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j;
  }
}

}  // namespace token_spectra
