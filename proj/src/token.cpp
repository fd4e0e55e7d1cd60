#include "token_spectra/token.hpp"

#include <algorithm>
#include <string>

#include "token_spectra/error.hpp"

namespace token_spectra {

BinomialTable::BinomialTable()
    : table_((kMaxN + 1) * (kMaxN + 1), 0), overflow_((kMaxN + 1) * (kMaxN + 1), 0) {
  auto at = [](int n, int k) { return n * (kMaxN + 1) + k; };
  for (int n = 0; n <= kMaxN; ++n) {
    table_[at(n, 0)] = 1;
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t a = table_[at(n - 1, k - 1)];
      const std::uint64_t b = k <= n - 1 ? table_[at(n - 1, k)] : 0;
      const bool of = overflow_[at(n - 1, k - 1)] || (k <= n - 1 && overflow_[at(n - 1, k)]) || a > UINT64_MAX - b;
      overflow_[at(n, k)] = of;
      table_[at(n, k)] = of ? 0 : a + b;
    }
  }
}

const BinomialTable& BinomialTable::instance() {
  static const BinomialTable table;
  return table;
}

std::uint64_t BinomialTable::operator()(int n, int k) const {
  if (n < 0 || n > kMaxN) throw Error(ErrorCode::OutOfRange, "binomial n=" + std::to_string(n) + " outside [0, 64]");
  if (k < 0 || k > n) return 0;
  const int idx = n * (kMaxN + 1) + k;
  if (overflow_[idx]) throw Error(ErrorCode::OutOfRange, "C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
  return table_[idx];
}

std::uint64_t binomial(int n, int k) { return BinomialTable::instance()(n, k); }

SubsetCodec::SubsetCodec(int n, int k) : n_(n), k_(k), count_(0) {
  if (n < 2 || n > BinomialTable::kMaxN) {
    throw Error(ErrorCode::OutOfRange, "codec needs 2 <= n <= 64, got " + std::to_string(n));
  }
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  count_ = binomial(n, k);
}

std::uint64_t SubsetCodec::rank(std::span<const Vertex> subset) const {
  if (static_cast<int>(subset.size()) != k_) {
    throw Error(ErrorCode::WrongCardinality,
                "subset has " + std::to_string(subset.size()) + " elements, expected " + std::to_string(k_));
  }
  const auto& c = BinomialTable::instance();
  std::uint64_t r = 0;
  Vertex prev = -1;
  for (std::size_t j = 0; j < subset.size(); ++j) {
    const Vertex s = subset[j];
    if (s < 0 || s >= n_) throw Error(ErrorCode::OutOfRange, "element " + std::to_string(s) + " outside [0, n)");
    if (s <= prev) throw Error(ErrorCode::WrongCardinality, "subset must be strictly increasing");
    r += c(s, static_cast<int>(j) + 1);
    prev = s;
  }
  return r;
}

std::vector<Vertex> SubsetCodec::unrank(std::uint64_t index) const {
  if (index >= count_) {
    throw Error(ErrorCode::OutOfRange, "rank " + std::to_string(index) + " >= " + std::to_string(count_));
  }
  const auto& c = BinomialTable::instance();
  std::vector<Vertex> s(k_);
  int hi = n_ - 1;
  for (int j = k_; j >= 1; --j) {
    // Largest element value v with C(v, j) <= index.
    while (c(hi, j) > index) --hi;
    s[j - 1] = hi;
    index -= c(hi, j);
    --hi;
  }
  return s;
}

TokenGraph token_graph(const Graph& g, int k, std::uint64_t cap) {
  const int n = static_cast<int>(g.order());
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside [1, n-1] for n=" + std::to_string(n));
  }
  SubsetCodec codec(n, k);
  if (codec.count() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ")=" + std::to_string(codec.count()) +
                    " token vertices exceeds cap " + std::to_string(cap));
  }
  const auto& c = BinomialTable::instance();

  std::vector<Edge> edges;
  edges.reserve(g.size() * c(n - 2, k - 1));
  std::vector<Vertex> rest(n - 2);
  std::vector<Vertex> a(k), b(k);
  for (const auto& e : g.edges()) {
    int w = 0;
    for (int x = 0; x < n; ++x)
      if (x != e.u && x != e.v) rest[w++] = x;
    for_each_subset(n - 2, k - 1, [&](const std::vector<Vertex>& idx) {
      // Merge the mapped (k-1)-subset with u (resp. v), keeping sorted order.
      auto fill = [&](std::vector<Vertex>& out, Vertex extra) {
        int pos = 0;
        bool placed = false;
        for (Vertex i : idx) {
          const Vertex x = rest[i];
          if (!placed && extra < x) {
            out[pos++] = extra;
            placed = true;
          }
          out[pos++] = x;
        }
        if (!placed) out[pos++] = extra;
      };
      fill(a, e.u);
      fill(b, e.v);
      edges.push_back(make_edge(static_cast<Vertex>(codec.rank(a)), static_cast<Vertex>(codec.rank(b))));
    });
  }
  return TokenGraph{g, k, Graph(codec.count(), std::move(edges)), codec};
}

std::vector<double> binomial_lift(const SubsetCodec& codec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != codec.n()) {
    throw Error(ErrorCode::LengthMismatch, "lift input has length " + std::to_string(x.size()) + ", expected n");
  }
  std::vector<double> out;
  out.reserve(codec.count());
  for_each_subset(codec.n(), codec.k(), [&](const std::vector<Vertex>& s) {
    double sum = 0.0;
    for (Vertex j : s) sum += x[j];
    out.push_back(sum);
  });
  return out;
}

std::vector<double> binomial_project(const SubsetCodec& codec, std::span<const double> w) {
  if (w.size() != codec.count()) {
    throw Error(ErrorCode::LengthMismatch, "projection input has length " + std::to_string(w.size()) + ", expected C(n,k)");
  }
  std::vector<double> out(codec.n(), 0.0);
  std::size_t idx = 0;
  for_each_subset(codec.n(), codec.k(), [&](const std::vector<Vertex>& s) {
    for (Vertex j : s) out[j] += w[idx];
    ++idx;
  });
  return out;
}

std::vector<std::uint64_t> subsets_containing(const SubsetCodec& codec, Vertex v) {
  std::vector<std::uint64_t> out;
  std::uint64_t idx = 0;
  for_each_subset(codec.n(), codec.k(), [&](const std::vector<Vertex>& s) {
    if (std::find(s.begin(), s.end(), v) != s.end()) out.push_back(idx);
    ++idx;
  });
  return out;
}

std::vector<std::uint64_t> subsets_avoiding(const SubsetCodec& codec, Vertex v) {
  std::vector<std::uint64_t> out;
  std::uint64_t idx = 0;
  for_each_subset(codec.n(), codec.k(), [&](const std::vector<Vertex>& s) {
    if (std::find(s.begin(), s.end(), v) == s.end()) out.push_back(idx);
    ++idx;
  });
  return out;
}

}  // namespace token_spectra
