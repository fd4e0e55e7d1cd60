#pragma once

// Helpers shared by the verify translation units.

#include <algorithm>
#include <cmath>
#include <vector>

#include "token_spectra/error.hpp"
#include "token_spectra/verify.hpp"

namespace token_spectra::detail {

inline void poll(const CheckOptions& opts) {
  if (opts.stop.stop_requested()) throw Error(ErrorCode::Cancelled, "check cancelled");
}

inline double alpha_of(const Graph& g, const CheckOptions& opts) {
  poll(opts);
  return algebraic_connectivity(g, opts.spectral).value;
}

inline double alpha_tolerance(double reference, const CheckOptions& opts) {
  return opts.alpha_rel * std::max(1.0, std::abs(reference));
}

inline bool alpha_equal(double a, double b, const CheckOptions& opts) {
  return std::abs(a - b) <= alpha_tolerance(b, opts);
}

inline double value_tolerance(double lambda, const CheckOptions& opts) {
  return opts.value_tol * std::max(1.0, std::abs(lambda));
}

inline nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline nlohmann::json edges_json(std::span<const Edge> edges) {
  auto out = nlohmann::json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside graph");
  }
}

// Whether some value of `pool` lies within the value tolerance of `x`.
inline bool has_value_near(const std::vector<double>& pool, double x, const CheckOptions& opts) {
  const double tol = value_tolerance(x, opts);
  auto it = std::lower_bound(pool.begin(), pool.end(), x - tol);
  return it != pool.end() && *it <= x + tol;
}

}  // namespace token_spectra::detail
