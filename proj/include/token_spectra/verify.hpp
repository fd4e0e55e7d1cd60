#pragma once

#include <cstdint>
#include <span>
#include <stop_token>

#include "json.hpp"
#include "token_spectra/certificate.hpp"
#include "token_spectra/families.hpp"
#include "token_spectra/spectra.hpp"
#include "token_spectra/token.hpp"

namespace token_spectra {

struct CheckOptions {
  SpectralTolerances spectral;
  double alpha_rel = 1e-7;   // alpha equality: |a - b| <= alpha_rel * max(1, |a|)
  double pair_tol = 1e-6;    // singular-value threshold of the equal-pair rank test
  double value_tol = 1e-7;   // eigenvalue matching, relative to max(1, |lambda|)
  std::uint64_t cap = kDefaultTokenCap;
  std::stop_token stop;
};

nlohmann::json tolerances_json(const CheckOptions& opts);

enum class ContainmentMode { Exact, Float };

// spec(g) inside spec(F_k(g)). Exact mode divides characteristic polynomials.
Certificate check_spectral_containment(const Graph& g, int k, ContainmentMode mode, const CheckOptions& opts = {});

// alpha(F_k(g)) == alpha(g).
Certificate check_alpha_token_equality(const Graph& g, int k, const CheckOptions& opts = {});

// Both sides of: alpha(g + uv) == alpha(g) iff some Fiedler vector has x_u == x_v.
// Passes when the two sides agree. Throws edge-exists.
Certificate check_edge_add_alpha_iff(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts = {});

// Adding edges inside tail levels keeps alpha unless alpha(G) == theta_r.
// Throws malformed-edge-set unless each edge joins two tail vertices of one depth.
Certificate check_shao_pendant(const Kite& kite, std::span<const Edge> added, const CheckOptions& opts = {});

// alpha(G) == theta_r iff lambda_1(L(H) without the root) >= theta_r.
Certificate check_kite_alpha_iff(const KiteSpec& spec, const CheckOptions& opts = {});

// Level-averaging matrix of a kite, scaled by (s - 1) so every entry is an integer.
SymMatrix build_kite_symmetrizer(const KiteSpec& spec);

// Exact L (s-1)S == (s-1)S L, plus per eigenvalue group: S keeps the eigenspace
// and some image is nonzero with equal coordinates on each U_j.
Certificate check_symmetrizer_commutation(const KiteSpec& spec, const CheckOptions& opts = {});

// Every distinct eigenvalue of the kite survives adding edges inside the U_j
// sets, and alpha is unchanged. Throws malformed-edge-set for other edges.
Certificate check_kite_persistence(const KiteSpec& spec, std::span<const Edge> added, const CheckOptions& opts = {});

// K_r joined to the components, minus `removed_join_edges`. Full join: alpha(G)
// and alpha(F_k(G)) both equal r. Otherwise only alpha(G) <= r is asserted and
// the gap is recorded.
Certificate check_cut_clique(int r, std::span<const Graph> components, std::span<const Edge> removed_join_edges, int k,
                             const CheckOptions& opts = {});

// H = g plus a pendant vertex on vertex 0:
// alpha(F_k(H)) <= min(alpha(F_{k-1}(g)), alpha(F_k(g))) + 1, for 2 <= k <= |H| / 2.
Certificate check_pendant_bound(const Graph& g, int k, const CheckOptions& opts = {});

// lambda_i(g) <= lambda_i(g + uv) <= lambda_{i+1}(g). Throws edge-exists.
Certificate check_interlacing(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts = {});

// alpha of K+_{n1,n2} is n1 and of K*_{n1,n2} (Y completed) is n2, for G and F_k(G).
Certificate check_bipartite_extension(int n1, int n2, const BipartiteMode& mode, int k, const CheckOptions& opts = {});

struct KiteCorollaryParams {
  enum class Variant { CycleHead, BipartiteHead };
  Variant variant = Variant::CycleHead;
  int h = 0;                 // cycle order (cycle head)
  int h1 = 0, h2 = 0;        // part sizes (bipartite head)
  int root_side = 1;         // part holding the root (bipartite head)
  int paths = 2;             // s
  int length = 1;            // r
  std::vector<Edge> head_edges;  // added inside the head
  std::vector<Edge> tail_edges;  // added inside the U_j sets
  int k = 2;
};

// Kite with a cycle or complete bipartite head, perturbed, then
// alpha(G+) == alpha(F_k(G+)). Hypothesis violations give precondition_unmet.
Certificate check_kite_corollaries(const KiteCorollaryParams& params, const CheckOptions& opts = {});

// Components of g - cut_vertex and their principal-submatrix lambda_1. Equal
// smallest pair: alpha(g) equals it. Otherwise precondition_unmet, with the
// bound alpha(g) < second smallest still asserted.
Certificate check_suffcondition(const Graph& g, Vertex cut_vertex, const CheckOptions& opts = {});

// An eigenvector with x_u == x_v keeps its eigenvalue in g with uv toggled.
Certificate check_merris(const Graph& g, Vertex u, Vertex v, const CheckOptions& opts = {});

// Eigenvectors w of F_k(g) with B^T w = 0 restrict to zero-sum vectors on the
// subsets containing / avoiding each vertex.
Certificate check_embedding(const Graph& g, int k, const CheckOptions& opts = {});

// theta(r, r) against lambda_1 of L(P_{r+1}) without its first vertex.
Certificate check_theta_table(int r, const CheckOptions& opts = {});

}  // namespace token_spectra
