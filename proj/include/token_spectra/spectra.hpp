#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "token_spectra/graph.hpp"

namespace token_spectra {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense real symmetric matrix. Symmetry is structural: every write updates
/// both (i, j) and (j, i), so it is exact rather than measured.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : m_(Eigen::MatrixXd::Zero(order, order)) {}

  // Throws invalid-parameter unless m is square and exactly symmetric.
  static SymMatrix from_dense(const Eigen::MatrixXd& m);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double delta);

  const Eigen::MatrixXd& dense() const noexcept { return m_; }

  bool is_integral() const;
  // Throws non-integer-input if any entry is not an integer.
  IntMatrix to_integer() const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

 private:
  Eigen::MatrixXd m_;
};

SymMatrix laplacian(const Graph& g);

// Rows/columns in `keep` (ascending index order, duplicates ignored).
SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> keep);
// Principal submatrix with the given indices removed.
SymMatrix principal_submatrix_without(const SymMatrix& m, std::span<const int> drop);

struct SpectralTolerances {
  double resid = 1e-9;  // relative to max(1, lambda_max)
  double group = 1e-8;  // relative to max(1, ||m||)
  double ortho = 1e-9;
};

struct Eigenspace {
  double value = 0.0;           // mean of the grouped eigenvalues
  std::size_t first = 0;        // index of the first grouped eigenvalue
  std::size_t multiplicity = 0;
  Eigen::MatrixXd basis;        // order x multiplicity, orthonormal columns
};

struct Spectrum {
  std::vector<double> values;  // ascending
  std::vector<Eigenspace> groups;
  SpectralTolerances tolerances;

  // Group holding eigenvalue index i.
  const Eigenspace& group_of(std::size_t i) const;
  std::vector<double> distinct_values() const;
};

void to_json(nlohmann::json& j, const Spectrum& s);

// Full decomposition. Eigenvalues whose consecutive gap is at most
// group * max(1, ||m||) share a group. Each basis vector is sign-normalized so
// its first nonnegligible coordinate is positive.
Spectrum eig_sym(const SymMatrix& m, const SpectralTolerances& tol = {});

// Eigenvalues only (ascending). Empty matrix gives an empty list.
std::vector<double> eigenvalues(const SymMatrix& m);

// lambda_1 of m; +infinity for the empty matrix.
double smallest_eigenvalue(const SymMatrix& m);

struct FiedlerSpace {
  double value = 0.0;
  Eigen::MatrixXd basis;  // orthonormal basis of the whole alpha-eigenspace
};

// alpha(g) with its full eigenspace; 0 for disconnected graphs.
FiedlerSpace algebraic_connectivity(const Graph& g, const SpectralTolerances& tol = {});

double rayleigh(const SymMatrix& m, std::span<const double> x);
// sum over edges (x_u - x_v)^2 / x^T x.
double laplacian_rayleigh(const Graph& g, std::span<const double> x);

// 2 + 2 cos(2 k pi / (2 r + 1)), the eigenvalues of the pendant-path block.
double theta(int r, int k);

struct EqualPairResult {
  bool found = false;
  Eigen::VectorXd witness;       // unit vector in span(basis), empty when !found
  double smallest_singular = 0;  // of the constraint matrix restricted to the basis
};

// Whether span(basis) holds a nonzero x with x_u = x_v for every pair.
// Decided by rank of the pair-difference rows restricted to the basis:
// singular values <= tol count as zero.
EqualPairResult eigenspace_has_equal_pair(const Eigen::MatrixXd& basis,
                                          std::span<const std::pair<Vertex, Vertex>> pairs, double tol = 1e-6);

// Flips v so its first coordinate with |x| > 1e-10 is positive.
void normalize_sign(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace token_spectra
