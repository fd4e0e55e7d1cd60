#include "token_spectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "token_spectra/error.hpp"

namespace token_spectra {

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidParameter, "matrix is not square");
  if (m != m.transpose()) throw Error(ErrorCode::InvalidParameter, "matrix is not symmetric");
  SymMatrix out;
  out.m_ = m;
  return out;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw Error(ErrorCode::InvalidParameter, "ragged rows");
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return from_dense(m);
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

void SymMatrix::add(std::size_t i, std::size_t j, double delta) {
  m_(i, j) += delta;
  if (i != j) m_(j, i) += delta;
}

bool SymMatrix::is_integral() const {
  for (Eigen::Index i = 0; i < m_.size(); ++i) {
    const double x = m_.data()[i];
    if (!std::isfinite(x) || std::trunc(x) != x || std::abs(x) > 9.0e15) return false;
  }
  return true;
}

IntMatrix SymMatrix::to_integer() const {
  if (!is_integral()) throw Error(ErrorCode::NonIntegerInput, "matrix has non-integer entries");
  return m_.cast<long long>();
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix l(g.order());
  for (const auto& e : g.edges()) {
    l.add(e.u, e.u, 1.0);
    l.add(e.v, e.v, 1.0);
    l.add(e.u, e.v, -1.0);
  }
  return l;
}

SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> keep) {
  std::vector<int> idx(keep.begin(), keep.end());
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= m.order()) {
      throw Error(ErrorCode::OutOfRange, "index " + std::to_string(i) + " outside matrix of order " + std::to_string(m.order()));
    }
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
  return SymMatrix::from_dense(sub);
}

SymMatrix principal_submatrix_without(const SymMatrix& m, std::span<const int> drop) {
  std::vector<char> gone(m.order(), 0);
  for (int i : drop) {
    if (i < 0 || static_cast<std::size_t>(i) >= m.order()) throw Error(ErrorCode::OutOfRange, "index outside matrix");
    gone[i] = 1;
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < m.order(); ++i)
    if (!gone[i]) keep.push_back(static_cast<int>(i));
  return principal_submatrix(m, keep);
}

const Eigenspace& Spectrum::group_of(std::size_t i) const {
  for (const auto& g : groups)
    if (i >= g.first && i < g.first + g.multiplicity) return g;
  throw Error(ErrorCode::OutOfRange, "eigenvalue index " + std::to_string(i) + " outside spectrum");
}

std::vector<double> Spectrum::distinct_values() const {
  std::vector<double> out;
  for (const auto& g : groups) out.push_back(g.value);
  return out;
}

void to_json(nlohmann::json& j, const Spectrum& s) {
  j = nlohmann::json::object();
  j["values"] = s.values;
  auto groups = nlohmann::json::array();
  for (const auto& g : s.groups) groups.push_back({{"value", g.value}, {"mult", g.multiplicity}});
  j["groups"] = groups;
  j["tolerances"] = {{"resid", s.tolerances.resid}, {"group", s.tolerances.group}, {"ortho", s.tolerances.ortho}};
}

void normalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-10) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

Spectrum eig_sym(const SymMatrix& m, const SpectralTolerances& tol) {
  const auto n = static_cast<Eigen::Index>(m.order());
  if (!m.dense().allFinite()) throw Error(ErrorCode::InvalidParameter, "matrix has non-finite entries");
  Spectrum out;
  out.tolerances = tol;
  if (n == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "symmetric eigensolver did not converge");
  const Eigen::VectorXd& vals = solver.eigenvalues();
  Eigen::MatrixXd vecs = solver.eigenvectors();

  const double lmax = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
  const double resid_scale = tol.resid * std::max(1.0, vals(n - 1));
  for (Eigen::Index c = 0; c < n; ++c) {
    normalize_sign(vecs.col(c));
    const double r = (m.dense() * vecs.col(c) - vals(c) * vecs.col(c)).norm();
    if (r > resid_scale) {
      throw Error(ErrorCode::NoConvergence, "residual " + std::to_string(r) + " above tolerance for eigenvalue " + std::to_string(c));
    }
  }
  const double ortho_err = (vecs.transpose() * vecs - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho_err > tol.ortho) throw Error(ErrorCode::NoConvergence, "eigenvectors lost orthogonality");

  out.values.assign(vals.data(), vals.data() + n);
  const double gap = tol.group * std::max(1.0, lmax);
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || vals(i) - vals(i - 1) > gap) {
      Eigenspace g;
      g.first = static_cast<std::size_t>(start);
      g.multiplicity = static_cast<std::size_t>(i - start);
      g.value = vals.segment(start, i - start).mean();
      g.basis = vecs.middleCols(start, i - start);
      out.groups.push_back(std::move(g));
      start = i;
    }
  }
  return out;
}

std::vector<double> eigenvalues(const SymMatrix& m) {
  if (m.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "symmetric eigensolver did not converge");
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

double smallest_eigenvalue(const SymMatrix& m) {
  if (m.order() == 0) return std::numeric_limits<double>::infinity();
  return eigenvalues(m).front();
}

FiedlerSpace algebraic_connectivity(const Graph& g, const SpectralTolerances& tol) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "algebraic connectivity needs n >= 2");
  const Spectrum s = eig_sym(laplacian(g), tol);
  const Eigenspace& grp = s.group_of(1);
  // A group reaching index 0 is the kernel: the graph is disconnected.
  return FiedlerSpace{grp.first == 0 ? 0.0 : grp.value, grp.basis};
}

double rayleigh(const SymMatrix& m, std::span<const double> x) {
  if (x.size() != m.order()) throw Error(ErrorCode::LengthMismatch, "vector length differs from matrix order");
  Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  const double xx = v.squaredNorm();
  if (xx == 0.0) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");
  return v.dot(m.dense() * v) / xx;
}

double laplacian_rayleigh(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) throw Error(ErrorCode::LengthMismatch, "vector length differs from graph order");
  double num = 0.0, den = 0.0;
  for (const auto& e : g.edges()) num += (x[e.u] - x[e.v]) * (x[e.u] - x[e.v]);
  for (double xi : x) den += xi * xi;
  if (den == 0.0) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");
  return num / den;
}

double theta(int r, int k) {
  if (r < 1 || k < 1 || k > r) {
    throw Error(ErrorCode::OutOfRange, "theta needs 1 <= k <= r, got r=" + std::to_string(r) + " k=" + std::to_string(k));
  }
  return 2.0 + 2.0 * std::cos(2.0 * k * std::numbers::pi / (2.0 * r + 1.0));
}

EqualPairResult eigenspace_has_equal_pair(const Eigen::MatrixXd& basis,
                                          std::span<const std::pair<Vertex, Vertex>> pairs, double tol) {
  EqualPairResult out;
  const Eigen::Index d = basis.cols();
  if (d == 0) return out;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= basis.rows() || v >= basis.rows()) throw Error(ErrorCode::OutOfRange, "pair vertex outside basis rows");
  }
  Eigen::VectorXd coeffs;
  if (pairs.empty()) {
    coeffs = Eigen::VectorXd::Unit(d, 0);
  } else {
    const auto p = static_cast<Eigen::Index>(pairs.size());
    Eigen::MatrixXd c(p, d);
    for (Eigen::Index i = 0; i < p; ++i) c.row(i) = basis.row(pairs[i].first) - basis.row(pairs[i].second);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > tol ? 1 : 0;
    out.smallest_singular = sv.size() < d ? 0.0 : sv(sv.size() - 1);
    if (rank >= d) return out;
    coeffs = svd.matrixV().col(d - 1);
  }
  out.found = true;
  out.witness = basis * coeffs;
  out.witness.normalize();
  normalize_sign(out.witness);
  return out;
}

}  // namespace token_spectra
