#include "token_spectra/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "token_spectra/error.hpp"
#include "token_spectra/families.hpp"

namespace token_spectra {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long x : ascending) c_.emplace_back(x);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::from_roots(std::span<const std::pair<long long, int>> roots) {
  IntPoly out = constant(1);
  for (const auto& [value, mult] : roots) {
    if (mult < 0) throw Error(ErrorCode::InvalidParameter, "negative root multiplicity");
    IntPoly factor(std::vector<mpz_class>{mpz_class(std::to_string(-value)), mpz_class(1)});
    out = out * factor.pow(static_cast<unsigned>(mult));
  }
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

mpq_class IntPoly::evaluate(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + mpq_class(*it);
  return acc;
}

int IntPoly::sign_at(const mpq_class& at) const { return sgn(evaluate(at)); }

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  return IntPoly(std::move(c));
}

void to_json(nlohmann::json& j, const IntPoly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
}

void from_json(const nlohmann::json& j, IntPoly& p) {
  std::vector<mpz_class> c;
  for (const auto& s : j) c.emplace_back(s.get<std::string>());
  p = IntPoly(std::move(c));
}

IntPoly char_poly(const SymMatrix& m, std::stop_token stop) {
  const IntMatrix a = m.to_integer();
  const auto n = static_cast<std::size_t>(a.rows());
  if (n == 0) return IntPoly::constant(1);

  // Row-sparse copy of A; Laplacians of token graphs are very sparse.
  std::vector<std::vector<std::pair<std::size_t, long long>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) rows[i].emplace_back(j, a(i, j));

  std::vector<mpz_class> coeffs(n + 1);
  coeffs[n] = 1;

  // mk holds M_k (row-major); M_1 = I.
  std::vector<mpz_class> mk(n * n), prod(n * n);
  for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = 1;

  mpz_class trace, c;
  for (std::size_t k = 1; k <= n; ++k) {
    if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "characteristic polynomial cancelled");
    // prod = A * M_k
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class* out = &prod[i * n];
      for (std::size_t col = 0; col < n; ++col) out[col] = 0;
      for (const auto& [j, v] : rows[i]) {
        const mpz_class* src = &mk[j * n];
        if (v == 1) {
          for (std::size_t col = 0; col < n; ++col) out[col] += src[col];
        } else if (v == -1) {
          for (std::size_t col = 0; col < n; ++col) out[col] -= src[col];
        } else if (v > 0) {
          for (std::size_t col = 0; col < n; ++col) mpz_addmul_ui(out[col].get_mpz_t(), src[col].get_mpz_t(), static_cast<unsigned long>(v));
        } else {
          for (std::size_t col = 0; col < n; ++col) mpz_submul_ui(out[col].get_mpz_t(), src[col].get_mpz_t(), static_cast<unsigned long>(-v));
        }
      }
    }
    trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod[i * n + i];
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("Faddeev-LeVerrier: trace not divisible by " + std::to_string(k));
    }
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
    coeffs[n - k] = c;
    if (k == n) break;
    std::swap(mk, prod);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c;
  }
  return IntPoly(std::move(coeffs));
}

mpz_class exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidParameter, "determinant of a non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return 1;
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  return sign > 0 ? det : mpz_class(-det);
}

DivisionResult poly_divides(const IntPoly& divisor, const IntPoly& dividend) {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroDivisorPolynomial, "division by the zero polynomial");
  DivisionResult out;
  std::vector<mpz_class> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  const mpz_class& lead = d.back();
  if (dividend.degree() < dd) {
    out.divides = dividend.is_zero();
    out.remainder = dividend;
    return out;
  }
  std::vector<mpz_class> quot(dividend.degree() - dd + 1);
  for (int i = dividend.degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) {
      out.quotient = IntPoly(std::move(quot));
      out.remainder = IntPoly(std::move(rem));
      return out;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  out.quotient = IntPoly(std::move(quot));
  out.remainder = IntPoly(std::move(rem));
  out.divides = out.remainder.is_zero();
  return out;
}

IntPoly closed_form_gstar_poly(int n1, int n2, int r) {
  if (n1 < 1 || n2 < 1 || r < 1) throw Error(ErrorCode::OutOfRange, "closed form needs n1, n2, r >= 1");
  const long long n = static_cast<long long>(n1) + n2 + r;
  const std::vector<std::pair<long long, int>> roots = {
      {0, 1}, {r, 1}, {static_cast<long long>(r) + n1, n1 - 1}, {static_cast<long long>(r) + n2, n2 - 1}, {n, r}};
  return IntPoly::from_roots(roots);
}

bool cycle_path_identity_check(int h) {
  if (h < 3) throw Error(ErrorCode::OutOfRange, "cycle identity needs h >= 3");
  const int drop[] = {0};
  const IntPoly lhs = IntPoly::x() * char_poly(principal_submatrix_without(laplacian(cycle_graph(h)), drop));
  return lhs == char_poly(laplacian(path_graph(h)));
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trimmed

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly quot(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
  }
  trim(q);
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& at) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    mpq_class v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * at + *it;
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParameter, "root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  QPoly p0, p1;
  for (const auto& c : p.coefficients()) p0.emplace_back(c);
  const IntPoly dp = p.derivative();
  for (const auto& c : dp.coefficients()) p1.emplace_back(c);
  // Square-free part p / gcd(p, p'), so repeated roots cannot vanish the
  // whole sequence at an endpoint.
  QPoly a = p0, b = p1;
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const QPoly sf = quot(p0, a);
  std::vector<QPoly> seq{sf, derivative(sf)};
  while (seq.back().size() > 1) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

bool has_root_near(const IntPoly& p, double x, double eps) {
  const mpq_class lo(x - eps), hi(x + eps);
  if (p.sign_at(lo) == 0) return true;
  return count_real_roots(p, lo, hi) > 0;
}

}  // namespace token_spectra
