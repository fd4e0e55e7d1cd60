#pragma once

#include <cstddef>
#include <span>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "token_spectra/spectra.hpp"

namespace token_spectra {

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
/// Always canonical: no zero leading coefficients; the zero polynomial has
/// no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const mpz_class& c);
  static IntPoly x();
  // prod (x - value)^mult
  static IntPoly from_roots(std::span<const std::pair<long long, int>> roots);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }

  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;
  mpq_class evaluate(const mpq_class& at) const;
  int sign_at(const mpq_class& at) const;

  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// JSON array of decimal strings, ascending degree.
void to_json(nlohmann::json& j, const IntPoly& p);
void from_json(const nlohmann::json& j, IntPoly& p);

// det(xI - m) for an integer matrix, by the Faddeev-LeVerrier recurrence run
// over the integers: M_k = A M_{k-1} + c I, c = -tr(A M_k) / k, with each
// division asserted exact. `stop` is polled once per step.
IntPoly char_poly(const SymMatrix& m, std::stop_token stop = {});

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class exact_determinant(const IntMatrix& m);

struct DivisionResult {
  bool divides = false;
  IntPoly quotient;
  IntPoly remainder;  // nonzero witness when !divides
};

// Long division of `dividend` by `divisor` over the integers. A monic divisor
// keeps every step integral; otherwise a non-divisible leading coefficient
// stops the division and reports the partial remainder.
DivisionResult poly_divides(const IntPoly& divisor, const IntPoly& dividend);

// x (x-r) (x-r-n1)^(n1-1) (x-r-n2)^(n2-1) (x-n)^r with n = n1+n2+r.
IntPoly closed_form_gstar_poly(int n1, int n2, int r);

// x * Phi(L(C_h) without vertex 0) == Phi(L(P_h)), computed exactly.
bool cycle_path_identity_check(int h);

// Number of distinct real roots of p in (lo, hi], by Sturm sequence.
int count_real_roots(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);

// Whether p has a real root within [x - eps, x + eps].
bool has_root_near(const IntPoly& p, double x, double eps);

}  // namespace token_spectra
