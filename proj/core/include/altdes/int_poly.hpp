#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace altdes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient i multiplies x^i. The stored sequence never ends in a zero, so
/// the zero polynomial is the empty sequence and structural equality is
/// polynomial equality.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Integer> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  /// 1 + x^m
  static IntPoly one_plus_power(std::size_t m);
  /// 1 - x^m
  static IntPoly one_minus_power(std::size_t m);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Adds c * x^e in place.
  void add_term(const Integer& c, std::size_t e);
  /// Multiplies by x^k.
  IntPoly shifted(std::size_t k) const;
  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;
  /// f(x + a), computed exactly.
  IntPoly shift_argument(const Integer& a) const;
  /// x^deg f(1/x).
  IntPoly reversed() const;
  Integer evaluate(const Integer& x) const;
  Integer sum_of_coefficients() const;
  bool all_nonnegative() const;

  /// Ascending powers, e.g. "16 + 26t + 36t^2".
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Returns h with f = g*h over the integers; throws NotDivisible otherwise.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);
/// Same as exact_div but reports failure as nullopt.
std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g);

/// (q;q)_n = prod_{i=1}^n (1 - q^i).
IntPoly q_pochhammer(int n);
/// [n]_q! = prod_{j=1}^n (1 + q + ... + q^{j-1}).
IntPoly q_factorial(int n);

namespace detail {
struct Term {
  Integer coeff;
  std::string monomial;  // empty for the constant term
};
/// Joins signed terms as "a + bx - cx^2"; "0" when empty.
std::string format_terms(std::span<const Term> terms);
/// "x", "x^3", or "" for exponent zero.
std::string power_string(std::string_view var, std::size_t e);
}  // namespace detail

}  // namespace altdes
