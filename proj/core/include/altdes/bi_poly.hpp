#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "altdes/int_poly.hpp"

namespace altdes {

/// Bivariate integer polynomial in (t, q).
///
/// Stored as one dense q-polynomial per t-exponent. Rows are IntPoly values,
/// so zero coefficients are never part of a row's tail and trailing zero rows
/// are trimmed. The same type carries the two-sided polynomial in (s, t) with
/// s in the t-slot and t in the q-slot.
class BiPolyTQ {
 public:
  struct Term {
    std::size_t t_exp;
    std::size_t q_exp;
    Integer coeff;
  };

  BiPolyTQ() = default;
  explicit BiPolyTQ(std::vector<IntPoly> rows);
  static BiPolyTQ from_terms(const std::vector<Term>& terms);
  static BiPolyTQ constant(const Integer& c);
  static BiPolyTQ monomial(const Integer& c, std::size_t t_exp, std::size_t q_exp);

  bool is_zero() const { return rows_.empty(); }
  /// Largest t-exponent, -1 for zero.
  long t_degree() const { return static_cast<long>(rows_.size()) - 1; }
  long q_degree() const;
  const std::vector<IntPoly>& rows() const { return rows_; }
  /// Coefficient of t^k as a polynomial in q.
  const IntPoly& row(std::size_t k) const;
  const Integer& coeff(std::size_t t_exp, std::size_t q_exp) const;
  std::size_t term_count() const;
  /// Terms ordered by t-exponent, then q-exponent.
  std::vector<Term> terms() const;

  void add_term(const Integer& c, std::size_t t_exp, std::size_t q_exp);
  /// Adds p(q) * t^k in place.
  void add_row(std::size_t k, const IntPoly& p);

  BiPolyTQ& operator+=(const BiPolyTQ& o);
  BiPolyTQ& operator-=(const BiPolyTQ& o);
  BiPolyTQ& operator*=(const Integer& c);
  friend BiPolyTQ operator+(BiPolyTQ a, const BiPolyTQ& b) { return a += b; }
  friend BiPolyTQ operator-(BiPolyTQ a, const BiPolyTQ& b) { return a -= b; }
  friend BiPolyTQ operator*(BiPolyTQ a, const Integer& c) { return a *= c; }
  friend BiPolyTQ operator*(const BiPolyTQ& a, const BiPolyTQ& b);
  friend bool operator==(const BiPolyTQ& a, const BiPolyTQ& b) { return a.rows_ == b.rows_; }

  /// P(t, 1) as a polynomial in t.
  IntPoly at_q_one() const;
  /// P(1, q) as a polynomial in q.
  IntPoly at_t_one() const;
  /// P(q^j, q) as a polynomial in q.
  IntPoly at_t_power(std::size_t j) const;
  /// Exchanges the roles of the two variables.
  BiPolyTQ swapped() const;

  /// Ascending in t then q, e.g. "2 + tq + tq^2 + 2t^2q^3".
  std::string to_string(std::string_view t_var = "t", std::string_view q_var = "q") const;

 private:
  void normalize();
  std::vector<IntPoly> rows_;
};

/// The substitution t -> t q^j: entry (k, m) moves to (k, m + k j).
BiPolyTQ substitute_tq(const BiPolyTQ& p, std::size_t j);

}  // namespace altdes
