#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "altdes/int_poly.hpp"

namespace altdes {

/// Polynomial in t with rational coefficients: numerator / denominator,
/// denominator positive and coprime to the numerator's content.
struct RatPoly {
  IntPoly numerator;
  Integer denominator{1};

  RatPoly() = default;
  RatPoly(IntPoly num, Integer den = 1);

  bool is_zero() const { return numerator.is_zero(); }
  std::string to_string(std::string_view var = "t") const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;
};

/// Truncated power series sum_{n<=N} c_n(t) z^n with exact rational c_n(t).
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::size_t order, std::vector<RatPoly> coeffs);

  std::size_t order() const { return order_; }
  const RatPoly& coeff(std::size_t n) const { return coeffs_.at(n); }
  void set_coeff(std::size_t n, RatPoly c) { coeffs_.at(n) = std::move(c); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  /// 1/(1 - X) = sum_k X^k for X with zero constant term.
  static TruncSeries geometric(const TruncSeries& x);

 private:
  std::size_t order_;
  std::vector<RatPoly> coeffs_;
};

}  // namespace altdes
