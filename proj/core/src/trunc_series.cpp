#include "altdes/trunc_series.hpp"

#include <stdexcept>

namespace altdes {

namespace {

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

}  // namespace

RatPoly::RatPoly(IntPoly num, Integer den) : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator == 0) throw std::invalid_argument("RatPoly with zero denominator");
  if (numerator.is_zero()) {
    denominator = 1;
    return;
  }
  if (denominator < 0) {
    denominator = -denominator;
    numerator = -numerator;
  }
  const Integer g = gcd(content(numerator), denominator);
  if (g != 1) {
    std::vector<Integer> cs(numerator.coeffs().begin(), numerator.coeffs().end());
    for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    numerator = IntPoly(std::move(cs));
    mpz_divexact(denominator.get_mpz_t(), denominator.get_mpz_t(), g.get_mpz_t());
  }
}

std::string RatPoly::to_string(std::string_view var) const {
  std::string s = "(" + numerator.to_string(var) + ")";
  if (denominator != 1) s += "/" + denominator.get_str();
  return s;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  return RatPoly(a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator);
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  return RatPoly(a.numerator * b.denominator - b.numerator * a.denominator, a.denominator * b.denominator);
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  return RatPoly(a.numerator * b.numerator, a.denominator * b.denominator);
}

TruncSeries::TruncSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<RatPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] = coeffs_[n] + o.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] = coeffs_[n] - o.coeffs_[n];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series orders differ");
  TruncSeries out(a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::geometric(const TruncSeries& x) {
  if (!x.coeff(0).is_zero()) throw std::invalid_argument("geometric series needs a zero constant term");
  TruncSeries sum(x.order_);
  sum.coeffs_[0] = RatPoly(IntPoly::constant(1));
  TruncSeries power = sum;
  // X^k vanishes below z^k, so order+1 powers cover the truncation.
  for (std::size_t k = 1; k <= x.order_; ++k) {
    power = power * x;
    sum += power;
  }
  return sum;
}

}  // namespace altdes
