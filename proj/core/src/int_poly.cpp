#include "altdes/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "altdes/errors.hpp"

namespace altdes {

namespace {
const Integer kZero{0};
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Integer& c) { return monomial(c, 0); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(exponent + 1, Integer{0});
    p.coeffs_[exponent] = c;
  }
  return p;
}

IntPoly IntPoly::one_plus_power(std::size_t m) {
  IntPoly p = monomial(1, m);
  p.add_term(1, 0);
  return p;
}

IntPoly IntPoly::one_minus_power(std::size_t m) {
  IntPoly p = monomial(-1, m);
  p.add_term(1, 0);
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void IntPoly::add_term(const Integer& c, std::size_t e) {
  if (c == 0) return;
  if (coeffs_.size() <= e) coeffs_.resize(e + 1);
  coeffs_[e] += c;
  normalize();
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.resize(k);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shift_argument(const Integer& a) const {
  // Horner in the shifted variable: f(x+a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...).
  IntPoly result;
  const IntPoly lin{a, 1};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= lin;
    result.add_term(*it, 0);
  }
  return result;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(out));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool IntPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

std::string IntPoly::to_string(std::string_view var) const {
  std::vector<detail::Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.push_back({coeffs_[i], detail::power_string(var, i)});
  }
  return detail::format_terms(terms);
}

std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gd = static_cast<std::size_t>(g.degree());
  const Integer& lead = g.leading();
  std::vector<Integer> quot(rem.size() - gd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + gd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= gd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
    }
    quot[k] = std::move(c);
  }
  for (std::size_t i = 0; i < gd; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw NotDivisible("division by the zero polynomial");
  auto q = try_exact_div(f, g);
  if (!q) throw NotDivisible("(" + f.to_string() + ") is not divisible by (" + g.to_string() + ")");
  return *std::move(q);
}

IntPoly q_pochhammer(int n) {
  IntPoly r = IntPoly::constant(1);
  for (int i = 1; i <= n; ++i) r *= IntPoly::one_minus_power(static_cast<std::size_t>(i));
  return r;
}

IntPoly q_factorial(int n) {
  IntPoly r = IntPoly::constant(1);
  for (int j = 1; j <= n; ++j) {
    r *= IntPoly(std::vector<Integer>(static_cast<std::size_t>(j), Integer{1}));
  }
  return r;
}

namespace detail {

std::string power_string(std::string_view var, std::size_t e) {
  if (e == 0) return {};
  std::string s(var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string format_terms(std::span<const Term> terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mono.empty() || mag != 1) os << mag.get_str();
    os << mono;
    first = false;
  }
  return os.str();
}

}  // namespace detail

}  // namespace altdes
