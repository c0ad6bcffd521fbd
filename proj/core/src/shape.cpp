#include "altdes/shape.hpp"

#include <stdexcept>
#include <string>

#include "altdes/errors.hpp"

namespace altdes {

ShapeReport shape_predicates(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("shape_predicates needs a nonzero polynomial");
  ShapeReport r;
  const auto cs = f.coeffs();
  const std::size_t d = cs.size() - 1;

  bool palindromic = true;
  for (std::size_t i = 0; i <= d / 2; ++i) {
    if (cs[i] != cs[d - i]) {
      palindromic = false;
      break;
    }
  }
  if (palindromic) r.palindromic_center = Rational(static_cast<long>(d), 2);

  // Walk up while nondecreasing, then require nonincreasing to the end.
  std::size_t i = 0;
  while (i < d && cs[i] <= cs[i + 1]) ++i;
  while (i < d && cs[i] >= cs[i + 1]) ++i;
  r.unimodal = (i == d);

  r.log_concave = true;
  for (std::size_t k = 1; k + 1 <= d; ++k) {
    if (cs[k] * cs[k] < cs[k - 1] * cs[k + 1]) {
      r.log_concave = false;
      break;
    }
  }
  return r;
}

IntPoly GammaVector::reconstruct() const {
  IntPoly out;
  const IntPoly minus_two_t{0, -2};
  const IntPoly one_plus_t{1, 1};
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const auto ku = static_cast<unsigned>(k);
    out += gammas[k] * (minus_two_t.pow(ku) * one_plus_t.pow(static_cast<unsigned>(n - 1) - 2 * ku));
  }
  return out;
}

GammaVector gamma_expand(const IntPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("gamma_expand needs n >= 1");
  const auto top = static_cast<std::size_t>(n - 1);
  if (f.degree() > static_cast<long>(top)) {
    throw NotPalindromic("degree " + std::to_string(f.degree()) + " exceeds n-1 = " + std::to_string(top));
  }
  for (std::size_t i = 0; i <= top; ++i) {
    if (f[i] != f[top - i]) throw NotPalindromic("coefficients of t^" + std::to_string(i) + " and t^" +
                                                 std::to_string(top - i) + " differ");
  }

  GammaVector g;
  g.n = n;
  IntPoly residual = f;
  const IntPoly one_plus_t{1, 1};
  for (std::size_t k = 0; 2 * k <= top; ++k) {
    const Integer lead = residual[k];
    residual -= (lead * one_plus_t.pow(static_cast<unsigned>(top - 2 * k))).shifted(k);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    if (k % 2 == 1) scale = -scale;
    if (!mpz_divisible_p(lead.get_mpz_t(), scale.get_mpz_t())) {
      throw NonIntegralGamma("coefficient " + lead.get_str() + " at k=" + std::to_string(k) +
                             " is not divisible by " + scale.get_str());
    }
    Integer a;
    mpz_divexact(a.get_mpz_t(), lead.get_mpz_t(), scale.get_mpz_t());
    g.gammas.push_back(std::move(a));
  }
  if (!residual.is_zero()) throw NotPalindromic("nonzero residual after peel: " + residual.to_string("t"));
  return g;
}

}  // namespace altdes
