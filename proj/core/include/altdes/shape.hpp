#pragma once

#include <optional>
#include <vector>

#include "altdes/int_poly.hpp"

namespace altdes {

struct ShapeReport {
  /// Present iff the coefficient sequence reads the same reversed; the
  /// center is degree/2.
  std::optional<Rational> palindromic_center;
  bool unimodal = false;
  bool log_concave = false;
};

/// Unimodality is judged over exponents 0..degree with absent coefficients
/// read as 0; log-concavity checks h_i^2 >= h_{i-1} h_{i+1} for 0 < i < degree.
ShapeReport shape_predicates(const IntPoly& f);

/// Expansion of a palindromic polynomial of center (n-1)/2 in the basis
/// (-2t)^k (1+t)^{n-1-2k}, 0 <= k <= floor((n-1)/2).
struct GammaVector {
  int n = 0;
  std::vector<Integer> gammas;

  IntPoly reconstruct() const;
  /// sum_k gammas[k] x^k
  IntPoly as_polynomial() const { return IntPoly(gammas); }
};

/// Peels f by ascending t-degree. Throws NotPalindromic when f is not
/// palindromic about (n-1)/2 (or has degree >= n) and NonIntegralGamma when a
/// peeled coefficient is not divisible by (-2)^k.
GammaVector gamma_expand(const IntPoly& f, int n);

}  // namespace altdes
