#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altdes/bi_poly.hpp"
#include "altdes/int_poly.hpp"
#include "altdes/nc_poly.hpp"
#include "altdes/oracle.hpp"

namespace altdes {

/// a_n(x) from the gamma recursion equals R_{n-1}(x + 1).
bool simsun_relation_check(int n);

struct CdTransform {
  NCPoly phi_hat;   // phi with d -> c^2 - d
  IntPoly alt_poly;  // phi_hat at commuting c = 1 + t, d = 2t
};
CdTransform cd_transform(const NCPoly& phi);

/// Phi(a + b, ab + ba) for a cd-polynomial Phi.
NCPoly cd_to_ab(const NCPoly& phi);
/// Phi(1, 1 + x) at commuting letters, for the cd-index Phi (not Phi-hat);
/// its x^k coefficient is a(n, k). Equals Phi-hat(1, -x).
IntPoly cd_gamma_polynomial(const NCPoly& phi);

/// q-gamma expansion
///   A^_n(t,q) = sum_k gamma_k(q) q^{C(k+1,2)} (-t)^k prod_{i=k+1}^{n-1-k} (1 + t q^i).
struct QGammaVector {
  int n = 0;
  std::vector<IntPoly> gammas;
  /// Largest r with (1+q)^r | gamma_k.
  std::vector<int> one_plus_q_orders;
  std::vector<bool> nonnegative;

  BiPolyTQ reconstruct() const;
  /// Both conjectured properties hold for every k.
  bool verdicts_pass() const;
};

/// Triangular peel by ascending t-degree. Throws ExpansionFailed when a
/// q-power division is inexact or the residual does not vanish.
QGammaVector q_gamma_extract(const BiPolyTQ& p, int n);

/// Two-sided expansion
///   A~_n(s,t) = sum gamma_{i,j} (-st)^i (1+st)^j (s+t)^{n-1-j-2i}.
/// Keys are (i, j); only nonzero entries are stored.
struct TwoSidedGamma {
  int n = 0;
  std::map<std::pair<int, int>, Integer> entries;

  const Integer& at(int i, int j) const;
  BiPolyTQ reconstruct() const;
  bool all_nonnegative() const;
};

/// Rewrites a slot-symmetric polynomial in p = s+t, e = st and peels each
/// p-power in the basis (-e)^i (1+e)^{n-1-r-2i}. Throws ExpansionFailed on a
/// non-symmetric input or a nonzero residual.
TwoSidedGamma two_sided_extract(const BiPolyTQ& a, int n);

/// Number of down-up Simsun permutations of even length n2.
Integer down_up_simsun_count(int n2, const OracleConfig& cfg = {});

}  // namespace altdes
