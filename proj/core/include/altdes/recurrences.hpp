#pragma once

#include <map>
#include <optional>
#include <vector>

#include "altdes/bi_poly.hpp"
#include "altdes/int_poly.hpp"
#include "altdes/trunc_series.hpp"

namespace altdes {

// Alternating Eulerian polynomials -------------------------------------------

/// Five-term recurrence for the coefficients of A^_n(t), seeded with A^_1 = 1.
/// Entry k of the result is A^_k(t) for 0 <= k <= n, with A^_0 := 1.
/// Throws ParityViolation if a doubled coefficient comes out odd.
std::vector<IntPoly> five_term_table(int n);
IntPoly five_term(int n);

struct ChebikinReport {
  bool ok = true;
  /// (n, k) of the first failing coefficient.
  std::optional<std::pair<int, int>> failure;
};

/// Checks sum_{i,j} C(n,i) A^_{i,j} A^_{n-i,k-j} = (n+1-k) A^_{n,k} + (k+1) A^_{n,k+1}
/// for 0 <= k <= n-1, using five_term values and A^_0 = 1.
ChebikinReport chebikin_check(int n);

/// Quadratic recursion for A^_n(t,q); entry k is A^_k(t,q), entry 0 is 1.
std::vector<BiPolyTQ> quadratic_tq_table(int n);
BiPolyTQ quadratic_tq(int n);

/// A^_m(q^j, q) for 0 <= m <= n and 0 <= j <= max_j, computed by the
/// t = q^j specialization of the quadratic recursion (no bivariate
/// intermediates). Indexed [m][j].
std::vector<std::vector<IntPoly>> specialized_qalt_table(int n, int max_j);

// Simsun and gamma polynomials ----------------------------------------------

enum class SimsunMethod { Derivative, Quadratic };

/// R_0 .. R_n by the chosen recursion.
std::vector<IntPoly> simsun_table(int n, SimsunMethod method);
IntPoly simsun_rec(int n, SimsunMethod method);

/// a_1 .. a_n via a_{n+1} = (n + (n-1)x) a_n - (1+x)(1+2x) a_n'. Entry 0 is unused (= 1).
std::vector<IntPoly> gamma_table(int n);
IntPoly gamma_rec(int n);

// Euler numbers and generating functions --------------------------------------

/// E_0 .. E_n with sec z + tan z = sum E_m z^m / m!, via the boustrophedon
/// (Seidel-Entringer) triangle.
std::vector<Integer> zigzag_numbers(int n);

/// Left side 1 + sum_{n>=1} t A^_n(t) z^n/n! through z^order, from five_term.
TruncSeries egf_lhs(int order);
/// Right side (1-t)/(1 - t(sec w + tan w)), w = (1-t)z, as 1/(1-X) with
/// X = t sum_{m>=1} E_m (1-t)^{m-1} z^m/m!.
TruncSeries egf_rhs(int order);
/// True iff both sides agree through z^order.
bool egf_check(int order);

/// Rational function numerator / prod_k (1 - q^k)^{mult_k}.
class RationalFnQ {
 public:
  RationalFnQ() = default;
  RationalFnQ(IntPoly numerator, std::map<int, int> denominator);

  const IntPoly& numerator() const { return numerator_; }
  const std::map<int, int>& denominator() const { return denominator_; }
  IntPoly denominator_poly() const;
  bool is_zero() const { return numerator_.is_zero(); }

  friend RationalFnQ operator+(const RationalFnQ& a, const RationalFnQ& b);
  friend RationalFnQ operator*(const RationalFnQ& a, const RationalFnQ& b);
  friend RationalFnQ operator*(RationalFnQ a, const Integer& c);
  /// Cross-multiplied comparison; no canonical form is required.
  friend bool operator==(const RationalFnQ& a, const RationalFnQ& b);

  /// Cancels denominator factors (1 - q^k) that divide the numerator.
  void reduce();

 private:
  IntPoly numerator_;
  std::map<int, int> denominator_;
};

/// F^{(m)}(0) for 0 <= m <= n, F(z) = prod_{j>=0} (sec(zq^j) + tan(zq^j)),
/// by the Leibniz form of F' = F * (F'/F).
std::vector<RationalFnQ> altmaj_egf_derivatives(int n);
/// sum_{pi in S_n} q^{altmaj(pi)} as F^{(n)}(0) (q;q)_n. Throws
/// DenominatorNotCleared if the product is not a polynomial.
IntPoly faa_di_bruno_altmaj(int n);

}  // namespace altdes
