#pragma once

#include <vector>

#include "altdes/finding.hpp"
#include "altdes/int_poly.hpp"
#include "altdes/oracle.hpp"

namespace altdes {

// Cyclotomic products ---------------------------------------------------------

/// Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d. Memoized and thread-safe.
IntPoly cyclotomic(int k);

enum class ProductMethod { Product, Cyclotomic };

/// product: prod_{k >= 1, 2^k <= n} prod_{i=1}^{floor(n/2^k)} (1 + q^i)
/// cyclotomic: prod_{m=1}^{n} Phi_{2m}^{floor(n/2m)}
IntPoly build_Gn(int n, ProductMethod method = ProductMethod::Product);

/// product: prod_{j=0}^{l} (1 + q^{2^j m}) for k = 2^l m, m odd
/// cyclotomic: prod_{m | k} Phi_{2m}
IntPoly build_Ev(int k, ProductMethod method = ProductMethod::Product);

/// Largest r with (1 + q^m)^r | f. Throws std::invalid_argument for f = 0.
int order_of_factor(const IntPoly& f, int m);

/// (1 + q^m) | (1 + q^n), decided by polynomial division.
bool one_plus_divides(int m, int n);
/// The arithmetic side of the same statement: n/m is an odd integer.
bool quotient_is_odd(int m, int n);

// Factorization of A^_n(1,q) -------------------------------------------------

enum class AltMajSource { FaaDiBruno, Quadratic };

struct Factorization {
  int n = 0;
  IntPoly g_n;
  IntPoly e_hat;
  struct Verdicts {
    bool e_hat_palindromic = false;
    bool constant_term_is_euler = false;
  } verdicts;
};

/// A^_n(1,q) from the chosen source.
IntPoly altmaj_polynomial(int n, AltMajSource source);

/// E^_n = A^_n(1,q) / G_n. Throws NotDivisible if G_n does not divide.
Factorization extract_Ehat(int n, AltMajSource source = AltMajSource::FaaDiBruno);

/// E_0 .. E_n read off five_term: E_n is the coefficient of t^{n-1} in A^_n(t).
std::vector<Integer> euler_numbers(int n);

// Divisibility theorems -------------------------------------------------------

struct OrderRow {
  int m = 0;
  int required = 0;
  int order = 0;
};

struct Thm42Report {
  int n = 0;
  std::vector<OrderRow> rows;  // 1 <= m <= floor(n/2)
  Finding finding;
};

/// order_of_factor(A^_n(1,q), m) >= floor(n/2m) for every 1 <= m <= floor(n/2).
Thm42Report check_thm42(int n, AltMajSource source = AltMajSource::Quadratic);

struct ParityCell {
  int n = 0;
  int j = 0;
  int required = 0;
  int order = 0;
};

struct ParityTable {
  std::vector<ParityCell> cells;
  /// Only meaningful for the specialized table.
  bool sources_agree = true;
  Finding finding;
};

/// floor(n/2), or floor((n-1)/2) when n is even and j is odd.
int parity_requirement(int n, int j);

/// (1+q)-orders of A^_n(q^j, q) for 1 <= n <= max_n, 0 <= j <= max_j, with
/// A^_n(q^j, q) taken from substitute_tq(quadratic_tq(n), j).
ParityTable parity_table_substituted(int max_n, int max_j);
/// The same table from the t = q^j specialized recursion. The finding also
/// fails if any entry differs from the substituted polynomial.
ParityTable parity_table_specialized(int max_n, int max_j);

// Binomial criterion -----------------------------------------------------------

/// For all l in Z_m and 0 <= j <= r-1:
///   sum_{v = l mod 2m} C(v, j) = sum_{v = l+m mod 2m} C(v, j),
/// each value v weighted by its multiplicity.
bool binomial_criterion(const StatMultiset& ms, int m, int r);

struct Conj410Row {
  int m = 0;
  int r = 0;
  bool criterion = false;
  /// Divisibility confirmed by order_of_factor whenever the criterion holds.
  bool sound = true;
};

struct Conj410Report {
  int n = 0;
  std::vector<Conj410Row> rows;
  Finding finding;
};

Conj410Report verify_conj410(int n, const OracleConfig& cfg = {});

/// reverse_prefix(., m) is an involution on S_n and shifts altmaj by m mod 2m.
Finding thm411_bijection_check(int n, int m, const OracleConfig& cfg = {});

}  // namespace altdes
