#include "altdes/recurrences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "altdes/errors.hpp"

namespace altdes {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1");
}

Integer halve_checked(const Integer& v, const std::string& where) {
  if (!mpz_even_p(v.get_mpz_t())) throw ParityViolation("odd doubled value " + v.get_str() + " at " + where);
  Integer h;
  mpz_divexact_ui(h.get_mpz_t(), v.get_mpz_t(), 2);
  return h;
}

/// x * t^a q^b
BiPolyTQ shift_tq(const BiPolyTQ& x, std::size_t a, std::size_t b) {
  std::vector<IntPoly> rows(a);
  for (const auto& r : x.rows()) rows.push_back(r.shifted(b));
  return BiPolyTQ(std::move(rows));
}

/// x * (1 + t^a q^b)
BiPolyTQ times_one_plus(const BiPolyTQ& x, std::size_t a, std::size_t b) { return x + shift_tq(x, a, b); }

}  // namespace

// Alternating Eulerian polynomials -------------------------------------------

std::vector<IntPoly> five_term_table(int n) {
  require_positive(n, "five_term");
  std::vector<IntPoly> table{IntPoly::constant(1), IntPoly::constant(1)};
  for (int m = 1; m < n; ++m) {
    const IntPoly& a = table.back();
    auto at = [&a](long k) -> const Integer& {
      static const Integer zero{0};
      return k < 0 ? zero : a[static_cast<std::size_t>(k)];
    };
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) {
      const Integer twice = (k + 1) * (at(k + 1) + at(k - 1)) + (m - k + 1) * (at(k) + at(k - 2));
      next[static_cast<std::size_t>(k)] =
          halve_checked(twice, "n=" + std::to_string(m + 1) + ", k=" + std::to_string(k));
    }
    table.emplace_back(std::move(next));
  }
  table.resize(static_cast<std::size_t>(n) + 1);
  return table;
}

IntPoly five_term(int n) { return five_term_table(n).back(); }

ChebikinReport chebikin_check(int n) {
  require_positive(n, "chebikin_check");
  const auto a = five_term_table(n);
  IntPoly lhs;
  for (int i = 0; i <= n; ++i) lhs += binomial(n, i) * (a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(n - i)]);
  const IntPoly& an = a[static_cast<std::size_t>(n)];
  ChebikinReport report;
  for (int k = 0; k <= n - 1; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Integer rhs = (n + 1 - k) * an[ku] + (k + 1) * an[ku + 1];
    if (lhs[ku] != rhs) {
      report.ok = false;
      report.failure = {n, k};
      break;
    }
  }
  return report;
}

std::vector<BiPolyTQ> quadratic_tq_table(int n) {
  require_positive(n, "quadratic_tq");
  std::vector<BiPolyTQ> table{BiPolyTQ::constant(1), BiPolyTQ::constant(1)};
  for (int m = 1; m < n; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    const BiPolyTQ& cur = table[mu];
    BiPolyTQ twice = times_one_plus(substitute_tq(cur, 1), 1, 1) + times_one_plus(cur, 1, mu);
    for (std::size_t i = 1; i < mu; ++i) {
      BiPolyTQ prod = table[i] * substitute_tq(table[mu - i], i + 1);
      prod *= binomial(m, static_cast<long>(i));
      twice += times_one_plus(prod, 2, 2 * i + 1);
    }
    std::vector<IntPoly> rows;
    rows.reserve(twice.rows().size());
    for (std::size_t k = 0; k < twice.rows().size(); ++k) {
      const auto cs = twice.rows()[k].coeffs();
      std::vector<Integer> half(cs.size());
      for (std::size_t j = 0; j < cs.size(); ++j) {
        half[j] = halve_checked(cs[j], "n=" + std::to_string(m + 1) + ", t^" + std::to_string(k) + "q^" +
                                           std::to_string(j));
      }
      rows.emplace_back(std::move(half));
    }
    table.emplace_back(std::move(rows));
  }
  table.resize(static_cast<std::size_t>(n) + 1);
  return table;
}

BiPolyTQ quadratic_tq(int n) { return quadratic_tq_table(n).back(); }

std::vector<std::vector<IntPoly>> specialized_qalt_table(int n, int max_j) {
  require_positive(n, "specialized_qalt_table");
  if (max_j < 0) throw std::invalid_argument("max_j must be non-negative");
  const auto nu = static_cast<std::size_t>(n);
  const auto ju = static_cast<std::size_t>(max_j);
  // Row m needs j up to max_j + n - m so that later rows can look ahead.
  auto reach = [&](std::size_t m) { return ju + nu - std::min(m, nu); };
  std::vector<std::vector<IntPoly>> t(nu + 1);
  t[0].assign(reach(0) + 1, IntPoly::constant(1));
  t[1].assign(reach(1) + 1, IntPoly::constant(1));
  for (std::size_t m = 1; m < nu; ++m) {
    auto& next = t[m + 1];
    next.resize(reach(m + 1) + 1);
    for (std::size_t j = 0; j < next.size(); ++j) {
      IntPoly twice = IntPoly::one_plus_power(j + 1) * t[m][j + 1] + IntPoly::one_plus_power(m + j) * t[m][j];
      for (std::size_t i = 1; i < m; ++i) {
        twice += binomial(static_cast<long>(m), static_cast<long>(i)) *
                 (IntPoly::one_plus_power(2 * (i + j) + 1) * (t[i][j] * t[m - i][i + j + 1]));
      }
      std::vector<Integer> half;
      for (std::size_t e = 0; e < twice.size(); ++e) {
        half.push_back(halve_checked(twice[e], "specialized n=" + std::to_string(m + 1) + ", j=" + std::to_string(j)));
      }
      next[j] = IntPoly(std::move(half));
    }
  }
  for (auto& row : t) row.resize(ju + 1);
  return t;
}

// Simsun and gamma polynomials ----------------------------------------------

std::vector<IntPoly> simsun_table(int n, SimsunMethod method) {
  if (n < 0) throw std::invalid_argument("simsun_rec needs n >= 0");
  std::vector<IntPoly> r{IntPoly::constant(1)};
  const IntPoly x{0, 1};
  const IntPoly x_one_minus_2x{0, 1, -2};
  for (int m = 1; m <= n; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    if (method == SimsunMethod::Derivative) {
      const IntPoly& prev = r[mu - 1];
      r.push_back(IntPoly{1, m - 1} * prev + x_one_minus_2x * prev.derivative());
    } else {
      // R_m = R_{m-1} + x sum_{i=1}^{m-1} C(m-1, i) R_{i-1} R_{m-1-i}
      const int k = m - 1;
      IntPoly sum;
      for (int i = 1; i <= k; ++i) {
        sum += binomial(k, i) * (r[static_cast<std::size_t>(i - 1)] * r[static_cast<std::size_t>(k - i)]);
      }
      r.push_back(r[mu - 1] + x * sum);
    }
  }
  return r;
}

IntPoly simsun_rec(int n, SimsunMethod method) { return simsun_table(n, method).back(); }

std::vector<IntPoly> gamma_table(int n) {
  require_positive(n, "gamma_rec");
  std::vector<IntPoly> a{IntPoly::constant(1), IntPoly::constant(1)};
  const IntPoly damping = IntPoly{1, 1} * IntPoly{1, 2};
  for (int m = 1; m < n; ++m) {
    const IntPoly& cur = a.back();
    a.push_back(IntPoly{m, m - 1} * cur - damping * cur.derivative());
  }
  a.resize(static_cast<std::size_t>(n) + 1);
  return a;
}

IntPoly gamma_rec(int n) { return gamma_table(n).back(); }

// Euler numbers and generating functions --------------------------------------

std::vector<Integer> zigzag_numbers(int n) {
  if (n < 0) throw std::invalid_argument("zigzag_numbers needs n >= 0");
  // Entringer triangle: e(m, 0) = [m == 0], e(m, k) = e(m, k-1) + e(m-1, m-k).
  std::vector<Integer> prev{1};
  std::vector<Integer> out{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> row(static_cast<std::size_t>(m) + 1);
    row[0] = 0;
    for (int k = 1; k <= m; ++k) {
      row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(m - k)];
    }
    out.push_back(row.back());
    prev = std::move(row);
  }
  return out;
}

namespace {
Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}
}  // namespace

TruncSeries egf_lhs(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const auto ou = static_cast<std::size_t>(order);
  TruncSeries lhs(ou);
  lhs.set_coeff(0, RatPoly(IntPoly::constant(1)));
  if (order == 0) return lhs;
  const auto a = five_term_table(order);
  for (std::size_t n = 1; n <= ou; ++n) {
    lhs.set_coeff(n, RatPoly(a[n].shifted(1), factorial(static_cast<int>(n))));
  }
  return lhs;
}

TruncSeries egf_rhs(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const auto ou = static_cast<std::size_t>(order);
  const auto euler = zigzag_numbers(order);
  const IntPoly one_minus_t{1, -1};
  TruncSeries x(ou);
  for (std::size_t m = 1; m <= ou; ++m) {
    IntPoly c = (euler[m] * one_minus_t.pow(static_cast<unsigned>(m - 1))).shifted(1);
    x.set_coeff(m, RatPoly(std::move(c), factorial(static_cast<int>(m))));
  }
  return TruncSeries::geometric(x);
}

bool egf_check(int order) { return egf_lhs(order) == egf_rhs(order); }

// Faa di Bruno route to sum q^altmaj -----------------------------------------

RationalFnQ::RationalFnQ(IntPoly numerator, std::map<int, int> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  std::erase_if(denominator_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [k, mult] : denominator_) {
    if (k < 1 || mult < 0) throw std::invalid_argument("bad denominator factor");
  }
  if (numerator_.is_zero()) denominator_.clear();
}

IntPoly RationalFnQ::denominator_poly() const {
  IntPoly d = IntPoly::constant(1);
  for (const auto& [k, mult] : denominator_) {
    d *= IntPoly::one_minus_power(static_cast<std::size_t>(k)).pow(static_cast<unsigned>(mult));
  }
  return d;
}

RationalFnQ operator+(const RationalFnQ& a, const RationalFnQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::map<int, int> common = a.denominator_;
  for (const auto& [k, mult] : b.denominator_) common[k] = std::max(common[k], mult);
  auto lift = [&common](const RationalFnQ& x) {
    IntPoly num = x.numerator_;
    for (const auto& [k, mult] : common) {
      auto it = x.denominator_.find(k);
      const int have = it == x.denominator_.end() ? 0 : it->second;
      if (mult > have) num *= IntPoly::one_minus_power(static_cast<std::size_t>(k)).pow(static_cast<unsigned>(mult - have));
    }
    return num;
  };
  IntPoly num = lift(a) + lift(b);
  return RationalFnQ(std::move(num), std::move(common));
}

RationalFnQ operator*(const RationalFnQ& a, const RationalFnQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<int, int> den = a.denominator_;
  for (const auto& [k, mult] : b.denominator_) den[k] += mult;
  return RationalFnQ(a.numerator_ * b.numerator_, std::move(den));
}

RationalFnQ operator*(RationalFnQ a, const Integer& c) {
  a.numerator_ *= c;
  if (a.numerator_.is_zero()) a.denominator_.clear();
  return a;
}

bool operator==(const RationalFnQ& a, const RationalFnQ& b) {
  return a.numerator_ * b.denominator_poly() == b.numerator_ * a.denominator_poly();
}

void RationalFnQ::reduce() {
  for (auto& [k, mult] : denominator_) {
    const IntPoly factor = IntPoly::one_minus_power(static_cast<std::size_t>(k));
    while (mult > 0) {
      auto q = try_exact_div(numerator_, factor);
      if (!q) break;
      numerator_ = *std::move(q);
      --mult;
    }
  }
  std::erase_if(denominator_, [](const auto& kv) { return kv.second == 0; });
}

std::vector<RationalFnQ> altmaj_egf_derivatives(int n) {
  if (n < 0) throw std::invalid_argument("altmaj_egf_derivatives needs n >= 0");
  const auto euler = zigzag_numbers(std::max(n, 1));
  // (F'/F)^{(r)}(0) = sec^{(r)}(0) / (1 - q^{r+1}); sec^{(r)}(0) is E_r for even r, 0 for odd r.
  std::vector<RationalFnQ> h;
  for (int r = 0; r < n; ++r) {
    if (r % 2 == 1) {
      h.emplace_back();
    } else {
      h.emplace_back(IntPoly::constant(euler[static_cast<std::size_t>(r)]), std::map<int, int>{{r + 1, 1}});
    }
  }
  std::vector<RationalFnQ> f{RationalFnQ(IntPoly::constant(1), {})};
  for (int m = 0; m < n; ++m) {
    RationalFnQ next;
    for (int k = 0; k <= m; ++k) {
      const auto& hk = h[static_cast<std::size_t>(m - k)];
      if (hk.is_zero()) continue;
      next = next + (f[static_cast<std::size_t>(k)] * hk) * binomial(m, k);
    }
    next.reduce();
    f.push_back(std::move(next));
  }
  return f;
}

IntPoly faa_di_bruno_altmaj(int n) {
  require_positive(n, "faa_di_bruno_altmaj");
  const RationalFnQ fn = altmaj_egf_derivatives(n).back();
  auto cleared = try_exact_div(fn.numerator() * q_pochhammer(n), fn.denominator_poly());
  if (!cleared) {
    throw DenominatorNotCleared("F^(" + std::to_string(n) + ")(0) (q;q)_n is not a polynomial");
  }
  return *std::move(cleared);
}

}  // namespace altdes
