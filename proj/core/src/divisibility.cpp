#include "altdes/divisibility.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "altdes/enumerate.hpp"
#include "altdes/errors.hpp"
#include "altdes/permutation.hpp"
#include "altdes/recurrences.hpp"
#include "altdes/shape.hpp"

namespace altdes {

namespace {

std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

}  // namespace

IntPoly cyclotomic(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic needs k >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  IntPoly phi = IntPoly::monomial(1, as_size(k)) - IntPoly::constant(1);
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) phi = exact_div(phi, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(k, std::move(phi)).first->second;
}

IntPoly build_Gn(int n, ProductMethod method) {
  if (n < 1) throw std::invalid_argument("build_Gn needs n >= 1");
  IntPoly g = IntPoly::constant(1);
  if (method == ProductMethod::Product) {
    for (int pow2 = 2; n / pow2 >= 1; pow2 *= 2) {
      for (int i = 1; i <= n / pow2; ++i) g *= IntPoly::one_plus_power(as_size(i));
    }
  } else {
    for (int m = 1; 2 * m <= n; ++m) g *= cyclotomic(2 * m).pow(static_cast<unsigned>(n / (2 * m)));
  }
  return g;
}

IntPoly build_Ev(int k, ProductMethod method) {
  if (k < 1) throw std::invalid_argument("build_Ev needs k >= 1");
  IntPoly ev = IntPoly::constant(1);
  if (method == ProductMethod::Product) {
    int odd = k;
    while (odd % 2 == 0) odd /= 2;
    for (int f = odd; f <= k; f *= 2) ev *= IntPoly::one_plus_power(as_size(f));
  } else {
    for (int m = 1; m <= k; ++m) {
      if (k % m == 0) ev *= cyclotomic(2 * m);
    }
  }
  return ev;
}

int order_of_factor(const IntPoly& f, int m) {
  if (f.is_zero()) throw std::invalid_argument("order_of_factor of the zero polynomial");
  if (m < 1) throw std::invalid_argument("order_of_factor needs m >= 1");
  const IntPoly factor = IntPoly::one_plus_power(as_size(m));
  int r = 0;
  IntPoly cur = f;
  while (auto q = try_exact_div(cur, factor)) {
    cur = std::move(*q);
    ++r;
  }
  return r;
}

bool one_plus_divides(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("one_plus_divides needs m, n >= 1");
  return try_exact_div(IntPoly::one_plus_power(as_size(n)), IntPoly::one_plus_power(as_size(m))).has_value();
}

bool quotient_is_odd(int m, int n) { return n % m == 0 && (n / m) % 2 == 1; }

IntPoly altmaj_polynomial(int n, AltMajSource source) {
  if (source == AltMajSource::FaaDiBruno) return faa_di_bruno_altmaj(n);
  return quadratic_tq(n).at_t_one();
}

std::vector<Integer> euler_numbers(int n) {
  if (n < 0) throw std::invalid_argument("euler_numbers needs n >= 0");
  std::vector<Integer> e{Integer{1}};
  if (n == 0) return e;
  const auto table = five_term_table(n);
  for (int k = 1; k <= n; ++k) e.push_back(table[as_size(k)][as_size(k - 1)]);
  return e;
}

Factorization extract_Ehat(int n, AltMajSource source) {
  if (n < 2) throw std::invalid_argument("extract_Ehat needs n >= 2");
  Factorization f;
  f.n = n;
  f.g_n = build_Gn(n);
  f.e_hat = exact_div(altmaj_polynomial(n, source), f.g_n);
  f.verdicts.e_hat_palindromic = shape_predicates(f.e_hat).palindromic_center.has_value();
  f.verdicts.constant_term_is_euler = f.e_hat[0] == euler_numbers(n).back();
  return f;
}

Thm42Report check_thm42(int n, AltMajSource source) {
  if (n < 1) throw std::invalid_argument("check_thm42 needs n >= 1");
  Thm42Report rep;
  rep.n = n;
  const IntPoly a = altmaj_polynomial(n, source);
  for (int m = 1; 2 * m <= n; ++m) {
    OrderRow row{m, n / (2 * m), order_of_factor(a, m)};
    if (row.order < row.required && rep.finding.ok) {
      rep.finding = Finding::fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": order " +
                                  std::to_string(row.order) + " < " + std::to_string(row.required));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

int parity_requirement(int n, int j) { return (n % 2 == 0 && j % 2 == 1) ? (n - 1) / 2 : n / 2; }

namespace {

void record_cell(ParityTable& table, int n, int j, const IntPoly& value) {
  ParityCell cell{n, j, parity_requirement(n, j), order_of_factor(value, 1)};
  if (cell.order < cell.required && table.finding.ok) {
    table.finding = Finding::fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + ": (1+q)-order " +
                                  std::to_string(cell.order) + " < " + std::to_string(cell.required));
  }
  table.cells.push_back(cell);
}

void check_range(int max_n, int max_j) {
  if (max_n < 1 || max_j < 0) throw std::invalid_argument("parity table needs max_n >= 1 and max_j >= 0");
}

}  // namespace

ParityTable parity_table_substituted(int max_n, int max_j) {
  check_range(max_n, max_j);
  ParityTable table;
  const auto qalt = quadratic_tq_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (int j = 0; j <= max_j; ++j) record_cell(table, n, j, substitute_tq(qalt[as_size(n)], as_size(j)).at_t_one());
  }
  return table;
}

ParityTable parity_table_specialized(int max_n, int max_j) {
  check_range(max_n, max_j);
  ParityTable table;
  const auto spec = specialized_qalt_table(max_n, max_j);
  const auto qalt = quadratic_tq_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (int j = 0; j <= max_j; ++j) {
      const IntPoly& value = spec[as_size(n)][as_size(j)];
      if (value != qalt[as_size(n)].at_t_power(as_size(j))) table.sources_agree = false;
      if (!table.sources_agree && table.finding.ok) {
        table.finding = Finding::fail("n=" + std::to_string(n) + " j=" + std::to_string(j) +
                                      ": specialized recursion disagrees with substitution");
      }
      record_cell(table, n, j, value);
    }
  }
  return table;
}

bool binomial_criterion(const StatMultiset& ms, int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("binomial_criterion needs m, r >= 1");
  const long period = 2L * m;
  for (int j = 0; j < r; ++j) {
    std::vector<Integer> sums(as_size(2 * m), Integer{0});
    for (const auto& [v, count] : ms.values) {
      const auto cls = static_cast<std::size_t>(((v % period) + period) % period);
      sums[cls] += binomial(v, j) * Integer(static_cast<unsigned long>(count));
    }
    for (int l = 0; l < m; ++l) {
      if (sums[as_size(l)] != sums[as_size(l + m)]) return false;
    }
  }
  return true;
}

Conj410Report verify_conj410(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  Conj410Report rep;
  rep.n = n;
  const StatMultiset ms = stat_multiset(n, Statistic::AltMaj, cfg);
  const IntPoly poly = ms.generating_polynomial();
  for (int m = 1; 2 * m <= n; ++m) {
    Conj410Row row;
    row.m = m;
    row.r = n / (2 * m);
    row.criterion = binomial_criterion(ms, m, row.r);
    if (row.criterion) row.sound = order_of_factor(poly, m) >= row.r;
    if (rep.finding.ok && (!row.criterion || !row.sound)) {
      rep.finding = Finding::fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  (row.criterion ? ": criterion holds without divisibility" : ": criterion fails"));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

Finding thm411_bijection_check(int n, int m, const OracleConfig& cfg) {
  if (m < 1 || 2 * m > n) throw PrefixTooLong("thm411_bijection_check needs 1 <= m and 2m <= n");
  check_brute_limit(n, cfg);
  using First = std::optional<std::string>;
  const auto failure = enumerate_permutations(
      n, cfg.jobs, First{},
      [m](std::span<const int> w, First& acc) {
        if (acc) return;
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        const Permutation image = reverse_prefix(p, m);
        const int before = alt_stats(p).altmaj;
        const int after = alt_stats(image).altmaj;
        const bool ok = reverse_prefix(image, m) == p && (after - before - m) % (2 * m) == 0;
        if (!ok) acc = p.to_string();
      },
      [](First& into, const First& from) {
        if (!into) into = from;
      });
  return failure ? Finding::fail(*failure) : Finding::pass();
}

}  // namespace altdes
