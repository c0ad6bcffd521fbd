#include "altdes/oracle.hpp"

#include <bit>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "altdes/enumerate.hpp"
#include "altdes/errors.hpp"
#include "altdes/permutation.hpp"

namespace altdes {

namespace {

using Counts = std::vector<std::uint64_t>;

void add_counts(Counts& into, const Counts& from) {
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return z;
}

IntPoly counts_to_poly(const Counts& c) {
  std::vector<Integer> coeffs;
  coeffs.reserve(c.size());
  for (auto v : c) coeffs.push_back(to_integer(v));
  return IntPoly(std::move(coeffs));
}

BiPolyTQ grid_to_bipoly(const Counts& grid, std::size_t cols) {
  std::vector<IntPoly> rows;
  for (std::size_t r = 0; r * cols < grid.size(); ++r) {
    rows.push_back(counts_to_poly(Counts(grid.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                         grid.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols))));
  }
  return BiPolyTQ(std::move(rows));
}

std::size_t width(int n) { return static_cast<std::size_t>(std::max(n, 1)); }

}  // namespace

void check_brute_limit(int n, const OracleConfig& cfg) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  // Word kernels use 32-bit masks; anything near that is out of reach anyway.
  constexpr int kHardLimit = 16;
  if (n > cfg.brute_max || n > kHardLimit) {
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds brute_max=" + std::to_string(cfg.brute_max));
  }
}

Statistic parse_statistic(std::string_view name) {
  if (name == "altmaj") return Statistic::AltMaj;
  if (name == "altdes") return Statistic::AltDes;
  if (name == "maj") return Statistic::Maj;
  if (name == "des3") return Statistic::Des3;
  throw std::invalid_argument("unknown statistic: " + std::string(name));
}

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::AltMaj: return "altmaj";
    case Statistic::AltDes: return "altdes";
    case Statistic::Maj: return "maj";
    case Statistic::Des3: return "des3";
  }
  return "?";
}

std::uint64_t StatMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& [v, c] : values) t += c;
  return t;
}

IntPoly StatMultiset::generating_polynomial() const {
  IntPoly p;
  for (const auto& [v, c] : values) {
    if (v < 0) throw std::invalid_argument("negative statistic value");
    p.add_term(to_integer(c), static_cast<std::size_t>(v));
  }
  return p;
}

IntPoly brute_alt_eulerian(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  const Counts init(width(n), 0);
  auto counts = enumerate_permutations(
      n, cfg.jobs, init,
      [](std::span<const int> w, Counts& acc) { ++acc[static_cast<std::size_t>(std::popcount(alt_descent_mask(w)))]; },
      add_counts);
  return counts_to_poly(counts);
}

BiPolyTQ brute_qalt(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  const std::size_t cols = static_cast<std::size_t>(n * (n - 1) / 2 + 1);
  const Counts init(width(n) * cols, 0);
  auto grid = enumerate_permutations(
      n, cfg.jobs, init,
      [cols](std::span<const int> w, Counts& acc) {
        const auto mask = alt_descent_mask(w);
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        ++acc[row * cols + static_cast<std::size_t>(mask_index_sum(mask))];
      },
      add_counts);
  return grid_to_bipoly(grid, cols);
}

BiPolyTQ brute_two_sided(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  const std::size_t cols = width(n);
  const Counts init(cols * cols, 0);
  auto grid = enumerate_permutations(
      n, cfg.jobs, init,
      [cols](std::span<const int> w, Counts& acc) {
        int inv[32];
        for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
        const auto s = static_cast<std::size_t>(std::popcount(alt_descent_mask(std::span<const int>(inv, w.size()))));
        const auto t = static_cast<std::size_t>(std::popcount(alt_descent_mask(w)));
        ++acc[s * cols + t];
      },
      add_counts);
  return grid_to_bipoly(grid, cols);
}

IntPoly brute_simsun(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  const Counts init(width(n), 0);
  auto counts = enumerate_permutations(
      n, cfg.jobs, init,
      [](std::span<const int> w, Counts& acc) {
        if (is_simsun(w)) ++acc[static_cast<std::size_t>(std::popcount(descent_mask(w)))];
      },
      add_counts);
  return counts_to_poly(counts);
}

CdIndexOracle brute_cd_index(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  // Three tables indexed by a subset of [n-1]: descent set, alternating
  // descent set, and descent set restricted to SS_n.
  const std::size_t subsets = std::size_t{1} << static_cast<unsigned>(std::max(n - 1, 0));
  const Counts init(3 * subsets, 0);
  auto counts = enumerate_permutations(
      n, cfg.jobs, init,
      [subsets, n](std::span<const int> w, Counts& acc) {
        const auto des = descent_mask(w);
        ++acc[des];
        ++acc[subsets + alt_descent_mask(w)];
        if ((n == 0 || w.back() == n) && is_simsun(w)) ++acc[2 * subsets + des];
      },
      add_counts);

  CdIndexOracle out;
  for (std::size_t s = 0; s < subsets; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    const auto word = ab_word(mask, n);
    out.psi.add_term(word, to_integer(counts[s]));
    out.psi_hat.add_term(word, to_integer(counts[subsets + s]));
    if (const auto c = counts[2 * subsets + s]; c != 0) {
      const auto cd = ab_to_cd(word);
      if (!cd) throw std::logic_error("Simsun permutation with an unpaired descent");
      out.phi.add_term(*cd, to_integer(c));
    }
  }
  return out;
}

StatMultiset stat_multiset(int n, Statistic stat, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  const std::size_t cols = static_cast<std::size_t>(n * (n - 1) / 2 + 1);
  const Counts init(cols, 0);
  auto counts = enumerate_permutations(
      n, cfg.jobs, init,
      [stat](std::span<const int> w, Counts& acc) {
        std::size_t v = 0;
        switch (stat) {
          case Statistic::AltMaj: v = static_cast<std::size_t>(mask_index_sum(alt_descent_mask(w))); break;
          case Statistic::AltDes: v = static_cast<std::size_t>(std::popcount(alt_descent_mask(w))); break;
          case Statistic::Maj: v = static_cast<std::size_t>(mask_index_sum(descent_mask(w))); break;
          case Statistic::Des3: v = static_cast<std::size_t>(three_descents(w)); break;
        }
        ++acc[v];
      },
      add_counts);
  StatMultiset ms;
  ms.n = n;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] != 0) ms.values[static_cast<long>(v)] = counts[v];
  }
  return ms;
}

Finding double_count_check(int n, const OracleConfig& cfg) {
  check_brute_limit(n + 1, cfg);
  using Hits = std::map<Permutation, int>;
  const auto hits = enumerate_permutations(
      n, cfg.jobs, Hits{},
      [n](std::span<const int> w, Hits& acc) {
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        for (int j = 0; j <= n; ++j) {
          ++acc[insertion(p, j, InsertKind::Min)];
          ++acc[insertion(p, j, InsertKind::Max)];
        }
      },
      [](Hits& into, const Hits& from) {
        for (const auto& [p, c] : from) into[p] += c;
      });
  for (const auto& [p, c] : hits) {
    if (c != 2) return Finding::fail(p.to_string() + " built " + std::to_string(c) + " times");
  }
  std::uint64_t expected = 1;
  for (int i = 2; i <= n + 1; ++i) expected *= static_cast<std::uint64_t>(i);
  if (hits.size() != expected) {
    return Finding::fail(std::to_string(hits.size()) + " of " + std::to_string(expected) + " permutations reached");
  }
  return Finding::pass();
}

Finding theta_identity_check(int n, const OracleConfig& cfg) {
  check_brute_limit(n, cfg);
  using First = std::optional<std::string>;
  const auto failure = enumerate_permutations(
      n, cfg.jobs, First{},
      [n](std::span<const int> w, First& acc) {
        if (acc) return;
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        const Permutation image = theta(p);
        const AltStats a = alt_stats(p);
        const AltStats b = alt_stats(image);
        const bool ok = theta(image) == p && b.altdes == std::max(n - 1, 0) - a.altdes &&
                        b.altmaj == n * (n - 1) / 2 - n * a.altdes + a.altmaj;
        if (!ok) acc = p.to_string();
      },
      [](First& into, const First& from) {
        if (!into) into = from;
      });
  return failure ? Finding::fail(*failure) : Finding::pass();
}

Finding equidistribution_check(int n, const OracleConfig& cfg) {
  check_brute_limit(n + 1, cfg);
  const StatMultiset altdes = stat_multiset(n, Statistic::AltDes, cfg);
  std::map<long, std::uint64_t> des3;
  std::vector<int> w(static_cast<std::size_t>(n + 1));
  std::iota(w.begin(), w.end(), 1);
  do {
    ++des3[three_descents(w)];
  } while (std::next_permutation(w.begin() + 1, w.end()));
  if (des3 != altdes.values) {
    return Finding::fail("distributions differ at n=" + std::to_string(n));
  }
  return Finding::pass();
}

}  // namespace altdes
