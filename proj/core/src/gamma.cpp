#include "altdes/gamma.hpp"

#include <stdexcept>

#include "altdes/divisibility.hpp"
#include "altdes/enumerate.hpp"
#include "altdes/errors.hpp"
#include "altdes/permutation.hpp"
#include "altdes/recurrences.hpp"

namespace altdes {

namespace {

const Integer kZero{0};

BiPolyTQ from_q_poly(const IntPoly& p) { return BiPolyTQ(std::vector<IntPoly>{p}); }

/// (-1)^k, k >= 0
Integer sign(std::size_t k) { return k % 2 == 0 ? Integer{1} : Integer{-1}; }

}  // namespace

bool simsun_relation_check(int n) {
  if (n < 1) throw std::invalid_argument("simsun_relation_check needs n >= 1");
  return gamma_rec(n) == simsun_rec(n - 1, SimsunMethod::Derivative).shift_argument(1);
}

CdTransform cd_transform(const NCPoly& phi) {
  const NCPoly c = NCPoly::letter('c');
  CdTransform out;
  out.phi_hat = phi.substitute({{'d', c * c - NCPoly::letter('d')}});
  out.alt_poly = out.phi_hat.evaluate_commutative({{'c', IntPoly{1, 1}}, {'d', IntPoly{0, 2}}});
  return out;
}

NCPoly cd_to_ab(const NCPoly& phi) {
  const NCPoly a = NCPoly::letter('a');
  const NCPoly b = NCPoly::letter('b');
  return phi.substitute({{'c', a + b}, {'d', a * b + b * a}});
}

IntPoly cd_gamma_polynomial(const NCPoly& phi) {
  return phi.evaluate_commutative({{'c', IntPoly::constant(1)}, {'d', IntPoly{1, 1}}});
}

// q-gamma expansion -----------------------------------------------------------

namespace {

/// q^{C(k+1,2)} (-t)^k prod_{i=k+1}^{n-1-k} (1 + t q^i)
BiPolyTQ q_gamma_basis(int n, std::size_t k) {
  BiPolyTQ b = BiPolyTQ::monomial(sign(k), k, k * (k + 1) / 2);
  const auto top = static_cast<std::size_t>(n - 1) - k;
  for (std::size_t i = k + 1; i <= top; ++i) {
    BiPolyTQ factor = BiPolyTQ::constant(1);
    factor.add_term(1, 1, i);
    b = b * factor;
  }
  return b;
}

}  // namespace

BiPolyTQ QGammaVector::reconstruct() const {
  BiPolyTQ out;
  for (std::size_t k = 0; k < gammas.size(); ++k) out += from_q_poly(gammas[k]) * q_gamma_basis(n, k);
  return out;
}

bool QGammaVector::verdicts_pass() const {
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    if (!nonnegative[k]) return false;
    if (one_plus_q_orders[k] >= 0 && one_plus_q_orders[k] < static_cast<int>(k)) return false;
  }
  return true;
}

QGammaVector q_gamma_extract(const BiPolyTQ& p, int n) {
  if (n < 1) throw std::invalid_argument("q_gamma_extract needs n >= 1");
  QGammaVector out;
  out.n = n;
  BiPolyTQ residual = p;
  const auto top = static_cast<std::size_t>(n - 1);
  for (std::size_t k = 0; 2 * k <= top; ++k) {
    for (std::size_t lower = 0; lower < k; ++lower) {
      if (!residual.row(lower).is_zero()) {
        throw ExpansionFailed("residual keeps a t^" + std::to_string(lower) + " term at step k=" + std::to_string(k));
      }
    }
    const IntPoly& row = residual.row(k);
    const std::size_t qpow = k * (k + 1) / 2;
    for (std::size_t e = 0; e < qpow; ++e) {
      if (row[e] != 0) {
        throw ExpansionFailed("t^" + std::to_string(k) + " part is not divisible by q^" + std::to_string(qpow));
      }
    }
    std::vector<Integer> cs;
    for (std::size_t e = qpow; e < row.size(); ++e) cs.push_back(sign(k) * row[e]);
    IntPoly gamma(std::move(cs));
    residual -= from_q_poly(gamma) * q_gamma_basis(n, k);
    out.nonnegative.push_back(gamma.all_nonnegative());
    out.one_plus_q_orders.push_back(gamma.is_zero() ? -1 : order_of_factor(gamma, 1));
    out.gammas.push_back(std::move(gamma));
  }
  if (!residual.is_zero()) throw ExpansionFailed("nonzero residual: " + residual.to_string());
  return out;
}

// Two-sided expansion -----------------------------------------------------------

namespace {

/// (-st)^i (1+st)^j (s+t)^r with s in the t-slot.
BiPolyTQ two_sided_basis(std::size_t i, std::size_t j, std::size_t r) {
  BiPolyTQ one_plus_st = BiPolyTQ::constant(1);
  one_plus_st.add_term(1, 1, 1);
  BiPolyTQ s_plus_t = BiPolyTQ::monomial(1, 1, 0);
  s_plus_t.add_term(1, 0, 1);
  BiPolyTQ b = BiPolyTQ::monomial(sign(i), i, i);
  for (std::size_t x = 0; x < j; ++x) b = b * one_plus_st;
  for (std::size_t x = 0; x < r; ++x) b = b * s_plus_t;
  return b;
}

}  // namespace

const Integer& TwoSidedGamma::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? kZero : it->second;
}

BiPolyTQ TwoSidedGamma::reconstruct() const {
  BiPolyTQ out;
  for (const auto& [key, c] : entries) {
    const auto [i, j] = key;
    const auto r = static_cast<std::size_t>(n - 1 - j - 2 * i);
    out += two_sided_basis(static_cast<std::size_t>(i), static_cast<std::size_t>(j), r) * c;
  }
  return out;
}

bool TwoSidedGamma::all_nonnegative() const {
  for (const auto& [key, c] : entries) {
    if (c < 0) return false;
  }
  return true;
}

TwoSidedGamma two_sided_extract(const BiPolyTQ& a, int n) {
  if (n < 1) throw std::invalid_argument("two_sided_extract needs n >= 1");

  // Symmetric reduction: strip the lex-leading term s^x t^y (x >= y) as
  // e^y p^{x-y}. pe[r] collects the polynomial in e attached to p^r.
  std::map<std::size_t, IntPoly> pe;
  BiPolyTQ residual = a;
  while (!residual.is_zero()) {
    const auto x = static_cast<std::size_t>(residual.t_degree());
    const auto y = static_cast<std::size_t>(residual.row(x).degree());
    if (x < y) throw ExpansionFailed("input is not symmetric under s <-> t");
    const Integer c = residual.coeff(x, y);
    const std::size_t r = x - y;
    pe[r].add_term(c, y);
    BiPolyTQ sub;
    for (std::size_t l = 0; l <= r; ++l) sub.add_term(c * binomial(static_cast<long>(r), static_cast<long>(l)), y + l, y + r - l);
    residual -= sub;
  }

  TwoSidedGamma out;
  out.n = n;
  const auto top = static_cast<std::size_t>(n - 1);
  const IntPoly one_plus_e{1, 1};
  for (auto& [r, g] : pe) {
    if (r > top) throw ExpansionFailed("p^" + std::to_string(r) + " exceeds degree n-1");
    IntPoly res = g;
    for (std::size_t i = 0; 2 * i + r <= top; ++i) {
      const std::size_t j = top - r - 2 * i;
      const Integer gamma = sign(i) * res[i];
      if (gamma == 0) continue;
      const Integer signed_gamma = gamma * sign(i);
      res -= (signed_gamma * one_plus_e.pow(static_cast<unsigned>(j))).shifted(i);
      out.entries[{static_cast<int>(i), static_cast<int>(j)}] = gamma;
    }
    if (!res.is_zero()) {
      throw ExpansionFailed("residual " + res.to_string("e") + " left at p^" + std::to_string(r));
    }
  }
  return out;
}

Integer down_up_simsun_count(int n2, const OracleConfig& cfg) {
  if (n2 < 0 || n2 % 2 != 0) throw std::invalid_argument("down_up_simsun_count needs an even length");
  check_brute_limit(n2, cfg);
  const auto count = enumerate_permutations(
      n2, cfg.jobs, std::uint64_t{0},
      [](std::span<const int> w, std::uint64_t& acc) {
        if (is_down_up(w) && is_simsun(w)) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
  return Integer(static_cast<unsigned long>(count));
}

}  // namespace altdes
