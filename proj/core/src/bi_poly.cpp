#include "altdes/bi_poly.hpp"

#include <algorithm>

namespace altdes {

namespace {
const IntPoly kZeroRow{};
const Integer kZero{0};
}  // namespace

BiPolyTQ::BiPolyTQ(std::vector<IntPoly> rows) : rows_(std::move(rows)) { normalize(); }

BiPolyTQ BiPolyTQ::from_terms(const std::vector<Term>& terms) {
  BiPolyTQ p;
  for (const auto& t : terms) p.add_term(t.coeff, t.t_exp, t.q_exp);
  return p;
}

BiPolyTQ BiPolyTQ::constant(const Integer& c) { return monomial(c, 0, 0); }

BiPolyTQ BiPolyTQ::monomial(const Integer& c, std::size_t t_exp, std::size_t q_exp) {
  BiPolyTQ p;
  p.add_term(c, t_exp, q_exp);
  return p;
}

void BiPolyTQ::normalize() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

long BiPolyTQ::q_degree() const {
  long d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

const IntPoly& BiPolyTQ::row(std::size_t k) const { return k < rows_.size() ? rows_[k] : kZeroRow; }

const Integer& BiPolyTQ::coeff(std::size_t t_exp, std::size_t q_exp) const {
  return t_exp < rows_.size() ? rows_[t_exp][q_exp] : kZero;
}

std::size_t BiPolyTQ::term_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) {
    n += static_cast<std::size_t>(std::count_if(r.coeffs().begin(), r.coeffs().end(),
                                                 [](const Integer& c) { return c != 0; }));
  }
  return n;
}

std::vector<BiPolyTQ::Term> BiPolyTQ::terms() const {
  std::vector<Term> out;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto cs = rows_[k].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] != 0) out.push_back({k, j, cs[j]});
    }
  }
  return out;
}

void BiPolyTQ::add_term(const Integer& c, std::size_t t_exp, std::size_t q_exp) {
  if (c == 0) return;
  if (rows_.size() <= t_exp) rows_.resize(t_exp + 1);
  rows_[t_exp].add_term(c, q_exp);
  normalize();
}

void BiPolyTQ::add_row(std::size_t k, const IntPoly& p) {
  if (p.is_zero()) return;
  if (rows_.size() <= k) rows_.resize(k + 1);
  rows_[k] += p;
  normalize();
}

BiPolyTQ& BiPolyTQ::operator+=(const BiPolyTQ& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t k = 0; k < o.rows_.size(); ++k) rows_[k] += o.rows_[k];
  normalize();
  return *this;
}

BiPolyTQ& BiPolyTQ::operator-=(const BiPolyTQ& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t k = 0; k < o.rows_.size(); ++k) rows_[k] -= o.rows_[k];
  normalize();
  return *this;
}

BiPolyTQ& BiPolyTQ::operator*=(const Integer& c) {
  if (c == 0) {
    rows_.clear();
    return *this;
  }
  for (auto& r : rows_) r *= c;
  return *this;
}

BiPolyTQ operator*(const BiPolyTQ& a, const BiPolyTQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Accumulate straight into raw coefficient buffers; this product dominates
  // the quadratic recursion.
  const std::size_t rows = a.rows_.size() + b.rows_.size() - 1;
  std::vector<std::vector<Integer>> acc(rows);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto ai = a.rows_[i].coeffs();
    if (ai.empty()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      const auto bj = b.rows_[j].coeffs();
      if (bj.empty()) continue;
      auto& out = acc[i + j];
      if (out.size() < ai.size() + bj.size() - 1) out.resize(ai.size() + bj.size() - 1);
      for (std::size_t x = 0; x < ai.size(); ++x) {
        if (ai[x] == 0) continue;
        for (std::size_t y = 0; y < bj.size(); ++y) {
          mpz_addmul(out[x + y].get_mpz_t(), ai[x].get_mpz_t(), bj[y].get_mpz_t());
        }
      }
    }
  }
  std::vector<IntPoly> out_rows;
  out_rows.reserve(rows);
  for (auto& r : acc) out_rows.emplace_back(std::move(r));
  return BiPolyTQ(std::move(out_rows));
}

IntPoly BiPolyTQ::at_q_one() const {
  std::vector<Integer> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.sum_of_coefficients());
  return IntPoly(std::move(out));
}

IntPoly BiPolyTQ::at_t_one() const {
  IntPoly out;
  for (const auto& r : rows_) out += r;
  return out;
}

IntPoly BiPolyTQ::at_t_power(std::size_t j) const {
  IntPoly out;
  for (std::size_t k = 0; k < rows_.size(); ++k) out += rows_[k].shifted(k * j);
  return out;
}

BiPolyTQ BiPolyTQ::swapped() const {
  BiPolyTQ out;
  for (const auto& t : terms()) out.add_term(t.coeff, t.q_exp, t.t_exp);
  return out;
}

std::string BiPolyTQ::to_string(std::string_view t_var, std::string_view q_var) const {
  std::vector<detail::Term> out;
  for (const auto& t : terms()) {
    out.push_back({t.coeff, detail::power_string(t_var, t.t_exp) + detail::power_string(q_var, t.q_exp)});
  }
  return detail::format_terms(out);
}

BiPolyTQ substitute_tq(const BiPolyTQ& p, std::size_t j) {
  if (j == 0) return p;
  std::vector<IntPoly> rows;
  rows.reserve(p.rows().size());
  for (std::size_t k = 0; k < p.rows().size(); ++k) rows.push_back(p.rows()[k].shifted(k * j));
  return BiPolyTQ(std::move(rows));
}

}  // namespace altdes
