#include "altdes/nc_poly.hpp"

#include <stdexcept>
#include <vector>

namespace altdes {

namespace {
const Integer kZero{0};
}

NCPoly NCPoly::word(const Word& w, const Integer& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

const Integer& NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? kZero : it->second;
}

void NCPoly::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  }
  return out;
}

NCPoly NCPoly::substitute(const std::map<char, NCPoly>& images) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    NCPoly acc = word("", c);
    for (char letter : w) {
      auto it = images.find(letter);
      acc = acc * (it == images.end() ? NCPoly::letter(letter) : it->second);
    }
    out += acc;
  }
  return out;
}

IntPoly NCPoly::evaluate_commutative(const std::map<char, IntPoly>& values) const {
  IntPoly out;
  for (const auto& [w, c] : terms_) {
    IntPoly acc = IntPoly::constant(c);
    for (char letter : w) {
      auto it = values.find(letter);
      if (it == values.end()) throw std::invalid_argument(std::string("no value for letter ") + letter);
      acc *= it->second;
    }
    out += acc;
  }
  return out;
}

std::set<long> NCPoly::weighted_lengths(const std::map<char, long>& weights) const {
  std::set<long> out;
  for (const auto& [w, c] : terms_) {
    long len = 0;
    for (char letter : w) {
      auto it = weights.find(letter);
      len += it == weights.end() ? 1 : it->second;
    }
    out.insert(len);
  }
  return out;
}

std::string NCPoly::to_string() const {
  std::vector<detail::Term> out;
  for (const auto& [w, c] : terms_) out.push_back({c, w});
  return detail::format_terms(out);
}

}  // namespace altdes
