#pragma once

#include <map>
#include <set>
#include <string>

#include "altdes/int_poly.hpp"

namespace altdes {

/// Integer combination of words in non-commuting letters.
///
/// A word is a std::string whose characters are the letters; the empty word
/// is the unit. Used for ab-indices (letters 'a','b') and cd-indices
/// (letters 'c','d').
class NCPoly {
 public:
  using Word = std::string;

  NCPoly() = default;
  static NCPoly one() { return word("", 1); }
  static NCPoly letter(char c) { return word(std::string(1, c), 1); }
  static NCPoly word(const Word& w, const Integer& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Integer>& terms() const { return terms_; }
  const Integer& coeff(const Word& w) const;

  void add_term(const Word& w, const Integer& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Integer& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Integer& c) { return a *= c; }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Replaces every letter with its image; letters absent from the map stay.
  NCPoly substitute(const std::map<char, NCPoly>& images) const;
  /// Lets the letters commute and evaluates them at the given polynomials.
  IntPoly evaluate_commutative(const std::map<char, IntPoly>& values) const;
  /// Distinct weighted lengths of the words that carry nonzero coefficients.
  std::set<long> weighted_lengths(const std::map<char, long>& weights) const;

  /// Terms in lexicographic word order, e.g. "cc + d"; the unit prints as "1".
  std::string to_string() const;

 private:
  std::map<Word, Integer> terms_;
};

}  // namespace altdes
