#pragma once

#include <map>
#include <utility>
#include <vector>

#include "altdes/bi_poly.hpp"
#include "altdes/int_poly.hpp"

namespace golden {

using altdes::BiPolyTQ;
using altdes::Integer;
using altdes::IntPoly;

inline IntPoly poly(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

inline IntPoly one_plus(std::size_t m) { return IntPoly::one_plus_power(m); }

/// A^_1 .. A^_5
inline std::vector<IntPoly> alt_eulerian() {
  return {poly({1}), poly({1, 1}), poly({2, 2, 2}), poly({5, 7, 7, 5}), poly({16, 26, 36, 26, 16})};
}

/// E_0 .. E_8
inline std::vector<long> euler() { return {1, 1, 1, 2, 5, 16, 61, 272, 1385}; }

inline IntPoly ehat6() { return poly({61, -87, 66, -82, 129, -82, 66, -87, 61}); }
inline IntPoly ehat7() {
  return poly({272, -389, 298, -375, 603, -497, 617, -743, 617, -497, 603, -375, 298, -389, 272});
}
inline IntPoly ehat8() {
  return poly({1385, -3364, 3490, -3406, 4915, -5397, 4873, -4677, 4873, -5397, 4915, -3406, 3490, -3364, 1385});
}

/// A^_n(1,q) in factored form, for n = 2..8 (index n-2).
inline std::vector<IntPoly> altmaj_factored() {
  const IntPoly g4 = one_plus(1).pow(2) * one_plus(2);
  const IntPoly g6 = g4 * one_plus(3);
  const IntPoly g8 = one_plus(1).pow(3) * one_plus(2).pow(2) * one_plus(3) * one_plus(4);
  return {
      one_plus(1),
      one_plus(1) * poly({2, -1, 2}),
      g4 * poly({5, -7, 5}),
      g4 * poly({16, -23, 18, -7, 18, -23, 16}),
      g6 * ehat6(),
      g6 * ehat7(),
      g8 * ehat8(),
  };
}

/// E^_n(q) for n = 2..8 (index n-2).
inline std::vector<IntPoly> ehat() {
  return {poly({1}), poly({2, -1, 2}), poly({5, -7, 5}), poly({16, -23, 18, -7, 18, -23, 16}), ehat6(), ehat7(), ehat8()};
}

/// q-gamma table for n = 2..8: entry [n-2][k], with the factor 2 on (8, 3).
inline std::vector<std::vector<IntPoly>> q_gamma_table() {
  const IntPoly p1 = one_plus(1);
  const IntPoly p1s = p1.pow(2);
  return {
      {poly({1})},
      {poly({2}), p1},
      {poly({5}), p1s * Integer(2)},
      {poly({16}), p1 * poly({7, 5, 7}), p1s * poly({2, 0, 2})},
      {poly({61}), p1s * poly({26, -5, 26}), p1s * one_plus(2) * poly({5, 7, 5})},
      {poly({272}), p1 * poly({117, 91, 103, 91, 117}), p1s * one_plus(2) * poly({1, 1, 1}) * poly({26, -5, 26}),
       p1s * one_plus(2) * one_plus(3) * poly({12, -7, 12})},
      {poly({1385}), p1s * poly({99, -21, 106, -21, 99}) * Integer(6),
       p1s * one_plus(2) * poly({63, 62, 98, 118, 98, 62, 63}) * Integer(2),
       p1.pow(3) * one_plus(2) * one_plus(3) * poly({21, -14, 48, -14, 21}) * Integer(2)},
  };
}

/// Two-sided gamma entries keyed (i, j), for n = 2..5 (index n-2). The n = 5
/// entry (1,2) is the squared-factor term st(1+st)^2.
inline std::vector<std::map<std::pair<int, int>, long>> two_sided_table() {
  return {
      {{{0, 1}, 1}},
      {{{0, 2}, 1}, {{0, 0}, 1}, {{1, 0}, 2}},
      {{{0, 3}, 2}, {{0, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 5}, {{1, 0}, 3}},
      {{{0, 4}, 3},
       {{0, 3}, 2},
       {{0, 2}, 6},
       {{0, 1}, 2},
       {{0, 0}, 3},
       {{1, 2}, 14},
       {{1, 1}, 10},
       {{1, 0}, 14},
       {{2, 0}, 16}},
  };
}

}  // namespace golden
