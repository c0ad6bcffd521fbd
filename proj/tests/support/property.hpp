#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "altdes/bi_poly.hpp"
#include "altdes/int_poly.hpp"
#include "altdes/permutation.hpp"

namespace prop {

inline constexpr std::uint64_t kSeed = 0x5eed'a17d'e5c0ULL;
inline constexpr int kTrials = 200;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Degree in [0, max_deg], coefficients in [-bound, bound], nonzero leading term.
  altdes::IntPoly poly(int max_deg, int bound) {
    const int deg = uniform(0, max_deg);
    std::vector<altdes::Integer> cs;
    for (int i = 0; i < deg; ++i) cs.emplace_back(uniform(-bound, bound));
    int lead = 0;
    while (lead == 0) lead = uniform(-bound, bound);
    cs.emplace_back(lead);
    return altdes::IntPoly(std::move(cs));
  }

  altdes::BiPolyTQ bipoly(int max_t, int max_q, int bound) {
    altdes::BiPolyTQ p;
    for (int k = 0; k <= uniform(0, max_t); ++k) p.add_row(static_cast<std::size_t>(k), poly(max_q, bound));
    return p;
  }

  altdes::Permutation permutation(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng_);
    return altdes::Permutation(std::move(w));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prop
