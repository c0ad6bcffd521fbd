#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altdes {

/// A permutation of [n] written as the word pi_1 ... pi_n.
///
/// Positions are 1-based in every public accessor and statistic, matching the
/// parity convention of the alternating descent set. n = 0 is the empty
/// permutation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless word is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Accepts "942357861" (n <= 9) or a comma-separated list "10,2,1,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  /// pi_i for 1 <= i <= n.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

  /// Concatenated digits for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Statistics -----------------------------------------------------------------

struct AltStats {
  std::vector<int> alt_descent_set;  // ascending positions
  int altdes = 0;
  int altmaj = 0;
};

struct ClassicStats {
  int des = 0;
  int maj = 0;
  int des3 = 0;
};

/// i is an alternating descent iff (i odd and pi_i > pi_{i+1}) or
/// (i even and pi_i < pi_{i+1}).
AltStats alt_stats(const Permutation& p);
ClassicStats classic_stats(const Permutation& p);

// Word-level kernels shared with the enumerators. Bit i-1 of a mask marks
// position i.
inline std::uint32_t alt_descent_mask(std::span<const int> w) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    // position i+1 is odd when i is even
    const bool hit = (i % 2 == 0) ? (w[i] > w[i + 1]) : (w[i] < w[i + 1]);
    if (hit) mask |= 1U << i;
  }
  return mask;
}

inline std::uint32_t descent_mask(std::span<const int> w) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) mask |= 1U << i;
  }
  return mask;
}

/// Sum of positions in a mask.
inline int mask_index_sum(std::uint32_t mask) {
  int s = 0;
  for (int i = 1; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) s += i;
  }
  return s;
}

/// Number of positions i <= n-2 whose window normalizes to 132, 213 or 321.
int three_descents(std::span<const int> w);

// Transforms -----------------------------------------------------------------

/// The l-th largest letter becomes the l-th smallest; works on any word of
/// distinct integers.
std::vector<int> complement_word(std::span<const int> w);
/// Replaces the i-th smallest letter by i.
Permutation normalize(std::span<const int> w);

Permutation complement(const Permutation& p);
Permutation reversal(const Permutation& p);
Permutation inverse(const Permutation& p);
/// R for even n, C o R for odd n.
Permutation theta(const Permutation& p);
/// Reverses positions 1..2m; throws PrefixTooLong when 2m > n.
Permutation reverse_prefix(const Permutation& p, int m);

enum class InsertKind { Min, Max };

/// min: N(pi_1..pi_j 0 C(pi_{j+1}..pi_n)); max: pi_1..pi_j (n+1) C(pi_{j+1}..pi_n).
Permutation insertion(const Permutation& p, int j, InsertKind kind);

// Simsun ---------------------------------------------------------------------

struct SimsunInfo {
  bool is_simsun = false;
  bool is_down_up = false;
  /// Defined only when the permutation is Simsun and ends with n.
  std::optional<std::string> cd_word;
};

/// No double descent pi_{i-1} > pi_i > pi_{i+1} survives removing n, n-1, ...
bool is_simsun(std::span<const int> w);
/// pi_1 > pi_2 < pi_3 > ...
bool is_down_up(std::span<const int> w);
/// Writes u_S over {a,b} for a descent mask of a length-n word.
std::string ab_word(std::uint32_t mask, int n);
/// ba -> d, remaining a -> c. Returns nullopt if a b is left unpaired.
std::optional<std::string> ab_to_cd(std::string_view ab);

SimsunInfo simsun_tests(const Permutation& p);

}  // namespace altdes
