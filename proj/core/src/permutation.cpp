#include "altdes/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "altdes/errors.hpp"

namespace altdes {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit");
      w.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = std::min(text.find(',', pos), text.size());
      int v = 0;
      const auto part = text.substr(pos, next - pos);
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc{} || ptr != part.data() + part.size()) {
        throw std::invalid_argument("bad permutation entry");
      }
      w.push_back(v);
      pos = next + 1;
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = word_.size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

AltStats alt_stats(const Permutation& p) {
  AltStats s;
  const auto mask = alt_descent_mask(p.word());
  for (int i = 1; i < p.size(); ++i) {
    if (mask & (1U << (i - 1))) {
      s.alt_descent_set.push_back(i);
      ++s.altdes;
      s.altmaj += i;
    }
  }
  return s;
}

int three_descents(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const int x = w[i], y = w[i + 1], z = w[i + 2];
    const bool p132 = x < z && z < y;
    const bool p213 = y < x && x < z;
    const bool p321 = x > y && y > z;
    if (p132 || p213 || p321) ++count;
  }
  return count;
}

ClassicStats classic_stats(const Permutation& p) {
  ClassicStats s;
  const auto mask = descent_mask(p.word());
  s.des = std::popcount(mask);
  s.maj = mask_index_sum(mask);
  s.des3 = three_descents(p.word());
  return s;
}

std::vector<int> complement_word(std::span<const int> w) {
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto rank = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin());
    out[i] = sorted[sorted.size() - 1 - rank];
  }
  return out;
}

Permutation normalize(std::span<const int> w) {
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("normalize needs distinct letters");
  }
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
  std::vector<int> out(p.word().begin(), p.word().end());
  const int n = p.size();
  for (auto& v : out) v = n + 1 - v;
  return Permutation(std::move(out));
}

Permutation reversal(const Permutation& p) {
  return Permutation(std::vector<int>(p.word().rbegin(), p.word().rend()));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.word().size());
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(out));
}

Permutation theta(const Permutation& p) {
  return p.size() % 2 == 0 ? reversal(p) : complement(reversal(p));
}

Permutation reverse_prefix(const Permutation& p, int m) {
  if (m < 0 || 2 * m > p.size()) {
    throw PrefixTooLong("reverse_prefix needs 2m <= n (m=" + std::to_string(m) + ", n=" +
                        std::to_string(p.size()) + ")");
  }
  std::vector<int> out(p.word().begin(), p.word().end());
  std::reverse(out.begin(), out.begin() + 2 * m);
  return Permutation(std::move(out));
}

Permutation insertion(const Permutation& p, int j, InsertKind kind) {
  const int n = p.size();
  if (j < 0 || j > n) throw std::invalid_argument("insertion space out of range");
  const auto w = p.word();
  const auto split = static_cast<std::size_t>(j);
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
  out.push_back(kind == InsertKind::Min ? 0 : n + 1);
  const auto tail = complement_word(w.subspan(split));
  out.insert(out.end(), tail.begin(), tail.end());
  return kind == InsertKind::Min ? normalize(out) : Permutation(std::move(out));
}

bool is_simsun(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> cur;
  cur.reserve(w.size());
  for (int k = n; k >= 1; --k) {
    cur.clear();
    for (int v : w) {
      if (v <= k) cur.push_back(v);
    }
    for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
      if (cur[i - 1] > cur[i] && cur[i] > cur[i + 1]) return false;
    }
  }
  return true;
}

bool is_down_up(std::span<const int> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_down = (i % 2 == 0);
    if (want_down != (w[i] > w[i + 1])) return false;
  }
  return true;
}

std::string ab_word(std::uint32_t mask, int n) {
  std::string s;
  for (int i = 0; i + 1 < n; ++i) s += (mask & (1U << i)) ? 'b' : 'a';
  return s;
}

std::optional<std::string> ab_to_cd(std::string_view ab) {
  std::string out;
  for (std::size_t i = 0; i < ab.size(); ++i) {
    if (ab[i] == 'b') {
      if (i + 1 >= ab.size() || ab[i + 1] != 'a') return std::nullopt;
      out += 'd';
      ++i;
    } else {
      out += 'c';
    }
  }
  return out;
}

SimsunInfo simsun_tests(const Permutation& p) {
  SimsunInfo info;
  info.is_simsun = is_simsun(p.word());
  info.is_down_up = is_down_up(p.word());
  if (info.is_simsun && (p.size() == 0 || p.at(p.size()) == p.size())) {
    info.cd_word = ab_to_cd(ab_word(descent_mask(p.word()), p.size()));
  }
  return info;
}

}  // namespace altdes
