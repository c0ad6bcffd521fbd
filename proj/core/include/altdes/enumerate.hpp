#pragma once

#include <algorithm>
#include <atomic>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace altdes {

/// Visits every permutation of [n] in lexicographic order within partitions
/// keyed by the first letter.
///
/// Each partition accumulates into its own copy of `init`; partitions are
/// merged in first-letter order with `merge(into, from)`, so the result does
/// not depend on `jobs` or on scheduling. `visit(word, acc)` receives a
/// span over the current word.
template <class Acc, class Visit, class Merge>
Acc enumerate_permutations(int n, unsigned jobs, const Acc& init, Visit visit, Merge merge) {
  if (n <= 1) {
    Acc acc = init;
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)), 1);
    visit(std::span<const int>(w), acc);
    return acc;
  }
  const auto parts = static_cast<std::size_t>(n);
  std::vector<Acc> partial(parts, init);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    std::vector<int> w(parts);
    for (std::size_t part; (part = next.fetch_add(1)) < parts;) {
      const int first = static_cast<int>(part) + 1;
      w[0] = first;
      int v = 1;
      for (std::size_t i = 1; i < parts; ++i, ++v) {
        if (v == first) ++v;
        w[i] = v;
      }
      Acc& acc = partial[part];
      do {
        visit(std::span<const int>(w), acc);
      } while (std::next_permutation(w.begin() + 1, w.end()));
    }
  };

  const unsigned threads = std::clamp<unsigned>(jobs, 1U, static_cast<unsigned>(parts));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Acc result = init;
  for (auto& p : partial) merge(result, p);
  return result;
}

}  // namespace altdes
