#pragma once

#include <string>
#include <utility>

namespace altdes {

/// Outcome of a theorem or conjecture check. A failed check names its first
/// counterexample in `witness`.
struct Finding {
  bool ok = true;
  std::string witness;

  static Finding pass() { return {}; }
  static Finding fail(std::string witness) { return {false, std::move(witness)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace altdes
