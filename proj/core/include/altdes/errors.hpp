#pragma once

#include <stdexcept>
#include <string>

namespace altdes {

// Base for every failure raised by the library. Theorem and conjecture
// checks never throw for a negative outcome; they return findings instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotPalindromic : public Error {
 public:
  using Error::Error;
};

class NonIntegralGamma : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class PrefixTooLong : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class DenominatorNotCleared : public Error {
 public:
  using Error::Error;
};

class ExpansionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace altdes
