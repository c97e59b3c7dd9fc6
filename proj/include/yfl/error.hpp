#pragma once

#include <stdexcept>
#include <string>

namespace yfl {

// Bad input: malformed words, violated preconditions, out-of-range parameters.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that is well formed but exceeds an enumeration or memory guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest rank for which rows of odd words (2^{n/2} items) are enumerated.
inline constexpr unsigned kEnumerationLimit = 40;

/// Largest rank for which full rows of F(n) are enumerated.
inline constexpr unsigned kFullRowLimit = 24;

/// Largest k for residue histograms modulo 2^k (2^{k-1} buckets).
inline constexpr unsigned kMaxModulusPow = 24;

}  // namespace yfl
