#pragma once

// Coprimality of f_w to a prime p.
//
// f_w is coprime to p iff w = a_0 a_1 ... a_k with rank(a_0) < p and every
// other a_i of rank exactly p. Counting such words gives
// C_p(pm + r) = C_p(p)^m · C_p(r).

#include <cstdint>
#include <string>
#include <vector>

#include "yfl/error.hpp"
#include "yfl/f_stat.hpp"
#include "yfl/word.hpp"

namespace yfl {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline void check_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw invalid_input("prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
}

/// f_w mod p ≠ 0.
inline bool is_coprime_direct(const Word& w, std::uint64_t p) {
  check_prime(p);
  return f_mod(w, p).value != 0;
}

/// Whether w splits as a_0 (rank n mod p) followed by rank-p blocks.
inline bool is_coprime_structural(const Word& w, std::uint64_t p) {
  check_prime(p);
  const std::uint64_t n = w.rank();
  // rank(a_0) ≡ n (mod p) and rank(a_0) < p leave one candidate.
  std::uint64_t next_cut = n % p;
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (prefix == next_cut) {
      next_cut += p;
    } else if (prefix > next_cut) {
      return false;  // a 2 straddles the cut
    }
    if (i < w.size()) prefix += w[i];
  }
  return next_cut > n;
}

enum class CountMode { Enumerate, ClosedForm };

struct CoprimeCount {
  std::uint64_t p = 2;
  unsigned n = 0;
  Count count = 0;
};

inline void check_full_row_guard(unsigned n) {
  if (n > kFullRowLimit)
    throw guard_error("rank " + std::to_string(n) + " exceeds the full-row limit " +
                      std::to_string(kFullRowLimit));
}

/// C_p(n) by enumerating F(n), or as C_p(p)^m · C_p(r) from enumerated base values.
inline CoprimeCount coprime_count(std::uint64_t p, unsigned n, CountMode mode = CountMode::Enumerate) {
  check_prime(p);
  auto enumerate = [p](unsigned rank) {
    check_full_row_guard(rank);
    Count c = 0;
    for (const auto& w : enumerate_rank(rank).words)
      if (f_mod(w, p).value != 0) ++c;
    return c;
  };
  if (mode == CountMode::Enumerate) return {p, n, enumerate(n)};
  if (p > kFullRowLimit)
    throw guard_error("closed form needs C_p(p) by enumeration; p = " + std::to_string(p) +
                      " exceeds the full-row limit");
  const unsigned m = static_cast<unsigned>(n / p);
  const unsigned r = static_cast<unsigned>(n % p);
  return {p, n, boost::multiprecision::pow(enumerate(static_cast<unsigned>(p)), m) * enumerate(r)};
}

struct PrimeResidueHistogram {
  std::uint64_t p = 3;
  unsigned n = 0;
  std::vector<Count> counts;  // counts[i-1] for residue i in 1..p-1

  const Count& count(std::uint64_t residue) const { return counts.at(residue - 1); }

  bool flat() const {
    for (const auto& c : counts)
      if (c != counts.front()) return false;
    return true;
  }
};

/// Histogram of f_w mod p over rank-n words with f_w coprime to p. Reporting only.
inline PrimeResidueHistogram residue_distribution_mod_p(unsigned n, std::uint64_t p) {
  check_prime(p);
  if (p == 2) throw invalid_input("residue distribution needs an odd prime");
  check_full_row_guard(n);
  if (p > (std::uint64_t{1} << 24)) throw guard_error("prime too large for a residue table");
  PrimeResidueHistogram h{p, n, std::vector<Count>(p - 1)};
  for (const auto& w : enumerate_rank(n).words) {
    const auto r = f_mod(w, p).value;
    if (r != 0) h.counts[r - 1] += 1;
  }
  return h;
}

}  // namespace yfl
