#pragma once

// The f-statistic: number of saturated chains from the empty word.
//
// f_product is the production path (one pass, suffix-sum factors).
// f_recursive sums f over lower covers and serves as an independent oracle.

#include <cstdint>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "yfl/error.hpp"
#include "yfl/word.hpp"

namespace yfl {

using FValue = boost::multiprecision::cpp_int;

// Wide nonnegative counter for row sizes that outgrow 64 bits.
using Count = boost::multiprecision::cpp_int;

struct Residue {
  std::uint64_t modulus = 2;
  std::uint64_t value = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::string to_decimal(const FValue& v) { return v.str(); }

/// Product over each 2 of (suffix sum from that 2, plus `offset`, minus 1).
///
/// With offset = rank(u) this is f(w·u) / f(u): appending a suffix of rank s
/// raises every suffix sum in w by s.
inline FValue f_product_shifted(const Word& w, unsigned offset) {
  FValue f = 1;
  unsigned suffix = offset;
  for (std::size_t i = w.size(); i-- > 0;) {
    suffix += w[i];
    if (w[i] == 2) f *= suffix - 1;
  }
  return f;
}

inline FValue f_product(const Word& w) { return f_product_shifted(w, 0); }

namespace detail {

inline const FValue& f_recursive_memo(const Word& w,
                                      std::unordered_map<Word, FValue, WordHash>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  FValue sum = 0;
  if (w.empty()) {
    sum = 1;
  } else {
    for (const auto& v : covers_down(w)) sum += f_recursive_memo(v, memo);
  }
  return memo.emplace(w, std::move(sum)).first->second;
}

}  // namespace detail

/// f_w = Σ_{v ∈ w⁻} f_v with f_∅ = 1. The memo lives for one call.
inline FValue f_recursive(const Word& w) {
  std::unordered_map<Word, FValue, WordHash> memo;
  return detail::f_recursive_memo(w, memo);
}

/// Memo shared across calls, for callers sweeping whole rows.
class FRecursiveCache {
 public:
  const FValue& operator()(const Word& w) { return detail::f_recursive_memo(w, memo_); }

 private:
  std::unordered_map<Word, FValue, WordHash> memo_;
};

/// f_w mod m with every intermediate product reduced.
inline Residue f_mod(const Word& w, std::uint64_t m) {
  if (m < 2) throw invalid_input("modulus must be at least 2, got " + std::to_string(m));
  unsigned __int128 acc = 1 % m;
  std::uint64_t suffix = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    suffix += w[i];
    if (w[i] == 2) acc = acc * ((suffix - 1) % m) % m;
  }
  return Residue{m, static_cast<std::uint64_t>(acc)};
}

}  // namespace yfl
