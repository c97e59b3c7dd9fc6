#pragma once

// Words over {1, 2}: the elements of the Young-Fibonacci lattice, their
// rank, lower and upper covers, and rank rows in canonical order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "yfl/error.hpp"

namespace yfl {

class Word {
 public:
  using digit_type = std::uint8_t;

  Word() = default;
  Word(std::initializer_list<int> digits) {
    digits_.reserve(digits.size());
    for (int d : digits) push_back(d);
  }
  explicit Word(std::vector<digit_type> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) check_digit(d);
  }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  digit_type operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<digit_type>& digits() const noexcept { return digits_; }
  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  void push_back(int d) {
    check_digit(d);
    digits_.push_back(static_cast<digit_type>(d));
  }

  /// Sum of digits.
  unsigned rank() const noexcept {
    unsigned r = 0;
    for (auto d : digits_) r += d;
    return r;
  }

  bool contains_one() const noexcept {
    for (auto d : digits_)
      if (d == 1) return true;
    return false;
  }

  /// Length of the maximal run of 2s at the left end.
  std::size_t leading_twos() const noexcept {
    std::size_t a = 0;
    while (a < digits_.size() && digits_[a] == 2) ++a;
    return a;
  }

  /// Concatenation: digits of *this followed by digits of suffix.
  Word concat(const Word& suffix) const {
    Word out = *this;
    out.digits_.insert(out.digits_.end(), suffix.digits_.begin(),
                       suffix.digits_.end());
    return out;
  }

  /// Word with `prefix` placed in front.
  Word prepend(std::initializer_list<int> prefix) const {
    Word out(prefix);
    return out.concat(*this);
  }

  /// Digit string, e.g. "211"; the empty word renders as `empty_token`.
  std::string str(std::string_view empty_token = "e") const {
    if (digits_.empty()) return std::string(empty_token);
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  // Lexicographic on digit sequences with 1 < 2 (the canonical order).
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  static void check_digit(int d) {
    if (d != 1 && d != 2)
      throw invalid_input("word digit must be 1 or 2, got " + std::to_string(d));
  }

  std::vector<digit_type> digits_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    // FNV-1a over the digits; length is implied by the terminator mix.
    std::size_t h = 1469598103934665603ull;
    for (auto d : w) {
      h ^= d;
      h *= 1099511628211ull;
    }
    h ^= w.size();
    h *= 1099511628211ull;
    return h;
  }
};

/// Parses a digit string over {1, 2}. "e" (or the empty string) is the empty word.
inline Word parse_word(std::string_view text) {
  Word w;
  if (text == "e") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '1' && c != '2')
      throw invalid_input("invalid digit '" + std::string(1, c) + "' at position " +
                          std::to_string(i + 1));
    w.push_back(c - '0');
  }
  return w;
}

inline unsigned rank(const Word& w) noexcept { return w.rank(); }

/// Lower covers w⁻: each 2 in the leading 2-run turned into a 1, plus the
/// word with its leftmost 1 removed. Sorted canonically.
inline std::vector<Word> covers_down(const Word& w) {
  std::vector<Word> out;
  const auto& d = w.digits();
  const std::size_t a = w.leading_twos();
  for (std::size_t i = 0; i < a; ++i) {
    auto digits = d;
    digits[i] = 1;
    out.emplace_back(std::move(digits));
  }
  if (a < d.size()) {
    // d[a] is the leftmost 1.
    auto digits = d;
    digits.erase(digits.begin() + static_cast<std::ptrdiff_t>(a));
    out.emplace_back(std::move(digits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Upper covers w⁺, the inverse of covers_down: a 1 inserted at each of the
/// a+1 slots in or next to the leading 2-run (w = 2^a t), plus the leftmost 1
/// turned into a 2 when w has a 1. Sorted canonically.
inline std::vector<Word> covers_up(const Word& w) {
  std::vector<Word> out;
  const auto& d = w.digits();
  const std::size_t a = w.leading_twos();
  for (std::size_t i = 0; i <= a; ++i) {
    auto digits = d;
    digits.insert(digits.begin() + static_cast<std::ptrdiff_t>(i), 1);
    out.emplace_back(std::move(digits));
  }
  if (a < d.size()) {
    auto digits = d;
    digits[a] = 2;
    out.emplace_back(std::move(digits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct RankRow {
  unsigned rank = 0;
  std::vector<Word> words;
};

namespace detail {

inline void enumerate_into(unsigned remaining, std::vector<Word::digit_type>& prefix,
                           std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // 1 before 2 keeps the output in canonical order: no word of a row is a
  // proper prefix of another.
  prefix.push_back(1);
  enumerate_into(remaining - 1, prefix, out);
  prefix.pop_back();
  if (remaining >= 2) {
    prefix.push_back(2);
    enumerate_into(remaining - 2, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All words of rank n in canonical order.
inline RankRow enumerate_rank(unsigned n) {
  RankRow row{n, {}};
  std::vector<Word::digit_type> prefix;
  prefix.reserve(n);
  detail::enumerate_into(n, prefix, row.words);
  return row;
}

/// Words of rank n passing `pred`, canonical order.
template <class Pred>
std::vector<Word> filter_rank(unsigned n, Pred&& pred) {
  auto row = enumerate_rank(n);
  std::vector<Word> out;
  for (auto& w : row.words)
    if (std::invoke(pred, w)) out.push_back(std::move(w));
  return out;
}

}  // namespace yfl
