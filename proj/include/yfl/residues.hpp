#pragma once

// Residues of odd-row f-values modulo 2^k.
//
// Row n of the f-valued Macdonald tree is the multiset of products of subsets
// of {1, 3, ..., 2⌊n/2⌋-1}. Its histogram over the odd residues mod 2^k is
// built either by enumerating block forms or by a subset-product DP on the
// unit group: h ← h + c·h for each factor c.

#include <cstdint>
#include <string>
#include <vector>

#include "yfl/error.hpp"
#include "yfl/f_stat.hpp"
#include "yfl/macdonald.hpp"
#include "yfl/word.hpp"

namespace yfl {

class ResidueHistogram {
 public:
  ResidueHistogram() : ResidueHistogram(1) {}
  explicit ResidueHistogram(unsigned k) : k_(k), counts_(std::size_t{1} << (k - 1)) {}

  unsigned k() const noexcept { return k_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << k_; }
  std::size_t classes() const noexcept { return counts_.size(); }

  /// Odd residue of bucket j.
  std::uint64_t residue(std::size_t j) const noexcept { return 2 * j + 1; }

  const Count& count(std::uint64_t odd_residue) const { return counts_.at(odd_residue / 2); }
  Count& count(std::uint64_t odd_residue) { return counts_.at(odd_residue / 2); }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  Count total() const {
    Count t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  friend bool operator==(const ResidueHistogram&, const ResidueHistogram&) = default;

  friend ResidueHistogram operator+(ResidueHistogram a, const ResidueHistogram& b) {
    if (a.k_ != b.k_) throw invalid_input("histograms have different moduli");
    for (std::size_t j = 0; j < a.counts_.size(); ++j) a.counts_[j] += b.counts_[j];
    return a;
  }

 private:
  unsigned k_;
  std::vector<Count> counts_;  // counts_[j] counts residue 2j+1
};

/// Histogram with every residue i moved to c·i mod 2^k (c odd).
inline ResidueHistogram multiplicative_shift(const ResidueHistogram& h, std::uint64_t c) {
  if (c % 2 == 0) throw invalid_input("shift factor must be odd, got " + std::to_string(c));
  ResidueHistogram out(h.k());
  const std::uint64_t mask = h.modulus() - 1;
  const std::uint64_t cm = c & mask;
  for (std::size_t j = 0; j < h.classes(); ++j) {
    const std::uint64_t i = h.residue(j);
    out.count((cm * i) & mask) += h.counts()[j];
  }
  return out;
}

/// All m_i equal.
inline bool is_equidistributed(const ResidueHistogram& h) {
  const auto& c = h.counts();
  for (const auto& x : c)
    if (x != c.front()) return false;
  return true;
}

inline void check_modulus_pow(unsigned k) {
  if (k < 1) throw invalid_input("k must be at least 1");
  if (k > kMaxModulusPow)
    throw guard_error("k = " + std::to_string(k) + " exceeds the bucket limit " +
                      std::to_string(kMaxModulusPow));
}

/// Histogram of f_mod(w, 2^k) over the odd words of rank n, listed from block forms.
inline ResidueHistogram residue_histogram_enum(unsigned n, unsigned k) {
  check_modulus_pow(k);
  check_enumeration_guard(n);
  ResidueHistogram h(k);
  const std::uint64_t count = std::uint64_t{1} << (n / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Word w = reassemble(block_form_from_mask(n, mask));
    h.count(f_mod(w, h.modulus()).value) += 1;
  }
  return h;
}

/// Advances row by row through the odd-row histograms mod 2^k.
class OddRowScanner {
 public:
  explicit OddRowScanner(unsigned k) : hist_(check(k)) { hist_.count(1) = 1; }

  unsigned rank() const noexcept { return n_; }
  const ResidueHistogram& histogram() const noexcept { return hist_; }

  /// Moves to rank n+1. Even-to-odd steps leave the histogram unchanged;
  /// the step to rank 2m+2 folds in the factor 2m+1.
  void advance() {
    ++n_;
    if (n_ % 2 == 0) hist_ = hist_ + multiplicative_shift(hist_, n_ - 1);
  }

  void advance_to(unsigned n) {
    if (n < n_) throw invalid_input("scanner cannot move backwards");
    while (n_ < n) advance();
  }

 private:
  static unsigned check(unsigned k) {
    check_modulus_pow(k);
    return k;
  }

  ResidueHistogram hist_;
  unsigned n_ = 0;
};

/// Same contract as residue_histogram_enum, by the subset-product DP.
inline ResidueHistogram residue_histogram_dp(unsigned n, unsigned k) {
  OddRowScanner scan(k);
  scan.advance_to(n);
  return scan.histogram();
}

enum class HistogramMethod { Enumerate, DynamicProgramming };

inline ResidueHistogram residue_histogram(unsigned n, unsigned k, HistogramMethod method) {
  return method == HistogramMethod::Enumerate ? residue_histogram_enum(n, k)
                                              : residue_histogram_dp(n, k);
}

struct RowVerdict {
  unsigned n = 0;
  unsigned k = 0;
  bool flat = false;
};

struct MainTheoremReport {
  unsigned k = 0;
  std::vector<RowVerdict> rows;

  bool ok() const noexcept {
    for (const auto& r : rows)
      if (!r.flat) return false;
    return !rows.empty();
  }
};

/// Rows 2^{k-1}+2 .. 2^{k-1}+2+n_extra must all be flat mod 2^k.
inline MainTheoremReport verify_main_theorem(unsigned k, unsigned n_extra) {
  check_modulus_pow(k);
  const unsigned first = (1u << (k - 1)) + 2;
  MainTheoremReport report{k, {}};
  OddRowScanner scan(k);
  for (unsigned n = first; n <= first + n_extra; ++n) {
    scan.advance_to(n);
    report.rows.push_back({n, k, is_equidistributed(scan.histogram())});
  }
  return report;
}

struct StepCheck {
  unsigned n = 0;
  bool flat_here = false;
  bool flat_next = false;
  bool implication_ok = false;  // flat_here ⇒ flat_next
  bool identity_ok = false;     // even n: h(n+1) = h(n); odd n: h(n+1) = h(n) + n·h(n)
};

struct OneStepReport {
  unsigned k = 0;
  HistogramMethod method = HistogramMethod::DynamicProgramming;
  std::vector<StepCheck> steps;

  bool ok() const noexcept {
    for (const auto& s : steps)
      if (!s.implication_ok || !s.identity_ok) return false;
    return true;
  }
};

/// Checks the flat-propagates step and the row-step identities for n ≤ n_max.
inline OneStepReport verify_one_step(unsigned k, unsigned n_max,
                                     HistogramMethod method = HistogramMethod::DynamicProgramming) {
  check_modulus_pow(k);
  if (method == HistogramMethod::Enumerate) check_enumeration_guard(n_max + 1);
  OneStepReport report{k, method, {}};
  std::vector<ResidueHistogram> rows;
  if (method == HistogramMethod::DynamicProgramming) {
    OddRowScanner scan(k);
    for (unsigned n = 0; n <= n_max + 1; ++n) {
      scan.advance_to(n);
      rows.push_back(scan.histogram());
    }
  } else {
    for (unsigned n = 0; n <= n_max + 1; ++n) rows.push_back(residue_histogram_enum(n, k));
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    StepCheck s;
    s.n = n;
    s.flat_here = is_equidistributed(rows[n]);
    s.flat_next = is_equidistributed(rows[n + 1]);
    s.implication_ok = !s.flat_here || s.flat_next;
    s.identity_ok = n % 2 == 0 ? rows[n + 1] == rows[n]
                               : rows[n + 1] == rows[n] + multiplicative_shift(rows[n], n);
    report.steps.push_back(s);
  }
  return report;
}

enum class PiReading {
  Conforming,     // factors 1, 3, ..., 2⌊n/2⌋-1
  StrictLiteral,  // factors: every odd x ≤ n (nonconforming, exploration only)
};

struct PiMultiset {
  unsigned n = 0;
  PiReading reading = PiReading::Conforming;
  std::vector<FValue> products;  // sorted
};

inline std::vector<unsigned> pi_factors(unsigned n, PiReading reading) {
  std::vector<unsigned> xs;
  const unsigned bound = reading == PiReading::Conforming ? 2 * (n / 2) : n + 1;
  for (unsigned x = 1; x < bound; x += 2) xs.push_back(x);
  return xs;
}

/// Products of distinct odd factors (empty product included), as a sorted multiset.
inline PiMultiset pi_multiset(unsigned n, PiReading reading = PiReading::Conforming) {
  check_enumeration_guard(n);
  PiMultiset pi{n, reading, {FValue(1)}};
  for (unsigned x : pi_factors(n, reading)) {
    const std::size_t m = pi.products.size();
    for (std::size_t j = 0; j < m; ++j) pi.products.push_back(pi.products[j] * x);
  }
  std::sort(pi.products.begin(), pi.products.end());
  return pi;
}

struct ThresholdScan {
  unsigned k = 0;
  unsigned n_max = 0;
  std::vector<RowVerdict> rows;  // n = 0..n_max
  unsigned stable_from = 0;      // smallest n with rows n..n_max all flat
  unsigned bound = 0;            // 2^{k-1} + 2
};

/// Flatness verdicts for every row up to n_max; reporting only.
inline ThresholdScan scan_threshold(unsigned k, unsigned n_max) {
  check_modulus_pow(k);
  ThresholdScan out;
  out.k = k;
  out.n_max = n_max;
  out.bound = (1u << (k - 1)) + 2;
  OddRowScanner scan(k);
  for (unsigned n = 0; n <= n_max; ++n) {
    scan.advance_to(n);
    out.rows.push_back({n, k, is_equidistributed(scan.histogram())});
  }
  out.stable_from = n_max + 1;
  for (unsigned n = n_max + 1; n-- > 0;) {
    if (!out.rows[n].flat) break;
    out.stable_from = n;
  }
  return out;
}

}  // namespace yfl
