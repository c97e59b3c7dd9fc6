#pragma once

// Test-only brute force, independent of the library: words are plain digit
// strings, rows are all {1,2}-strings with the right digit sum, and f counts
// saturated chains through lower covers built from the two edge rules.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_int;

inline std::vector<std::string> row(unsigned n) {
  std::vector<std::string> out;
  // Every string over {1,2} of length ≤ n, filtered by digit sum.
  for (unsigned len = 0; len <= n; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string s;
      unsigned sum = 0;
      for (unsigned i = 0; i < len; ++i) {
        const bool two = (bits >> (len - 1 - i)) & 1u;
        s.push_back(two ? '2' : '1');
        sum += two ? 2 : 1;
      }
      if (sum == n) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::string> down(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < w.size() && w[i] == '2'; ++i) {
    std::string v = w;
    v[i] = '1';
    out.insert(v);
  }
  if (auto j = w.find('1'); j != std::string::npos) {
    std::string v = w;
    v.erase(j, 1);
    out.insert(v);
  }
  return out;
}

class ChainCounter {
 public:
  const big& operator()(const std::string& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    big total = w.empty() ? big(1) : big(0);
    for (const auto& v : down(w)) total += (*this)(v);
    return memo_.emplace(w, total).first->second;
  }

 private:
  std::map<std::string, big> memo_;
};

inline std::string text(const std::string& w) { return w.empty() ? "e" : w; }

}  // namespace oracle
