#include "yfl/word.hpp"

#include <set>

#include "gtest/gtest.h"
#include "oracle.hpp"

namespace yfl {
namespace {

std::set<std::string> texts(const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

TEST(Word, Parse) {
  EXPECT_EQ(parse_word("211"), (Word{2, 1, 1}));
  EXPECT_EQ(parse_word("e"), Word{});
  EXPECT_EQ(parse_word(""), Word{});
  try {
    parse_word("213");
    FAIL() << "expected an error";
  } catch (const invalid_input& e) {
    EXPECT_STREQ(e.what(), "invalid digit '3' at position 3");
  }
  EXPECT_THROW(parse_word("e1"), invalid_input);
  EXPECT_THROW(parse_word("12 "), invalid_input);
  EXPECT_THROW((Word{1, 3}), invalid_input);
}

TEST(Word, Rank) {
  EXPECT_EQ(rank(Word{}), 0u);
  EXPECT_EQ(rank(Word{2, 1}), 3u);
  EXPECT_EQ(rank(Word{2, 2, 2}), 6u);
}

TEST(Word, CanonicalOrder) {
  EXPECT_LT(parse_word("1"), parse_word("11"));
  EXPECT_LT(parse_word("112"), parse_word("12"));
  EXPECT_LT(parse_word("12"), parse_word("2"));
}

TEST(Word, CoversDown) {
  EXPECT_EQ(texts(covers_down(Word{2, 1})), (std::set<std::string>{"11", "2"}));
  EXPECT_EQ(texts(covers_down(Word{2, 2, 1})), (std::set<std::string>{"121", "211", "22"}));
  EXPECT_TRUE(covers_down(Word{}).empty());
  // Only 2s in the leading run may turn into 1s.
  EXPECT_EQ(texts(covers_down(parse_word("1222"))), (std::set<std::string>{"222"}));
}

TEST(Word, CoversUp) {
  EXPECT_EQ(texts(covers_up(Word{})), (std::set<std::string>{"1"}));
  EXPECT_EQ(texts(covers_up(Word{1})), (std::set<std::string>{"11", "2"}));
  EXPECT_EQ(texts(covers_up(Word{2, 2})), (std::set<std::string>{"122", "212", "221"}));
}

TEST(Word, EnumerateRank) {
  EXPECT_EQ(enumerate_rank(0).words, std::vector<Word>{Word{}});
  EXPECT_EQ(enumerate_rank(2).words, (std::vector<Word>{Word{1, 1}, Word{2}}));
  EXPECT_EQ(enumerate_rank(4).words.size(), 5u);
}

TEST(Word, RowsMatchBruteForce) {
  for (unsigned n = 0; n <= 14; ++n) {
    const auto row = enumerate_rank(n);
    std::vector<std::string> got;
    for (const auto& w : row.words) got.push_back(w.str(""));
    EXPECT_EQ(got, oracle::row(n)) << "rank " << n;
    EXPECT_TRUE(std::is_sorted(row.words.begin(), row.words.end()));
  }
}

TEST(Word, RowCountsFollowRecurrence) {
  std::vector<std::size_t> sizes;
  for (unsigned n = 0; n <= 20; ++n) sizes.push_back(enumerate_rank(n).words.size());
  EXPECT_EQ(sizes[0], 1u);
  EXPECT_EQ(sizes[1], 1u);
  for (unsigned n = 2; n <= 20; ++n) EXPECT_EQ(sizes[n], sizes[n - 1] + sizes[n - 2]);
  EXPECT_EQ(sizes[20], 10946u);
}

TEST(Word, CoverProperties) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (const auto& w : enumerate_rank(n).words) {
      const auto down = covers_down(w);
      const auto up = covers_up(w);
      ASSERT_EQ(up.size(), down.size() + 1) << w.str();
      for (const auto& v : down) {
        EXPECT_EQ(v.rank() + 1, n);
        const auto back = covers_up(v);
        EXPECT_NE(std::find(back.begin(), back.end(), w), back.end()) << v.str() << " < " << w.str();
      }
      for (const auto& u : up) {
        EXPECT_EQ(u.rank(), n + 1);
        const auto back = covers_down(u);
        EXPECT_NE(std::find(back.begin(), back.end(), w), back.end()) << w.str() << " < " << u.str();
      }
      // Against the string oracle.
      std::set<std::string> expected;
      for (const auto& s : oracle::down(w.str(""))) expected.insert(oracle::text(s));
      EXPECT_EQ(texts(down), expected);
    }
  }
}

}  // namespace
}  // namespace yfl
