#pragma once

// Odd words and the Macdonald tree they induce in the Young-Fibonacci graph.
//
// An odd word (f_w odd) is an optional leading 1 followed by blocks, each
// block being "2" or "11". Blocks are indexed right to left from 0; a "2" at
// index i contributes the factor 2i+1 to f_w.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yfl/error.hpp"
#include "yfl/f_stat.hpp"
#include "yfl/word.hpp"

namespace yfl {

enum class Block : std::uint8_t { Two, OneOne };

struct BlockForm {
  bool leading_one = false;
  std::vector<Block> blocks;  // blocks[i] is a_i, counted from the right

  unsigned rank() const noexcept {
    return static_cast<unsigned>(2 * blocks.size()) + (leading_one ? 1u : 0u);
  }

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Position (0-based, from the left) of the first 2 that has an odd number of
/// 1s to its right, if any.
inline std::optional<std::size_t> first_odd_violation(const Word& w) {
  std::optional<std::size_t> found;
  unsigned ones = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == 1)
      ++ones;
    else if (ones % 2 == 1)
      found = i;
  }
  return found;
}

/// True iff every 2 in w has an even number of 1s to its right.
inline bool is_odd_word(const Word& w) { return !first_odd_violation(w).has_value(); }

inline BlockForm block_decompose(const Word& w) {
  if (auto bad = first_odd_violation(w))
    throw invalid_input("not an odd word: " + w.str() + " (the 2 at position " +
                        std::to_string(*bad + 1) + " has an odd number of 1s to its right)");
  BlockForm form;
  std::size_t i = 0;
  if (w.rank() % 2 == 1) {
    form.leading_one = true;
    i = 1;
  }
  std::vector<Block> left_to_right;
  while (i < w.size()) {
    if (w[i] == 2) {
      left_to_right.push_back(Block::Two);
      i += 1;
    } else {
      left_to_right.push_back(Block::OneOne);
      i += 2;
    }
  }
  form.blocks.assign(left_to_right.rbegin(), left_to_right.rend());
  return form;
}

inline Word reassemble(const BlockForm& form) {
  Word w;
  if (form.leading_one) w.push_back(1);
  for (auto it = form.blocks.rbegin(); it != form.blocks.rend(); ++it) {
    if (*it == Block::Two) {
      w.push_back(2);
    } else {
      w.push_back(1);
      w.push_back(1);
    }
  }
  return w;
}

/// ∏ (2i+1) over the indices i with a_i = 2.
inline FValue f_odd_product(const BlockForm& form) {
  FValue f = 1;
  for (std::size_t i = 0; i < form.blocks.size(); ++i)
    if (form.blocks[i] == Block::Two) f *= 2 * i + 1;
  return f;
}

/// Block form of rank n whose Two-blocks are the set bits of `mask`.
inline BlockForm block_form_from_mask(unsigned n, std::uint64_t mask) {
  BlockForm form;
  form.leading_one = n % 2 == 1;
  form.blocks.resize(n / 2);
  for (std::size_t i = 0; i < form.blocks.size(); ++i)
    form.blocks[i] = (mask >> i) & 1u ? Block::Two : Block::OneOne;
  return form;
}

inline void check_enumeration_guard(unsigned n) {
  if (n > kEnumerationLimit)
    throw guard_error("rank " + std::to_string(n) + " exceeds the enumeration limit " +
                      std::to_string(kEnumerationLimit));
}

/// All odd words of rank n, generated from block forms, canonical order.
inline std::vector<Word> enumerate_odd_words(unsigned n) {
  check_enumeration_guard(n);
  const std::uint64_t count = std::uint64_t{1} << (n / 2);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    out.push_back(reassemble(block_form_from_mask(n, mask)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Odd children in the Macdonald tree: [1w] at even rank, [11v, 2v] at odd
/// rank where w = 1v.
inline std::vector<Word> macdonald_children(const Word& w) {
  if (!is_odd_word(w)) throw invalid_input("not an odd word: " + w.str());
  if (w.rank() % 2 == 0) return {w.prepend({1})};
  Word v(std::vector<Word::digit_type>(w.begin() + 1, w.end()));
  return {v.prepend({1, 1}), v.prepend({2})};
}

struct MacdonaldNode {
  Word word;
  FValue f = 1;
  std::vector<MacdonaldNode> children;
};

struct MacdonaldTree {
  MacdonaldNode root;
  unsigned max_rank = 0;

  /// Nodes of rank n in breadth-first (left-to-right) order.
  std::vector<const MacdonaldNode*> row(unsigned n) const {
    std::vector<const MacdonaldNode*> level{&root};
    for (unsigned r = 0; r < n; ++r) {
      std::vector<const MacdonaldNode*> next;
      for (auto* node : level)
        for (const auto& c : node->children) next.push_back(&c);
      level = std::move(next);
    }
    return level;
  }

  /// Node labelled w, found by walking down from the root, or nullptr.
  const MacdonaldNode* find(const Word& w) const {
    if (w.rank() > max_rank || !is_odd_word(w)) return nullptr;
    // The path from the root is recovered by peeling the leftmost block.
    std::vector<Word> path{w};
    Word cur = w;
    while (!cur.empty()) {
      if (cur.rank() % 2 == 1) {
        cur = Word(std::vector<Word::digit_type>(cur.begin() + 1, cur.end()));
      } else if (cur[0] == 2) {
        cur = Word(std::vector<Word::digit_type>(cur.begin() + 1, cur.end())).prepend({1});
      } else {
        cur = Word(std::vector<Word::digit_type>(cur.begin() + 1, cur.end()));
      }
      path.push_back(cur);
    }
    const MacdonaldNode* node = &root;
    for (auto it = path.rbegin() + 1; it != path.rend(); ++it) {
      const MacdonaldNode* next = nullptr;
      for (const auto& c : node->children)
        if (c.word == *it) next = &c;
      if (!next) return nullptr;
      node = next;
    }
    return node;
  }

  std::size_t node_count() const {
    std::size_t total = 0;
    for (unsigned n = 0; n <= max_rank; ++n) total += row(n).size();
    return total;
  }
};

namespace detail {

inline void grow(MacdonaldNode& node, unsigned max_rank) {
  if (node.word.rank() >= max_rank) return;
  for (auto& child : macdonald_children(node.word)) {
    MacdonaldNode c;
    c.f = f_odd_product(block_decompose(child));
    c.word = std::move(child);
    node.children.push_back(std::move(c));
  }
  for (auto& c : node.children) grow(c, max_rank);
}

}  // namespace detail

/// Macdonald tree from ∅ down to depth max_rank, each node carrying f.
inline MacdonaldTree build_tree(unsigned max_rank) {
  MacdonaldTree tree;
  tree.max_rank = max_rank;
  tree.root.word = Word{};
  tree.root.f = 1;
  detail::grow(tree.root, max_rank);
  return tree;
}

/// Sorted multiset {f_w : w ∈ F_odd(n)}, straight from block masks.
inline std::vector<FValue> f_valued_row(unsigned n) {
  check_enumeration_guard(n);
  const unsigned k = n / 2;
  std::vector<FValue> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    FValue f = 1;
    for (unsigned i = 0; i < k; ++i)
      if ((mask >> i) & 1u) f *= 2 * i + 1;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Counts odd words of rank n without listing them: right-to-left automaton on
/// the parity of 1s seen, where a 2 is allowed only at even parity.
inline FValue count_odd_words(unsigned n) {
  // ways[r][p]: suffixes of rank r with parity p of 1s.
  std::vector<std::array<FValue, 2>> ways(n + 1);
  ways[0][0] = 1;
  for (unsigned r = 1; r <= n; ++r) {
    ways[r][0] = ways[r - 1][1];
    ways[r][1] = ways[r - 1][0];
    if (r >= 2) ways[r][0] += ways[r - 2][0];
  }
  return ways[n][0] + ways[n][1];
}

struct SelfSimilarity {
  Word root;
  unsigned depth_checked = 0;   // ranks of v compared in each grandchild copy
  std::size_t nodes_checked = 0;
  bool spine_ok = false;        // w has the single child 1w with children [11w, 2w]
  bool structure_ok = false;    // v ↦ v·11w and v ↦ v·2w are edge-preserving bijections
  bool labels_ok = false;       // f with suffix-shifted factors
  bool literal_scaling = false; // f(v·11w) = f_v·f_w, f(v·2w) = (2m+1)·f_v·f_w
  std::string first_failure;

  bool holds() const noexcept { return spine_ok && structure_ok && labels_ok; }
};

namespace detail {

inline void compare_copy(const MacdonaldNode& model, const MacdonaldNode* image,
                         const Word& suffix, const FValue& scale, unsigned depth_left,
                         SelfSimilarity& out) {
  auto fail = [&](std::string why) {
    if (out.first_failure.empty()) out.first_failure = std::move(why);
  };
  const Word expected = model.word.concat(suffix);
  if (!image || image->word != expected) {
    out.structure_ok = false;
    fail("missing image of " + model.word.str() + " at " + expected.str());
    return;
  }
  ++out.nodes_checked;
  const FValue shifted = f_product_shifted(model.word, suffix.rank());
  if (image->f != scale * shifted) {
    out.labels_ok = false;
    fail("label mismatch at " + expected.str());
  }
  if (image->f != scale * model.f) out.literal_scaling = false;
  if (depth_left == 0) {
    // The image sits at the tree's last rank, so it must be a leaf.
    if (!image->children.empty()) {
      out.structure_ok = false;
      fail("image " + expected.str() + " extends past the compared depth");
    }
    return;
  }
  if (model.children.size() != image->children.size()) {
    out.structure_ok = false;
    fail("child count differs at " + expected.str());
    return;
  }
  for (std::size_t i = 0; i < model.children.size(); ++i)
    compare_copy(model.children[i], &image->children[i], suffix, scale, depth_left - 1, out);
}

}  // namespace detail

/// Checks that the subtree under an even-rank odd word w is 1w over two
/// copies of the whole tree, suffixed by 11w and 2w, with f-labels
///   f(v·11w) = f_w · f⁺(v),   f(v·2w) = (2m+1) · f_w · f⁺(v),
/// where f⁺ is the product formula with suffix sums raised by rank(w)+2.
inline SelfSimilarity verify_subtree_self_similarity(const MacdonaldTree& tree, const Word& w) {
  if (!is_odd_word(w)) throw invalid_input("not an odd word: " + w.str());
  const unsigned r = w.rank();
  if (r % 2 == 1) throw invalid_input("subtree root must have even rank: " + w.str());
  if (r + 2 > tree.max_rank)
    throw invalid_input("tree of rank " + std::to_string(tree.max_rank) +
                        " is too shallow for a subtree at " + w.str());

  SelfSimilarity out;
  out.root = w;
  out.structure_ok = out.labels_ok = out.literal_scaling = true;
  out.depth_checked = tree.max_rank - (r + 2);

  const MacdonaldNode* node = tree.find(w);
  const Word one_w = w.prepend({1});
  const Word oneone_w = w.prepend({1, 1});
  const Word two_w = w.prepend({2});
  out.spine_ok = node && node->children.size() == 1 && node->children[0].word == one_w &&
                 node->children[0].children.size() == 2 &&
                 node->children[0].children[0].word == oneone_w &&
                 node->children[0].children[1].word == two_w;
  if (!out.spine_ok) {
    out.structure_ok = out.labels_ok = out.literal_scaling = false;
    out.first_failure = "spine under " + w.str() + " is not 1w -> {11w, 2w}";
    return out;
  }
  const FValue& fw = node->f;
  const auto& grand = node->children[0].children;
  detail::compare_copy(tree.root, &grand[0], oneone_w, fw, out.depth_checked, out);
  detail::compare_copy(tree.root, &grand[1], two_w, FValue(r + 1) * fw, out.depth_checked, out);
  return out;
}

}  // namespace yfl
