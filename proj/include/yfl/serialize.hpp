#pragma once

// Text formats: DOT and JSON for trees, CSV and JSON for histograms and
// coprime-count tables. f-values are always decimal strings in JSON.

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "yfl/macdonald.hpp"
#include "yfl/primes.hpp"
#include "yfl/residues.hpp"

namespace yfl {

using json = nlohmann::ordered_json;

inline std::string dot_label(const MacdonaldNode& node, bool f_valued) {
  std::string label = node.word.str();
  if (f_valued) label += " : " + to_decimal(node.f);
  return label;
}

/// Undirected DOT graph; node ids are word texts with "e" for the root.
inline void write_dot(std::ostream& os, const MacdonaldTree& tree, bool f_valued) {
  os << "graph macdonald {\n";
  os << "  rankdir=BT;\n";
  for (unsigned n = 0; n <= tree.max_rank; ++n)
    for (const auto* node : tree.row(n))
      os << "  \"" << node->word.str() << "\" [label=\"" << dot_label(*node, f_valued) << "\"];\n";
  for (unsigned n = 0; n < tree.max_rank; ++n)
    for (const auto* node : tree.row(n))
      for (const auto& c : node->children)
        os << "  \"" << node->word.str() << "\" -- \"" << c.word.str() << "\";\n";
  os << "}\n";
}

inline json node_to_json(const MacdonaldNode& node) {
  json j;
  j["word"] = node.word.str("");
  j["rank"] = node.word.rank();
  j["f"] = to_decimal(node.f);
  j["children"] = json::array();
  for (const auto& c : node.children) j["children"].push_back(node_to_json(c));
  return j;
}

inline json tree_to_json(const MacdonaldTree& tree) {
  json j;
  j["max_rank"] = tree.max_rank;
  j["root"] = node_to_json(tree.root);
  return j;
}

inline void write_csv(std::ostream& os, const ResidueHistogram& h) {
  os << "residue,count\n";
  for (std::size_t j = 0; j < h.classes(); ++j)
    os << h.residue(j) << ',' << h.counts()[j].str() << '\n';
}

inline void write_csv(std::ostream& os, const PrimeResidueHistogram& h) {
  os << "residue,count\n";
  for (std::size_t i = 1; i < h.p; ++i) os << i << ',' << h.count(i).str() << '\n';
}

inline json histogram_to_json(unsigned n, const ResidueHistogram& h) {
  json j;
  j["n"] = n;
  j["modulus"] = h.modulus();
  json counts = json::array();
  for (std::size_t jdx = 0; jdx < h.classes(); ++jdx)
    counts.push_back({{"residue", h.residue(jdx)}, {"count", h.counts()[jdx].str()}});
  j["counts"] = std::move(counts);
  j["flat"] = is_equidistributed(h);
  return j;
}

inline json histogram_to_json(const PrimeResidueHistogram& h) {
  json j;
  j["n"] = h.n;
  j["modulus"] = h.p;
  json counts = json::array();
  for (std::size_t i = 1; i < h.p; ++i)
    counts.push_back({{"residue", i}, {"count", h.count(i).str()}});
  j["counts"] = std::move(counts);
  j["flat"] = h.flat();
  return j;
}

struct CoprimeTableRow {
  unsigned n = 0;
  Count count = 0;
  Count closed_form_count = 0;
  bool agree() const { return count == closed_form_count; }
};

/// Enumerated and closed-form C_p(n) for n = 0..n_max.
inline std::vector<CoprimeTableRow> coprime_table(std::uint64_t p, unsigned n_max) {
  check_full_row_guard(n_max);
  std::vector<CoprimeTableRow> rows;
  for (unsigned n = 0; n <= n_max; ++n)
    rows.push_back({n, coprime_count(p, n, CountMode::Enumerate).count,
                    coprime_count(p, n, CountMode::ClosedForm).count});
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<CoprimeTableRow>& rows) {
  os << "n,count,closed_form_count,agree\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.count.str() << ',' << r.closed_form_count.str() << ','
       << (r.agree() ? "true" : "false") << '\n';
}

}  // namespace yfl
