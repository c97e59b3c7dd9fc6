#pragma once

// Command-line front end for the yfl tool. Lives in a header so tests can
// drive it in-process with captured streams.
//
// Exit codes: 0 success, 1 failed assertion or guard, 2 usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "yfl/error.hpp"
#include "yfl/f_stat.hpp"
#include "yfl/macdonald.hpp"
#include "yfl/primes.hpp"
#include "yfl/residues.hpp"
#include "yfl/serialize.hpp"
#include "yfl/word.hpp"

namespace yfl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Table, Csv, Json, JsonLines, Dot };

inline const std::map<std::string, Format> kFormatNames{
    {"table", Format::Table}, {"csv", Format::Csv},  {"json", Format::Json},
    {"jsonl", Format::JsonLines}, {"dot", Format::Dot}};

inline std::string format_name(Format f) {
  for (const auto& [name, value] : kFormatNames)
    if (value == f) return name;
  return "table";
}

inline void require_format(Format f, std::initializer_list<Format> allowed, const std::string& cmd) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw invalid_input("format '" + format_name(f) + "' is not supported by " + cmd);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results keep index order.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<R> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) out[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Options {
  Format format = Format::Table;
  unsigned threads = 1;
  std::string out_path;

  // enumerate
  unsigned rank = 0;
  std::string filter = "all";
  std::uint64_t prime = 0;

  // tree
  unsigned max_rank = 0;
  bool f_valued = false;

  // verify
  std::string suite;
  unsigned k = 0;
  unsigned extra = 2;
  std::string method = "dp";
  bool strict_pi = false;

  // residues
  bool assert_flat = false;

  // fstat
  std::string word_text;
};

// One checked instance in a verification report.
struct Check {
  json record;
  bool ok = true;
};

inline void write_checks(std::ostream& os, const std::string& suite,
                         const std::vector<Check>& checks, Format format) {
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  switch (format) {
    case Format::JsonLines:
      for (const auto& c : checks) os << c.record.dump() << '\n';
      break;
    case Format::Json: {
      json j;
      j["suite"] = suite;
      j["ok"] = all;
      j["checks"] = json::array();
      for (const auto& c : checks) j["checks"].push_back(c.record);
      os << j.dump(2) << '\n';
      break;
    }
    default:
      for (const auto& c : checks) {
        os << (c.ok ? "ok   " : "FAIL ");
        bool first = true;
        for (auto it = c.record.begin(); it != c.record.end(); ++it) {
          if (it.key() == "ok") continue;
          os << (first ? "" : " ") << it.key() << '=';
          if (it->is_string())
            os << it->get<std::string>();
          else
            os << it->dump();
          first = false;
        }
        os << '\n';
      }
      os << suite << ": " << (all ? "all checks passed" : "FAILED") << " (" << checks.size()
         << " checks)\n";
  }
}

inline HistogramMethod parse_method(const std::string& m) {
  if (m == "dp") return HistogramMethod::DynamicProgramming;
  if (m == "enum") return HistogramMethod::Enumerate;
  throw invalid_input("unknown method '" + m + "' (expected enum or dp)");
}

// ---- subcommands ----------------------------------------------------------

inline int cmd_fstat(const Options& opt, std::ostream& os) {
  const Word w = parse_word(opt.word_text);
  const bool odd = is_odd_word(w);
  json j;
  j["word"] = w.str("");
  j["rank"] = w.rank();
  j["f"] = to_decimal(f_product(w));
  j["f_recursive"] = w.rank() <= kFullRowLimit ? json(to_decimal(f_recursive(w))) : json(nullptr);
  j["odd"] = odd;
  if (odd) {
    std::string blocks;
    for (auto b : block_decompose(w).blocks) blocks += b == Block::Two ? "2 " : "11 ";
    if (!blocks.empty()) blocks.pop_back();
    j["blocks_right_to_left"] = blocks;
  }
  require_format(opt.format, {Format::Table, Format::Json, Format::JsonLines}, "fstat");
  if (opt.format == Format::Table) {
    for (auto it = j.begin(); it != j.end(); ++it)
      os << std::left << std::setw(22) << it.key()
         << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  } else {
    os << (opt.format == Format::Json ? j.dump(2) : j.dump()) << '\n';
  }
  return kExitOk;
}

inline int cmd_enumerate(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::Csv, Format::Json, Format::JsonLines},
                 "enumerate");
  std::vector<Word> words;
  if (opt.filter == "odd") {
    words = enumerate_odd_words(opt.rank);
  } else if (opt.filter == "all" || opt.filter == "coprime") {
    if (opt.filter == "coprime") {
      if (opt.prime == 0) throw invalid_input("--filter coprime requires --prime");
      check_prime(opt.prime);
    }
    check_full_row_guard(opt.rank);
    words = enumerate_rank(opt.rank).words;
    if (opt.filter == "coprime")
      std::erase_if(words, [&](const Word& w) { return !is_coprime_direct(w, opt.prime); });
  } else {
    throw invalid_input("unknown filter '" + opt.filter + "' (expected all, odd or coprime)");
  }

  json records = json::array();
  for (const auto& w : words) {
    const FValue f = f_product(w);
    records.push_back({{"word", w.str("")},
                       {"rank", w.rank()},
                       {"f", to_decimal(f)},
                       {"odd", boost::multiprecision::bit_test(f, 0)}});
  }
  switch (opt.format) {
    case Format::Csv:
      os << "word,rank,f,odd\n";
      for (std::size_t i = 0; i < words.size(); ++i)
        os << words[i].str() << ',' << words[i].rank() << ','
           << records[i]["f"].get<std::string>() << ','
           << (records[i]["odd"].get<bool>() ? "true" : "false") << '\n';
      break;
    case Format::Json:
      os << records.dump(2) << '\n';
      break;
    case Format::JsonLines:
      for (const auto& r : records) os << r.dump() << '\n';
      break;
    default:
      os << std::left << std::setw(24) << "word" << std::setw(6) << "rank" << std::setw(24)
         << "f" << "odd\n";
      for (std::size_t i = 0; i < words.size(); ++i)
        os << std::setw(24) << words[i].str() << std::setw(6) << words[i].rank() << std::setw(24)
           << records[i]["f"].get<std::string>() << (records[i]["odd"].get<bool>() ? "yes" : "no")
           << '\n';
  }
  return kExitOk;
}

inline int cmd_tree(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::Dot, Format::Json}, "tree");
  check_enumeration_guard(opt.max_rank);
  const auto tree = build_tree(opt.max_rank);
  switch (opt.format) {
    case Format::Dot:
      write_dot(os, tree, opt.f_valued);
      break;
    case Format::Json: {
      auto j = tree_to_json(tree);
      j["f_valued"] = opt.f_valued;
      os << j.dump(2) << '\n';
      break;
    }
    default:
      for (unsigned n = 0; n <= tree.max_rank; ++n) {
        os << std::setw(3) << n << ':';
        for (const auto* node : tree.row(n)) os << ' ' << dot_label(*node, opt.f_valued);
        os << '\n';
      }
  }
  return kExitOk;
}

inline std::vector<Check> suite_main(const Options& opt) {
  if (opt.k == 0) throw invalid_input("suite main requires -k");
  const auto report = verify_main_theorem(opt.k, opt.extra);
  std::vector<Check> checks;
  for (const auto& r : report.rows)
    checks.push_back({{{"suite", "main"}, {"n", r.n}, {"k", r.k}, {"flat", r.flat}, {"ok", r.flat}},
                      r.flat});
  return checks;
}

inline std::vector<Check> suite_one_step(const Options& opt) {
  if (opt.k == 0) throw invalid_input("suite one-step requires -k");
  const unsigned n_max = opt.rank == 0 ? 12 : opt.rank;
  const auto report = verify_one_step(opt.k, n_max, parse_method(opt.method));
  std::vector<Check> checks;
  for (const auto& s : report.steps) {
    const bool ok = s.implication_ok && s.identity_ok;
    checks.push_back({{{"suite", "one-step"},
                       {"n", s.n},
                       {"k", opt.k},
                       {"flat_n", s.flat_here},
                       {"flat_next", s.flat_next},
                       {"step_identity", s.identity_ok},
                       {"ok", ok}},
                      ok});
  }
  return checks;
}

inline std::vector<Check> suite_pi_row(const Options& opt) {
  const unsigned n_max = opt.rank == 0 ? 16 : opt.rank;
  check_enumeration_guard(n_max);
  const PiReading reading = opt.strict_pi ? PiReading::StrictLiteral : PiReading::Conforming;
  return parallel_map<Check>(n_max + 1, opt.threads, [&](std::size_t i) {
    const auto n = static_cast<unsigned>(i);
    const auto pi = pi_multiset(n, reading);
    const auto row = f_valued_row(n);
    const bool ok = pi.products == row;
    return Check{{{"suite", "pi-row"},
                  {"n", n},
                  {"reading", opt.strict_pi ? "strict-literal" : "conforming"},
                  {"pi_size", pi.products.size()},
                  {"row_size", row.size()},
                  {"ok", ok}},
                 ok};
  });
}

inline std::vector<Check> suite_coprime(const Options& opt) {
  const unsigned n_max = opt.rank == 0 ? 12 : opt.rank;
  check_full_row_guard(n_max);
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  if (opt.prime != 0) {
    check_prime(opt.prime);
    primes = {opt.prime};
  }
  struct Job {
    std::uint64_t p;
    unsigned n;
  };
  std::vector<Job> jobs;
  for (auto p : primes)
    for (unsigned n = 0; n <= n_max; ++n) jobs.push_back({p, n});
  return parallel_map<Check>(jobs.size(), opt.threads, [&](std::size_t i) {
    const auto [p, n] = jobs[i];
    std::size_t disagreements = 0;
    Count enumerated = 0;
    for (const auto& w : enumerate_rank(n).words) {
      const bool direct = is_coprime_direct(w, p);
      if (direct != is_coprime_structural(w, p)) ++disagreements;
      if (direct) ++enumerated;
    }
    const Count closed = coprime_count(p, n, CountMode::ClosedForm).count;
    bool ok = disagreements == 0 && enumerated == closed;
    if (p == 2) ok = ok && enumerated == (Count(1) << (n / 2));
    return Check{{{"suite", "coprime"},
                  {"p", p},
                  {"n", n},
                  {"predicate_disagreements", disagreements},
                  {"count", enumerated.str()},
                  {"closed_form_count", closed.str()},
                  {"ok", ok}},
                 ok};
  });
}

inline std::vector<Check> suite_oracle(const Options& opt) {
  const unsigned n_max = opt.rank == 0 ? 12 : opt.rank;
  check_full_row_guard(n_max);
  return parallel_map<Check>(n_max + 1, opt.threads, [&](std::size_t i) {
    const auto n = static_cast<unsigned>(i);
    FRecursiveCache cache;
    std::size_t words = 0, mismatches = 0;
    for (const auto& w : enumerate_rank(n).words) {
      ++words;
      if (f_product(w) != cache(w)) ++mismatches;
    }
    return Check{{{"suite", "oracle"},
                  {"rank", n},
                  {"words", words},
                  {"mismatches", mismatches},
                  {"ok", mismatches == 0}},
                 mismatches == 0};
  });
}

inline std::vector<Check> suite_self_similar(const Options& opt) {
  const unsigned max_rank = opt.max_rank == 0 ? 10 : opt.max_rank;
  check_enumeration_guard(max_rank);
  const auto tree = build_tree(max_rank);
  std::vector<Check> checks;
  for (unsigned r = 0; r + 2 <= max_rank; r += 2) {
    for (const auto* node : tree.row(r)) {
      const auto s = verify_subtree_self_similarity(tree, node->word);
      checks.push_back({{{"suite", "self-similar"},
                         {"root", node->word.str("")},
                         {"depth", s.depth_checked},
                         {"nodes", s.nodes_checked},
                         {"ok", s.holds()}},
                        s.holds()});
    }
  }
  return checks;
}

inline int cmd_verify(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::Json, Format::JsonLines}, "verify");
  std::vector<Check> checks;
  if (opt.suite == "main")
    checks = suite_main(opt);
  else if (opt.suite == "one-step")
    checks = suite_one_step(opt);
  else if (opt.suite == "pi-row")
    checks = suite_pi_row(opt);
  else if (opt.suite == "coprime")
    checks = suite_coprime(opt);
  else if (opt.suite == "oracle")
    checks = suite_oracle(opt);
  else if (opt.suite == "self-similar")
    checks = suite_self_similar(opt);
  else
    throw invalid_input("unknown suite '" + opt.suite + "'");
  write_checks(os, opt.suite, checks, opt.format);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  return all ? kExitOk : kExitFailure;
}

inline int cmd_residues(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::Csv, Format::Json}, "residues");
  if ((opt.k == 0) == (opt.prime == 0))
    throw invalid_input("residues needs exactly one of -k or --prime");
  bool flat = false;
  if (opt.k != 0) {
    const auto h = residue_histogram(opt.rank, opt.k, parse_method(opt.method));
    flat = is_equidistributed(h);
    if (opt.format == Format::Csv) {
      write_csv(os, h);
    } else if (opt.format == Format::Json) {
      os << histogram_to_json(opt.rank, h).dump(2) << '\n';
    } else {
      os << "n=" << opt.rank << " modulus=" << h.modulus() << '\n';
      for (std::size_t j = 0; j < h.classes(); ++j)
        os << std::setw(8) << h.residue(j) << "  " << h.counts()[j].str() << '\n';
    }
  } else {
    const auto h = residue_distribution_mod_p(opt.rank, opt.prime);
    flat = h.flat();
    if (opt.format == Format::Csv) {
      write_csv(os, h);
    } else if (opt.format == Format::Json) {
      os << histogram_to_json(h).dump(2) << '\n';
    } else {
      os << "n=" << opt.rank << " modulus=" << h.p << '\n';
      for (std::uint64_t i = 1; i < h.p; ++i)
        os << std::setw(8) << i << "  " << h.count(i).str() << '\n';
    }
  }
  if (opt.format == Format::Table) os << "verdict: " << (flat ? "flat" : "not-flat") << '\n';
  return opt.assert_flat && !flat ? kExitFailure : kExitOk;
}

inline int cmd_explore(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::JsonLines, Format::Json}, "explore");
  if (opt.k == 0) throw invalid_input("explore requires -k");
  const unsigned n_max = opt.rank == 0 ? (1u << (opt.k - 1)) + 12 : opt.rank;
  const auto scan = scan_threshold(opt.k, n_max);
  json summary{{"k", scan.k},
               {"n_max", scan.n_max},
               {"stable_from", scan.stable_from},
               {"bound", scan.bound}};
  if (opt.format == Format::JsonLines) {
    for (const auto& r : scan.rows) os << json{{"n", r.n}, {"k", r.k}, {"flat", r.flat}}.dump() << '\n';
    os << summary.dump() << '\n';
  } else if (opt.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : scan.rows) rows.push_back({{"n", r.n}, {"flat", r.flat}});
    summary["rows"] = std::move(rows);
    os << summary.dump(2) << '\n';
  } else {
    for (const auto& r : scan.rows)
      os << "n=" << r.n << " k=" << r.k << ' ' << (r.flat ? "flat" : "not-flat") << '\n';
    os << "rows stay flat from n=" << scan.stable_from << " (scanned to " << scan.n_max
       << "; threshold 2^(k-1)+2 = " << scan.bound << ")\n";
  }
  return kExitOk;
}

inline int cmd_coprime_table(const Options& opt, std::ostream& os) {
  require_format(opt.format, {Format::Table, Format::Csv}, "coprime-table");
  if (opt.prime == 0) throw invalid_input("coprime-table requires --prime");
  const auto rows = coprime_table(opt.prime, opt.rank == 0 ? 18 : opt.rank);
  write_csv(os, rows);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree(); });
  return all ? kExitOk : kExitFailure;
}

// ---- entry point ----------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young-Fibonacci lattice toolkit: f-statistics, Macdonald tree, residue checks",
               "yfl"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format: table, csv, json, jsonl, dot")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  app.add_option("--threads", opt.threads, "Worker threads for independent checks")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--out", opt.out_path, "Write output to this file instead of stdout");

  auto* fstat = app.add_subcommand("fstat", "Rank, f-value and block form of one word");
  fstat->add_option("word", opt.word_text, "Word over {1,2}; 'e' is the empty word")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List the words of one rank");
  enumerate->add_option("-n,--rank", opt.rank, "Rank")->required();
  enumerate->add_option("--filter", opt.filter, "all, odd or coprime")
      ->check(CLI::IsMember({"all", "odd", "coprime"}));
  enumerate->add_option("-p,--prime", opt.prime, "Prime for --filter coprime");

  auto* tree = app.add_subcommand("tree", "Export the Macdonald tree of odd words");
  tree->add_option("--max-rank", opt.max_rank, "Depth of the tree")->required();
  tree->add_flag("--f-valued", opt.f_valued, "Label nodes with f-values");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", opt.suite, "main, one-step, pi-row, coprime, oracle, self-similar")
      ->required()
      ->check(CLI::IsMember({"main", "one-step", "pi-row", "coprime", "oracle", "self-similar"}));
  verify->add_option("-k,--modulus-pow", opt.k, "Modulus exponent k (modulus 2^k)");
  verify->add_option("--extra", opt.extra, "Rows checked past the first (suite main)");
  verify->add_option("-n,--rank", opt.rank, "Largest rank checked");
  verify->add_option("--max-rank", opt.max_rank, "Tree depth (suite self-similar)");
  verify->add_option("-p,--prime", opt.prime, "Restrict suite coprime to one prime");
  verify->add_option("--method", opt.method, "enum or dp")->check(CLI::IsMember({"enum", "dp"}));
  verify->add_flag("--strict-pi", opt.strict_pi,
                   "Use the nonconforming literal factor set (odd x <= n) in suite pi-row");

  auto* residues = app.add_subcommand("residues", "Histogram of f-values modulo 2^k or a prime");
  residues->add_option("-n,--rank", opt.rank, "Rank")->required();
  residues->add_option("-k,--modulus-pow", opt.k, "Odd words, modulus 2^k");
  residues->add_option("-p,--prime", opt.prime, "All words coprime to an odd prime");
  residues->add_option("--method", opt.method, "enum or dp")->check(CLI::IsMember({"enum", "dp"}));
  residues->add_flag("--assert", opt.assert_flat, "Exit 1 unless the histogram is flat");

  auto* explore = app.add_subcommand("explore", "Flatness verdict of every row up to a rank");
  explore->add_option("-k,--modulus-pow", opt.k, "Modulus exponent k")->required();
  explore->add_option("-n,--rank", opt.rank, "Last rank scanned");

  auto* ctable = app.add_subcommand("coprime-table", "Enumerated vs closed-form C_p(n)");
  ctable->add_option("-p,--prime", opt.prime, "Prime")->required();
  ctable->add_option("-n,--rank", opt.rank, "Last rank (default 18)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "yfl: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "yfl: cannot open " << opt.out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& os = opt.out_path.empty() ? out : file;

  try {
    if (*fstat) return cmd_fstat(opt, os);
    if (*enumerate) return cmd_enumerate(opt, os);
    if (*tree) return cmd_tree(opt, os);
    if (*verify) return cmd_verify(opt, os);
    if (*residues) return cmd_residues(opt, os);
    if (*explore) return cmd_explore(opt, os);
    if (*ctable) return cmd_coprime_table(opt, os);
  } catch (const invalid_input& e) {
    err << "yfl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const guard_error& e) {
    err << "yfl: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace yfl::cli
