#include "yfl/cli.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

namespace yfl::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "yfl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(Cli, EnumerateAll) {
  auto r = invoke({"enumerate", "-n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "word,rank,f,odd\n11,2,1,true\n2,2,1,true\n");
}

TEST(Cli, EnumerateOdd) {
  auto r = invoke({"enumerate", "-n", "7", "--filter", "odd", "--format", "jsonl"});
  EXPECT_EQ(r.code, 0);
  std::set<std::string> words;
  for (const auto& l : lines(r.out)) words.insert(json::parse(l)["word"].get<std::string>());
  EXPECT_EQ(words, (std::set<std::string>{"1111111", "121111", "111211", "12211", "111112", "12112",
                                          "11122", "1222"}));
}

TEST(Cli, EnumerateCoprime) {
  auto r = invoke({"enumerate", "-n", "3", "--filter", "coprime", "-p", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).size(), 3u);
  EXPECT_EQ(invoke({"enumerate", "-n", "3", "--filter", "coprime"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "-n", "3", "--filter", "coprime", "-p", "4"}).code, kExitUsage);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "-n", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "-n", "30"}).code, kExitFailure);
  EXPECT_EQ(invoke({"tree", "--max-rank", "41"}).code, kExitFailure);
  EXPECT_EQ(invoke({"tree", "--max-rank", "3", "--format", "csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fstat", "213"}).code, kExitUsage);
  EXPECT_NE(invoke({"fstat", "213"}).err.find("position 3"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "main"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, TreeDot) {
  auto r = invoke({"tree", "--max-rank", "2", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  const std::regex node_re(R"re(^  "([12e]+)" \[label="([^"]*)"\];$)re");
  const std::regex edge_re(R"re(^  "([12e]+)" -- "([12e]+)";$)re");
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 3u);
  EXPECT_EQ(ls.front(), "graph macdonald {");
  EXPECT_EQ(ls.back(), "}");
  std::set<std::string> nodes;
  std::size_t edges = 0;
  for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
    std::smatch m;
    if (std::regex_match(ls[i], m, node_re)) {
      nodes.insert(m[1]);
    } else if (std::regex_match(ls[i], m, edge_re)) {
      ++edges;
      EXPECT_TRUE(nodes.count(m[1]) && nodes.count(m[2])) << ls[i];
    } else {
      EXPECT_EQ(ls[i], "  rankdir=BT;");
    }
  }
  EXPECT_EQ(nodes, (std::set<std::string>{"e", "1", "11", "2"}));
  EXPECT_EQ(edges, 3u);

  r = invoke({"tree", "--max-rank", "4", "--format", "dot", "--f-valued"});
  EXPECT_NE(r.out.find("\"211\" [label=\"211 : 3\"]"), std::string::npos);
}

TEST(Cli, TreeJson) {
  auto r = invoke({"tree", "--max-rank", "6", "--format", "json", "--f-valued"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["max_rank"], 6);
  EXPECT_EQ(j["root"]["word"], "");
  std::multiset<std::string> leaves;
  std::function<void(const json&)> walk = [&](const json& node) {
    ASSERT_TRUE(node["f"].is_string());
    if (node["rank"] == 6) leaves.insert(node["f"].get<std::string>());
    for (const auto& c : node["children"]) walk(c);
  };
  walk(j["root"]);
  EXPECT_EQ(leaves, (std::multiset<std::string>{"1", "1", "3", "3", "5", "5", "15", "15"}));

  r = invoke({"tree", "--max-rank", "0", "--format", "json"});
  EXPECT_TRUE(json::parse(r.out)["root"]["children"].empty());
}

TEST(Cli, VerifySuites) {
  auto r = invoke({"verify", "main", "-k", "3", "--format", "jsonl"});
  EXPECT_EQ(r.code, 0);
  std::vector<unsigned> ns;
  for (const auto& l : lines(r.out)) {
    auto j = json::parse(l);
    ns.push_back(j["n"]);
    EXPECT_TRUE(j["flat"].get<bool>());
  }
  EXPECT_EQ(ns, (std::vector<unsigned>{6, 7, 8}));

  EXPECT_EQ(invoke({"verify", "pi-row", "-n", "16"}).code, 0);
  EXPECT_EQ(invoke({"verify", "pi-row", "-n", "8", "--strict-pi"}).code, kExitFailure);
  EXPECT_EQ(invoke({"verify", "oracle", "-n", "12"}).code, 0);
  EXPECT_EQ(invoke({"verify", "one-step", "-k", "3", "-n", "12"}).code, 0);
  EXPECT_EQ(invoke({"verify", "one-step", "-k", "3", "-n", "12", "--method", "enum"}).code, 0);
  EXPECT_EQ(invoke({"verify", "coprime", "-n", "10"}).code, 0);
  EXPECT_EQ(invoke({"verify", "self-similar", "--max-rank", "8"}).code, 0);
}

TEST(Cli, Residues) {
  auto r = invoke({"residues", "-n", "6", "-k", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "residue,count\n1,2\n3,2\n5,2\n7,2\n");
  r = invoke({"residues", "-n", "6", "-k", "3", "--format", "json"});
  EXPECT_TRUE(json::parse(r.out)["flat"].get<bool>());

  r = invoke({"residues", "-n", "5", "-k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: not-flat"), std::string::npos);
  EXPECT_EQ(invoke({"residues", "-n", "5", "-k", "3", "--assert"}).code, kExitFailure);
  EXPECT_EQ(invoke({"residues", "-n", "6", "-k", "3", "--assert", "--method", "enum"}).code, 0);

  r = invoke({"residues", "-n", "3", "-p", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "residue,count\n1,2\n2,1\n");
  EXPECT_EQ(invoke({"residues", "-n", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"residues", "-n", "3", "-k", "2", "-p", "3"}).code, kExitUsage);
}

TEST(Cli, CoprimeTable) {
  auto r = invoke({"coprime-table", "-p", "3", "-n", "7"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 9u);
  EXPECT_EQ(ls[0], "n,count,closed_form_count,agree");
  EXPECT_EQ(ls[8], "7,9,9,true");
}

TEST(Cli, Explore) {
  auto r = invoke({"explore", "-k", "4", "-n", "20", "--format", "jsonl"});
  EXPECT_EQ(r.code, 0);
  auto summary = json::parse(lines(r.out).back());
  EXPECT_EQ(summary["stable_from"], 10);
  EXPECT_EQ(summary["bound"], 10);
}

TEST(Cli, Fstat) {
  auto r = invoke({"fstat", "2112", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["f"], "5");
  EXPECT_EQ(j["f_recursive"], "5");
  EXPECT_EQ(j["blocks_right_to_left"], "2 11 2");
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  for (const auto& args :
       {std::vector<std::string>{"verify", "oracle", "-n", "11", "--format", "json"},
        std::vector<std::string>{"verify", "coprime", "-n", "9", "--format", "jsonl"},
        std::vector<std::string>{"verify", "pi-row", "-n", "14", "--format", "jsonl"}}) {
    auto one = invoke(args);
    auto again = invoke(args);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "4"});
    auto many = invoke(threaded);
    EXPECT_EQ(one.out, again.out);
    EXPECT_EQ(one.out, many.out);
    EXPECT_EQ(one.code, 0);
  }
}

}  // namespace
}  // namespace yfl::cli
