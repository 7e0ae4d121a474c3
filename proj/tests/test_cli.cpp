#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sturmian/arithmetic.hpp"
#include "sturmian/palindromization.hpp"

using namespace sturmian;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  std::vector<json> records() const {
    std::vector<json> rs;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) rs.push_back(json::parse(line));
    return rs;
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sturmian");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Psi) {
  const auto r = run({"psi", "abba"});
  ASSERT_EQ(r.code, 0);
  const auto rec = r.records().at(0);
  EXPECT_EQ(rec["command"], "psi");
  EXPECT_EQ(rec["status"], "ok");
  EXPECT_TRUE(rec["error_kind"].is_null());
  EXPECT_EQ(rec["result"]["word"], "ababaababa");
  EXPECT_EQ(rec["result"]["length"], "10");

  const auto e = run({"psi", ""}).records().at(0);
  EXPECT_EQ(e["result"]["word"], "");
  EXPECT_EQ(e["result"]["length"], "0");
}

TEST(Cli, PsiFieldsMatchLibrary) {
  const auto rec = run({"psi", "aabba"}).records().at(0);
  const Word w = psi(Word::parse("aabba"));
  EXPECT_EQ(rec["result"]["word"], w.str());
  EXPECT_EQ(rec["result"]["minimal_period"], std::to_string(minimal_period(w)));
  EXPECT_EQ(rec["result"]["b_count"], std::to_string(count_letter(w, Letter::b)));
  EXPECT_EQ(rec["result"]["integral"], to_integral(Word::parse("aabba")).to_string());
}

TEST(Cli, LongWordsAreElidedUnlessFull) {
  const auto cut = run({"psi", "ababababab"}).records().at(0);
  EXPECT_EQ(cut["result"]["length"], "231");
  EXPECT_EQ(cut["result"]["word"].get<std::string>().size(), 123u);
  const auto full = run({"--full", "psi", "ababababab"}).records().at(0);
  EXPECT_EQ(full["result"]["word"].get<std::string>().size(), 231u);
}

TEST(Cli, Stream) {
  const auto rec = run({"stream", "|ab", "25"}).records().at(0);
  EXPECT_EQ(rec["result"]["prefix"], "abaababaabaababaababaabaa");
  const auto unary = run({"stream", "|a", "5"}).records().at(0);
  EXPECT_EQ(unary["result"]["prefix"], "aaaaa");
  EXPECT_TRUE(unary["result"].contains("note"));
  const auto g = run({"stream", "abb|ab", "20"}).records().at(0);
  EXPECT_EQ(g["result"]["prefix"], psi_stream_prefix(DirectiveSpec::parse("abb|ab"), 20).str());
}

TEST(Cli, Christoffel) {
  const auto rec = run({"christoffel", "5", "12", "--factor"}).records().at(0);
  EXPECT_EQ(rec["result"]["word"], "aaabaabaaabaabaab");
  EXPECT_EQ(rec["result"]["w1"], "aaabaab");
  EXPECT_EQ(rec["result"]["w2"], "aaabaabaab");
  EXPECT_EQ(rec["result"]["w1_length"], "7");
  EXPECT_EQ(rec["result"]["w2_length"], "10");
  EXPECT_EQ(run({"christoffel", "7", "5"}).records().at(0)["result"]["word"], "abababbababb");
  const auto ab = run({"christoffel", "1", "1", "--factor"}).records().at(0);
  EXPECT_EQ(ab["result"]["w1"], "a");
  EXPECT_EQ(ab["result"]["w2"], "b");
}

TEST(Cli, Arith) {
  EXPECT_EQ(run({"arith", "continuant", "[1,2,2,2]"}).records().at(0)["result"]["value"], "17");
  EXPECT_EQ(run({"arith", "cf", "[0,2,2,2]"}).records().at(0)["result"]["value"], "5/12");
  EXPECT_EQ(run({"arith", "intrep", "bbabaa"}).records().at(0)["result"]["integral"], "[2,1,1,2]");
  EXPECT_EQ(run({"arith", "intrep", "[2,1,1,2]"}).records().at(0)["result"]["word"], "bbabaa");
  EXPECT_EQ(run({"arith", "slope", "baab"}).records().at(0)["result"]["value"], "7/5");
  EXPECT_EQ(run({"arith", "length", "aabba"}).records().at(0)["result"]["value"], "17");
  EXPECT_EQ(run({"arith", "period", "aabba"}).records().at(0)["result"]["value"], "7");
}

TEST(Cli, VerifyMaxPeriod) {
  const auto r = run({"verify", "max-period", "4"});
  ASSERT_EQ(r.code, 0);
  const auto rows = r.records();
  ASSERT_EQ(rows.size(), 4u);
  const auto& last = rows.back();
  EXPECT_EQ(last["inputs"]["order"], "4");
  EXPECT_EQ(last["result"]["maximum"], "5");
  EXPECT_EQ(last["result"]["argmax"], R"(["abab","abba","baab","baba"])");
  EXPECT_EQ(last["result"]["passed"], "true");
}

TEST(Cli, VerifyMaxLengthStartsAtZero) {
  const auto rows = run({"verify", "max-length", "0"}).records();
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["result"]["maximum"], "0");
  EXPECT_EQ(rows[0]["result"]["argmax"], R"([""])");
}

TEST(Cli, VerifyContinuantMax) {
  const auto r = run({"verify", "continuant-max", "10"});
  ASSERT_EQ(r.code, 0);
  const auto rows = r.records();
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    EXPECT_EQ(rows[n]["result"]["passed"], "true");
    EXPECT_EQ(rows[n]["result"]["maximum"], fibonacci(static_cast<long>(n) + 1).to_string());
  }
}

TEST(Cli, VerifyCentralCountIndexing) {
  EXPECT_EQ(run({"verify", "central-count", "6", "--index", "length"}).code, 0);
  const auto by_order = run({"verify", "central-count", "6"});
  EXPECT_EQ(by_order.code, cli::kExitVerificationFailed);
  EXPECT_EQ(by_order.records().at(2)["result"]["passed"], "false");
}

TEST(Cli, VerifyModesAndBounds) {
  const auto arith = run({"verify", "max-bcount", "6", "--mode", "arithmetic"});
  EXPECT_EQ(arith.code, 0);
  EXPECT_EQ(arith.records().back()["result"]["paths"], "arithmetic");
  const auto over = run({"verify", "max-length", "5", "--mode", "materialized",
                         "--max-order-materialized", "4"});
  EXPECT_EQ(over.code, cli::kExitUsage);
  EXPECT_EQ(over.records().at(0)["error_kind"], "bound");
}

TEST(Cli, Tsv) {
  const auto r = run({"--format", "tsv", "psi", "ab"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.rfind("command\tstatus\terror_kind\tinputs.directive\tresult.word", 0), 0u);
  EXPECT_EQ(row.rfind("psi\tok\t\tab\taba", 0), 0u);
}

TEST(Cli, Errors) {
  const auto bad_word = run({"psi", "abc"});
  EXPECT_EQ(bad_word.code, cli::kExitUsage);
  EXPECT_EQ(bad_word.records().at(0)["error_kind"], "parse");
  const auto not_coprime = run({"christoffel", "2", "4"});
  EXPECT_EQ(not_coprime.records().at(0)["error_kind"], "domain");
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "nonsense", "3"}).code, cli::kExitUsage);
  const auto too_long = run({"--max-word-len", "100", "psi", "ababababab"});
  EXPECT_EQ(too_long.records().at(0)["error_kind"], "size");
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Selfcheck) {
  const auto r = run({"selfcheck", "--seed", "3", "--samples", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.records().at(0)["result"]["dual_path_mismatches"], "0");
}
