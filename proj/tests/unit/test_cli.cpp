#ifdef KGAP_HAVE_CLI

#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kgap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(KGAP_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, CmpTrees) {
  auto r = run({"cmp", "2[2[]]", "2[0[2[]]]"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  EXPECT_EQ(r.out, "NLEQ\n");
  r = run({"cmp", "0[]", "0[]"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "LEQ\n");
  r = run({"cmp", "0[0[]]", "0[1[]]", "--explain"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_NE(r.out.find("(i) holds"), std::string::npos);
}

TEST(Cli, CmpParseError) {
  const auto r = run({"cmp", "2[[", "0[]"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
  EXPECT_NE(r.err.find("error: parse error at position 3"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  const auto r = run({"--format", "json", "cmp", "0[]", "1[]"});
  ASSERT_EQ(r.code, kgap::cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("result"), "LEQ");
  EXPECT_TRUE(j.at("leq").get<bool>());
}

TEST(Cli, EnumCounts) {
  auto r = run({"enum", "--labels", "0,1", "--max-length", "1"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "count 2\n0*()\n1*()\n");
  r = run({"enum", "--labels", "0,1", "--max-length", "3"});
  EXPECT_EQ(r.out.substr(0, 9), "count 10\n");
  r = run({"enum", "--labels", "0,1", "--max-length", "0"});
  EXPECT_EQ(r.out, "count 0\n");
  r = run({"enum", "--labels", ""});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
}

TEST(Cli, AxiomsAndFaultInjection) {
  auto r = run({"axioms", "--max-length", "5"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_NE(r.out.find("PASS axiom_iii"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run({"axioms", "--max-length", "5", "--inject-fault", "antisym"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  EXPECT_NE(r.out.find("FAIL antisymmetry"), std::string::npos);
}

TEST(Cli, GapQueries) {
  auto r = run({"kset", "1", "1*(0*(),2*())"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "2*()\n1*(0*(),2*())\n");
  r = run({"ll", "0*()", "1*(0*(),2*())"});
  EXPECT_EQ(r.out, "true\n");
  r = run({"ll", "1*(0*(),2*())", "1*(0*(),2*())"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  r = run({"rank", "1*(0*(),2*())"});
  EXPECT_EQ(r.out, "1\n");
  r = run({"pbeta", "1", "2*(2*())"});
  EXPECT_EQ(r.out, "w*2+1\n");
  r = run({"pbeta", "3", "2*(2*())"});
  EXPECT_EQ(r.out, "1\n");
  r = run({"rank", "3*()"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
}

TEST(Cli, Embed) {
  auto r = run({"embed", "--map", "0:0,1:2", "--nu", "2", "--target-nu", "3", "1*()"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "2*()\n");
  r = run({"embed", "--map", "0:2,1:1", "--nu", "2", "--target-nu", "3", "1*()"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
  EXPECT_NE(r.err.find("non_monotone_label_map"), std::string::npos);
}

TEST(Cli, HigmanAndOmegaNu) {
  auto r = run({"higman", "--z", "antichain:2", "", "1"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "higman LEQ\nterms LEQ\n");
  r = run({"omeganu", "1", "1,0"});
  EXPECT_EQ(r.out, "lex LEQ\nterms LEQ\n");
  r = run({"omeganu", "0,1"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
  EXPECT_NE(r.err.find("not_weakly_decreasing"), std::string::npos);
}

TEST(Cli, ZOrderFiles) {
  auto r = run({"higman", "--z", data("z_vee.json"), "0", "1,2"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out, "higman LEQ\nterms LEQ\n");
  r = run({"higman", "--z", data("z_vee.json"), "1", "2"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  r = run({"higman", "--z", data("z_cycle.json"), "0", "1"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
  EXPECT_NE(r.err.find("antisymmetry"), std::string::npos);
  EXPECT_EQ(run({"higman", "--z", "chain:x", "0", "1"}).code, kgap::cli::kUsage);
  r = run({"--dilator", "cons:" + data("z_vee.json"), "--nu", "1", "--labels", "0",
           "enum", "--max-length", "3"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_EQ(r.out.substr(0, 8), "count 4\n");
}

TEST(Cli, MinBad) {
  auto r = run({"minbad", data("minbad_two.json"), "--beta", "1", "--depth", "1"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_NE(r.out.find("0 0*(0*(0*(0*()))) p=3"), std::string::npos);
  EXPECT_NE(r.out.find("certified"), std::string::npos);
  const auto brute =
      run({"minbad", data("minbad_two.json"), "--beta", "1", "--depth", "1", "--brute"});
  EXPECT_EQ(brute.out, r.out);
  r = run({"minbad", data("not_prefix_closed.json"), "--depth", "1"});
  EXPECT_EQ(r.code, kgap::cli::kUsage);
  EXPECT_NE(r.err.find("not_prefix_closed"), std::string::npos);
}

TEST(Cli, Antichain) {
  auto r = run({"antichain", "--size", "3", "--nu", "2", "--labels", "0,1", "--max-length", "5"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  r = run({"antichain", "--size", "2", "--labels", "0", "--max-length", "1"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  EXPECT_EQ(r.out, "none\n");
}

TEST(Cli, Selftest) {
  auto r = run({"selftest", "--quick", "--suite", "gap_axioms"});
  EXPECT_EQ(r.code, kgap::cli::kOk);
  EXPECT_NE(r.out.find("PASS 5 gap_axioms"), std::string::npos);
  r = run({"selftest", "--quick", "--suite", "partial_order", "--inject-fault", "antisym"});
  EXPECT_EQ(r.code, kgap::cli::kNo);
  EXPECT_NE(r.out.find("antisymmetry("), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kgap::cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, kgap::cli::kUsage);
  EXPECT_EQ(run({"cmp", "0[]"}).code, kgap::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, kgap::cli::kOk);
}

}  // namespace

#endif
