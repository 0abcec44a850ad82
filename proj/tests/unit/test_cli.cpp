#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace wreathhom::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wreathhom");
  std::ostringstream out, err;
  int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, Count) {
  auto r = run({"count", "--group", "C2", "--A", "2", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"n\":3,\"count\":\"20\"}\n");
  r = run({"count", "--group", "C2", "--n-range", "0:2"});
  EXPECT_EQ(r.out, "{\"n\":0,\"count\":\"1\"}\n{\"n\":1,\"count\":\"2\"}\n{\"n\":2,\"count\":\"6\"}\n");
}

TEST(Cli, PfreeAndWeyl) {
  EXPECT_EQ(run({"pfree", "--group", "C2", "--n", "2"}).out, "{\"n\":2,\"p\":\"1/3\"}\n");
  EXPECT_EQ(run({"pfree", "--group", "C2", "--n", "4"}).out, "{\"n\":4,\"p\":\"3/19\"}\n");
  EXPECT_EQ(run({"weyl", "--group", "C2", "--n", "2"}).out,
            "{\"n\":2,\"count\":\"4\",\"ratio\":\"2/3\",\"limit\":\"1/2\"}\n");
  EXPECT_EQ(run({"weyl", "--group", "C1", "--n", "5"}).out,
            "{\"n\":5,\"count\":\"1\",\"ratio\":\"1\",\"limit\":\"1\"}\n");
  // C3 has no index-2 subgroup: the 81 elements of order dividing 3 in
  // C2 wr S5 all lie in W5.
  EXPECT_EQ(run({"weyl", "--group", "C3", "--n", "5"}).out,
            "{\"n\":5,\"count\":\"81\",\"ratio\":\"1\",\"limit\":\"1\"}\n");
}

TEST(Cli, Delta) {
  auto r = run({"delta", "--group", "C2", "--A", "2", "--n", "4"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"n\":4,\"fibers\":[\"44\",\"32\"],\"probs\":[\"11/19\",\"8/19\"],\"supDistance\":\"3/38\","
            "\"p\":\"3/19\"}\n");
}

TEST(Cli, JsonFormatCollectsRecords) {
  auto r = run({"count", "--group", "C2", "--n-range", "1:2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["count"], "6");
  EXPECT_EQ(run({"count", "--n", "1", "--format", "xml"}).code, kBadInput);
}

TEST(Cli, SampleIsDeterministic) {
  auto a = run({"sample", "--group", "S3", "--A", "3", "--n", "7", "--seed", "42", "--samples", "5"});
  auto b = run({"sample", "--group", "S3", "--A", "3", "--n", "7", "--seed", "42", "--samples", "5"});
  auto c = run({"sample", "--group", "S3", "--A", "3", "--n", "7", "--seed", "43", "--samples", "5"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["perm"].size(), 2u);
    EXPECT_EQ(j["perm"][0].size(), 7u);
    ++count;
  }
  EXPECT_EQ(count, 5);
}

TEST(Cli, OracleCheckPasses) {
  auto r = run({"oracle-check", "--group", "S3", "--A", "2", "--n-max", "3"});
  EXPECT_EQ(r.code, kOk);
  auto last = r.out.substr(r.out.rfind('{'));
  EXPECT_EQ(last, "{\"cases\":3,\"failures\":0,\"ok\":true}\n");
}

TEST(Cli, FitDecay) {
  auto r = run({"fit-decay", "--group", "C2"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nLo"], 50);
  EXPECT_EQ(j["nHi"], 300);
  EXPECT_EQ(j["points"], 126);
  EXPECT_LT(j["slope"].get<double>(), 0.0);
  EXPECT_EQ(j["conservativeConstant"], "1/48");
}

TEST(Cli, Orbits) {
  auto r = run({"orbits", "--group", "S3", "--A", "2"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<int> k;
  while (std::getline(lines, line)) k.push_back(nlohmann::json::parse(line)["k"].get<int>());
  EXPECT_EQ(k, (std::vector<int>{6, 3, 2, 1}));
}

TEST(Cli, GroupAndCoefficientFiles) {
  auto group = temp_file("wreathhom_cli_group.json", R"({"name": "S3", "permGenerators": [[1,0,2],[1,2,0]]})");
  auto coeff = temp_file("wreathhom_cli_A.json", R"({"invariantFactors": [2]})");
  auto from_file = run({"count", "--group", group.string(), "--A-file", coeff.string(), "--n", "4"});
  auto builtin = run({"count", "--group", "S3", "--A", "2", "--n", "4"});
  EXPECT_EQ(from_file.code, kOk);
  EXPECT_EQ(from_file.out, builtin.out);

  auto bad = temp_file("wreathhom_cli_bad.json", R"({"name": "x", "table": [[0,1],[1,1]]})");
  auto r = run({"count", "--group", bad.string(), "--n", "1"});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_NE(r.err.find("no inverse for element 1"), std::string::npos);
  for (const auto &p : {group, coeff, bad}) std::filesystem::remove(p);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "wreathhom_cli_out.jsonl";
  auto r = run({"count", "--n", "3", "--out", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "{\"n\":3,\"count\":\"20\"}");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"count", "--bogus"}).code, kUsage);
  EXPECT_EQ(run({"count", "--help"}).code, kOk);
  EXPECT_EQ(run({"count", "--group", "A5", "--n", "2"}).code, kUnknownBuiltin);
  EXPECT_EQ(run({"count", "--group", "C2"}).code, kBadInput);
  EXPECT_EQ(run({"count", "--n", "2", "--n-range", "1:3"}).code, kBadInput);
  EXPECT_EQ(run({"count", "--n-range", "5:3"}).code, kBadInput);
  EXPECT_EQ(run({"count", "--A", "1,2,0", "--n", "2"}).code, kBadInput);
  EXPECT_EQ(run({"count", "--group", "Q8", "--n", "2", "--cap", "4"}).code, kCapExceeded);
  EXPECT_EQ(run({"count", "--n", "200000"}).code, kCapExceeded);
}

TEST(Cli, EnvironmentCap) {
  ::setenv("WREATHHOM_CAP", "4", 1);
  auto capped = run({"count", "--group", "Q8", "--n", "2"});
  auto overridden = run({"count", "--group", "Q8", "--n", "2", "--cap", "8"});
  ::setenv("WREATHHOM_CAP", "zero", 1);
  auto invalid = run({"count", "--group", "C2", "--n", "2"});
  ::unsetenv("WREATHHOM_CAP");
  EXPECT_EQ(capped.code, kCapExceeded);
  EXPECT_EQ(overridden.code, kOk);
  EXPECT_EQ(invalid.code, kBadInput);
}

}  // namespace
}  // namespace wreathhom::cli
