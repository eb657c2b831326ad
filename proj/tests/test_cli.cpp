#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fibpart/cli.hpp"
#include "json.hpp"

using namespace fibpart;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fibpart");
  std::ostringstream out, err;
  const int code = cli_main(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ScalarCommands) {
  EXPECT_EQ(invoke({"r", "1234"}).out, "22\n");
  EXPECT_EQ(invoke({"r", "0"}).out, "1\n");
  EXPECT_EQ(invoke({"a", "1234"}).out, "15260\n");
  EXPECT_EQ(invoke({"fib", "20"}).out, "6765\n");
  EXPECT_EQ(invoke({"zeck", "1234"}).out, "[16,13,7,2]\n");
  EXPECT_EQ(invoke({"mean", "1"}).out, "2\n");
  EXPECT_EQ(invoke({"mean", "4"}).out, "3/2\n");
}

TEST(Cli, JsonOutput) {
  auto r = nlohmann::json::parse(invoke({"r", "1234", "--format", "json"}).out);
  EXPECT_EQ(r["R"], "22");
  auto a = nlohmann::json::parse(invoke({"a", "--format", "json", "4"}).out);
  EXPECT_EQ(a["A"], "6");
  auto m = nlohmann::json::parse(invoke({"mean", "4", "--format", "json"}).out);
  EXPECT_EQ(m["numerator"], "3");
  EXPECT_EQ(m["denominator"], "2");
  EXPECT_EQ(m["value"].get<std::string>().substr(0, 3), "1.5");
  auto z = nlohmann::json::parse(invoke({"zeck", "1234", "--format", "json"}).out);
  EXPECT_EQ(z, nlohmann::json::parse("[16,13,7,2]"));
}

TEST(Cli, BoundsJson) {
  const auto res = invoke({"bounds", "--depth", "10", "--digits", "25"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j["depth"], 10);
  EXPECT_EQ(j["digits"], 25);
  EXPECT_EQ(j["endpoint_count"], 89);
  for (const char* key : {"c1", "c2", "argmin_pattern", "argmax_pattern"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, BoundsTextAndCsv) {
  const auto text = invoke({"bounds", "--depth", "6", "--digits", "20", "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("< c1 <"), std::string::npos);
  const auto csv = invoke({"bounds", "--depth", "6", "--digits", "20", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("pattern,v_num,v_den,w,L,U\n", 0), 0u);
}

TEST(Cli, CsvEmitters) {
  EXPECT_EQ(invoke({"oracle-dump", "--limit", "3"}).out, "n,R,A\n0,1,1\n1,1,2\n2,1,3\n3,2,5\n");
  const auto rs = invoke({"ratio-series", "--limit", "2", "--digits", "15"});
  EXPECT_EQ(rs.out.rfind("H,ratio\n1,2\n2,", 0), 0u) << rs.out;
  const auto b = invoke({"bavg", "4", "--format", "csv", "--digits", "15"});
  EXPECT_EQ(b.out.rfind("H,value\n2,", 0), 0u) << b.out;
  std::istringstream in(b.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);  // header + H = 2, 3, 4
}

TEST(Cli, Verify) {
  const auto ok = invoke({"verify", "--limit", "2000"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("ok:", 0), 0u);
  const auto j = nlohmann::json::parse(invoke({"verify", "--limit", "100", "--format", "json"}).out);
  EXPECT_TRUE(j["mismatches"].empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"r"}).code, kExitUsage);
  EXPECT_EQ(invoke({"r", "12a"}).code, kExitUsage);
  EXPECT_EQ(invoke({"r", "-4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--depth", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--digits", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"r", "5", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, DomainErrorsExitOne) {
  const auto f = invoke({"fib", "0"});
  EXPECT_EQ(f.code, kExitDomain);
  EXPECT_NE(f.err.find(">= 1"), std::string::npos);
  EXPECT_EQ(invoke({"zeck", "0"}).code, kExitDomain);
  EXPECT_EQ(invoke({"mean", "0"}).code, kExitDomain);
  EXPECT_EQ(invoke({"bavg", "1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"bounds", "--depth", "20", "--digits", "15"}).code, kExitDomain);
}

TEST(Cli, HelpExitsZero) {
  const auto h = invoke({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("bounds"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "fibpart_cli_test.csv";
  const auto res = invoke({"oracle-dump", "--limit", "2", "--output", path.string()});
  EXPECT_EQ(res.code, 0);
  EXPECT_TRUE(res.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "n,R,A\n0,1,1\n1,1,2\n2,1,3\n");
  std::filesystem::remove(path);
}

TEST(Cli, DigitsFromEnvironment) {
  ::setenv("FIBPART_DIGITS", "20", 1);
  const auto env = invoke({"bavg", "2"});
  ::unsetenv("FIBPART_DIGITS");
  EXPECT_EQ(env.out, invoke({"bavg", "2", "--digits", "20"}).out);
  EXPECT_NE(env.out, invoke({"bavg", "2"}).out);
}

TEST(Cli, Idempotent) {
  EXPECT_EQ(invoke({"bounds", "--depth", "12", "--digits", "30"}).out,
            invoke({"bounds", "--depth", "12", "--digits", "30"}).out);
  EXPECT_EQ(invoke({"ratio-series", "--limit", "500"}).out, invoke({"ratio-series", "--limit", "500"}).out);
}

TEST(Cli, HundredDigitInputUnderOneSecond) {
  const std::string h = "1" + std::string(100, '0');
  const auto start = std::chrono::steady_clock::now();
  const auto res = invoke({"r", h});
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, r_exact(parse_natural(h)).str() + "\n");
  EXPECT_LT(elapsed.count(), 1.0);
}
