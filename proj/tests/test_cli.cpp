#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "concave_cli");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = concave::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CoeffsKoebe) {
  const auto r = run({"coeffs", "--alpha", "2", "--gamma", "0", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  for (int n = 1; n <= 5; ++n) EXPECT_NEAR(j[n - 1]["A_re"].get<double>(), 4.0 * n, 1e-12);
}

TEST(Cli, CoeffsFirstTerm) {
  const auto r = run({"coeffs", "--alpha", "1.5", "--gamma", "1.5707963267948966", "--n", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j[0]["A_re"].get<double>(), 1.5, 1e-15);
  EXPECT_NEAR(j[0]["A_im"].get<double>(), 1.5, 1e-15);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"coeffs", "--alpha", "1"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--gamma", "4"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"area", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"area", "--r", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "lemmas", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify", "lemmas", "--alphas", "1.5,x"}).code, 2);
}

TEST(Cli, AreaKoebeGreen) {
  const auto r = run({"area", "--family", "z-over-koebe", "--r", "0.5", "--method", "green", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j[0]["value"].get<double>(), 9.0 * std::numbers::pi / 8.0, 1e-8 * 9.0 * std::numbers::pi / 8.0);
}

TEST(Cli, AreaAllMethodsAgree) {
  const auto r = run({"area", "--family", "phi-over-f", "--alpha", "1.5", "--gamma", "0.7", "--t", "0.2",
                      "--r", "0.5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  const double p = j[1]["value"].get<double>();
  EXPECT_NEAR(j[0]["value"].get<double>(), p, 1e-10 * p);
  EXPECT_NEAR(j[2]["value"].get<double>(), p, 1e-10 * p);
}

TEST(Cli, PrettyAndJsonCarrySameNumbers) {
  const auto j = run({"area", "--family", "identity", "--r", "0.3", "--method", "parseval", "--format", "json"});
  const auto p = run({"area", "--family", "identity", "--r", "0.3", "--method", "parseval"});
  const double v = nlohmann::json::parse(j.out)[0]["value"].get<double>();
  EXPECT_NE(p.out.find(concave::format_double(v)), std::string::npos);
}

TEST(Cli, CsvHasHeaderAndCrlf) {
  const auto r = run({"coeffs", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.out.rfind("n,A_re,A_im,A_abs,B_re,B_im,B_abs\r\n", 0), 0u);
}

TEST(Cli, BoundEndpoints) {
  auto r = run({"bound", "--alpha", "1.5", "--b", concave::format_double(1.0 / 3.0), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out)[0];
  EXPECT_EQ(j["gamma0"].get<double>(), 0.0);
  EXPECT_EQ(j["E0_scan"].get<double>(), 0.0);
  r = run({"bound", "--alpha", "1.5", "--b", concave::format_double(1.0 / (1.5 * std::sqrt(2.0))), "--format", "json"});
  j = nlohmann::json::parse(r.out)[0];
  EXPECT_NEAR(j["gamma0"].get<double>(), std::numbers::pi / 2.0, 1e-12);
  EXPECT_TRUE(j.contains("E_endpoint"));
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "lemmas", "--alphas", "1.5", "--n-max", "10", "--gamma-count", "16"}).code, 1)
      << "scaled domination is a failing claim";
  EXPECT_EQ(run({"verify", "lemmas", "--alphas", "1,1", "--n-max", "10"}).code, 0);
  EXPECT_EQ(run({"verify", "lemmas", "--alphas", "0.5", "--n-max", "10", "--gamma-count", "16"}).code, 1);
}

TEST(Cli, VerifyWritesFile) {
  const std::string path = ::testing::TempDir() + "concave_cli_report.json";
  const auto r = run({"verify", "lemmas", "--alphas", "1.5,2", "--n-max", "5", "--gamma-count", "8",
                      "--format", "json", "-o", path, "--seed", "3"});
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& obj : j) {
    for (const char* k : {"claim_id", "params", "value", "bound", "ratio", "pass", "tolerance"}) EXPECT_TRUE(obj.contains(k));
  }
  std::remove(path.c_str());
}

TEST(Cli, GlobalFlagsBeforeOrAfterSubcommand) {
  const auto a = run({"--format", "json", "coeffs", "--n", "3"});
  const auto b = run({"coeffs", "--n", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}
