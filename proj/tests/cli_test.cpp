#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles.hpp"

using nlohmann::json;

namespace {

const std::string data = ORLICZ_TEST_DATA;
const std::string golden = ORLICZ_GOLDEN_DIR;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  CliRun r;
  FILE* p = popen((std::string(ORLICZ_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json load(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

// Numbers within 1e-12 relative, everything else exactly.
void expect_same(const json& want, const json& got, const std::string& where = "") {
  if (want.is_number() && got.is_number()) {
    const double a = want.get<double>(), b = got.get<double>();
    EXPECT_LE(std::fabs(a - b), 1e-12 * std::max(std::fabs(a), std::fabs(b))) << where;
    return;
  }
  ASSERT_EQ(want.type(), got.type()) << where;
  if (want.is_object()) {
    ASSERT_EQ(want.size(), got.size()) << where;
    for (const auto& [k, v] : want.items()) {
      ASSERT_TRUE(got.contains(k)) << where << "." << k;
      expect_same(v, got.at(k), where + "." + k);
    }
  } else if (want.is_array()) {
    ASSERT_EQ(want.size(), got.size()) << where;
    for (std::size_t i = 0; i < want.size(); ++i) expect_same(want[i], got[i], where + "[" + std::to_string(i) + "]");
  } else {
    EXPECT_EQ(want, got) << where;
  }
}

// Luxemburg norm of sum_i w_i F(v_i / lambda) by bisection on lambda.
double lux_oracle(const char* name, const std::vector<std::pair<double, double>>& atoms) {
  const auto f = orlicz::oracle::young(name);
  auto mod = [&](long double lam) {
    long double s = 0.0L;
    for (auto [v, w] : atoms) s += w * f(v / lam);
    return s;
  };
  long double lo = 1e-3L, hi = 1e3L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2.0L;
    (mod(mid) > 1.0L ? lo : hi) = mid;
  }
  return static_cast<double>(hi);
}

void check_golden(const std::string& args, const std::string& name) {
  const CliRun r = run(args);
  ASSERT_EQ(0, r.code) << args;
  expect_same(load(golden + "/" + name), json::parse(r.out));
}

}  // namespace

TEST(Cli, normOfSimpleFunctionIsLpNorm) {
  const CliRun r = run("norm --young power:2 --function " + data + "/simple.txt");
  ASSERT_EQ(0, r.code);
  const json j = json::parse(r.out);
  EXPECT_EQ("luxemburg_norm", j["op"]);
  EXPECT_NEAR(std::sqrt(3.5), j["value"].get<double>(), 1e-12);
  for (const char* key : {"inputs_digest", "witness", "converged", "iterations", "tolerance", "tool_version", "config_digest"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, matrixNormGolden) {
  const json g = load(golden + "/norm_cosh_matrix.json");
  EXPECT_NEAR(lux_oracle("cosh-1", {{3, 1}, {2, 1}, {1, 1}}), g["value"].get<double>(), 1e-10);
  check_golden("norm --young cosh-1 --matrix " + data + "/matrix_diag.json", "norm_cosh_matrix.json");
}

TEST(Cli, weightedNormGolden) {
  // Commuting diagonals, both sorted: the classical weighted norm of (g_i) with weights (x_i).
  const json g = load(golden + "/norm_cosh_weighted.json");
  EXPECT_NEAR(lux_oracle("cosh-1", {{1.5, 2.0}, {1.0, 1.0}, {0.5, 0.25}}), g["value"].get<double>(), 1e-10);
  check_golden("norm --young cosh-1 --matrix " + data + "/g_diag.json --weight-matrix " + data + "/x_diag.json",
               "norm_cosh_weighted.json");
}

TEST(Cli, delta2Golden) {
  const json g = load(golden + "/check_delta2_power2.json");
  EXPECT_EQ(true, g["value"]);
  EXPECT_EQ(4.0, g["witness"]["c"].get<double>());
  check_golden("check delta2 --young power:2", "check_delta2_power2.json");
}

TEST(Cli, regularGolden) {
  const json g = load(golden + "/check_regular_log.json");
  EXPECT_EQ(true, g["value"]);
  EXPECT_EQ(-1.0, g["witness"]["symmetric_domain"]["lo"].get<double>());
  EXPECT_EQ(1.0, g["witness"]["symmetric_domain"]["hi"].get<double>());
  check_golden("check regular --profile " + data + "/profile_log.json --weight " + data + "/weight_exp.json",
               "check_regular_log.json");
}

TEST(Cli, equivalenceGolden) {
  const json g = load(golden + "/check_equivalent.json");
  EXPECT_EQ(true, g["value"]);
  check_golden("check equivalent --y1 xlog1p --y2 llog", "check_equivalent.json");
}

TEST(Cli, csvIsFlatProjection) {
  const CliRun r = run("check delta2 --young power:2 --format csv");
  ASSERT_EQ(0, r.code);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(0u, header.find("op,inputs_digest,value,witness.s0,witness.c"));
  EXPECT_EQ(0u, row.find("delta2_check,"));
}

TEST(Cli, exitCodes) {
  EXPECT_EQ(2, run("norm --young nope --function " + data + "/simple.txt").code);
  EXPECT_EQ(2, run("norm --young power:2 --profile " + data + "/missing.json").code);
  EXPECT_EQ(2, run("check bogus").code);
  EXPECT_EQ(3, run("norm --young cosh-1 --matrix " + data + "/matrix_diag.json --max-iterations 2").code);
  EXPECT_EQ(4, run("norm --young cosh-1 --profile " + data + "/profile_tail.json --abs-tol 1e-300 --quad-rel-tol 1e-300").code);
}

TEST(Cli, outWritesAtomically) {
  const std::string path = ::testing::TempDir() + "orlicz_cli_out.json";
  std::remove(path.c_str());
  ASSERT_EQ(0, run("check delta2 --young power:2 --out " + path).code);
  EXPECT_EQ(true, load(path)["value"]);
  std::remove(path.c_str());
  EXPECT_EQ(2, run("norm --young nope --function " + data + "/simple.txt --out " + path).code);
  EXPECT_FALSE(std::ifstream(path).good());
  EXPECT_FALSE(std::ifstream(path + ".tmp").good());
}

TEST(Cli, verifySubsetIsDeterministic) {
  const std::string args = "verify --seed 7 --only young,8 --format csv";
  const CliRun a = run(args), b = run(args);
  ASSERT_EQ(0, a.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(std::string::npos, a.out.find("complementarity"));
  EXPECT_NE(std::string::npos, a.out.find("quantum_regularity"));
  EXPECT_EQ(std::string::npos, a.out.find("kunze_ddp"));
}
