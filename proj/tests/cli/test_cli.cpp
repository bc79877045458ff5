#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "sphtopo_cli/cli.hpp"

namespace sphtopo::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sphtopo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SynthWritesCoefficientsReproducibly) {
  const auto a = call({"synth", "--ell", "5", "--seed", "1", "--out", path("a.json")});
  ASSERT_EQ(a.code, kSuccess) << a.err;
  EXPECT_EQ(a.out, "coefficients: 11\n");
  ASSERT_EQ(call({"synth", "--ell", "5", "--seed", "1", "--out", path("b.json")}).code, kSuccess);
  EXPECT_FALSE(slurp(path("a.json")).empty());
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({"synth", "--ell", "0", "--seed", "1", "--out", path("x.json")}).code, kUsageError);
  EXPECT_EQ(call({"synth", "--ell", "3"}).code, kUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(call({}).code, kUsageError);
  EXPECT_EQ(call({"epc", "--ell", "4", "--seed", "1", "--lo", "2", "--hi", "1"}).code, kUsageError);
  EXPECT_EQ(call({"epc", "--ell", "4", "--seed", "1", "--method", "grid"}).code, kUsageError);
  EXPECT_EQ(call({"surface", "--which", "cov-kernel", "--range", "0:1", "--step", "0"}).code,
            kUsageError);
  const auto bad = call({"ensemble", "--ell", "4", "--n", "1", "--thresholds", "0", "--out", path("r.csv")});
  EXPECT_EQ(bad.code, kUsageError);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST_F(CliTest, RuntimeErrors) {
  EXPECT_EQ(call({"epc", "--field", path("missing.json")}).code, kRuntimeFailure);
  EXPECT_EQ(call({"report", "--runs", path("missing.csv")}).code, kRuntimeFailure);
  EXPECT_EQ(call({"synth", "--ell", "3", "--seed", "1", "--out", path("no/such/dir/f.json")}).code,
            kRuntimeFailure);
}

TEST_F(CliTest, HelpSucceeds) { EXPECT_EQ(call({"--help"}).code, kSuccess); }

TEST_F(CliTest, EpcWholeLineAndAboveMaximum) {
  const auto whole = call({"epc", "--ell", "8", "--seed", "3", "--lo=-inf", "--hi", "inf"});
  ASSERT_EQ(whole.code, kSuccess) << whole.err;
  EXPECT_EQ(whole.out.rfind("morse chi 2 mu0 ", 0), 0u);
  const auto high = call({"epc", "--ell", "8", "--seed", "3", "--lo", "10"});
  ASSERT_EQ(high.code, kSuccess);
  EXPECT_EQ(high.out, "morse chi 0 mu0 0 mu1 0 mu2 0\n");
}

TEST_F(CliTest, EpcBothMethodsFromFieldFile) {
  ASSERT_EQ(call({"synth", "--ell", "4", "--seed", "12", "--out", path("f.json")}).code, kSuccess);
  const auto r = call({"epc", "--field", path("f.json"), "--lo", "0.5", "--method", "both",
                       "--oversampling", "32", "--out", path("e.csv")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0].rfind("morse chi ", 0), 0u);
  EXPECT_EQ(l[1].rfind("mesh chi ", 0), 0u);
  EXPECT_EQ(l[2], "agreement yes");
  const auto csv = lines(slurp(path("e.csv")));
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[0], "seed,method,interval_lo,interval_hi,chi,mu0,mu1,mu2");
  EXPECT_EQ(csv[1].rfind("12,morse,0.5,inf,", 0), 0u);
  EXPECT_EQ(csv[2].rfind("12,mesh,0.5,inf,", 0), 0u);
}

TEST_F(CliTest, EnsembleIsReproducibleAcrossRunsAndThreads) {
  const std::vector<std::string> base{"ensemble", "--ell", "6", "--n", "2", "--seed", "5",
                                      "--thresholds", "-2:2:1", "--intervals", "-inf:-0.5",
                                      "--method", "both"};
  auto with = [&](const std::string& out, const std::string& par) {
    auto args = base;
    args.insert(args.end(), {"--out", path(out), "--parallel", par});
    return call(args);
  };
  const auto a = with("a.csv", "1");
  ASSERT_EQ(a.code, kSuccess) << a.err;
  EXPECT_EQ(a.out.rfind("samples 2 columns 12 ", 0), 0u);
  ASSERT_EQ(with("b.csv", "1").code, kSuccess);
  ASSERT_EQ(with("c.csv", "8").code, kSuccess);
  const auto csv = slurp(path("a.csv"));
  EXPECT_EQ(lines(csv).size(), 3u);
  EXPECT_EQ(lines(csv)[0].rfind("seed_index,morse[-2:inf],morse[-1:inf],morse[0:inf],", 0), 0u);
  EXPECT_EQ(csv, slurp(path("b.csv")));
  EXPECT_EQ(csv, slurp(path("c.csv")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("c.json")));
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST_F(CliTest, ReportFromEnsemble) {
  ASSERT_EQ(call({"ensemble", "--ell", "5", "--n", "6", "--thresholds", "0,1.5", "--out", path("r.csv"),
                  "--parallel", "1"})
                .code,
            kSuccess);
  const auto r = call({"report", "--runs", path("r.csv"), "--out", path("rep.csv")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(slurp(path("rep.csv")));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], "quantity,u_or_pair,empirical,theory,stderr_or_ratio,z_or_band,status");
  int variance_rows = 0;
  bool saw_unit_theory = false;
  for (const auto& row : rows) {
    if (row.rfind("variance,", 0) == 0) ++variance_rows;
    if (row.rfind("mean,morse[0:inf],", 0) == 0) {
      std::istringstream in(row);
      std::string field;
      for (int k = 0; k < 4; ++k) std::getline(in, field, ',');
      saw_unit_theory = std::abs(std::stod(field) - 1.0) < 1e-12;
    }
  }
  EXPECT_EQ(variance_rows, 2);
  EXPECT_TRUE(saw_unit_theory);

  const auto to_stdout = call({"report", "--runs", path("r.csv"), "--out", "-", "--no-pairs"});
  ASSERT_EQ(to_stdout.code, kSuccess);
  EXPECT_EQ(to_stdout.out.find("covariance"), std::string::npos);
}

double surface_value(const std::string& csv, std::size_t columns, const std::vector<double>& at) {
  for (const auto& row : lines(csv)) {
    std::istringstream in(row);
    std::vector<double> v;
    for (std::string f; std::getline(in, f, ',');) {
      try {
        v.push_back(std::stod(f));
      } catch (...) {
        break;
      }
    }
    if (v.size() != columns) continue;
    bool match = true;
    for (std::size_t k = 0; k < at.size(); ++k) match = match && std::abs(v[k] - at[k]) < 1e-9;
    if (match) return v.back();
  }
  ADD_FAILURE() << "grid point not found";
  return NAN;
}

TEST_F(CliTest, Surfaces) {
  const auto kernel = call({"surface", "--which", "cov-kernel", "--range=-2:2", "--step", "0.5", "--out", "-"});
  ASSERT_EQ(kernel.code, kSuccess) << kernel.err;
  EXPECT_EQ(lines(kernel.out)[0], "t1,t2,z");
  EXPECT_EQ(lines(kernel.out).size(), 1u + 81u);
  EXPECT_NEAR(surface_value(kernel.out, 3, {0, 0}), 1.0 / (8.0 * std::numbers::pi), 1e-15);
  // Sign flips across |t| = sqrt(2 - sqrt(3)) ~ 0.518 and sqrt(2 + sqrt(3)) ~ 1.932.
  EXPECT_LT(surface_value(kernel.out, 3, {1, 0}), 0.0);
  EXPECT_GT(surface_value(kernel.out, 3, {1, 1}), 0.0);
  EXPECT_GT(surface_value(kernel.out, 3, {2, 0}), 0.0);

  const auto var = call({"surface", "--which", "halfline-var", "--range", "0:3", "--step", "0.25"});
  ASSERT_EQ(var.code, kSuccess);
  EXPECT_EQ(lines(var.out)[0], "u,z");
  EXPECT_EQ(surface_value(var.out, 2, {1}), 0.0);
  EXPECT_GT(surface_value(var.out, 2, {2}), 0.0);

  const auto cov = call({"surface", "--which", "halfline-cov", "--range=-1.5:1.5", "--step", "0.5",
                         "--out", path("c.csv")});
  ASSERT_EQ(cov.code, kSuccess);
  const auto text = slurp(path("c.csv"));
  EXPECT_EQ(lines(text)[0], "u1,u2,z");
  EXPECT_DOUBLE_EQ(surface_value(text, 3, {-1.5, 0.5}), surface_value(text, 3, {0.5, -1.5}));
}

TEST_F(CliTest, VerifyAnalyticSmallRun) {
  const auto r = call({"verify-analytic", "--seed", "3", "--cases", "2", "--out", path("v.csv")});
  EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
  const auto rows = lines(slurp(path("v.csv")));
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[0], "check_name,max_abs_error,tolerance,status");
}

TEST(CliParsing, Thresholds) {
  EXPECT_EQ(parse_thresholds("-2:2:1"), (std::vector<double>{-2, -1, 0, 1, 2}));
  const auto t = parse_thresholds("0:1:0.1");
  ASSERT_EQ(t.size(), 11u);
  EXPECT_EQ(t[3], 0.3);
  EXPECT_EQ(parse_thresholds("1.5, -0.25"), (std::vector<double>{1.5, -0.25}));
  EXPECT_THROW(parse_thresholds("a"), std::invalid_argument);
  EXPECT_THROW(parse_thresholds("0:1:0"), std::invalid_argument);
  EXPECT_THROW(parse_thresholds("1:0:0.5"), std::invalid_argument);
}

TEST(CliParsing, Intervals) {
  const auto v = parse_intervals("-inf:0,1:inf,-0.5:0.5");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], ThresholdInterval::make(-ThresholdInterval::kInf, 0.0));
  EXPECT_EQ(v[1], ThresholdInterval::half_line(1.0));
  EXPECT_EQ(v[2], ThresholdInterval::make(-0.5, 0.5));
  EXPECT_THROW(parse_intervals("2:1"), std::invalid_argument);
  EXPECT_THROW(parse_intervals("1"), std::invalid_argument);
}

}  // namespace
}  // namespace sphtopo::cli
