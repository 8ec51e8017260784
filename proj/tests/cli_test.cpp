#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "curve_io.hpp"

namespace minkhelix {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("minkhelix-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::size_t file_count() const {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir_), fs::directory_iterator()));
  }

  fs::path dir_;
};

TEST_F(CliTest, ReconstructExampleTwoToCsv) {
  const Result r = run({"reconstruct", "--kappa", "sinh(ln(2))/s", "--tau", "cosh(ln(2))/s", "--s-min", "1", "--s-max",
                        "7.389", "--samples", "1001", "--format", "csv", "--output", path("ex2.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::read_curve(path("ex2.csv")).rows.size(), 1001u);
  EXPECT_NE(r.out.find("1001"), std::string::npos);

  const Result v = run({"validate", "--input", path("ex2.csv")});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_NE(v.out.find("\"verdict\": \"pass\""), std::string::npos);
}

TEST_F(CliTest, NonTimelikeRatioExitsOne) {
  for (const char* tau : {"0.5", "1"}) {
    const Result r = run({"reconstruct", "--kappa", "1", "--tau", tau, "--s-min", "0", "--s-max", "1", "--samples", "10",
                          "--output", path("never.csv")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not a time-like general helix"), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  }
  EXPECT_EQ(file_count(), 0u);
}

TEST_F(CliTest, ExampleOneToStdout) {
  const Result r = run({"example", "--id", "1", "--alpha", "0.6931471805599453", "--s-max", "6.2832", "--samples", "629"});
  ASSERT_EQ(r.code, 0) << r.err;
  const CurveSample c = io::deserialize_curve(r.out);
  ASSERT_EQ(c.rows.size(), 629u);
  EXPECT_EQ(c.rows.back().s, 6.2832);
  for (const CurveRow& row : c.rows) EXPECT_NEAR(row.kappa, 0.75, 1e-15);
}

TEST_F(CliTest, IntegrateThenValidatePasses) {
  for (const char* fmt : {"csv", "json"}) {
    const std::string out = path(std::string("int.") + fmt);
    const Result r = run({"integrate", "--kappa", "1", "--tau", "s", "--s-min", "1", "--s-max", "2", "--step", "1e-3",
                          "--format", fmt, "--output", out});
    ASSERT_EQ(r.code, 0) << r.err;
    const Result v = run({"validate", "--input", out, "--report", path("report.json")});
    EXPECT_EQ(v.code, 0) << v.out;
    std::ifstream in(path("report.json"));
    const std::string report((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(report, v.out);
  }
}

TEST_F(CliTest, ReconstructAndIntegrateOfGoldenModelsValidate) {
  const std::vector<std::array<std::string, 4>> models = {
      {"sinh(ln(2))", "cosh(ln(2))", "0", "6.283185307179586"},
      {"sinh(ln(2))/s", "cosh(ln(2))/s", "1", "7.38905609893065"},
      {"sinh(ln(2))/(s^2+1)", "cosh(ln(2))/(s^2+1)", "0", "10"}};
  for (const auto& m : models) {
    for (const char* cmd : {"reconstruct", "integrate"}) {
      const Result r = run({cmd, "--kappa", m[0], "--tau", m[1], "--s-min", m[2], "--s-max", m[3], "--step", "1e-3",
                            "--output", path("g.csv")});
      ASSERT_EQ(r.code, 0) << r.err;
      const Result v = run({"validate", "--input", path("g.csv")});
      EXPECT_EQ(v.code, 0) << cmd << " " << m[0] << "\n" << v.out;
    }
  }
}

TEST_F(CliTest, FailedValidationExitsOne) {
  ASSERT_EQ(run({"example", "--id", "1", "--s-max", "1", "--step", "1e-3", "--output", path("e.csv")}).code, 0);
  const Result v = run({"validate", "--input", path("e.csv"), "--kappa-tol", "1e-20"});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("\"verdict\": \"fail\""), std::string::npos);
}

TEST_F(CliTest, ParseAndEvalErrorsExitOne) {
  const Result p = run({"reconstruct", "--kappa", "sinh(", "--tau", "1", "--s-min", "0", "--s-max", "1", "--samples", "5"});
  EXPECT_EQ(p.code, 1);
  EXPECT_FALSE(p.err.empty());
  const Result e = run({"integrate", "--kappa", "1", "--tau", "ln(s)", "--s-min", "-1", "--s-max", "1", "--samples", "5"});
  EXPECT_EQ(e.code, 1);
  EXPECT_FALSE(e.err.empty());
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"reconstruct", "--kappa", "1"}).code, 1);
  EXPECT_EQ(run({"reconstruct", "--kappa", "0.75", "--tau", "1.25", "--s-min", "0", "--s-max", "1", "--samples", "5",
                 "--step", "0.1"})
                .code,
            1);
  EXPECT_EQ(run({"reconstruct", "--kappa", "0.75", "--tau", "1.25", "--s-min", "0", "--s-max", "1", "--samples", "5",
                 "--format", "xml"})
                .code,
            1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, IoErrorsExitTwo) {
  const Result missing = run({"validate", "--input", path("missing.csv")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());

  std::ofstream(path("bad.csv")) << "# minkhelix curve\nnot a curve\n";
  EXPECT_EQ(run({"validate", "--input", path("bad.csv")}).code, 2);

  const Result unwritable = run({"example", "--id", "3", "--s-max", "1", "--samples", "5", "--output",
                                 path("no/such/dir/out.csv")});
  EXPECT_EQ(unwritable.code, 2);
}

TEST_F(CliTest, ErrorsLeaveNoPartialFiles) {
  run({"reconstruct", "--kappa", "1", "--tau", "s", "--s-min", "1", "--s-max", "2", "--samples", "5", "--output",
       path("a.csv")});
  run({"integrate", "--kappa", "1", "--tau", "2", "--s-min", "0", "--s-max", "10", "--step", "0.2", "--output",
       path("b.csv")});
  EXPECT_EQ(file_count(), 0u);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"reconstruct", "--kappa", "sinh(ln(2))/(s^2+1)", "--tau", "cosh(ln(2))/(s^2+1)",
                                         "--s-min", "0", "--s-max", "3", "--samples", "31", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace minkhelix
