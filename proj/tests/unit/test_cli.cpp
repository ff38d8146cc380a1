#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amlink/trace_io.hpp"
#include "cli.hpp"

namespace amlink::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

class TempDir : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("amlink_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
  std::filesystem::path dir_;
};

TEST(Cli, ClusterParaFixtureWritesATrace) {
  const auto r = invoke({"cluster", "--fixture", "para"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto trace = read_trace(r.out);
  EXPECT_EQ(trace.metadata.method, "adaptive");
  EXPECT_EQ(trace.metadata.labels.size(), 25u);
  EXPECT_EQ(trace.depths.size(), 9u);
  EXPECT_NE(r.out.find("\"cutoff\": \"1.05\""), std::string::npos);
}

TEST(Cli, StepwiseMethodOnMeta) {
  const auto r = invoke({"cluster", "--fixture", "meta", "--method", "average"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_trace(r.out).depths.size(), 24u);
}

TEST(Cli, OtherFormats) {
  const auto dot = invoke({"cluster", "--fixture", "meta", "--format", "dot"});
  ASSERT_EQ(dot.code, kOk) << dot.err;
  EXPECT_EQ(first_line(dot.out), "digraph dendrogram {");
  const auto text = invoke({"cluster", "--fixture", "meta", "--format", "tree-text"});
  ASSERT_EQ(text.code, kOk) << text.err;
  EXPECT_EQ(first_line(text.out), "depth 7, cut-off 2.46");
}

TEST(Cli, PopulationSdChangesCutoffs) {
  const auto r = invoke({"cluster", "--fixture", "para", "--sd", "population"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto trace = read_trace(r.out);
  EXPECT_EQ(trace.metadata.sd_mode, SdMode::Population);
  EXPECT_NE(r.out.find("\"cutoff\": \"1.07\""), std::string::npos);
}

TEST(Cli, MissingInputFile) {
  const auto r = invoke({"cluster", "--input", "/no/such/file.csv"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("/no/such/file.csv"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"cluster"}).code, kUsageError);
  EXPECT_EQ(invoke({"cluster", "--fixture", "ortho"}).code, kUsageError);
  EXPECT_EQ(invoke({"cluster", "--fixture", "para", "--method", "ward"}).code, kUsageError);
  EXPECT_EQ(invoke({"cluster", "--fixture", "para", "--format", "svg"}).code, kUsageError);
  EXPECT_EQ(invoke({"cluster", "--fixture", "para", "--sd", "robust"}).code, kUsageError);
  const auto both = invoke({"cluster", "--fixture", "para", "--input", "x.csv"});
  EXPECT_EQ(both.code, kUsageError);
  EXPECT_TRUE(both.out.empty());
}

TEST(Cli, ThresholdNeedsAStepwiseMethod) {
  const auto r = invoke({"cluster", "--fixture", "para", "--threshold", "1.0"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--threshold"), std::string::npos);
  const auto ok =
      invoke({"cluster", "--fixture", "para", "--method", "single", "--threshold", "0.5"});
  ASSERT_EQ(ok.code, kOk) << ok.err;
  EXPECT_LT(read_trace(ok.out).depths.size(), 24u);
}

TEST(Cli, CompareReport) {
  const auto r = invoke({"compare", "--fixture", "meta"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "adaptive: 7 levels, average-linkage: 24 steps");
  const auto single = invoke({"compare", "--fixture", "para", "--method", "single"});
  ASSERT_EQ(single.code, kOk) << single.err;
  EXPECT_EQ(first_line(single.out), "adaptive: 9 levels, single-linkage: 24 steps");
}

TEST_F(TempDir, CompareTwoPoints) {
  const auto input = write("two.csv", "label,x,y\na,0,0\nb,1,1\n");
  const auto r = invoke({"compare", "--input", input});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("levels: 1 vs 1"), std::string::npos);
}

TEST_F(TempDir, ZeroVarianceInputIsAUsageError) {
  const auto input = write("flat.csv", "label,x,y\na,0,5\nb,1,5\n");
  const auto r = invoke({"cluster", "--input", input});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("y"), std::string::npos);
  EXPECT_EQ(invoke({"cluster", "--input", input, "--no-normalize"}).code, kOk);
}

TEST_F(TempDir, MalformedInputReportsRow) {
  const auto input = write("bad.csv", "label,x\na,1\nb,oops\n");
  const auto r = invoke({"cluster", "--input", input});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("oops"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = invoke({"cluster", "--fixture", "para"});
  const auto b = invoke({"cluster", "--fixture", "para"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExportRoundTripsThroughCluster) {
  const auto exported = invoke({"export", "--fixture", "meta"});
  ASSERT_EQ(exported.code, kOk) << exported.err;
  EXPECT_EQ(first_line(exported.out), "substituent,pi_m,sigma_m");
  const auto normalized = invoke({"export", "--fixture", "meta", "--normalized"});
  ASSERT_EQ(normalized.code, kOk);
  EXPECT_NE(normalized.out, exported.out);
}

TEST_F(TempDir, OutputFileMatchesStdout) {
  const auto exported = invoke({"export", "--fixture", "para"});
  const auto input = write("para.csv", exported.out);
  const auto from_file = invoke({"cluster", "--input", input});
  const auto from_fixture = invoke({"cluster", "--fixture", "para"});
  ASSERT_EQ(from_file.code, kOk) << from_file.err;
  // identical data, so the dataset hash and groups agree
  EXPECT_EQ(read_trace(from_file.out).depths, read_trace(from_fixture.out).depths);

  const auto target = path("trace.json");
  const auto written = invoke({"cluster", "--input", input, "--output", target});
  ASSERT_EQ(written.code, kOk) << written.err;
  EXPECT_TRUE(written.out.empty());
  std::ifstream in(target);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), from_file.out);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("cluster"), std::string::npos);
}

}  // namespace
}  // namespace amlink::cli
