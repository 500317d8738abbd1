#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "hmc/corpus.hpp"

namespace hmc::cli {
namespace {

using nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig milnor(const std::string& input, int threads = 1) {
  RunConfig c;
  c.command = Command::kMilnor;
  c.input = input;
  c.threads = threads;
  return c;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, MilnorConcurrent3) {
  const Result r = call(milnor("corpus:concurrent3"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["M_y"], ordered_json::parse(R"({"P_{123}": ["-1", "3"]})"));
  EXPECT_TRUE(j["cross_path_ok"].get<bool>());
  EXPECT_TRUE(j["degree0"]["equal"].get<bool>());
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (const auto& name : corpus_names()) {
    const Result one = call(milnor("corpus:" + name, 1));
    const Result four = call(milnor("corpus:" + name, 4));
    ASSERT_EQ(one.code, 0) << name << one.err;
    EXPECT_EQ(one.out, four.out) << name;
  }
}

TEST(Cli, VirtualQuarticSurface) {
  RunConfig c;
  c.command = Command::kVirtual;
  c.degree = 4;
  c.ambient = 3;
  const Result r = call(c);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ordered_json::parse(r.out)["genus"], "2 - 20y + 2y^2");
  c.degree = 0;
  EXPECT_EQ(call(c).code, 2);
}

TEST(Cli, CheckSuitePasses) {
  RunConfig c;
  c.command = Command::kCheck;
  const Result r = call(c);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(ordered_json::parse(r.out)["all_ok"].get<bool>());
  c.suite = "nosuch";
  EXPECT_EQ(call(c).code, 2);
}

TEST(Cli, CalibrateMatchesGolden) {
  RunConfig c;
  c.command = Command::kCalibrate;
  const Result r = call(c);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string golden = slurp(std::string(HMC_GOLDEN_DIR) + "/calibrate_corpus.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(r.out, golden);
}

TEST(Cli, InputErrorsExitTwo) {
  const Result unknown = call(milnor("corpus:nosuch"));
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(unknown.out.empty());
  const auto e = ordered_json::parse(unknown.err);
  EXPECT_EQ(e["kind"], "input");
  EXPECT_EQ(e["exit_code"], 2);

  EXPECT_EQ(call(milnor(temp_file("bad.json", "{\"n\": 2, \"hyperplanes\": ["))).code, 2);
  EXPECT_EQ(call(milnor(::testing::TempDir() + "missing_file.json")).code, 2);
  EXPECT_EQ(call(milnor("")).code, 2);
}

TEST(Cli, ValidationErrorsExitOne) {
  // xy(x+y)^2 needs a user table
  const std::string path = temp_file("nonreduced.json", R"({"n": 2, "hyperplanes": [
    {"coeffs": ["1", "0", "0"]}, {"coeffs": ["0", "1", "0"]}, {"coeffs": ["1", "1", "0"], "mult": 2}]})");
  const Result r = call(milnor(path));
  EXPECT_EQ(r.code, 1) << r.out;
  const auto e = ordered_json::parse(r.err);
  EXPECT_EQ(e["kind"], "validation");
  EXPECT_EQ(e["error"], "missing spectrum table for edge 123");

  RunConfig c = milnor("corpus:concurrent3");
  c.spectra = temp_file("wrong_table.json", R"({"123": [{"alpha": "1/2", "mult": 4}]})");
  EXPECT_EQ(call(c).code, 1);
}

TEST(Cli, OutputFile) {
  RunConfig c = milnor("corpus:triangle3");
  c.output = ::testing::TempDir() + "triangle3_report.json";
  const Result r = call(c);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(c.output), call(milnor("corpus:triangle3")).out);
  std::remove(c.output.c_str());
}

TEST(Cli, SchemaAndLattice) {
  RunConfig c;
  EXPECT_EQ(call(c).code, 0);
  c.command = Command::kLattice;
  c.input = "corpus:fourplanes";
  const Result r = call(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(ordered_json::parse(r.out).contains("edges"));
}

}  // namespace
}  // namespace hmc::cli
