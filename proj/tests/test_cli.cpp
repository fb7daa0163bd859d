#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcurve/cli.hpp"

namespace fs = std::filesystem;
using hcurve::cli::run_cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(HCURVE_DATA_DIR) / name).string(); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("hcurve_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                                 ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const char* name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, AnalyzeCsv) {
  const Outcome r = run({"analyze", data("pansu_curve.json"), "--step", "0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  const auto ls = lines(r.out);
  ASSERT_GT(ls.size(), 100u);
  EXPECT_EQ(ls[0], "s,x,y,z,kappa,tau");
  for (std::size_t i = 1; i < ls.size(); i += 50) {
    std::istringstream row(ls[i]);
    std::vector<double> v;
    for (std::string cell; std::getline(row, cell, ',');) v.push_back(std::stod(cell));
    ASSERT_EQ(v.size(), 6u);
    EXPECT_NEAR(v[4], 2.0, 1e-6);
    EXPECT_NEAR(v[5], 0.0, 1e-6);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"analyze", data("generic_intrinsic.json"), "--format", "json", "--step", "0.05"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["columns"].size(), 6u);
  EXPECT_NEAR(j["length"].get<double>(), 4.0, 1e-12);
}

TEST(Cli, ReconstructRoundTripsThroughAnalyze) {
  TempDir dir;
  const Outcome r = run({"reconstruct", data("generic_intrinsic.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string curve = dir.write("curve.json", r.out);
  const Outcome a = run({"analyze", curve, "--format", "json", "--step", "0.1"});
  ASSERT_EQ(a.code, 0) << a.err;
  const json j = json::parse(a.out);
  for (const auto& row : j["rows"]) {
    const double s = row[0].get<double>();
    if (s < 0.1 || s > 3.9) continue;
    EXPECT_NEAR(row[4].get<double>(), 1 + 0.3 * std::sin(s), 1e-5);
    EXPECT_NEAR(row[5].get<double>(), 0.2 * std::cos(s), 1e-5);
  }
}

TEST(Cli, IrregularCurveExitsThree) {
  const Outcome r = run({"analyze", data("vertical_line.json")});
  EXPECT_EQ(r.code, hcurve::cli::kIrregular);
  EXPECT_NE(r.err.find("regularity"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  TempDir dir;
  EXPECT_EQ(run({}).code, hcurve::cli::kInputError);
  EXPECT_EQ(run({"analyze", (dir.path() / "missing.json").string()}).code, hcurve::cli::kInputError);
  EXPECT_EQ(run({"analyze", dir.write("bad.json", "{\"type\": ")}).code, hcurve::cli::kInputError);
  EXPECT_EQ(run({"analyze", dir.write("unk.json", R"({"type":"analytic","x":"q","y":"0","z":"0","range":[0,1]})")}).code,
            hcurve::cli::kInputError);
  const Outcome div = run({"analyze", dir.write("div.json",
                                            R"({"type":"intrinsic","kappa":"1/s","tau":"0","range":[0,1],
                                                "initial":{"point":[0,0,0],"heading":0}})")});
  EXPECT_EQ(div.code, hcurve::cli::kInputError);
  EXPECT_NE(div.err.find("division by zero"), std::string::npos);
  EXPECT_EQ(run({"analyze", data("line.json"), "--format", "xml"}).code, hcurve::cli::kInputError);
  EXPECT_EQ(run({"reconstruct", data("line.json")}).code, hcurve::cli::kInputError);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ClassifyHelix) {
  const Outcome r = run({"classify", data("helix.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["tag"], "CircularHelix");
  const Outcome c = run({"classify", data("helix.json")});
  EXPECT_EQ(lines(c.out).at(0), "field,value");
}

TEST(Cli, SurfaceCheck) {
  const Outcome no = run({"surface", "check", data("line.json"), data("unit_sphere.json"), "--format", "json"});
  EXPECT_EQ(no.code, hcurve::cli::kNegative);
  EXPECT_FALSE(json::parse(no.out)["member"].get<bool>());
}

TEST(Cli, PansuCertificate) {
  const Outcome r = run({"surface", "pansu", "--lambda", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["member"].get<bool>());
}

TEST(Cli, GenerateConstantKappa) {
  const Outcome r = run({"surface", "gen-const-kappa", "--kappa", "2", "--C1", "-1", "--C2", "0", "--C3g", "1", "--C3f", "1",
                     "--range", "-3.14159,0", "--step", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.at(0), "sigma,g,f");
  const Outcome bad = run({"surface", "gen-const-kappa", "--kappa", "1", "--C1", "1", "--C2", "0", "--C3g", "0.5", "--C3f", "0",
                       "--range", "0,2"});
  EXPECT_EQ(bad.code, hcurve::cli::kInputError);
}

TEST(Cli, BertrandDistanceColumn) {
  const Outcome r = run({"bertrand", data("generic_intrinsic.json"), "--c1", "3", "--c2", "4", "--step", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.at(0), "s,x,y,z,x_bar,y_bar,z_bar,dist");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const std::string last = ls[i].substr(ls[i].rfind(',') + 1);
    EXPECT_NEAR(std::stod(last), 5.0, 1e-8);
  }
}

TEST(Cli, ConfigAndFlagOverride) {
  TempDir dir;
  const std::string cfg = dir.write("cfg.json", R"({"format": "json", "step": 0.5})");
  const Outcome a = run({"--config", cfg, "analyze", data("line.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(json::accept(a.out));
  const Outcome b = run({"--config", cfg, "analyze", data("line.json"), "--format", "csv"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(lines(b.out).at(0), "s,x,y,z,kappa,tau");
  EXPECT_EQ(run({"--config", dir.write("bad.json", R"({"colour": 1})"), "analyze", data("line.json")}).code,
            hcurve::cli::kInputError);
}

TEST(Cli, OutputFile) {
  TempDir dir;
  const std::string path = (dir.path() / "out.csv").string();
  const Outcome r = run({"analyze", data("line.json"), "--output", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, run({"analyze", data("line.json")}).out);
}
