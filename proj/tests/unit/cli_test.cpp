#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "body_spec.hpp"
#include "cli.hpp"
#include "polysect/error.hpp"

namespace polysect::cli {
namespace {

const std::string data_dir = POLYSECT_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

TEST(Cli, SectionOfCubeIsHexagon) {
  const auto r = call({"section", "--body", data("cube.off"), "--flat", "n=1,1,1;c=0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "section");
  EXPECT_EQ(j["section"]["vertex_count"], 6);
  EXPECT_EQ(j["section"]["vertices"].size(), 6u);
}

TEST(Cli, BallRejectedByK1WithExitTwo) {
  const auto r = call({"klee-k1", "--body", data("ball.json"), "--flats", "5", "--seed", "7"});
  ASSERT_EQ(r.code, 2) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "non-polytope");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["witness"].contains("flat"));
}

TEST(Cli, WalkOfCubeIsFourCycle) {
  const auto r = call({"walk", "--body", data("cube.off"), "--xi", "0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["walk"]["vertices"].size(), 4u);
}

TEST(Cli, ErrorsGoToStderrWithExitOne) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"section", "--body", data("ball.json"), "--flat", "n=0,0,1;c=0"},
           {"section", "--body", data("missing.off"), "--flat", "n=0,0,1;c=0"},
           {"section", "--body", data("cube.off"), "--flat", "n=0,0;c=0"},
           {"cone", "--body", data("cube.off"), "--apex", "0,0,0"},
           {"epsilon", "--body", data("cube.off"), "--p", "1,1,1", "--q", "1,1,1"},
           {"bogus"},
           {}}) {
    const auto r = call(args);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, ReportAndSvgFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "polysect_cli_test";
  std::filesystem::create_directories(dir);
  const auto report = (dir / "r.json").string();
  const auto svg = (dir / "s.svg").string();
  const auto r = call({"walk", "--body", data("cube.off"), "--xi", "0,0,1", "--report", report, "--svg", svg});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream s(svg);
  const std::string text((std::istreambuf_iterator<char>(s)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
  EXPECT_NE(text.find(">v0<"), std::string::npos);
  EXPECT_NE(text.find(">v3<"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(report));
  std::filesystem::remove_all(dir);
}

TEST(Cli, SeedDefaultsToEnvironment) {
  ::setenv("POLYSECT_SEED", "13", 1);
  const auto r = call({"klee-k2", "--body", data("cube.off"), "--flats", "3"});
  ::unsetenv("POLYSECT_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 13);
}

TEST(BodySpec, LoadsEveryKind) {
  EXPECT_EQ(load_body(data("cube.off")).body->kind(), "polytope");
  EXPECT_EQ(load_body(data("ball.json")).body->kind(), "ball");
  EXPECT_EQ(load_body(data("ellipsoid.json")).body->kind(), "ellipsoid");
  EXPECT_EQ(load_body(data("cap_cube.json")).body->kind(), "cap");
}

TEST(BodySpec, ParsesFlatsAndPoints) {
  const auto h = parse_flat("n=1,1,1;c=0", 3);
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_TRUE(h.contains(Point{1, -1, 0}));
  const auto f = parse_flat("p=0,0,1;u=1,0,0;u=0,1,0", 3);
  EXPECT_TRUE(f.contains(Point{5, 6, 1}));
  EXPECT_EQ(parse_point("1/2,-0.25", 2), (Point{Scalar(1, 2), Scalar(-1, 4)}));
  EXPECT_THROW(parse_point("1,2", 3), Error);
  EXPECT_THROW(parse_flat("q=1", 3), Error);
}

}  // namespace
}  // namespace polysect::cli
