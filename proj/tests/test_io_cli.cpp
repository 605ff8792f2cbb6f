#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jball/acceptance.hpp"
#include "jball/cli.hpp"
#include "jball/io.hpp"

using namespace jball;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("jball_test_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  fs::path dir_;
};

const char* kPunctured = R"({"type": "punctured", "dim": 2, "points": [[0, 0]]})";

}  // namespace

TEST(Json, RoundTripEveryVariant) {
  const std::vector<Domain> domains{
      Domain::punctured({Point(0.0, 0.0), Point(1.0, 2.0)}),
      Domain::punctured({Point({0.0, 0.0, 1.0})}),
      Domain::half_space(Point(0.0, -2.0), 0.5),
      Domain::convex_polygon({Point(0.0, 0.0), Point(2.0, 0.0), Point(1.0, 1.5)}),
      Domain::simple_polygon({Point(0.0, 0.0), Point(2.0, 0.0), Point(2.0, 2.0), Point(1.0, 0.5), Point(0.0, 2.0)}),
      Domain::ball_union({Disk{Point(0.0, 0.0), 1.0}, Disk{Point(1.0, 0.0), 0.25}}),
  };
  for (const Domain& d : domains) {
    const std::string text = io::write_domain(d);
    const Domain back = io::parse_domain(text);
    EXPECT_EQ(back, d) << text;
    EXPECT_EQ(back.dim(), d.dim());
    EXPECT_EQ(io::write_domain(back), text);
  }
}

TEST(Json, Errors) {
  EXPECT_THROW(io::parse_domain("{"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "torus"})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "punctured", "dim": 2, "points": [[0, 0]], "extra": 1})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "punctured", "dim": 3, "points": [[0, 0]]})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "punctured", "dim": 2, "points": [[0, "a"]]})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "half_space", "normal": [0, 0], "offset": 0})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "ball_union", "balls": [{"c": [0, 0], "r": -1}]})"), InvalidInput);
  EXPECT_THROW(io::parse_domain(R"({"type": "convex_polygon", "vertices": [[0, 0], [1, 0]]})"), InvalidInput);
  EXPECT_THROW(io::load_domain("/nonexistent/domain.json"), InvalidInput);
}

TEST(Json, ReportShape) {
  CheckReport r;
  r.predicate = "convexity";
  r.passed = false;
  r.samples_used = 3;
  r.set("excess", 0.25);
  r.witness = Witness{"chord", {Point(0.0, 0.0), Point(1.0, 0.0)}, "n"};
  const io::Json j = io::report_to_json(r);
  EXPECT_EQ(j["schema"], io::kSchemaVersion);
  EXPECT_EQ(j["predicate"], "convexity");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["values"]["excess"], 0.25);
  EXPECT_EQ(j["witness"]["points"].size(), 2u);
  r.witness.reset();
  EXPECT_TRUE(io::report_to_json(r)["witness"].is_null());
}

TEST(Svg, ContainsLoopsAndMarkers) {
  const std::string svg = io::render_svg({{Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 1.0)}},
                                         Box{Point(-1.0, -1.0), Point(2.0, 2.0)}, {{Point(0.5, 0.5), "x"}});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find(">x<"), std::string::npos);
}

TEST(Cli, ParseCoords) {
  EXPECT_EQ(cli::parse_coords("1,0"), (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(cli::parse_coords("-1.5,2,3"), (std::vector<double>{-1.5, 2.0, 3.0}));
  EXPECT_THROW(cli::parse_coords("1,"), InvalidInput);
  EXPECT_THROW(cli::parse_coords("a,b"), InvalidInput);
}

TEST_F(TempDir, DistPrintsTwelveDigits) {
  const std::string d = write("p.json", kPunctured);
  const CliResult r = run_cli({"dist", "--domain", d, "--x", "1,0", "--y", "3,0"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "1.09861228867\n");
  const CliResult k = run_cli({"dist", "--domain", d, "--metric", "k", "--x", "1,0", "--y", "0,1"});
  EXPECT_EQ(k.code, cli::kExitOk);
  EXPECT_NEAR(std::stod(k.out), 1.5707963, 0.01);
}

TEST_F(TempDir, ExitCodes) {
  const std::string d = write("p.json", kPunctured);
  EXPECT_EQ(run_cli({"dist", "--domain", d, "--x", "0,0", "--y", "3,0"}).code, cli::kExitInvalid);
  EXPECT_EQ(run_cli({"dist", "--domain", write("bad.json", "{oops"), "--x", "1,0", "--y", "3,0"}).code,
            cli::kExitInvalid);
  EXPECT_EQ(run_cli({"nonsense"}).code, cli::kExitInvalid);
  EXPECT_EQ(run_cli({"gallery", "nope"}).code, cli::kExitInvalid);
  EXPECT_EQ(run_cli({"check", "convex", "--domain", d, "--x", "1,0", "--M", "0.6"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"check", "convex", "--domain", d, "--x", "1,0", "--M", "0.8"}).code, cli::kExitFailed);
  EXPECT_EQ(run_cli({"check", "strict-starlike", "--domain", d, "--x", "1,0", "--M", "1.0"}).code,
            cli::kExitFailed);
  EXPECT_EQ(run_cli({"check", "topology", "--domain", d, "--x", "1,0", "--M", "0.5"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"check", "topology", "--domain", d, "--x", "1,0", "--M", "1.5"}).code, cli::kExitFailed);
  EXPECT_EQ(run_cli({"check", "convex", "--domain", d, "--x", "1,0", "--M", "-1"}).code, cli::kExitInvalid);
}

TEST_F(TempDir, RenderWritesOneLoopAtLogTwo) {
  const std::string d = write("p.json", kPunctured);
  const std::string svg = path("ball.svg");
  const CliResult r = run_cli({"render", "--domain", d, "--x", "1,0", "--M", "0.6931471805599453", "--out", svg});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.rfind("1 boundary loop", 0), 0u) << r.out;
  const std::string text = slurp(svg);
  EXPECT_NE(text.find("<svg"), std::string::npos);
}

TEST_F(TempDir, GalleryAndDomainCommands) {
  const CliResult g = run_cli({"gallery", "sphere_vs_closure"});
  EXPECT_EQ(g.code, cli::kExitOk);
  const io::Json j = io::Json::parse(g.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  const std::string out = path("g.json");
  EXPECT_EQ(run_cli({"gallery", "sphere_vs_closure", "--out", out}).code, cli::kExitOk);
  EXPECT_EQ(io::Json::parse(slurp(out)), j);

  const std::string d = write("h.json", R"({"type": "half_space", "normal": [0, -3], "offset": 0})");
  const CliResult n = run_cli({"domain", "--domain", d});
  EXPECT_EQ(n.code, cli::kExitOk);
  EXPECT_EQ(io::parse_domain(n.out), Domain::half_space(Point(0.0, -1.0), 0.0));
}

TEST_F(TempDir, SeededOutputIsDeterministic) {
  const std::string d = write("p.json", kPunctured);
  const std::vector<std::string> args{"check", "convex", "--domain", d, "--x", "1,0", "--M", "0.5", "--seed", "5"};
  const CliResult a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> other = args;
  other.back() = "6";
  ::setenv("JBALL_SEED", "5", 1);
  const CliResult e = run_cli(other);
  ::setenv("JBALL_SEED", "x", 1);
  const CliResult bad = run_cli(other);
  ::unsetenv("JBALL_SEED");
  EXPECT_EQ(e.out, a.out);
  EXPECT_EQ(bad.code, cli::kExitInvalid);

  const io::Json r1 = acceptance::to_json({acceptance::run(3, 11)}, 11);
  const io::Json r2 = acceptance::to_json({acceptance::run(3, 11)}, 11);
  EXPECT_EQ(r1.dump(), r2.dump());
}
