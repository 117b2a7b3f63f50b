#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <iterator>

#include "chen_oracle.hpp"
#include "cli_runner.hpp"

using namespace pathring::testing;

namespace {

CliRun rows(const std::string& args) { return run_cli(args + " --format rows"); }

}  // namespace

TEST(CliBar, FormalModelTable) {
  auto r = rows("bar " + fixture("formal_m2.json") + " --truncation 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.at("H.0"), "15");
  EXPECT_EQ(r.at("H0.length.0"), "1");
  EXPECT_EQ(r.at("H0.length.1"), "2");
  EXPECT_EQ(r.at("H0.length.2"), "4");
  EXPECT_EQ(r.at("H0.length.3"), "8");
  for (const auto& [k, v] : r.rows)
    if (k.rfind("H.", 0) == 0 && k != "H.0") EXPECT_EQ(v, "0") << k;
}

TEST(CliBar, SphereTable) {
  auto r = rows("bar " + fixture("sphere.json") + " --truncation 3");
  ASSERT_EQ(r.exit_code, 0);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(r.at("H." + std::to_string(i)), "1");
}

TEST(CliBar, ExitCodes) {
  const std::string dir = ::testing::TempDir();
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir + name) << text;
    return dir + name;
  };
  EXPECT_EQ(run_cli("bar " + write("m.json", "{\"degrees\": ")).exit_code, 2);
  EXPECT_EQ(run_cli("bar " + write("u.json", R"({"degrees": {"0": ["1"]}, "unit": "1", "extra": 1})")).exit_code, 2);
  EXPECT_EQ(run_cli("bar " + write("r.json", R"({"degrees": {"0": ["1"]}, "unit": "1", "d": [["1", [["1", "1/0"]]]]})")).exit_code, 2);
  EXPECT_EQ(run_cli("bar " + write("i.json", R"({"degrees": {"0": ["1"], "1": ["x"]}, "unit": "1",
      "product": [["x", "x", [["1", "1"]]]]})")).exit_code, 3);
  EXPECT_EQ(run_cli("bar " + write("s.json", R"({"degrees": {"0": ["1"], "1": ["x"], "2": ["y"]}, "unit": "1",
      "d": [["x", [["y", "1"]]]], "product": [["x", "x", [["y", "1"]]]]})")).exit_code, 3);
  EXPECT_EQ(run_cli("bar " + fixture("formal_m3.json") + " --basis-cap 5").exit_code, 4);
  EXPECT_EQ(run_cli("bar " + fixture("two_point.json") + " --left nowhere").exit_code, 2);
  EXPECT_EQ(run_cli("bar").exit_code, 2);
  EXPECT_EQ(run_cli("bar " + fixture("sphere.json") + " --format xml").exit_code, 2);
}

TEST(CliVerify, Verdicts) {
  auto formal = rows("verify " + fixture("formal_m1.json"));
  EXPECT_EQ(formal.exit_code, 0);
  EXPECT_EQ(formal.at("check.connectedness"), "PASS");
  EXPECT_EQ(formal.at("check.concentration"), "PASS");

  auto sphere = rows("verify " + fixture("sphere.json"));
  EXPECT_EQ(sphere.exit_code, 1);
  EXPECT_EQ(sphere.at("check.concentration"), "FAIL");

  auto two = rows("verify " + fixture("two_point.json") + " --truncation 2");
  EXPECT_EQ(two.exit_code, 1);
  EXPECT_EQ(two.at("H.0"), "0");
  EXPECT_EQ(two.at("check.connectedness"), "FAIL");

  auto same = rows("verify " + fixture("two_point.json") + " --left p0 --right p0 --truncation 2");
  EXPECT_EQ(same.exit_code, 0);
  EXPECT_EQ(same.at("H.0"), "1");
}

TEST(CliVerify, Cotorsors) {
  for (const char* f : {"cotorsor_trivial.json", "cotorsor_twisted.json"}) {
    auto r = rows(std::string("verify ") + fixture(f));
    EXPECT_EQ(r.exit_code, 0) << f;
    for (const char* c : {"coassociative", "counital", "galois", "nonzero", "kunneth"})
      EXPECT_EQ(r.at(std::string("check.") + c), "PASS") << f << " " << c;
  }
  EXPECT_EQ(run_cli("verify " + fixture("cotorsor_trivial.json") + " --truncation 2").exit_code, 2);
}

TEST(CliHopf, AxiomsAndTables) {
  auto r = rows("hopf --letters 2 --truncation 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.at("check.hopf"), "PASS");
  EXPECT_EQ(r.at("check.cocomposition"), "PASS");
  EXPECT_EQ(r.at("check.bar_shuffle"), "PASS");
  EXPECT_EQ(r.at("shuffle.[a0].[a1]"), "1*[a0|a1] + 1*[a1|a0]");
  EXPECT_EQ(r.at("antipode.[a0|a1]"), "1*[a1|a0]");
  auto from_doc = rows("hopf " + fixture("exact_direction.json") + " --truncation 2");
  EXPECT_EQ(from_doc.exit_code, 0);
  EXPECT_EQ(from_doc.at("letters"), "1");
  EXPECT_EQ(run_cli("hopf " + fixture("sphere.json")).exit_code, 3);
  EXPECT_EQ(run_cli("hopf").exit_code, 2);
}

TEST(CliModel, Stages) {
  auto r = rows("model " + fixture("formal_m2.json") + " --stages 2 --degree-cap 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.at("augmentation_count"), "1");
  EXPECT_EQ(r.at("stage.2.gen.u2_0"), "degree=1 d=1*a0*a1 psi=0");
  EXPECT_EQ(r.at("stage.2.H.0"), "1");
  auto empty = rows("model " + fixture("formal_m0.json"));
  ASSERT_EQ(empty.exit_code, 0);
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(empty.at("stage." + std::to_string(s) + ".generators"), "0");
  EXPECT_EQ(run_cli("model " + fixture("formal_m3.json") + " --basis-cap 2").exit_code, 4);
}

TEST(CliTransport, LogAndPolylog) {
  auto log = rows("transport " + fixture("log.json"));
  ASSERT_EQ(log.exit_code, 0);
  EXPECT_NEAR(complex_row(log.at("transport.straight.0.1")).first, std::log(2.5), 1e-10);

  auto poly = rows("transport " + fixture("polylog.json"));
  ASSERT_EQ(poly.exit_code, 0);
  RealSegmentOracle o{0.2, 0.5};
  for (const char* p : {"straight", "upper_arc", "wiggle", "bent"}) {
    auto [re, im] = complex_row(poly.at(std::string("transport.") + p + ".0.2"));
    EXPECT_NEAR(re, o.w1w0(), 1e-8) << p;
    EXPECT_NEAR(im, 0, 1e-8) << p;
  }
  EXPECT_EQ(poly.at("k_form"), "exists");
}

TEST(CliTransport, Failures) {
  EXPECT_EQ(run_cli("transport " + fixture("through_puncture.json")).exit_code, 5);
  EXPECT_EQ(run_cli("pair " + fixture("log.json") + " --tol 1e-30").exit_code, 6);
  EXPECT_EQ(run_cli("pair " + fixture("polylog.json") + " --path nowhere").exit_code, 2);
  EXPECT_EQ(run_cli("transport " + fixture("sphere.json")).exit_code, 2);
}

TEST(CliPair, ShuffleClass) {
  auto r = rows("pair " + fixture("polylog.json") + " --path upper_arc");
  ASSERT_EQ(r.exit_code, 0);
  auto w0 = complex_row(r.at("integral.upper_arc.w0"));
  auto w1 = complex_row(r.at("integral.upper_arc.w1"));
  auto c = complex_row(r.at("pair.upper_arc.w0_times_w1"));
  EXPECT_NEAR(c.first, w0.first * w1.first - w0.second * w1.second, 1e-8);
  EXPECT_NEAR(c.second, w0.first * w1.second + w0.second * w1.first, 1e-8);
}

TEST(CliPair, HighPrecision) {
  auto r = rows("transport " + fixture("log.json") + " --precision-bits 128 --tol 1e-18");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.at("transport.straight.0.1").substr(0, 22), "9.16290731874155065183");
}

TEST(CliOutput, DeterministicAndOutFile) {
  const std::string args = "model " + fixture("formal_m2.json") + " --stages 2 --degree-cap 3 --format rows";
  auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  const std::string path = ::testing::TempDir() + "model_rows.txt";
  ASSERT_EQ(run_cli(args + " --out " + path).exit_code, 0);
  std::ifstream in(path);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, a.out);
  auto text = run_cli("model " + fixture("formal_m2.json") + " --stages 2 --degree-cap 3");
  EXPECT_EQ(text.out.find('\t'), std::string::npos);
}
