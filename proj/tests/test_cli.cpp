#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "coarse/cli.hpp"
#include "test_support.hpp"

using testsupport::fixture_path;
using testsupport::read_file;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = coarse::dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return read_file(fixture_path("golden/" + name)); }

}  // namespace

TEST_CASE("golden outputs") {
  struct Case {
    std::vector<std::string> args;
    const char* golden;
    int code;
  };
  const std::string k4 = fixture_path("k4_integer.map");
  std::vector<Case> cases = {
      {{"map", k4}, "k4_integer.map.txt", 0},
      {{"present", k4}, "k4_integer.brunner.txt", 0},
      {{"present", k4, "--level", "brunner"}, "k4_integer.brunner.txt", 0},
      {{"present", k4, "--level", "reduced"}, "k4_integer.reduced.txt", 0},
      {{"present", k4, "--level", "coarse"}, "k4_integer.coarse.txt", 0},
      {{"h1", k4}, "k4_integer.h1.txt", 0},
      {{"certify", k4}, "k4_integer.certify.txt", 0},
      {{"h1", fixture_path("trefoil_theta.map"), "--level", "reduced"}, "trefoil_theta.h1.txt", 0},
      {{"certify", fixture_path("theta_alternating.map")}, "theta_alternating.certify.txt", 0},
      {{"present", fixture_path("pentagon.map"), "--level", "coarse"}, "pentagon.coarse.txt", 0},
      {{"certify", fixture_path("pentagon.map")}, "pentagon.certify.txt", 0},
      {{"certify", fixture_path("theta_cond2.map")}, "theta_cond2.certify.txt", 0},
      {{"certify", fixture_path("theta_violating.map")}, "theta_violating.certify.txt", 2},
      {{"present", fixture_path("numerator_q2_5.map"), "--level", "reduced"}, "numerator_q2_5.reduced.txt", 0},
  };
  for (const auto& c : cases) {
    INFO(c.golden);
    Run r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == golden(c.golden));
    CHECK(r.err.empty());
  }
  Run piped = run({"refute", "-", "--radius", "1"}, golden("numerator_q2_5.reduced.txt"));
  CHECK(piped.code == 0);
  Run q13 = run({"refute", "-", "--radius", "1"}, run({"present", fixture_path("numerator_q1_3.map"), "--level", "reduced"}).out);
  CHECK(q13.out == golden("numerator_q1_3.refute.txt"));
}

TEST_CASE("tangle and range commands") {
  Run t = run({"tangle", "Q(1/3) + Q(1/4)"});
  CHECK(t.code == 0);
  CHECK(t.out == "ast: Sum(Q(1/3), Q(1/4))\nexpr: Q(1/3) + Q(1/4)\nleaves: 2\n");
  Run f = run({"tangle", "Q(3) * Q(1/2) + Q(1)"});
  CHECK(f.out.find("fraction: 10/7\n") != std::string::npos);
  CHECK(run({"range", "Q(1/3)+Q(1/4)"}).out == "[[0, 2]]\n");
  CHECK(run({"range", "Q(1/3)+Q(1/4)", "--refine"}).out == "[[1/3, 5/4]]\n");
  CHECK(run({"range", "(Q(1/3)+Q(1/4))*Q(-1)+Q(2)", "--refine"}).out == "[[1, 5/2]]\n");
  Run bad = run({"tangle", "Q(1/3) +"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("position 8") != std::string::npos);
}

TEST_CASE("stdin input") {
  std::string text = read_file(fixture_path("trefoil_theta.map"));
  Run r = run({"h1", "-"}, text);
  CHECK(r.code == 0);
  CHECK(r.out == "diagonal: (3)\norder: 3\n");
  CHECK(run({"certify", "-"}, text).out.starts_with("verdict: not-left-orderable\nmethod: uniform-sign\n"));
}

TEST_CASE("replay") {
  const std::string cert = fixture_path("golden/k4_integer.certify.txt");
  Run ok = run({"certify", fixture_path("k4_integer.map"), "--replay", cert});
  CHECK(ok.code == 0);
  CHECK(ok.out.ends_with("replay: ok\n"));
  Run mismatch = run({"certify", fixture_path("theta_violating.map"), "--replay", cert});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.out.find("replay: ok") == std::string::npos);
  Run pent = run({"certify", fixture_path("pentagon.map"), "--replay", fixture_path("golden/pentagon.certify.txt")});
  CHECK(pent.code == 0);
}

TEST_CASE("exit codes and errors") {
  CHECK(run({"--version"}).out == std::string(coarse::kVersion) + "\n");
  CHECK(run({"--version"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"range", "Q(1)", "--sharp"}).code == 1);
  CHECK(run({"present", fixture_path("k4_integer.map"), "--level", "full"}).code == 1);
  CHECK(run({"refute", "-"}, "gen edge a\n").code == 1);  // --radius is required
  CHECK(run({"refute", "-", "--radius", "2"}, "gen edge a\ngen edge b\n").code == 2);
  Run missing = run({"map", fixture_path("no_such.map")});
  CHECK(missing.code == 1);
  CHECK(missing.err.starts_with("error: cannot open"));
  Run broken = run({"map", "-"}, "vertex u\nvertex v\nedge W u v \"Q(1)\"\nrot u : W.t\nouter : W.t\n");
  CHECK(broken.code == 1);
  CHECK(broken.err.find("omits") != std::string::npos);
  Run budget = run({"refute", "-", "--radius", "4", "--max-words", "50"}, "gen edge a\ngen edge b\n");
  CHECK(budget.code == 1);
  CHECK(budget.err.find("exceeds --max-words 50") != std::string::npos);
}

TEST_CASE("every fixture runs through every command") {
  for (const auto& entry : std::filesystem::directory_iterator(COARSE_FIXTURE_DIR)) {
    if (entry.path().extension() != ".map") continue;
    const std::string path = entry.path().string();
    INFO(path);
    CHECK(run({"map", path}).code == 0);
    for (const char* level : {"brunner", "reduced", "coarse"}) CHECK(run({"present", path, "--level", level}).code == 0);
    for (const char* level : {"brunner", "reduced"}) CHECK(run({"h1", path, "--level", level}).code == 0);
    Run c = run({"certify", path});
    CHECK((c.code == 0 || c.code == 2));
    Run again = run({"certify", path});
    CHECK(again.out == c.out);
  }
}
