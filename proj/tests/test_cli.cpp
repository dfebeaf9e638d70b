#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "fal/falmap.hpp"

namespace {

struct Run {
  std::string out;
  int code = -1;
};

const std::string kFal = FAL_CLI_PATH;

// Runs a shell pipeline; `$FAL` names the binary under test.
Run sh(const std::string& cmd) {
  std::string full = "FAL='" + kFal + "'; " + cmd + " 2>&1";
  Run r;
  FILE* p = popen(full.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path scratch() {
  auto d = std::filesystem::temp_directory_path() / ("fal_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("gen p 4 | classify -") {
  Run r = sh("$FAL gen p 4 | $FAL classify -");
  CHECK(r.code == 0);
  CHECK(r.out == "TwoRS_P(4)\n");
}

TEST_CASE("decide a a is Equivalent") {
  std::string a = write("a.fal", sh("$FAL gen pretzel 4").out);
  Run r = sh("$FAL decide " + a + " " + a);
  CHECK(r.code == 0);
  CHECK(has(r.out, "Equivalent"));
}

TEST_CASE("decide exit codes for Distinct and Unknown") {
  std::string p = write("p3.fal", sh("$FAL gen p 3").out);
  std::string o = write("o3.fal", sh("$FAL gen o 3").out);
  Run d = sh("$FAL decide " + p + " " + o);
  CHECK(d.code == 3);
  CHECK(has(d.out, "component count"));
  std::string z = write("pz5.fal", sh("$FAL gen pretzel 5").out);
  std::string f = write("pz5f.fal", sh("$FAL flype --input " + z + " --clasp C3 --alt 1").out);
  Run u = sh("$FAL decide " + z + " " + f + " --budget 1");
  Run e = sh("$FAL decide " + z + " " + f);
  CHECK(e.code == 0);
  // The flyped form differs, so a one-form budget stops short.
  CHECK(u.code == 4);
  CHECK(has(u.out, "Unknown"));
  Run env = sh("FAL_BUDGET=1 $FAL decide " + z + " " + f + " --json");
  CHECK(env.code == u.code);
  CHECK(nlohmann::json::parse(env.out)["result"]["search"]["max_forms"] == 1);
}

TEST_CASE("validate rejects a one-clasp file") {
  std::string bad = write("bad.fal", "fal 1\nknot K1 = a b\nclasp C = a:R b:R\n");
  Run r = sh("$FAL validate " + bad);
  CHECK(r.code == 2);
  CHECK(has(r.out, "(b)"));
  Run j = sh("$FAL validate " + bad + " --json");
  CHECK(j.code == 2);
  CHECK(nlohmann::json::parse(j.out)["schema"] == "fal/1");
}

TEST_CASE("every generator pipes into validate") {
  for (std::string g : {"borromean", "p 3", "p 9", "o 2", "o 7", "pretzel 2", "pretzel 6", "fig14",
                        "signature 5 --chords 1-2,2-3,3-4,4-5", "random --seed 3", "random --seed 4 --max-knots 9"}) {
    Run r = sh("$FAL gen " + g + " | $FAL validate -");
    INFO(g);
    CHECK(r.code == 0);
    CHECK(has(r.out, "valid"));
  }
  // The Figure 15 skeleton parses but is not itself a flat FAL.
  CHECK(sh("$FAL gen fig15 | $FAL validate -").code == 2);
  CHECK(sh("$FAL gen fig15 | $FAL canon -").code == 0);
}

TEST_CASE("transforms emit parseable output") {
  std::string z = write("pz4.fal", sh("$FAL gen pretzel 4").out);
  Run s = sh("$FAL swap --input " + z + " --kf Kf");
  CHECK(s.code == 0);
  CHECK_NOTHROW(fal::parse(s.out));
  CHECK(has(s.out, "# step: {\"kind\":\"FullSwap\""));
  Run f = sh("$FAL flype " + z + " --clasp C2 --alt 1 | $FAL validate -");
  CHECK(f.code == 0);
  std::string out = (scratch() / "sw.fal").string();
  CHECK(sh("$FAL swap " + z + " --kf Kf -o " + out).code == 0);
  CHECK(sh("$FAL decide " + z + " " + out).code == 0);
  CHECK(sh("$FAL flype " + z + " --clasp C2 --alt 9").code == 2);
}

TEST_CASE("json payloads carry the schema version") {
  std::string f = write("f15.fal", sh("$FAL gen fig15").out);
  std::string p = write("p3j.fal", sh("$FAL gen p 3").out);
  for (std::string cmd : {"validate " + p, "canon " + p, "classify " + p, "decide " + p + " " + p, "signature " + p,
                          "swap " + p + " --kf K1", "geodesics " + p, "sepsets " + f + " --kf Kf --alpha 7",
                          "symmetry " + p, std::string("gen o 4")}) {
    Run r = sh("$FAL " + cmd + " --json");
    INFO(cmd);
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["schema"] == "fal/1");
    CHECK(j.contains("kind"));
  }
  nlohmann::json ball = nlohmann::json::parse(sh("$FAL sepsets " + f + " --kf Kf --alpha 7 --json").out);
  CHECK(ball.dump().find("certificate") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(sh("$FAL").code == 2);
  CHECK(sh("$FAL classify --nope x").code == 2);
  CHECK(sh("$FAL frobnicate").code == 2);
  CHECK(sh("$FAL classify /nonexistent/file.fal").code == 2);
  CHECK(sh("echo 'fal 1\nknot K1 = a b' | $FAL canon -").code == 2);
  CHECK(sh("$FAL gen p 2").code == 2);
  CHECK(sh("$FAL --help").code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(sh("$FAL gen random --seed 12").out == sh("$FAL gen random --seed 12").out);
  CHECK(sh("$FAL gen fig14 | $FAL geodesics - --json").out == sh("$FAL gen fig14 | $FAL geodesics - --json").out);
}
