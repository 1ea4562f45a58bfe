#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "nhtop/alexander.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/document.hpp"
#include "nhtop/generators.hpp"

using namespace nhtop;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr passes through.
RunResult run(const std::string& args) {
  std::string cmd = std::string(NHTOP_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("cli_") + name + ".json";
  std::ofstream(path) << text;
  return path;
}

SimplicialComplex C(std::string_view facets) { return SimplicialComplex::from_chars(facets); }

}  // namespace

TEST_CASE("version and help exit cleanly") {
  CHECK(run("--version 2>/dev/null").exit_code == 0);
  CHECK(run("--help >/dev/null 2>&1").exit_code == 0);
  CHECK(run("dual --help >/dev/null 2>&1").exit_code == 0);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("2>/dev/null").exit_code == 2);                      // missing subcommand
  CHECK(run("dual --no-such-flag 2>/dev/null").exit_code == 2);  // unknown flag
  CHECK(run("frobnicate 2>/dev/null").exit_code == 2);           // unknown subcommand
  CHECK(run("dual --input missing.json 2>/dev/null").exit_code == 2);
  CHECK(run("generate --kind shelled-ball --dim 2 2>/dev/null").exit_code == 2);  // no seed
  CHECK(run("verify --suite formula_a --count 3 2>/dev/null").exit_code == 2);    // no seed
  std::string bad = write_temp("bad", "{not json");
  CHECK(run("homology --input " + bad + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("dual of a triangle boundary is the empty complex document") {
  std::string tri = write_temp("tri", serialize_complex(C("ab ac bc")));
  RunResult r = run("dual --input " + tri);
  REQUIRE(r.exit_code == 0);
  ComplexDocument doc = parse_complex_document(r.out);
  CHECK(doc.complex == SimplicialComplex::empty_complex());
  REQUIRE(doc.ground.has_value());
  CHECK(doc.ground->size() == 3);
}

TEST_CASE("the emitted ground field makes dualization an involution") {
  std::string rp2 = write_temp("rp2", serialize_complex_document(reference("rp2_6")));
  RunResult once = run("dual --input " + rp2);
  REQUIRE(once.exit_code == 0);
  std::string dual_path = write_temp("rp2dual", once.out);
  RunResult twice = run("dual --input " + dual_path);
  REQUIRE(twice.exit_code == 0);
  CHECK(parse_complex_document(twice.out).complex == reference("rp2_6").complex);
}

TEST_CASE("relative duals via --tau and explicit --ground agree with the library") {
  std::string tri = write_temp("tri2", serialize_complex(C("ab ac bc")));
  RunResult rel = run("dual --input " + tri + " --tau t");
  REQUIRE(rel.exit_code == 0);
  CHECK(parse_complex_document(rel.out).complex ==
        relative_dual(C("ab ac bc"), Simplex({Vertex{"t"}})));

  RunResult wide = run("dual --input " + tri + " --ground a,b,c,z");
  REQUIRE(wide.exit_code == 0);
  CHECK(parse_complex_document(wide.out).complex ==
        dual_over(C("ab ac bc"), GroundSet(C("abcz").vertex_set())));

  CHECK(run("dual --input " + tri + " --tau a 2>/dev/null").exit_code == 2);
  CHECK(run("dual --input " + tri + " --tau t --ground a,b,c 2>/dev/null").exit_code == 2);
}

TEST_CASE("homology reports carry the version and the torsion data") {
  RunResult gen = run("generate --kind reference --name rp2_6");
  REQUIRE(gen.exit_code == 0);
  std::string path = write_temp("rp2gen", gen.out);
  RunResult hom = run("homology --input " + path + " --compact");
  REQUIRE(hom.exit_code == 0);
  json rep = json::parse(hom.out);
  CHECK(rep["format"] == "nhtop-report");
  CHECK(rep["version"].is_string());
  CHECK(rep["euler"] == 0);
  bool torsion_seen = false;
  for (const json& g : rep["reduced"])
    if (g["dim"] == 1 && g["torsion"] == json::array({2})) torsion_seen = true;
  CHECK(torsion_seen);
}

TEST_CASE("classify certifies the glued sphere and exits by verdict") {
  std::string nh = write_temp("nh", serialize_complex(C("abct sab sac sbc")));
  RunResult r = run("classify --input " + nh + " --budget 100000 --compact");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["kind"] == "nh-sphere");
  CHECK(rep["homotopy_dim"] == 2);
  CHECK(rep.contains("decomposition"));
}

TEST_CASE("collapse exits 3 on an exhausted search and 0 on a verdict") {
  RunResult dunce = run("generate --kind reference --name dunce_hat_8");
  REQUIRE(dunce.exit_code == 0);
  std::string path = write_temp("dunce", dunce.out);
  CHECK(run("collapse --input " + path + " >/dev/null").exit_code == 3);

  std::string tri = write_temp("disk", serialize_complex(C("abc")));
  RunResult r = run("collapse --input " + tri + " --compact");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["verdict"] == "yes");
  CHECK(rep["sequence"]["steps"].size() == 3);
}

TEST_CASE("generate produces seeded documents that embed their recipe") {
  RunResult r = run("generate --kind shelled-ball --dim 2 --facets 5 --seed 99 --compact");
  REQUIRE(r.exit_code == 0);
  ComplexDocument doc = parse_complex_document(r.out);
  CHECK(doc.complex == shelled_ball(2, 5, 99).complex);
  REQUIRE(doc.description.has_value());
  CHECK(doc.description->find("seed=99") != std::string::npos);

  RunResult again = run("generate --kind shelled-ball --dim 2 --facets 5 --seed 99 --compact");
  CHECK(again.out == r.out);
}

TEST_CASE("verify reports pass counts, seeds, and honest exit codes") {
  RunResult r = run("verify --suite involution --seed 42 --count 40 --compact 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["suite"] == "involution");
  CHECK(rep["seed"] == 42);
  CHECK(rep["cases_run"] == 40);
  CHECK(rep["passes"] == 40);
  CHECK(rep["failures"].empty());
  CHECK(rep["version"].is_string());

  CHECK(run("verify --suite nope --seed 1 --count 1 2>/dev/null").exit_code == 2);
  RunResult list = run("verify --list");
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("formula_a") != std::string::npos);
}
