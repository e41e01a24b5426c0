#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "twistspin/cli.hpp"

using namespace twistspin;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "twistspin");
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& body) {
    auto path = std::filesystem::temp_directory_path() / ("twistspin_test_" + name);
    std::ofstream(path) << body;
    return path.string();
  }

  bool contains(std::string const& hay, std::string const& needle) {
    return hay.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("present") {
  auto r = run({"present", "--torus", "2,3"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "rel x^2 y^-3"));
  CHECK(contains(r.out, "meridian x y^-1"));

  r = run({"present", "--braid", "1 1 1"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "gens a b"));

  r = run({"present", "--torus", "2,4"});
  CHECK(r.code != exit_code::ok);
  CHECK(contains(r.err, "gcd"));

  CHECK(run({"present"}).code == exit_code::usage);
  CHECK(run({"present", "--torus", "2,3", "--braid", "1 1 1"}).code == exit_code::usage);
}

TEST_CASE("present output parses back") {
  auto const r    = run({"present", "--braid", "1 -2 1 -2"});
  auto const path = temp_file("fig8.txt", r.out);
  auto const again = run({"present", "--pres", path});
  CHECK(again.code == exit_code::ok);
  auto body = [](std::string const& s) {
    std::string out, line;
    std::istringstream in(s);
    while (std::getline(in, line)) {
      if (!line.starts_with("#")) {
        out += line + "\n";
      }
    }
    return out;
  };
  CHECK(body(again.out) == body(r.out));
}

TEST_CASE("twistspin") {
  auto r = run({"twistspin", "--braid", "1 1 1", "--m", "2,4", "--eliminate"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "rel b a^-2 b^-1 a^2"));
  CHECK(contains(r.out, "rel b a^-4 b^-1 a^4"));

  r = run({"twistspin", "--braid", "1 1 1", "--m", "2,3"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "gens a b h1 h2"));

  r = run({"twistspin", "--braid", "1 1 1", "--m", "2,-3"});
  CHECK(r.code == exit_code::usage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("orbifold") {
  auto r = run({"orbifold", "--torus", "2,3", "--m", "2", "--abelianize"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "Z/2"));
  r = run({"orbifold", "--braid", "1 1 1", "--m", "5", "--abelianize"});
  CHECK(contains(r.out, "Z/5"));
  CHECK(run({"orbifold", "--braid", "1 1 1", "--m", "0"}).code == exit_code::usage);
}

TEST_CASE("homcount") {
  auto const trefoil = temp_file("trefoil.txt", "gens a b\nrel a b a B A B\nmeridian a\n");
  auto r = run({"--json", "homcount", "--pres", trefoil, "--groups", "S3"});
  REQUIRE(r.code == exit_code::ok);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["hom_counts"]["S3"] == 12);

  auto const free1 = temp_file("free1.txt", "gens a\n");
  r = run({"--json", "homcount", "--pres", free1});
  j = nlohmann::json::parse(r.out);
  CHECK(j["hom_counts"]["S4"] == 24);
  CHECK(j["hom_counts"]["D4"] == 8);

  auto const junk = temp_file("junk.txt", "gens a\nrel a^^2 q\n");
  CHECK(run({"homcount", "--pres", junk}).code != exit_code::ok);
  CHECK(run({"homcount", "--pres", "/nonexistent/file"}).code != exit_code::ok);

  auto const big = temp_file("big.txt", "gens a b c d\nrel a b c d\n");
  r = run({"homcount", "--pres", big, "--groups", "S4", "--budget", "100"});
  CHECK(r.code == exit_code::budget_exceeded);
}

TEST_CASE("decide") {
  auto r = run({"--json", "decide", "--class", "torus:2,3", "--m", "2,3"});
  REQUIRE(r.code == exit_code::ok);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["status"] == "Trivial");
  CHECK(j["verdict"]["rule"] == "coprime-double-spin");

  r = run({"--json", "decide", "--class", "hyperbolic", "--m", "3,6"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["status"] == "NonTrivial");
  CHECK(j["verdict"]["m"] == "3");

  r = run({"decide", "--class", "unknown", "--m", "4,6"});
  CHECK(r.code == exit_code::ok);
  CHECK(contains(r.out, "Unknown"));

  CHECK(run({"decide", "--class", "wobbly", "--m", "2"}).code == exit_code::usage);
}

TEST_CASE("json records are self-contained and deterministic") {
  auto const a = run({"--json", "present", "--torus", "2,3"});
  auto const b = run({"--json", "present", "--torus", "2,3"});
  CHECK(a.out == b.out);
  auto const j = nlohmann::json::parse(a.out);
  CHECK(j.contains("command"));
  CHECK(j.contains("inputs"));
  CHECK(j.contains("input_digest"));
  CHECK(j.contains("presentation"));

  auto const t = nlohmann::json::parse(run({"--json", "--timing", "present", "--torus", "2,3"}).out);
  CHECK(t.contains("elapsed_ms"));
}

TEST_CASE("verify") {
  for (auto const* suite : {"snf", "theorem41"}) {
    auto const r = run({"verify", "--suite", suite});
    CHECK(r.code == exit_code::ok);
    CHECK_FALSE(contains(r.out, "FAIL"));
  }
  CHECK(run({"verify", "--suite", "nope"}).code == exit_code::usage);
}
