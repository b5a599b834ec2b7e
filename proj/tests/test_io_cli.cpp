#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontis/cli.hpp"
#include "frontis/error.hpp"
#include "frontis/io.hpp"
#include "util.hpp"

using namespace frontis;
using nlohmann::json;

namespace {

struct cli_result {
  int exit;
  std::string out;
  std::string err;
};

cli_result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

const std::vector<std::string> algebra_fixtures = {
    "h2.alg", "h3.alg", "hprime.alg", "diamond.alg", "chain5.alg", "upvee.alg", "nogamma4.alg"};
const std::vector<std::string> poset_fixtures = {"chain3.poset", "antichain2.poset", "vee.poset",
                                                 "diamond4.poset"};

}  // namespace

TEST_CASE("algebra documents round-trip") {
  for (const auto& f : algebra_fixtures) {
    auto doc = load_algebra_file(testutil::fixture(f));
    auto again = parse_algebra_document(emit_algebra_document(doc));
    CHECK(again.alg.n == doc.alg.n);
    CHECK(again.alg.imp == doc.alg.imp);
    CHECK(again.alg.one == doc.alg.one);
    CHECK(again.alg.zero == doc.alg.zero);
    CHECK(again.alg.meet == doc.alg.meet);
    CHECK(again.alg.labels == doc.alg.labels);
    CHECK(again.alg.name == doc.alg.name);
    CHECK(again.tau.has_value() == doc.tau.has_value());
    if (doc.tau) CHECK(again.tau->map == doc.tau->map);
  }
}

TEST_CASE("poset documents round-trip") {
  for (const auto& f : poset_fixtures) {
    auto p = load_poset_file(testutil::fixture(f));
    CHECK(parse_poset_document(emit_poset_document(p)) == p);
  }
}

TEST_CASE("document parse failures") {
  auto base = json::parse(R"({"elements": 2, "imp": [[1,1],[0,1]], "one": 1})");
  CHECK(parse_algebra_document(base).alg.n == 2);

  auto unknown = base;
  unknown["extra"] = 1;
  CHECK_THROWS_AS(parse_algebra_document(unknown), parse_error);

  auto missing = base;
  missing.erase("imp");
  CHECK_THROWS_AS(parse_algebra_document(missing), parse_error);

  auto ragged = base;
  ragged["imp"] = json::parse("[[1,1],[0]]");
  CHECK_THROWS_AS(parse_algebra_document(ragged), parse_error);

  auto out_of_range = base;
  out_of_range["imp"] = json::parse("[[1,1],[7,1]]");
  CHECK_THROWS_WITH_AS(parse_algebra_document(out_of_range),
                       doctest::Contains("imp[1][0]"), range_error);

  auto bad_one = base;
  bad_one["one"] = 5;
  CHECK_THROWS_AS(parse_algebra_document(bad_one), range_error);

  auto bad_tau = base;
  bad_tau["tau"] = json::parse("[1]");
  CHECK_THROWS_AS(parse_algebra_document(bad_tau), parse_error);

  auto dup = base;
  dup["elements"] = json::parse(R"(["a","a"])");
  CHECK_THROWS_AS(parse_algebra_document(dup), parse_error);

  CHECK_THROWS_AS(parse_algebra_document(json::parse("[]")), parse_error);

  auto both = json::parse(R"({"elements": 2, "covers": [[0,1]], "leq": [[0,1]]})");
  CHECK_THROWS_AS(parse_poset_document(both), parse_error);
  auto neither = json::parse(R"({"elements": 2})");
  CHECK_THROWS_AS(parse_poset_document(neither), parse_error);
  auto cycle = json::parse(R"({"elements": 2, "covers": [[0,1],[1,0]]})");
  CHECK_THROWS_AS(parse_poset_document(cycle), validation_error);

  CHECK_THROWS_AS(load_algebra_file("definitely/not/here.alg"), parse_error);
  auto garbled = write_tmp("garbled.alg", "{not json");
  CHECK_THROWS_AS(load_algebra_file(garbled), parse_error);
}

TEST_CASE("check command") {
  CHECK(run({"check", testutil::fixture("h3.alg")}).exit == 0);
  CHECK(run({"check", testutil::fixture("h3.alg"), "--class", "bounded_is"}).exit == 0);

  // reports violations rather than refusing, and signals them in the exit code
  auto r = run({"check", testutil::fixture("hprime.alg"), "--class", "bounded_is"});
  CHECK(r.exit == 1);
  CHECK(r.out.find("semilattice") != std::string::npos);

  auto broken = write_tmp("broken.alg", R"({"elements": 2, "imp": [[1,1],[1,1]], "one": 1})");
  auto rb = run({"check", broken});
  CHECK(rb.exit == 1);
  CHECK(rb.out.find("hilbert-3") != std::string::npos);
}

TEST_CASE("usage and file errors exit with 2") {
  CHECK(run({"check", "no/such/file.alg"}).exit == 2);
  CHECK(run({"check"}).exit == 2);                      // missing positional
  CHECK(run({"check", testutil::fixture("h3.alg"), "--class", "nonsense"}).exit == 2);
  CHECK(run({"no-such-command"}).exit == 2);
  CHECK(run({}).exit == 2);                             // a subcommand is required
  CHECK(run({"--help"}).exit == 0);
  CHECK(run({"check", "--help"}).exit == 0);
  CHECK(run({"search", "--size", "0", "--class", "hilbert"}).exit == 2);
  CHECK(run({"search", "--size", "17", "--class", "hilbert"}).exit == 2);
}

TEST_CASE("spectrum and extend text output") {
  auto r = run({"spectrum", testutil::fixture("h3.alg")});
  CHECK(r.exit == 0);
  CHECK(r.out.find("2 points") != std::string::npos);
  CHECK(r.out.find("P0 < P1") != std::string::npos);

  auto e = run({"extend", testutil::fixture("hprime.alg")});
  CHECK(e.exit == 0);
  CHECK(e.out.find("4 elements over 2 spectrum points") != std::string::npos);
  CHECK(e.out.find("gens: x y") != std::string::npos);
}

TEST_CASE("lift and factor commands") {
  auto r = run({"lift", testutil::fixture("h3.alg"), testutil::fixture("h2.alg"), "--hom",
                testutil::fixture("collapse.map")});
  CHECK(r.exit == 0);
  CHECK(r.out.find("{P0,P1} -> {P0}") != std::string::npos);

  auto f = run({"factor", testutil::fixture("h3.alg"), "--into", testutil::fixture("h2.alg"),
                "--hom", testutil::fixture("h3_to_h2.map")});
  CHECK(f.exit == 0);
  CHECK(f.out.find("{P1} -> 1") != std::string::npos);

  auto bad = write_tmp("notahom.map", R"({"map": [0, 0, 0]})");
  auto rb = run({"lift", testutil::fixture("h3.alg"), testutil::fixture("h2.alg"), "--hom", bad});
  CHECK(rb.exit == 1);
  CHECK((rb.out + rb.err).find("not a homomorphism") != std::string::npos);

  auto short_map = write_tmp("short.map", R"({"map": [1]})");
  CHECK(run({"lift", testutil::fixture("h3.alg"), testutil::fixture("h2.alg"), "--hom", short_map})
            .exit == 2);
  auto junk_map = write_tmp("junk.map", R"({"map": [1,1,1], "something": 0})");
  CHECK(run({"lift", testutil::fixture("h3.alg"), testutil::fixture("h2.alg"), "--hom", junk_map})
            .exit == 2);
}

TEST_CASE("frontal commands") {
  auto found = run({"frontal", "find", testutil::fixture("h3.alg"), "--op", "succ"});
  CHECK(found.exit == 0);
  CHECK(found.out.find("0 -> a") != std::string::npos);

  auto missing = run({"frontal", "find", testutil::fixture("nogamma4.alg"), "--op", "gamma"});
  CHECK(missing.exit == 1);
  CHECK(missing.out.find("minimal candidates 2 3") != std::string::npos);

  // gamma needs a bottom, hprime has none
  CHECK(run({"frontal", "find", testutil::fixture("hprime.alg"), "--op", "gamma"}).exit == 2);

  auto cls = run({"frontal", "classify", testutil::fixture("h3.alg")});
  CHECK(cls.exit == 0);
  CHECK(cls.out.find("successor: yes") != std::string::npos);
  CHECK(cls.out.find("gamma:     no") != std::string::npos);

  // classify needs a tau in the document
  CHECK(run({"frontal", "classify", testutil::fixture("hprime.alg")}).exit == 2);
}

TEST_CASE("non-frontal tau is rejected unless tolerated") {
  auto bad_tau = write_tmp("badtau.alg",
                           R"({"elements": ["0","a","1"], "imp": [[2,2,2],[0,2,2],[0,1,2]],
                               "one": 2, "tau": [2, 2, 2]})");
  CHECK(run({"extend", bad_tau}).exit == 1);
  auto tol = run({"--allow-nonfrontal-tau", "extend", bad_tau});
  CHECK(tol.exit == 0);
  CHECK(tol.err.find("tau") != std::string::npos);
  CHECK(tol.out.find("no extension computed") != std::string::npos);

  // check never rejects: it reports the violations instead
  auto chk = run({"check", bad_tau});
  CHECK(chk.exit == 1);
  CHECK(chk.out.find("i3") != std::string::npos);
}

TEST_CASE("poset ops command") {
  auto r = run({"poset", "ops", testutil::fixture("chain3.poset")});
  CHECK(r.exit == 0);
  CHECK(r.out.find("S({}) = {2}") != std::string::npos);

  CHECK(run({"poset", "ops", testutil::fixture("chain3.poset"), "--upset", "2"}).exit == 0);
  CHECK(run({"poset", "ops", testutil::fixture("chain3.poset"), "--upset", "0,1"}).exit == 2);
  CHECK(run({"poset", "ops", testutil::fixture("chain3.poset"), "--upset", "7"}).exit == 2);
  CHECK(run({"poset", "ops", testutil::fixture("chain3.poset"), "--upset", "x"}).exit == 2);
}

TEST_CASE("search is deterministic across runs") {
  std::vector<std::string> args = {"search", "--size", "4", "--class", "bounded_hilbert",
                                   "--without", "gamma"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("count: 1") != std::string::npos);

  CHECK(run({"search", "--size", "3", "--class", "heyting_upsets"}).exit == 2);
}

TEST_CASE("structured output is versioned JSON") {
  auto chk = run({"--format", "structured", "check", testutil::fixture("h3.alg")});
  CHECK(chk.exit == 0);
  auto j = json::parse(chk.out);
  CHECK(j["format_version"] == 1);
  CHECK(j["command"] == "check");
  CHECK(j["pass"] == true);

  auto ext = json::parse(run({"--format", "structured", "extend", testutil::fixture("hprime.alg")}).out);
  CHECK(ext["elements"].size() == 4);
  CHECK(ext["algebra"]["imp"].is_array());

  auto srch = json::parse(
      run({"--format", "structured", "search", "--size", "3", "--class", "hilbert"}).out);
  CHECK(srch["count"] == 2);
  CHECK(srch["algebras"].size() == 2);

  auto ver = json::parse(
      run({"--format", "structured", "verify", testutil::fixture("h2.alg")}).out);
  CHECK(ver["pass"] == true);
  CHECK(ver["suites"].is_array());

  auto sp = json::parse(
      run({"--format", "structured", "spectrum", testutil::fixture("h3.alg")}).out);
  CHECK(sp["points"].size() == 2);
}

TEST_CASE("verify accepts every fixture") {
  for (const auto& f : algebra_fixtures) {
    auto r = run({"verify", testutil::fixture(f)});
    INFO(f, ": ", r.out, r.err);
    CHECK(r.exit == 0);
    CHECK(r.out.find("pass") != std::string::npos);
  }
  for (const auto& f : poset_fixtures) {
    auto r = run({"verify", testutil::fixture(f)});
    INFO(f, ": ", r.out, r.err);
    CHECK(r.exit == 0);
  }
}

TEST_CASE("verify flags a broken algebra") {
  auto broken = write_tmp("broken2.alg", R"({"elements": 2, "imp": [[1,1],[1,1]], "one": 1})");
  auto r = run({"verify", broken});
  CHECK(r.exit == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}
