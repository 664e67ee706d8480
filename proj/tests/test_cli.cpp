#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sqfree/cli.hpp"
#include "sqfree/json_io.hpp"
#include "support.hpp"

using namespace sqfree;
using io::Json;
namespace fx = sqfree::sgrp::fixtures;

namespace {

struct Outcome {
  int code;
  Json report;
  std::string text;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  Json report;
  if (!out.str().empty() && out.str().front() == '{') report = Json::parse(out.str());
  return {code, report, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

Json load(const std::string& name) {
  std::ifstream f(fixture(name));
  return Json::parse(f);
}

// Runs `command` on a bundle passed through standard input.
Outcome run_bundle(const std::string& command, const Json& bundle, std::vector<std::string> extra = {}) {
  std::vector<std::string> args{command, "-"};
  args.insert(args.end(), extra.begin(), extra.end());
  return run_cli(args, bundle.dump());
}

const std::vector<std::string> kValidFixtures{"t2_gf2", "t2_gf4", "mu2_gf2", "mu2_gf3", "single_gf4",
                                              "single_gf8", "t2_gf4_frobenius", "a3_gf4"};

}  // namespace

TEST_CASE("cli: validate accepts T2 and reports a broken semigroup") {
  auto ok = run_cli({"validate", fixture("t2_gf4")});
  CHECK(ok.code == cli::Success);
  CHECK(ok.report["valid"] == true);
  CHECK(ok.report["violations"].empty());
  CHECK(ok.report["command"] == "validate");

  auto bad = run_cli({"validate", fixture("invalid_semigroup")});
  CHECK(bad.code == cli::Negative);
  CHECK(bad.report["valid"] == false);
  REQUIRE_FALSE(bad.report["violations"].empty());
  CHECK(bad.report["violations"][0]["kind"] == "comp-support");
}

TEST_CASE("cli: exit codes for input errors and bounds") {
  SUBCASE("malformed JSON") {
    auto r = run_cli({"h1", "-"}, "{\"semigroup\": [");
    CHECK(r.code == cli::InputError);
    CHECK(r.report["error"]["code"] == "InvalidSpec");
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("missing file") { CHECK(run_cli({"h1", fixture("no_such_file")}).code == cli::InputError); }
  SUBCASE("unknown subcommand") { CHECK(run_cli({"frobnicate"}).code == cli::InputError); }
  SUBCASE("invalid semigroup outside validate") {
    CHECK(run_cli({"h1", fixture("invalid_semigroup")}).code == cli::InputError);
  }
  SUBCASE("invalid cocycle") {
    auto r = run_cli({"h1", fixture("a3_gf4_corrupted")});
    CHECK(r.code == cli::InputError);
    CHECK(r.report["error"]["code"] == "InvalidCocycle");
  }
  SUBCASE("quaternion search is refused") {
    auto r = run_cli({"h1", fixture("t2_quaternion")});
    CHECK(r.code == cli::InputError);
    CHECK(r.report["error"]["code"] == "InfiniteBackend");
  }
  SUBCASE("bound exceeded") {
    auto r = run_cli({"out-r", fixture("mu2_gf3"), "--bounds.max-search", "3"});
    CHECK(r.code == cli::BoundExceeded);
    CHECK(r.report["error"]["code"] == "SearchBoundExceeded");
  }
  SUBCASE("bounds in the bundle are honoured") {
    auto b = load("mu2_gf3");
    b["bounds"] = {{"max_search", 3}};
    CHECK(run_bundle("out-r", b).code == cli::BoundExceeded);
  }
}

TEST_CASE("cli: output is deterministic and timing is opt-in") {
  for (const std::string cmd : {"h1", "verify-ses", "aut-s", "normalize"}) {
    CAPTURE(cmd);
    auto a = run_cli({cmd, fixture("t2_gf4_frobenius")});
    auto b = run_cli({cmd, fixture("t2_gf4_frobenius")});
    CHECK(a.code == cli::Success);
    CHECK(a.text == b.text);
    CHECK_FALSE(a.report.contains("timing_ms"));
  }
  auto t = run_cli({"h1", fixture("t2_gf4"), "--timing"});
  CHECK(t.report.contains("timing_ms"));
}

TEST_CASE("cli: cohomologous finds a witness for the Frobenius twist and it verifies") {
  auto r = run_cli({"cohomologous", fixture("t2_gf4_frobenius")});
  REQUIRE(r.code == cli::Success);
  CHECK(r.report["cohomologous"] == true);
  REQUIRE(r.report.contains("witness"));

  auto bundle = load("t2_gf4_frobenius");
  bundle["witness"] = r.report["witness"];
  CHECK(run_bundle("cohomologous", bundle).report["valid"] == true);

  // The identity witness does not relate the two cocycles.
  bundle["witness"] = Json::object();
  auto no = run_bundle("cohomologous", bundle);
  CHECK(no.code == cli::Negative);
  CHECK(no.report["valid"] == false);
}

TEST_CASE("cli: non-cohomologous cocycles give a negative answer") {
  // On the octahedron the generator of H^2 = Z/2 over GF(3) is not a coboundary.
  auto s = support::octahedron();
  auto d = coeff::DivisionRing::finite_field(3, 1);
  auto c = support::octahedron_class(s, d, d.from_coords({2}));
  Json bundle{{"semigroup", io::to_json(s)},
              {"coefficients", io::to_json(d)},
              {"cocycle", io::to_json(s, c)},
              {"target", io::to_json(s, cohom::trivial_cocycle(s, d))}};
  auto r = run_bundle("cohomologous", bundle);
  CHECK(r.code == cli::Negative);
  CHECK(r.report["cohomologous"] == false);
}

TEST_CASE("cli: normalize and trivialize-blocks witnesses verify") {
  for (const auto& name : kValidFixtures) {
    for (const std::string cmd : {"normalize", "trivialize-blocks"}) {
      CAPTURE(name);
      CAPTURE(cmd);
      auto r = run_cli({cmd, fixture(name)});
      REQUIRE(r.code == cli::Success);
      auto bundle = load(name);
      bundle["target"] = r.report["cocycle"];
      bundle["witness"] = r.report["witness"];
      CHECK(run_bundle("cohomologous", bundle).report["valid"] == true);

      auto check = load(name);
      check["cocycle"] = r.report["cocycle"];
      auto v = run_bundle("verify-cocycle", check);
      CHECK(v.report["valid"] == true);
      CHECK(v.report["normal"] == true);
      if (cmd == "trivialize-blocks") CHECK(v.report["trivial_on_blocks"] == true);
    }
  }
}

TEST_CASE("cli: d-algebra witness round trip") {
  auto r = run_cli({"d-algebra", fixture("t2_gf4_frobenius")});
  REQUIRE(r.code == cli::Success);
  CHECK(r.report["d_algebra"] == true);
  CHECK(r.report["cocycle"]["alpha"].empty());

  auto bundle = load("t2_gf4_frobenius");
  bundle["witness"] = r.report["witness"];
  CHECK(run_bundle("d-algebra", bundle).report["valid"] == true);
  bundle["witness"] = Json::object();
  CHECK(run_bundle("d-algebra", bundle).code == cli::Negative);
}

TEST_CASE("cli: verify-ses on T2 over GF(2) is 1 = 1 x 1") {
  auto r = run_cli({"verify-ses", fixture("t2_gf2")});
  REQUIRE(r.code == cli::Success);
  CHECK(r.report["h1_order"] == 1);
  CHECK(r.report["stab_order"] == 1);
  CHECK(r.report["out_order"] == 1);
  CHECK(r.report["exact"] == true);
}

TEST_CASE("cli: h1, out-r, stab and aut-s on small fixtures") {
  auto h = run_cli({"h1", fixture("t2_gf4")});
  CHECK(h.report["order"] == 2);
  CHECK(h.report["z1_order"] == 6);
  CHECK(h.report["b1_order"] == 3);
  CHECK(run_cli({"h1", fixture("single_gf8")}).report["order"] == 3);

  auto o = run_cli({"out-r", fixture("t2_gf4_frobenius")});
  CHECK(o.report["order"] == 2);

  auto a = run_cli({"aut-s", fixture("mu2_gf2")});
  CHECK(a.report["order"] == 2);
  CHECK(a.report["normal_order"] == 1);
  auto st = run_cli({"stab", fixture("mu2_gf2")});
  CHECK(st.report["order"] == 2);
  CHECK(st.report["normal_order"] == 1);
}

TEST_CASE("cli: ring-check separates valid and corrupted cocycles") {
  auto good = run_cli({"ring-check", fixture("a3_gf4")});
  CHECK(good.code == cli::Success);
  CHECK(good.report["associativity"]["ok"] == true);
  CHECK(good.report["cocycle_valid"] == true);

  auto bad = run_cli({"ring-check", fixture("a3_gf4_corrupted")});
  CHECK(bad.code == cli::Negative);
  CHECK(bad.report["associativity"]["ok"] == false);
  CHECK(bad.report["cocycle_valid"] == false);
  CHECK(bad.report["associativity"]["failure_count"].get<int>() > 0);

  auto t2 = run_cli({"ring-check", fixture("t2_gf2")});
  CHECK(t2.report["idempotent_count"] == 6);
  CHECK(t2.report["unit_count"] == 2);
  auto skipped = run_cli({"ring-check", fixture("t2_gf4"), "--bounds.max-units", "4"});
  CHECK(skipped.code == cli::Success);
  CHECK(skipped.report.contains("counts_skipped"));

  auto q = run_cli({"ring-check", fixture("t2_quaternion")});
  CHECK(q.code == cli::Success);
  CHECK(q.report["associativity"]["ok"] == true);
}

TEST_CASE("cli: boundary of a 1-cochain") {
  auto r = run_cli({"boundary", fixture("t2_gf4_boundary")});
  REQUIRE(r.code == cli::Success);
  CHECK(r.report["boundary"]["m"] == 2);
}

TEST_CASE("json: round trips") {
  auto d4 = coeff::DivisionRing::finite_field(2, 2);
  auto q = coeff::DivisionRing::quaternions();
  auto s = fx::a3();

  CHECK(io::parse_coefficients(io::to_json(d4)) == d4);
  CHECK(io::parse_semigroup(io::to_json(s)) == s);

  using coeff::Rational;
  auto x = coeff::Element(coeff::Quaternion(Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)));
  CHECK(io::parse_element(q, io::to_json(x), "x") == x);

  auto c = cohom::trivial_cocycle(s, d4);
  c.alpha[s.pair_index(0, 1)] = d4.frobenius(1);
  c.alpha[s.pair_index(0, 2)] = d4.frobenius(1);
  c.xi[s.triple_index(0, 1, 2)] = d4.from_coords({0, 1});
  CHECK(io::parse_cocycle(s, d4, io::to_json(s, c)) == c);

  auto g = cohom::g_identity(s, d4);
  g.eta[s.pair_index(0, 2)] = d4.from_coords({1, 1});
  g.mu[1] = d4.frobenius(1);
  CHECK(io::parse_group_element(s, d4, io::to_json(s, g), "g") == g);
}

TEST_CASE("json: parse errors name the path") {
  auto d4 = coeff::DivisionRing::finite_field(2, 2);
  auto s = fx::t2();
  auto message = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidSpec);
      return std::string(e.what());
    }
    FAIL("no error");
    return std::string();
  };
  CHECK(message([&] { io::parse_element(d4, Json::array({0, 2}), "cocycle.xi.1,1,2"); }).find("cocycle.xi.1,1,2") !=
        std::string::npos);
  CHECK(message([&] { io::parse_cocycle(s, d4, Json{{"alpha", {{"1,3", {{"frobenius", 1}}}}}}); }).find("1,3") !=
        std::string::npos);
  CHECK(message([&] { io::parse_coefficients(Json{{"backend", "reals"}}); }).find("coefficients") !=
        std::string::npos);
  message([&] { io::parse_cocycle(s, d4, Json{{"beta", Json::object()}}); });
}
