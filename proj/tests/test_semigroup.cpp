#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "sqfree/semigroup.hpp"
#include "support.hpp"

using namespace sqfree;
using namespace sqfree::sgrp;

namespace {

using support::mu2_tail;

// Reference Aut S: every permutation, checked entrywise.
std::vector<std::vector<int>> brute_automorphisms(const Semigroup& s) {
  const int n = s.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        ok = s.has(i, j) == s.has(p[i], p[j]);
        for (int k = 0; k < n && ok; ++k) ok = s.composes(i, j, k) == s.composes(p[i], p[j], p[k]);
      }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Semigroup> corpus() {
  return {fixtures::single(), fixtures::t2(),  fixtures::a3(),  fixtures::z3(),
          fixtures::matrix_units(2), fixtures::matrix_units(3), fixtures::chain(4), mu2_tail()};
}

}  // namespace

TEST_CASE("fixtures validate") {
  for (const auto& s : corpus()) CHECK(validate(s).ok());
  for (int n = 1; n <= 5; ++n) CHECK(validate(fixtures::matrix_units(n)).ok());
}

TEST_CASE("missing unit law is reported at the pair") {
  Semigroup bad(2, {{0, 0}, {1, 1}, {0, 1}}, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}}, false);
  auto report = validate(bad);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == "unit-law");
  CHECK(report.violations[0].tuple == std::vector<int>{0, 1});
}

TEST_CASE("other invalid shapes") {
  // e_2 missing.
  CHECK_FALSE(validate(Semigroup(2, {{0, 0}}, {})).ok());
  // comp triple over a missing pair.
  Semigroup dangling(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {{0, 1, 2}});
  auto report = validate(dangling);
  REQUIRE_FALSE(report.ok());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                    [](const Violation& v) { return v.kind == "comp-support"; }));
  // s12 s23 = s13 but s23 s34 = 0 while s13 s34 = s14: not associative.
  Semigroup nonassoc(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {1, 3}},
                     {{0, 1, 2}, {0, 2, 3}});
  auto r2 = validate(nonassoc);
  REQUIRE_FALSE(r2.ok());
  CHECK(std::any_of(r2.violations.begin(), r2.violations.end(),
                    [](const Violation& v) { return v.kind == "associativity"; }));
  CHECK_THROWS_AS(Semigroup(2, {{0, 2}}, {}), Error);
}

TEST_CASE("S^<m> enumeration") {
  auto t2 = fixtures::t2();
  CHECK(t2.paths(0).size() == 2);
  CHECK(t2.paths(1).size() == 3);
  auto p2 = t2.paths(2);
  CHECK(p2 == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  auto a3 = fixtures::a3();
  auto p3 = a3.paths(3);
  CHECK(std::find(p3.begin(), p3.end(), std::vector<int>{0, 1, 1, 2}) != p3.end());
  // Z3 has no non-unit composite.
  for (const auto& path : fixtures::z3().paths(2)) CHECK((path[0] == path[1] || path[1] == path[2]));
}

TEST_CASE("S^<m> is invariant under automorphisms") {
  for (const auto& s : corpus())
    for (const auto& phi : automorphisms(s))
      for (int m = 0; m <= 3; ++m) {
        auto paths = s.paths(m);
        std::set<std::vector<int>> set(paths.begin(), paths.end());
        for (auto path : paths) {
          for (int& v : path) v = phi(v);
          CHECK(set.count(path) == 1);
        }
      }
}

TEST_CASE("~-classes, blocks, reduced semigroup") {
  CHECK(sim_classes(fixtures::t2()) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(sim_classes(fixtures::matrix_units(2)) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(sim_classes(fixtures::a3()).size() == 3);
  CHECK(sim_classes(mu2_tail()) == std::vector<std::vector<int>>{{0, 1}, {2}});

  auto b = blocks(fixtures::matrix_units(2));
  REQUIRE(b.size() == 1);
  CHECK(b[0].semigroup == fixtures::matrix_units(2));
  CHECK(blocks(fixtures::t2()).size() == 2);
  CHECK(blocks(fixtures::a3()).size() == 3);

  CHECK(reduced(fixtures::matrix_units(2)).semigroup == fixtures::single());
  CHECK(reduced(fixtures::t2()).semigroup == fixtures::t2());
  CHECK(reduced(fixtures::a3()).semigroup == fixtures::a3());
  CHECK(block_labels(mu2_tail()) == std::vector<int>{0, 1, 0});
}

TEST_CASE("reduced semigroup does not depend on representatives") {
  auto s = mu2_tail();
  auto r1 = reduced(s);
  auto r2 = reduced(s, {1, 2});
  CHECK(r1.semigroup.size() == 2);
  CHECK(isomorphic(r1.semigroup, r2.semigroup));
  CHECK_THROWS_AS(reduced(s, {0, 1}), Error);
  for (const auto& s2 : corpus())
    for (const auto& blk : blocks(reduced(s2).semigroup)) CHECK(blk.semigroup.size() == 1);
}

TEST_CASE("automorphism examples") {
  CHECK(automorphisms(fixtures::t2()).size() == 1);
  CHECK(automorphisms(fixtures::matrix_units(2)).size() == 2);
  CHECK(automorphisms(fixtures::a3()).size() == 1);
  CHECK(automorphisms(fixtures::matrix_units(3)).size() == 6);
  CHECK(automorphisms(fixtures::z3()).size() == 1);
  try {
    automorphisms(fixtures::matrix_units(9));
    FAIL("expected SearchBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchBoundExceeded);
  }
}

TEST_CASE("automorphism search agrees with permutation brute force and forms a group") {
  for (const auto& s : corpus()) {
    auto auts = automorphisms(s);
    std::vector<std::vector<int>> perms;
    for (const auto& a : auts) perms.push_back(a.perm());
    CHECK(perms == brute_automorphisms(s));
    std::set<SemigroupAutomorphism> set(auts.begin(), auts.end());
    CHECK(set.count(SemigroupAutomorphism::identity(s.size())) == 1);
    for (const auto& a : auts) {
      CHECK(set.count(a.inverse()) == 1);
      for (const auto& b : auts) CHECK(set.count(a * b) == 1);
    }
  }
}

TEST_CASE("normal automorphisms keep block positions") {
  auto s = fixtures::matrix_units(2);
  auto auts = automorphisms(s);
  CHECK(std::count_if(auts.begin(), auts.end(), [&](const auto& a) { return is_normal(s, a); }) == 1);
  auto tail = mu2_tail();
  CHECK(automorphisms(tail).size() == 2);
  for (const auto& a : automorphisms(tail)) CHECK(is_normal(tail, a) == a.is_identity());
}
