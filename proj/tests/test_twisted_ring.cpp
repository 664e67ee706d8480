#include <set>

#include "doctest.h"
#include "sqfree/twisted_ring.hpp"
#include "support.hpp"

using namespace sqfree;
using namespace sqfree::ring;
using coeff::DivisionRing;
using coeff::Element;
using sgrp::Semigroup;
using sgrp::SemigroupAutomorphism;
namespace fx = sqfree::sgrp::fixtures;

namespace {

std::vector<Semigroup> assoc_fixtures() {
  return {fx::t2(), fx::a3(), fx::matrix_units(2), fx::matrix_units(3)};
}

std::vector<DivisionRing> small_fields() {
  return {DivisionRing::finite_field(2, 1), DivisionRing::finite_field(3, 1), DivisionRing::finite_field(2, 2)};
}

TwistedRing trivial_ring(const Semigroup& s, const DivisionRing& d) {
  return TwistedRing::from_cocycle(s, d, cohom::trivial_cocycle(s, d));
}

RingElement random_element(const TwistedRing& r, std::mt19937& rng) {
  const auto all = r.coefficients().elements();
  auto e = r.zero();
  for (auto& x : e.coeffs) x = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  return e;
}

// Reference units: elements with a two-sided inverse found by search.
std::set<RingElement> units_by_search(const TwistedRing& r) {
  const auto all = elements(r);
  std::set<RingElement> out;
  for (const auto& x : all)
    for (const auto& y : all)
      if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
        out.insert(x);
        break;
      }
  return out;
}

// 2x2 upper triangular matrices over GF(2), entries (a11, a12, a22).
using Upper = std::array<int, 3>;
Upper upper_mul(const Upper& a, const Upper& b) {
  return {a[0] * b[0] % 2, (a[0] * b[1] + a[1] * b[2]) % 2, a[2] * b[2] % 2};
}

}  // namespace

TEST_CASE("multiplication examples") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto t2 = fx::t2();
  auto c = cohom::trivial_cocycle(t2, gf4);
  c.alpha[t2.pair_index(0, 1)] = gf4.frobenius(1);
  auto r = TwistedRing::from_cocycle(t2, gf4, c);
  const auto g = gf4.generator();
  CHECK(r.mul(r.basis(0, 1), r.term(g, 1, 1)) == r.term(g * g, 0, 1));
  CHECK(r.mul(r.term(g, 0, 1), r.basis(1, 1)) == r.term(g, 0, 1));
  CHECK(r.is_zero(r.mul(r.basis(0, 1), r.basis(0, 1))));
  CHECK(r.is_zero(r.mul(r.basis(1, 1), r.basis(0, 0))));

  auto mu2 = trivial_ring(fx::matrix_units(2), gf4);
  CHECK(mu2.mul(mu2.basis(0, 1), mu2.basis(1, 0)) == mu2.basis(0, 0));
  CHECK(mu2.mul(mu2.basis(1, 0), mu2.basis(0, 1)) == mu2.basis(1, 1));

  CHECK_THROWS_AS(r.basis(1, 0), Error);
  CHECK(r.to_string(r.zero()) == "0");
}

TEST_CASE("identity element") {
  auto gf2 = DivisionRing::finite_field(2, 1);
  auto t2 = trivial_ring(fx::t2(), gf2);
  CHECK(t2.one() == t2.add(t2.basis(0, 0), t2.basis(1, 1)));
  auto single = trivial_ring(fx::single(), gf2);
  CHECK(single.one() == single.basis(0, 0));

  for (const auto& d : {gf2, DivisionRing::finite_field(3, 1)})
    for (const auto& s : {fx::t2(), fx::matrix_units(2)}) {
      std::mt19937 rng(5);
      auto r = TwistedRing::from_cocycle(s, d, support::random_cocycle(s, d, rng));
      for (const auto& x : elements(r)) {
        CHECK(r.mul(r.one(), x) == x);
        CHECK(r.mul(x, r.one()) == x);
      }
    }
  std::mt19937 rng(6);
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto s = fx::matrix_units(3);
  auto r = TwistedRing::from_cocycle(s, gf4, support::random_cocycle(s, gf4, rng));
  for (int t = 0; t < 200; ++t) {
    auto x = random_element(r, rng);
    CHECK(r.mul(r.one(), x) == x);
    CHECK(r.mul(x, r.one()) == x);
  }
}

TEST_CASE("associativity of valid rings") {
  std::mt19937 rng(11);
  for (const auto& s : assoc_fixtures())
    for (const auto& d : small_fields()) {
      auto r = TwistedRing::from_cocycle(s, d, support::random_cocycle(s, d, rng));
      auto report = check_associativity(r);
      CHECK(report.ok());
      CHECK(report.checked > 0);
      CHECK(check_associativity(r, AssocMode::Sampled, 3, 50).ok());
    }
  auto mu2 = trivial_ring(fx::matrix_units(2), DivisionRing::finite_field(2, 1));
  CHECK(check_associativity(mu2).ok());
}

TEST_CASE("a corrupted cocycle is caught at the offending triple") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto a3 = fx::a3();
  // The value on (s12, s23) alone is unconstrained on A3; the unit-padded
  // value xi(e2, s23) is tied to it through the path (1,2,2,3).
  auto c = cohom::trivial_cocycle(a3, gf4);
  c.xi[a3.triple_index(1, 1, 2)] = gf4.generator();
  REQUIRE_FALSE(cohom::verify_two_cocycle(a3, gf4, c).ok());
  auto r = TwistedRing::raw(a3, gf4, c);
  auto report = check_associativity(r);
  REQUIRE_FALSE(report.ok());
  for (const auto& f : report.failures) {
    const auto& p = f.path;
    const std::set<std::vector<int>> faces{{p[1], p[2], p[3]}, {p[0], p[2], p[3]}, {p[0], p[1], p[3]}, {p[0], p[1], p[2]}};
    CHECK(faces.count({1, 1, 2}) == 1);
  }
  CHECK_FALSE(check_associativity(r, AssocMode::Sampled, 1, 200).ok());

  auto flipped = cohom::trivial_cocycle(a3, gf4);
  flipped.xi[a3.triple_index(0, 1, 2)] = gf4.generator();
  CHECK(cohom::verify_two_cocycle(a3, gf4, flipped).ok());
  CHECK(check_associativity(TwistedRing::raw(a3, gf4, flipped)).ok());
}

TEST_CASE("distributivity and left module axioms") {
  std::mt19937 rng(21);
  for (const auto& s : assoc_fixtures()) {
    auto d = DivisionRing::finite_field(3, 2);
    auto r = TwistedRing::from_cocycle(s, d, support::random_cocycle(s, d, rng));
    for (int t = 0; t < 200; ++t) {
      auto x = random_element(r, rng), y = random_element(r, rng), z = random_element(r, rng);
      auto a = support::random_unit(d, rng), b = support::random_unit(d, rng);
      CHECK(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
      CHECK(r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z)));
      CHECK(r.scale(a, r.add(x, y)) == r.add(r.scale(a, x), r.scale(a, y)));
      CHECK(r.scale(a * b, x) == r.scale(a, r.scale(b, x)));
      CHECK(r.scale(a + b, x) == r.add(r.scale(a, x), r.scale(b, x)));
      CHECK(r.mul(r.scale(a, x), y) == r.scale(a, r.mul(x, y)));
      CHECK(r.is_zero(r.sub(x, x)));
    }
  }
}

TEST_CASE("trivial matrix-unit rings multiply like matrix units") {
  auto d = DivisionRing::finite_field(3, 1);
  for (int n = 2; n <= 4; ++n) {
    auto r = trivial_ring(fx::matrix_units(n), d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            auto prod = r.mul(r.basis(i, j), r.basis(k, l));
            if (j == k)
              CHECK(prod == r.basis(i, l));
            else
              CHECK(r.is_zero(prod));
          }
  }
}

TEST_CASE("T2 over GF(2) is the upper triangular matrix ring") {
  auto gf2 = DivisionRing::finite_field(2, 1);
  auto r = trivial_ring(fx::t2(), gf2);
  auto all = elements(r);
  REQUIRE(all.size() == 8);
  auto to_matrix = [&](const RingElement& x) {
    auto digit = [&](int i, int j) { return static_cast<int>(gf2.digits(x.coeffs[r.semigroup().pair_index(i, j)])[0]); };
    return Upper{digit(0, 0), digit(0, 1), digit(1, 1)};
  };
  for (const auto& x : all)
    for (const auto& y : all) CHECK(to_matrix(r.mul(x, y)) == upper_mul(to_matrix(x), to_matrix(y)));

  auto idem = idempotents(r);
  CHECK(idem.size() == 6);
  std::set<RingElement> idem_set(idem.begin(), idem.end());
  for (const auto& e : {r.zero(), r.basis(0, 0), r.basis(1, 1), r.one(), r.add(r.basis(0, 0), r.basis(0, 1))})
    CHECK(idem_set.count(e) == 1);

  auto u = units(r);
  CHECK(u == std::vector<RingElement>{r.one(), r.add(r.one(), r.basis(0, 1))});
  // Enumeration order is lexicographic in (pair, coefficient).
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("units agree with a two-sided inverse search") {
  std::mt19937 rng(31);
  for (const auto& d : {DivisionRing::finite_field(2, 1), DivisionRing::finite_field(3, 1)})
    for (const auto& s : {fx::t2(), fx::matrix_units(2), fx::a3()}) {
      auto r = TwistedRing::from_cocycle(s, d, support::random_cocycle(s, d, rng));
      auto u = units(r);
      CHECK(std::set<RingElement>(u.begin(), u.end()) == units_by_search(r));
      for (const auto& x : u) {
        auto inv = inverse(r, x);
        REQUIRE(inv);
        CHECK(r.mul(x, *inv) == r.one());
        CHECK(r.mul(*inv, x) == r.one());
      }
      CHECK_FALSE(inverse(r, r.zero()));
    }
  // M2(GF(2)) has |GL2(GF(2))| = 6 units.
  CHECK(units(trivial_ring(fx::matrix_units(2), DivisionRing::finite_field(2, 1))).size() == 6);
  for (const auto& d : {DivisionRing::finite_field(5, 1), DivisionRing::finite_field(2, 3)}) {
    auto r = trivial_ring(fx::single(), d);
    CHECK(elements(r).size() == d.order());
    CHECK(units(r).size() == d.order() - 1);
    CHECK(&r.cached_units({}) == &r.cached_units({}));
  }
}

TEST_CASE("corner rings e_i R e_j") {
  std::mt19937 rng(41);
  auto d = DivisionRing::finite_field(2, 2);
  for (const auto& s : assoc_fixtures()) {
    auto r = TwistedRing::from_cocycle(s, d, support::random_cocycle(s, d, rng));
    for (int t = 0; t < 20; ++t) {
      auto x = random_element(r, rng);
      for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
          auto corner = r.mul(r.basis(i, i), r.mul(x, r.basis(j, j)));
          for (std::size_t p = 0; p < s.num_pairs(); ++p) {
            const auto [a, b] = s.pair(static_cast<int>(p));
            if (a != i || b != j) CHECK(corner.coeffs[p].is_zero());
          }
        }
    }
  }
}

TEST_CASE("element enumeration bounds and backends") {
  auto r = trivial_ring(fx::matrix_units(3), DivisionRing::finite_field(2, 2));
  cohom::SearchBounds tight;
  tight.max_elements = 1000;
  CHECK_THROWS_AS(elements(r, tight), Error);
  try {
    elements(r, tight);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchBoundExceeded);
  }
  auto h = trivial_ring(fx::t2(), DivisionRing::quaternions());
  try {
    elements(h);
    FAIL("expected InfiniteBackend");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteBackend);
  }
  auto other = trivial_ring(fx::a3(), DivisionRing::finite_field(2, 2));
  try {
    r.mul(r.one(), other.one());
    FAIL("expected MixedRings");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedRings);
  }
}

TEST_CASE("primitive idempotents") {
  auto r = trivial_ring(fx::t2(), DivisionRing::finite_field(2, 1));
  CHECK(is_primitive_idempotent(r, r.basis(0, 0)) == true);
  CHECK(is_primitive_idempotent(r, r.basis(1, 1)) == true);
  CHECK(is_primitive_idempotent(r, r.add(r.basis(0, 0), r.basis(0, 1))) == true);
  CHECK(is_primitive_idempotent(r, r.one()) == false);
  CHECK(is_primitive_idempotent(r, r.zero()) == false);
  auto m = trivial_ring(fx::matrix_units(2), DivisionRing::finite_field(3, 1));
  CHECK(is_primitive_idempotent(m, m.basis(1, 1)) == true);
  CHECK(is_primitive_idempotent(m, m.one()) == false);
  auto r4 = trivial_ring(fx::t2(), DivisionRing::finite_field(2, 2));
  CHECK_FALSE(is_primitive_idempotent(r4, r4.basis(0, 0)).has_value());
}

TEST_CASE("iso_from_witness examples") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto t2 = fx::t2();
  auto id = SemigroupAutomorphism::identity(2);

  auto r = trivial_ring(t2, gf4);
  auto f = iso_from_witness(r, r, cohom::g_identity(t2, gf4), id);
  CHECK(f == RingMap::identity(r));

  // (Frob, 1) and (id, 1) on T2 are related by mu = (Frob, id).
  auto twisted = cohom::trivial_cocycle(t2, gf4);
  twisted.alpha[t2.pair_index(0, 1)] = gf4.frobenius(1);
  auto r_tw = TwistedRing::from_cocycle(t2, gf4, twisted);
  auto g = cohom::g_identity(t2, gf4);
  g.mu = {gf4.frobenius(1), gf4.identity()};
  REQUIRE(cohom::star(t2, gf4, g, twisted) == cohom::trivial_cocycle(t2, gf4));
  auto iso = iso_from_witness(r_tw, r, g, id);
  CHECK(iso.check().ok());
  const auto x = gf4.generator();
  CHECK(iso(r.term(x, 0, 1)) == r_tw.term(gf4.frobenius(1)(x), 0, 1));
  CHECK(iso(r.term(x, 1, 1)) == r_tw.term(x, 1, 1));

  // MU2 swap.
  auto mu2 = fx::matrix_units(2);
  auto m = trivial_ring(mu2, gf4);
  SemigroupAutomorphism swap({1, 0});
  auto t = iso_from_witness(m, m, cohom::g_identity(mu2, gf4), swap);
  CHECK(t.check().ok());
  CHECK(t(m.basis(0, 1)) == m.basis(1, 0));
  CHECK(t(m.basis(0, 0)) == m.basis(1, 1));
  CHECK(t * t == RingMap::identity(m));
}

TEST_CASE("iso_from_witness on random witnesses") {
  std::mt19937 rng(51);
  for (const auto& s : {fx::t2(), fx::a3(), fx::matrix_units(2), fx::matrix_units(3), support::mu2_tail()})
    for (const auto& d : {DivisionRing::finite_field(2, 2), DivisionRing::finite_field(3, 1)}) {
      const auto auts = sgrp::automorphisms(s);
      for (int t = 0; t < 5; ++t) {
        auto c1 = support::random_cocycle(s, d, rng);
        auto g = support::random_group_element(s, d, rng);
        const auto& phi = auts[std::uniform_int_distribution<std::size_t>(0, auts.size() - 1)(rng)];
        auto c2 = cohom::star(s, d, g, cohom::aut_act(s, phi, c1));
        auto r1 = TwistedRing::from_cocycle(s, d, c1);
        auto r2 = TwistedRing::from_cocycle(s, d, c2);
        auto f = iso_from_witness(r1, r2, g, phi);
        auto check = f.check();
        CHECK(check.ok());
        auto inv = f.inverse();
        REQUIRE(inv);
        CHECK(*inv * f == RingMap::identity(r2));
        CHECK(f * *inv == RingMap::identity(r1));
        for (int k = 0; k < 10; ++k) {
          auto x = random_element(r2, rng), y = random_element(r2, rng);
          CHECK(f(r2.mul(x, y)) == r1.mul(f(x), f(y)));
          CHECK(f(r2.add(x, y)) == r1.add(f(x), f(y)));
        }
      }
    }
}

TEST_CASE("an invalid witness is rejected") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto t2 = fx::t2();
  auto twisted = cohom::trivial_cocycle(t2, gf4);
  twisted.alpha[t2.pair_index(0, 1)] = gf4.frobenius(1);
  auto r_tw = TwistedRing::from_cocycle(t2, gf4, twisted);
  auto r = trivial_ring(t2, gf4);
  try {
    iso_from_witness(r_tw, r, cohom::g_identity(t2, gf4), SemigroupAutomorphism::identity(2));
    FAIL("expected WitnessRejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WitnessRejected);
  }
  CHECK_THROWS_AS(iso_from_witness(r, r, cohom::g_identity(t2, gf4), SemigroupAutomorphism({1, 0})), Error);
}

TEST_CASE("tensor ring comparison") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto t2 = fx::t2();
  auto tr = tensor_ring(t2, gf4, cohom::trivial_cocycle(t2, gf4));
  CHECK(tr.ring().cocycle() == cohom::trivial_cocycle(t2, gf4));
  CHECK(tr.verify().ok());
  const auto g = gf4.generator();
  // (d (x) k s12)(d' (x) k' e2) <-> (d k s12)(d' k' e2)
  auto lhs = tr.ring().mul(tr.image(g, gf4.one(), 0, 1), tr.image(gf4.one(), g, 1, 1));
  CHECK(lhs == tr.ring().term(g * g, 0, 1));

  auto h = DivisionRing::quaternions();
  auto zeta = cohom::trivial_cocycle(t2, h);
  // eta(e2) = 1/2 on the trivial cocycle gives the central value 1/2 at (s12, e2).
  auto eta = cohom::g_identity(t2, h);
  eta.eta[t2.pair_index(1, 1)] = h.quaternion(coeff::Rational(1, 2));
  zeta = cohom::star(t2, h, eta, zeta);
  REQUIRE(zeta.x(t2, 0, 1, 1) == h.quaternion(coeff::Rational(1, 2)));
  auto hq = tensor_ring(t2, h, zeta);
  CHECK(hq.verify().ok());

  auto bad = cohom::trivial_cocycle(t2, h);
  bad.xi[t2.triple_index(0, 1, 1)] = h.quaternion(0, 1);
  try {
    tensor_ring(t2, h, bad);
    FAIL("expected NonCentralXi");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonCentralXi);
  }
  auto twisted = cohom::trivial_cocycle(t2, gf4);
  twisted.alpha[t2.pair_index(0, 1)] = gf4.frobenius(1);
  CHECK_THROWS_AS(tensor_ring(t2, gf4, twisted), Error);
}

TEST_CASE("is_d_algebra") {
  auto gf4 = DivisionRing::finite_field(2, 2);
  auto t2 = fx::t2();
  auto trivial = trivial_ring(t2, gf4);
  auto w = is_d_algebra(trivial);
  REQUIRE(w);
  CHECK(cohom::is_identity(*w));

  auto twisted = cohom::trivial_cocycle(t2, gf4);
  twisted.alpha[t2.pair_index(0, 1)] = gf4.frobenius(1);
  auto tw = is_d_algebra(TwistedRing::from_cocycle(t2, gf4, twisted));
  REQUIRE(tw);
  CHECK(tw->mu == std::vector<coeff::Automorphism>{gf4.frobenius(1), gf4.identity()});
  for (const auto& a : cohom::star(t2, gf4, *tw, twisted).alpha) CHECK(a.is_identity());

  auto gf2 = DivisionRing::finite_field(2, 1);
  auto w2 = is_d_algebra(trivial_ring(t2, gf2));
  REQUIRE(w2);
  CHECK(cohom::is_identity(*w2));

  // On MU2 the twists along s12 and s21 cancel, so the ring is a D-algebra.
  auto mu2 = fx::matrix_units(2);
  auto c = cohom::trivial_cocycle(mu2, gf4);
  c.alpha[mu2.pair_index(0, 1)] = gf4.frobenius(1);
  c.alpha[mu2.pair_index(1, 0)] = gf4.frobenius(1);
  REQUIRE(cohom::verify_two_cocycle(mu2, gf4, c).ok());
  CHECK(is_d_algebra(TwistedRing::from_cocycle(mu2, gf4, c)));

  // A square 1 -> 2, 3 -> 4 without composites: a twist along one edge of the
  // cycle cannot be undone.
  Semigroup square(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}}, {});
  REQUIRE(sgrp::validate(square).ok());
  auto sq = cohom::trivial_cocycle(square, gf4);
  sq.alpha[square.pair_index(0, 1)] = gf4.frobenius(1);
  REQUIRE(cohom::verify_two_cocycle(square, gf4, sq).ok());
  CHECK_FALSE(is_d_algebra(TwistedRing::from_cocycle(square, gf4, sq)));

  try {
    is_d_algebra(trivial_ring(t2, DivisionRing::quaternions()));
    FAIL("expected InfiniteBackend");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteBackend);
  }
}

TEST_CASE("quaternion twisted ring") {
  auto h = DivisionRing::quaternions();
  auto t2 = fx::t2();
  auto c = cohom::trivial_cocycle(t2, h);
  c.alpha[t2.pair_index(0, 1)] = coeff::inner(h.quaternion(1, 1));
  auto r = TwistedRing::from_cocycle(t2, h, c);
  CHECK(check_associativity(r).ok());
  CHECK(check_associativity(r, AssocMode::Sampled, 9, 100).ok());
  // s12 j = (1+i) j (1+i)^{-1} s12 = k s12
  CHECK(r.mul(r.basis(0, 1), r.term(h.quaternion(0, 0, 1), 1, 1)) == r.term(h.quaternion(0, 0, 0, 1), 0, 1));
  CHECK(is_unit(r, r.add(r.one(), r.basis(0, 1))));
  CHECK(r.prime_dimension() == 12);
  auto x = r.add(r.term(h.quaternion(1, 2, 3, 4), 0, 0), r.term(h.quaternion(0, 1), 0, 1));
  CHECK(r.from_prime_coordinates(r.prime_coordinates(x)) == x);
}
