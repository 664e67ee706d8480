#pragma once

// Shared fixtures and random generators for the test suites.

#include <random>

#include "sqfree/cohomology.hpp"
#include "sqfree/semigroup.hpp"

namespace support {

using namespace sqfree;
using coeff::DivisionRing;
using coeff::Element;
using cohom::GroupElement;
using cohom::TwoCocycle;
using sgrp::Semigroup;

// MU2 on {1,2} with a third idempotent receiving arrows from both.
inline Semigroup mu2_tail() {
  std::vector<sgrp::Pair> support{{2, 2}, {0, 2}, {1, 2}};
  std::vector<sgrp::Triple> comp;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      support.push_back({i, j});
      comp.push_back({i, j, 2});
      for (int k = 0; k < 2; ++k) comp.push_back({i, j, k});
    }
  return Semigroup(3, support, comp);
}

// Incidence semigroup of the poset {1,2} < {3,4} < {5,6}; its order complex
// is an octahedron, so it carries a 2-class that is not a coboundary.
inline Semigroup octahedron() {
  std::vector<sgrp::Pair> support;
  std::vector<sgrp::Triple> comp;
  auto level = [](int v) { return v / 2; };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (!(i == j || level(i) < level(j))) continue;
      support.push_back({i, j});
      for (int k = 0; k < 6; ++k)
        if (k == j || level(j) < level(k)) comp.push_back({i, j, k});
    }
  return Semigroup(6, support, comp);
}

// xi = x on the non-degenerate triple (1,3,5), 1 elsewhere: a cocycle on
// octahedron() whose class is x under the fundamental-class pairing.
inline TwoCocycle octahedron_class(const Semigroup& s, const DivisionRing& d, const Element& x) {
  auto c = cohom::trivial_cocycle(s, d);
  c.xi[s.triple_index(0, 2, 4)] = x;
  return c;
}

inline Element random_unit(const DivisionRing& d, std::mt19937& rng) {
  if (d.is_finite()) {
    const auto units = d.units();
    return units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
  }
  std::uniform_int_distribution<int> c(-3, 3);
  while (true) {
    auto q = d.quaternion(c(rng), c(rng), c(rng), c(rng));
    if (!q.is_zero()) return q;
  }
}

inline coeff::Automorphism random_automorphism(const DivisionRing& d, std::mt19937& rng) {
  if (d.is_finite()) {
    const auto auts = d.automorphisms();
    return auts[std::uniform_int_distribution<std::size_t>(0, auts.size() - 1)(rng)];
  }
  return coeff::inner(random_unit(d, rng));
}

inline GroupElement random_group_element(const Semigroup& s, const DivisionRing& d, std::mt19937& rng) {
  GroupElement g;
  for (int i = 0; i < s.size(); ++i) g.mu.push_back(random_automorphism(d, rng));
  for (std::size_t id = 0; id < s.num_pairs(); ++id) g.eta.push_back(random_unit(d, rng));
  return g;
}

// A random member of the class of `base` (trivial by default).
inline TwoCocycle random_cocycle(const Semigroup& s, const DivisionRing& d, std::mt19937& rng,
                                 const TwoCocycle* base = nullptr) {
  const TwoCocycle start = base ? *base : cohom::trivial_cocycle(s, d);
  return cohom::star(s, d, random_group_element(s, d, rng), start);
}

}  // namespace support
