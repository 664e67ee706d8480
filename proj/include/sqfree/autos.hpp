#pragma once

// Ring automorphisms of R = D^alpha_xi S over a finite field: the maps
// sigma from 1-cocycles, conjugations, Aut R and Out R, and the maps
// Lambda: H^1 -> Out R and Phi: Out R -> Aut S.
//
// Automorphisms are RingMaps from R to R, written as left operators:
// (f * g)(x) = f(g(x)). Phi uses the normal automorphisms of S (those
// keeping every idempotent's position inside its ~-class): on MU2 the swap
// of e1 and e2 is conjugation by a permutation matrix, so only the normal
// part of Aut S is visible in Out R.

#include <cstdint>
#include <optional>
#include <vector>

#include "sqfree/twisted_ring.hpp"

namespace sqfree::autos {

using coeff::DivisionRing;
using cohom::GroupElement;
using cohom::SearchBounds;
using ring::RingElement;
using ring::RingMap;
using ring::TwistedRing;
using sgrp::Semigroup;
using sgrp::SemigroupAutomorphism;

/// (d s_ij) -> mu_i(d) eta(s_ij) s_ij. g must be a 1-cocycle for R.cocycle()
/// (NotAOneCocycle otherwise).
RingMap sigma(const TwistedRing& r, const GroupElement& g);

/// Finite sets X, Y with (sum X)(sum Y) = (sum Y)(sum X) = 1.
struct InnerWitness {
  std::vector<RingElement> x;
  std::vector<RingElement> y;
};

/// a -> (sum Y) a (sum X). Throws NotInvertible when the sums are not inverse.
RingMap tau(const TwistedRing& r, const InnerWitness& w);
/// tau with X = {u}, Y = {u^{-1}}. Throws NotInvertible for non-units.
RingMap conjugation(const TwistedRing& r, const RingElement& u);
InnerWitness unit_witness(const TwistedRing& r, const RingElement& u);

/// A unit conjugation equal to f, or nullopt. Searches all units of R.
std::optional<InnerWitness> is_inner(const TwistedRing& r, const RingMap& f, const SearchBounds& bounds = {});

/// Aut R by structured search: orthogonal idempotent images of E first, then
/// the coefficient field in each corner, then the arrows. Sorted. R must be
/// built from a cocycle (normal structure constants).
std::vector<RingMap> aut_r(const TwistedRing& r, const SearchBounds& bounds = {});

struct OutResult {
  std::uint64_t order = 0;
  std::vector<RingMap> automorphisms;      // Aut R, sorted
  std::vector<std::size_t> coset;          // coset index of each automorphism
  std::vector<RingMap> representatives;    // first member of each coset
};

OutResult out_r(const TwistedRing& r, const SearchBounds& bounds = {});

/// The permutation of E induced by f after an inner correction making f map
/// E onto E with ~-class positions kept. Throws NormalizationFailed.
SemigroupAutomorphism phi_map(const TwistedRing& r, const RingMap& f, const SearchBounds& bounds = {});

struct LambdaReport {
  std::uint64_t checked = 0;
  std::vector<GroupElement> violations;  // z in Z^1 with (sigma(z) inner) != (z in B^1)
  bool ok() const { return violations.empty(); }
};

/// is_inner(sigma(z)) == (z in B^1) for every z in Z^1 of R.cocycle().
LambdaReport lambda_check(const TwistedRing& r, const SearchBounds& bounds = {});

/// The basis permutation s_ij -> s_{phi(i) phi(j)} on a ring with trivial cocycle.
RingMap section(const TwistedRing& r, const SemigroupAutomorphism& phi);

struct SesReport {
  std::uint64_t h1_order = 0;
  std::uint64_t stab_order = 0;       // normal stabilizer
  std::uint64_t stab_full_order = 0;  // stabilizer in all of Aut S
  std::uint64_t out_order = 0;
  std::uint64_t aut_s_order = 0;
  std::uint64_t aut0_s_order = 0;     // normal automorphisms
  bool order_identity = false;        // out = h1 * stab
  bool lambda_injective = false;
  bool lambda_image_is_kernel = false;
  bool phi_image_is_stab = false;
  bool phi_well_defined = false;
  std::optional<bool> splits;         // checked when the cocycle is cohomologous to the trivial one
  bool exact() const {
    return order_identity && lambda_injective && lambda_image_is_kernel && phi_image_is_stab && phi_well_defined &&
           splits.value_or(true);
  }
};

/// Runs the pieces of 1 -> H^1 -> Out R -> Stab -> 1 on the cocycle of R made
/// trivial on blocks, each computed independently.
SesReport verify_ses(const TwistedRing& r, const SearchBounds& bounds = {});

}  // namespace sqfree::autos
