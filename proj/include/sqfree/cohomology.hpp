#pragma once

// Abelian boundary maps, non-abelian 2-cocycles (alpha, xi), the group
// G(S,D) of pairs (mu, eta) with its *-action, and first cohomology.
//
// Group convention: g_mul(a, b) means "act by a, then by b", so
//   star(g_mul(a, b), c) == star(b, star(a, c)).
// In the product notation (mu^, eta^)(mu, eta) = (mu mu^, [mu box eta^] eta)
// this is g_mul(a, b) = b a; the action is a left action for that product.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/coeff.hpp"
#include "sqfree/semigroup.hpp"

namespace sqfree::cohom {

using coeff::Automorphism;
using coeff::DivisionRing;
using coeff::Element;
using sgrp::Semigroup;
using sgrp::SemigroupAutomorphism;

struct SearchBounds {
  std::uint64_t max_search = 10'000'000;   // search nodes / enumerated candidates
  std::uint64_t max_elements = 1u << 20;   // ring elements and units
  int max_aut_n = 8;                       // Aut S permutation search
};

/// A map S^{<m>} -> D^*, keyed by vertex paths (see Semigroup::paths).
struct Cochain {
  int m = 0;
  std::map<std::vector<int>, Element> values;

  const Element& operator()(const std::vector<int>& path) const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain constant_cochain(const Semigroup& s, const DivisionRing& d, int m, const Element& value);

/// The abelian coboundary d^m : F^m -> F^{m+1} (m = phi.m in 0..3).
/// Throws NonCommutativeCoefficients for quaternions.
Cochain boundary(const Semigroup& s, const DivisionRing& d, const Cochain& phi);

bool is_abelian_cocycle(const Semigroup& s, const DivisionRing& d, const Cochain& phi);

/// Exhaustive search of F^{m-1} for psi with d(psi) = phi (m in {1,2}).
/// Throws SearchBoundExceeded when (q-1)^|S^{<m-1>}| exceeds the limit.
std::optional<Cochain> abelian_coboundary_preimage(const Semigroup& s, const DivisionRing& d, const Cochain& phi,
                                                   std::uint64_t limit = 10'000'000);

/// alpha indexed by pair id, xi indexed by comp-triple id (unit-padded
/// triples included).
struct TwoCocycle {
  std::vector<Automorphism> alpha;
  std::vector<Element> xi;

  const Automorphism& a(const Semigroup& s, int i, int j) const { return alpha[s.pair_index(i, j)]; }
  const Element& x(const Semigroup& s, int i, int j, int k) const { return xi[s.triple_index(i, j, k)]; }
  friend bool operator==(const TwoCocycle&, const TwoCocycle&) = default;
};

TwoCocycle trivial_cocycle(const Semigroup& s, const DivisionRing& d);

struct CocycleViolation {
  std::string identity;    // "shape", "xi-nonzero", "xi-cocycle", "alpha-composition"
  std::vector<int> tuple;  // vertex path
  std::string lhs, rhs;
};

struct CocycleReport {
  std::vector<CocycleViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks both cocycle identities on S^{<3>} and S^{<2>}.
CocycleReport verify_two_cocycle(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c);

/// xi(e_i, e_i) = 1 for every i.
bool is_normal(const Semigroup& s, const TwoCocycle& c);

/// Identity automorphisms and xi = 1 on every ~-block.
bool is_trivial_on_blocks(const Semigroup& s, const TwoCocycle& c);

/// An element (mu, eta) of G(S,D): mu per idempotent, eta per pair id.
struct GroupElement {
  std::vector<Automorphism> mu;
  std::vector<Element> eta;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b);
};

GroupElement g_identity(const Semigroup& s, const DivisionRing& d);
bool is_identity(const GroupElement& g);
GroupElement g_mul(const Semigroup& s, const GroupElement& a, const GroupElement& b);
GroupElement g_inv(const Semigroup& s, const GroupElement& a);

/// (mu, eta) * (alpha, xi). Throws InvalidCocycle when c is not a 2-cocycle.
TwoCocycle star(const Semigroup& s, const DivisionRing& d, const GroupElement& g, const TwoCocycle& c);
/// The same formulas without validating c.
TwoCocycle star_unchecked(const Semigroup& s, const GroupElement& g, const TwoCocycle& c);

struct Transformed {
  TwoCocycle cocycle;
  GroupElement witness;  // cocycle == star(witness, input)
};

Transformed normalize(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c);

/// Normalizes, then makes the cocycle trivial on every ~-block: on a block
/// with least index b, mu_j = alpha_bj^{-1} and eta(s_jk) = alpha_bj^{-1}(xi(s_bj, s_jk)^{-1}).
Transformed trivialize_on_blocks(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c);

/// (alpha^phi, xi^phi): alpha^phi(s_ij) = alpha(s_ij^phi). Satisfies
/// aut_act(phi, aut_act(psi, c)) == aut_act(psi * phi, c).
TwoCocycle aut_act(const Semigroup& s, const SemigroupAutomorphism& phi, const TwoCocycle& c);
/// Reindexing of (mu, eta); star(aut_act(phi, g), aut_act(phi, c)) == aut_act(phi, star(g, c)).
GroupElement aut_act(const Semigroup& s, const SemigroupAutomorphism& phi, const GroupElement& g);

/// Some g with star(g, c1) == c2, or nullopt. Finite fields only.
std::optional<GroupElement> cohomologous(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                         const TwoCocycle& c2, const SearchBounds& bounds = {});

/// Every g with star(g, c1) == c2, sorted.
std::vector<GroupElement> all_witnesses(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                        const TwoCocycle& c2, const SearchBounds& bounds = {});

/// Some g = (mu, 1) with star(g, c) having identity alphas (the xi are then
/// central, D being a field). Finite fields only.
std::optional<GroupElement> d_algebra_witness(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c,
                                              const SearchBounds& bounds = {});

/// phi in Aut S with [alpha^phi, xi^phi] = [alpha, xi]. With normal_only, only
/// block-position-preserving automorphisms are considered.
std::vector<SemigroupAutomorphism> stabilizer(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c,
                                              const SearchBounds& bounds = {}, bool normal_only = false);

/// (mu, eta) is an (alpha, xi) 1-cocycle.
bool verify_one_cocycle(const Semigroup& s, const DivisionRing& d, const TwoCocycle& base, const GroupElement& g);

/// The 1-coboundary nu star (1_D, 1): mu_i = tau_{nu_i}, eta(s_ij) = nu_i alpha_ij(nu_j^{-1}).
GroupElement coboundary(const Semigroup& s, const TwoCocycle& base, const std::vector<Element>& nu);

struct H1Result {
  std::uint64_t order = 0;
  std::vector<GroupElement> z1;               // sorted
  std::vector<GroupElement> b1;               // sorted
  std::vector<GroupElement> representatives;  // one per coset, in Z1 order
  bool b1_in_z1 = false;
  bool b1_normal = false;
};

H1Result h1(const Semigroup& s, const DivisionRing& d, const TwoCocycle& base, const SearchBounds& bounds = {});

}  // namespace sqfree::cohom
