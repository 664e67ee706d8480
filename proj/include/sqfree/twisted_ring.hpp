#pragma once

// The twisted semigroup ring D^alpha_xi S: the left D-space on the support
// pairs with s_ij d = alpha_ij(d) s_ij and s_ij s_jk = xi(s_ij, s_jk) s_ik.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/cohomology.hpp"

namespace sqfree::ring {

using coeff::DivisionRing;
using coeff::Element;
using cohom::GroupElement;
using cohom::SearchBounds;
using cohom::TwoCocycle;
using sgrp::Semigroup;
using sgrp::SemigroupAutomorphism;

/// Left coefficients indexed by pair id (dense; zeros are omitted on the wire).
struct RingElement {
  std::vector<Element> coeffs;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend bool operator<(const RingElement& a, const RingElement& b) {
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
  }
};

class TwistedRing {
 public:
  /// Validates c and stores its normal form; the normalizing witness is kept.
  static TwistedRing from_cocycle(Semigroup s, DivisionRing d, TwoCocycle c);
  /// Uses c as structure constants without any check (for corrupted-cocycle experiments).
  static TwistedRing raw(Semigroup s, DivisionRing d, TwoCocycle c);

  const Semigroup& semigroup() const;
  const DivisionRing& coefficients() const;
  /// Structure constants in use (normal unless built with raw()).
  const TwoCocycle& cocycle() const;
  const TwoCocycle& input_cocycle() const;
  /// cocycle() == star(normalizer(), input_cocycle()).
  const GroupElement& normalizer() const;
  bool same_ring(const TwistedRing& other) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement basis(int i, int j) const;
  RingElement term(const Element& d, int i, int j) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  /// d * a (left scaling, coefficientwise).
  RingElement scale(const Element& d, const RingElement& a) const;
  bool is_zero(const RingElement& a) const;

  /// Dimension over the prime field (GF(p) or Q).
  std::size_t prime_dimension() const;
  /// b * s_ij for b in the prime basis of D, pair-major.
  const std::vector<RingElement>& prime_basis() const;
  std::vector<Element> prime_coordinates(const RingElement& a) const;
  RingElement from_prime_coordinates(const std::vector<Element>& c) const;

  std::string to_string(const RingElement& a) const;

  /// Cached units(); computed on first use.
  const std::vector<RingElement>& cached_units(const SearchBounds& bounds) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct AssocFailure {
  std::vector<int> path;        // (i,j,k,l): x ~ s_ij, y ~ s_jk, z ~ s_kl
  std::vector<Element> scalars; // left coefficients of x, y, z
  std::string lhs, rhs;
};

struct AssocReport {
  std::vector<AssocFailure> failures;  // first few failures
  std::uint64_t failure_count = 0;
  std::uint64_t checked = 0;
  bool ok() const { return failure_count == 0; }
};

enum class AssocMode { ExhaustiveBasis, Sampled };

/// (xy)z = x(yz) for x = d s_ij, y = d' s_jk, z = d'' s_kl with d, d', d''
/// in the generating set of D (exhaustive), or for random elements (sampled).
/// Basis triples whose indices do not chain multiply to 0 on both sides and
/// are skipped.
AssocReport check_associativity(const TwistedRing& r, AssocMode mode = AssocMode::ExhaustiveBasis,
                                std::uint64_t seed = 1, int samples = 200);

/// All elements, lexicographic in (pair, coefficient). Throws SearchBoundExceeded.
std::vector<RingElement> elements(const TwistedRing& r, const SearchBounds& bounds = {});
std::vector<RingElement> idempotents(const TwistedRing& r, const SearchBounds& bounds = {});
std::vector<RingElement> units(const TwistedRing& r, const SearchBounds& bounds = {});
bool is_unit(const TwistedRing& r, const RingElement& a);
std::optional<RingElement> inverse(const TwistedRing& r, const RingElement& a);

/// Primitivity of an idempotent by enumerating the idempotents of eRe; only
/// decided over GF(2) and GF(3) (nullopt elsewhere).
std::optional<bool> is_primitive_idempotent(const TwistedRing& r, const RingElement& e,
                                            const SearchBounds& bounds = {});

struct MapCheck {
  bool additive_bijection = false;
  bool multiplicative = false;
  bool unital = false;
  std::string first_failure;
  bool ok() const { return additive_bijection && multiplicative && unital; }
};

/// A prime-field-linear map between twisted rings, given by the images of
/// source.prime_basis().
class RingMap {
 public:
  RingMap(TwistedRing source, TwistedRing target, std::vector<RingElement> images);
  static RingMap identity(const TwistedRing& r);

  RingElement operator()(const RingElement& a) const;
  const TwistedRing& source() const { return source_; }
  const TwistedRing& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  /// Bijectivity by rank, multiplicativity on all prime-basis pairs, 1 -> 1.
  MapCheck check() const;
  std::optional<RingMap> inverse() const;

  /// (f * g)(x) = f(g(x)).
  friend RingMap operator*(const RingMap& f, const RingMap& g);
  friend bool operator==(const RingMap& a, const RingMap& b) { return a.images_ == b.images_; }
  friend bool operator<(const RingMap& a, const RingMap& b) { return a.images_ < b.images_; }

 private:
  TwistedRing source_;
  TwistedRing target_;
  std::vector<RingElement> images_;
};

/// d s_ij -> mu_i(d) eta(s_ij) s_{phi(i) phi(j)} from source into target,
/// valid when source.cocycle() == star(g, aut_act(phi, target.cocycle())).
/// Throws WitnessRejected when the map is not a ring isomorphism.
RingMap witness_map(const TwistedRing& source, const TwistedRing& target, const GroupElement& g,
                    const SemigroupAutomorphism& phi);

/// The isomorphism R2 -> R1 attached to a witness for
///   input_cocycle(R2) == star(g, aut_act(phi, input_cocycle(R1))).
/// The witness refers to the cocycles as given; normalization is accounted for.
RingMap iso_from_witness(const TwistedRing& r1, const TwistedRing& r2, const GroupElement& g,
                         const SemigroupAutomorphism& phi);

/// D^1_zeta S together with the comparison map d (x) k s -> d k s from D (x)_K K_zeta S,
/// where K is the center of D (D itself for a field, Q for the quaternions).
class TensorComparison {
 public:
  TensorComparison(TwistedRing ring, std::vector<Element> center_generators);
  const TwistedRing& ring() const { return ring_; }
  RingElement image(const Element& d, const Element& k, int i, int j) const;
  /// Multiplicativity on all (generator x center generator x basis) pairs.
  MapCheck verify() const;

 private:
  TwistedRing ring_;
  std::vector<Element> center_generators_;
};

/// zeta must have identity alphas (InvalidInput) and central values (NonCentralXi).
TensorComparison tensor_ring(const Semigroup& s, const DivisionRing& d, const TwoCocycle& zeta);

/// Witness g with star(g, input_cocycle(R)) having identity alphas, or nullopt.
std::optional<GroupElement> is_d_algebra(const TwistedRing& r, const SearchBounds& bounds = {});

}  // namespace sqfree::ring
