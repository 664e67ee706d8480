#pragma once

// JSON wire format. Indices are 1-based; pairs and triples are keyed by
// comma-joined strings ("1,2", "1,2,3"). Elements are exact: finite-field
// elements as k power-basis coordinates, quaternions as four "num/den"
// strings. Parse errors throw InvalidSpec naming the offending path.

#include <string>

#include "json.hpp"
#include "sqfree/twisted_ring.hpp"

namespace sqfree::io {

using Json = nlohmann::json;
using coeff::Automorphism;
using coeff::DivisionRing;
using coeff::Element;
using cohom::Cochain;
using cohom::GroupElement;
using cohom::SearchBounds;
using cohom::TwoCocycle;
using sgrp::Semigroup;
using sgrp::SemigroupAutomorphism;

/// {"backend": "finite_field", "p", "k", "modulus"?} or {"backend": "quaternion"}.
DivisionRing parse_coefficients(const Json& j, const std::string& path = "coefficients");
Json to_json(const DivisionRing& d);

Element parse_element(const DivisionRing& d, const Json& j, const std::string& path);
Json to_json(const Element& x);

/// {"frobenius": m} or {"conj": [a, b, c, d]}.
Automorphism parse_automorphism(const DivisionRing& d, const Json& j, const std::string& path);
Json to_json(const Automorphism& a);

/// {"n", "support", "comp"}; the unit-law triples may be omitted. The result
/// is not validated (see sgrp::validate).
Semigroup parse_semigroup(const Json& j, const std::string& path = "semigroup");
Json to_json(const Semigroup& s);

/// Missing alpha entries are the identity, missing xi entries are 1.
TwoCocycle parse_cocycle(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path = "cocycle");
Json to_json(const Semigroup& s, const TwoCocycle& c);

/// Missing mu entries are the identity, missing eta entries are 1.
GroupElement parse_group_element(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path);
Json to_json(const Semigroup& s, const GroupElement& g);

/// A 1-based permutation [phi(1), ..., phi(n)].
SemigroupAutomorphism parse_permutation(const Json& j, const std::string& path);
Json to_json(const SemigroupAutomorphism& phi);

/// {"m", "values": {"i0,...,im": element}}; every path of S^{<m>} is required.
Cochain parse_cochain(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path = "cochain");
Json to_json(const Cochain& c);

/// {"i,j": element} with zero coefficients omitted.
Json to_json(const ring::TwistedRing& r, const ring::RingElement& a);
ring::RingElement parse_ring_element(const ring::TwistedRing& r, const Json& j, const std::string& path);

/// Images of the prime basis: [{"basis": element, "image": element}, ...].
Json to_json(const ring::RingMap& f);

/// Overrides from {"max_search", "max_units", "max_elements", "max_aut_n"};
/// max_units is an alias of max_elements.
SearchBounds parse_bounds(const Json& j, SearchBounds base = {}, const std::string& path = "bounds");
Json to_json(const SearchBounds& b);

}  // namespace sqfree::io
