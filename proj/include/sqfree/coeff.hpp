#pragma once

// Exact division-ring coefficients: finite fields GF(p^k) given by a
// caller-supplied irreducible modulus, and the rational quaternions.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqfree/error.hpp"

namespace sqfree::coeff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// a + b i + c j + d k over Q with i^2 = j^2 = -1 and ij = k.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() = default;
  Quaternion(Rational a_, Rational b_ = 0, Rational c_ = 0, Rational d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return b == 0 && c == 0 && d == 0; }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }
  Rational norm() const { return a * a + b * b + c * c + d * d; }
  Quaternion inverse() const;

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend bool operator<(const Quaternion& x, const Quaternion& y);
};

namespace detail {

// Log/exp tables for GF(p^k). Elements are encoded as sum_t c_t p^t where
// (c_0, ..., c_{k-1}) are the power-basis coordinates modulo the modulus.
struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // ascending coefficients, monic, size k+1
  std::vector<std::uint32_t> pow_p;    // p^t, t = 0..k
  std::vector<std::uint32_t> exp;      // size q-1, exp[i] = g^i
  std::vector<std::uint32_t> log;      // size q, log[0] unused
  std::vector<std::uint32_t> add_table;  // q*q when q is small, else empty

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = log[x] + log[y];
    if (e >= q - 1) e -= q - 1;
    return exp[e];
  }
  std::uint32_t inv(std::uint32_t x) const { return log[x] == 0 ? 1 : exp[q - 1 - log[x]]; }
  std::uint32_t frobenius(std::uint32_t x, std::uint32_t m) const;
  std::uint32_t digit(std::uint32_t x, std::uint32_t t) const { return (x / pow_p[t]) % p; }
  bool same_field(const FieldTables& other) const {
    return p == other.p && k == other.k && modulus == other.modulus;
  }
};

}  // namespace detail

class Element {
 public:
  struct FieldValue {
    const detail::FieldTables* field = nullptr;
    std::uint32_t value = 0;
  };

  Element();
  Element(const detail::FieldTables* field, std::uint32_t value) : v_(FieldValue{field, value}) {}
  explicit Element(Quaternion q) : v_(std::move(q)) {}

  bool is_field() const { return std::holds_alternative<FieldValue>(v_); }
  bool is_quaternion() const { return std::holds_alternative<Quaternion>(v_); }
  const FieldValue& field_value() const { return std::get<FieldValue>(v_); }
  const Quaternion& quaternion() const { return std::get<Quaternion>(v_); }

  bool is_zero() const;
  bool is_one() const;
  Element inverse() const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  friend Element operator*(const Element& x, const Element& y);
  /// x * y^{-1}
  friend Element operator/(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
  /// Deterministic total order (encoding order, not a field order).
  friend bool operator<(const Element& x, const Element& y);

  Element& operator+=(const Element& y) { return *this = *this + y; }
  Element& operator*=(const Element& y) { return *this = *this * y; }

  std::string to_string() const;

 private:
  std::variant<FieldValue, Quaternion> v_;
};

/// A ring automorphism of the coefficient division ring, held as a canonical
/// descriptor: x -> x^(p^m) for finite fields, x -> q x q^{-1} for quaternions.
class Automorphism {
 public:
  Automorphism();
  static Automorphism frobenius(const detail::FieldTables* field, std::uint32_t power);
  /// Conjugation by q, canonicalized to a primitive integer quaternion with
  /// positive first nonzero coordinate.
  static Automorphism conjugation(const Quaternion& q);

  Element operator()(const Element& x) const;
  Automorphism inverse() const;
  bool is_identity() const;

  std::optional<std::uint32_t> frobenius_power() const;
  const Quaternion* conjugator() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism& a, const Automorphism& b);
  friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }
  friend bool operator<(const Automorphism& a, const Automorphism& b);

  std::string to_string() const;

 private:
  struct Frobenius {
    const detail::FieldTables* field = nullptr;
    std::uint32_t power = 0;
  };
  struct Conjugation {
    Quaternion q{1};
  };
  std::variant<Frobenius, Conjugation> v_;
};

/// tau_d : x -> d x d^{-1}. Identity over a field.
Automorphism inner(const Element& d);

/// Scale q to integer coordinates with content 1 and positive leading sign.
Quaternion canonical_conjugator(const Quaternion& q);

enum class Backend { FiniteField, RationalQuaternion };

/// The coefficient division ring D. Cheap to copy; finite-field tables are shared.
class DivisionRing {
 public:
  /// GF(p^k) with the given monic irreducible modulus (ascending coefficients).
  static DivisionRing finite_field(std::uint32_t p, std::uint32_t k,
                                   std::vector<std::uint32_t> modulus);
  /// GF(p^k) with the lexicographically first monic irreducible modulus.
  static DivisionRing finite_field(std::uint32_t p, std::uint32_t k);
  static DivisionRing quaternions();

  Backend backend() const { return field_ ? Backend::FiniteField : Backend::RationalQuaternion; }
  bool is_finite() const { return field_ != nullptr; }
  bool is_commutative() const { return is_finite(); }

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  /// q = p^k; throws InfiniteBackend for quaternions.
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;
  const detail::FieldTables* tables() const { return field_.get(); }

  Element zero() const;
  Element one() const;
  Element from_int(long long n) const;
  /// Finite field element from power-basis coordinates; values are reduced mod p.
  Element from_coords(const std::vector<long long>& coords) const;
  Element quaternion(Rational a, Rational b = 0, Rational c = 0, Rational d = 0) const;
  /// Power-basis generator x (the class of x modulo the modulus).
  Element generator() const;
  /// Generator of the multiplicative group (finite fields only).
  Element primitive() const;
  /// Small multiplicative-and-additive generating set used by sampled checks:
  /// {1, primitive} for fields, {1, i, j} for quaternions.
  std::vector<Element> generators() const;

  /// Basis of D over its prime field (finite) or over Q (quaternions).
  std::vector<Element> prime_basis() const;
  /// Coordinates of x in prime_basis(), each a central prime-field/rational element.
  std::vector<Element> coordinates(const Element& x) const;
  std::vector<std::uint32_t> digits(const Element& x) const;

  bool contains(const Element& x) const;
  bool is_central(const Element& x) const;

  /// All p^k - 1 nonzero elements in encoding order.
  std::vector<Element> units() const;
  std::vector<Element> elements() const;
  /// The k Frobenius powers; throws InfiniteBackend for quaternions.
  std::vector<Automorphism> automorphisms() const;
  Automorphism identity() const;
  Automorphism frobenius(std::uint32_t power) const;

  friend bool operator==(const DivisionRing& a, const DivisionRing& b);
  std::string describe() const;

 private:
  std::shared_ptr<const detail::FieldTables> field_;
};

/// Monic irreducibility over GF(p) by trial division.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace sqfree::coeff
