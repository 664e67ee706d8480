#include "sqfree/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace sqfree {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedBackends: return "MixedBackends";
    case Errc::ZeroConjugator: return "ZeroConjugator";
    case Errc::InfiniteBackend: return "InfiniteBackend";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::SearchBoundExceeded: return "SearchBoundExceeded";
    case Errc::BlockNotMatrixUnits: return "BlockNotMatrixUnits";
    case Errc::NonCommutativeCoefficients: return "NonCommutativeCoefficients";
    case Errc::InvalidCocycle: return "InvalidCocycle";
    case Errc::MixedRings: return "MixedRings";
    case Errc::WitnessRejected: return "WitnessRejected";
    case Errc::NonCentralXi: return "NonCentralXi";
    case Errc::NotAOneCocycle: return "NotAOneCocycle";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NormalizationFailed: return "NormalizationFailed";
  }
  return "Unknown";
}

namespace coeff {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t t = 0; t <= dm; ++t) {
      a[shift + t] = static_cast<std::uint32_t>((a[shift + t] + (p - lead) * std::uint64_t{m[t]}) % p);
    }
    trim(a);
  }
  return a;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t encode(const Poly& a, const std::vector<std::uint32_t>& pow_p) {
  std::uint32_t v = 0;
  for (std::size_t t = 0; t < a.size(); ++t) v += a[t] * pow_p[t];
  return v;
}

Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
  Poly a(k);
  for (std::uint32_t t = 0; t < k; ++t) {
    a[t] = v % p;
    v /= p;
  }
  return a;
}

std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y, const detail::FieldTables& f) {
  const Poly a = decode(x, f.p, f.k);
  const Poly b = decode(y, f.p, f.k);
  Poly c(2 * f.k, 0);
  for (std::uint32_t s = 0; s < f.k; ++s)
    for (std::uint32_t t = 0; t < f.k; ++t)
      c[s + t] = static_cast<std::uint32_t>((c[s + t] + std::uint64_t{a[s]} * b[t]) % f.p);
  return encode(poly_mod(std::move(c), f.modulus, f.p), f.pow_p);
}

std::shared_ptr<detail::FieldTables> build_tables(std::uint32_t p, std::uint32_t k, Poly modulus) {
  auto f = std::make_shared<detail::FieldTables>();
  f->p = p;
  f->k = k;
  f->modulus = std::move(modulus);
  f->pow_p.resize(k + 1);
  f->pow_p[0] = 1;
  for (std::uint32_t t = 1; t <= k; ++t) f->pow_p[t] = f->pow_p[t - 1] * p;
  f->q = f->pow_p[k];
  const std::uint32_t q = f->q;

  if (q <= 256) {
    f->add_table.resize(std::size_t{q} * q);
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) {
        std::uint32_t v = 0;
        for (std::uint32_t t = 0; t < k; ++t) v += ((f->digit(x, t) + f->digit(y, t)) % p) * f->pow_p[t];
        f->add_table[std::size_t{x} * q + y] = v;
      }
  }

  f->log.assign(q, 0);
  f->exp.assign(q - 1, 0);
  if (q == 2) {
    f->exp[0] = 1;
    return f;
  }
  for (std::uint32_t g = 2; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = slow_mul(x, g, *f);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    x = 1;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
      f->exp[e] = x;
      f->log[x] = e;
      x = slow_mul(x, g, *f);
    }
    return f;
  }
  throw Error(Errc::InvalidSpec, "no primitive element found; modulus is not irreducible");
}

const detail::FieldTables* common_field(const Element::FieldValue& a, const Element::FieldValue& b) {
  if (a.field == b.field) {
    if (!a.field) throw Error(Errc::MixedBackends, "uninitialized finite-field element");
    return a.field;
  }
  if (!a.field || !b.field || !a.field->same_field(*b.field))
    throw Error(Errc::MixedBackends, "elements of different finite fields");
  return a.field;
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace

// --- FieldTables -----------------------------------------------------------

namespace detail {

std::uint32_t FieldTables::add(std::uint32_t x, std::uint32_t y) const {
  if (!add_table.empty()) return add_table[std::size_t{x} * q + y];
  std::uint32_t v = 0;
  for (std::uint32_t t = 0; t < k; ++t) v += ((digit(x, t) + digit(y, t)) % p) * pow_p[t];
  return v;
}

std::uint32_t FieldTables::neg(std::uint32_t x) const {
  std::uint32_t v = 0;
  for (std::uint32_t t = 0; t < k; ++t) v += ((p - digit(x, t)) % p) * pow_p[t];
  return v;
}

std::uint32_t FieldTables::frobenius(std::uint32_t x, std::uint32_t m) const {
  if (x == 0 || m == 0) return x;
  std::uint64_t e = log[x];
  for (std::uint32_t s = 0; s < m; ++s) e = (e * p) % (q - 1);
  return exp[e];
}

}  // namespace detail

// --- Quaternion ------------------------------------------------------------

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero quaternion");
  const Rational n = norm();
  return {a / n, -b / n, -c / n, -d / n};
}

bool operator<(const Quaternion& x, const Quaternion& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

Quaternion canonical_conjugator(const Quaternion& q) {
  if (q.is_zero()) throw Error(Errc::ZeroConjugator, "conjugation by zero");
  const Rational* parts[4] = {&q.a, &q.b, &q.c, &q.d};
  Integer l = 1;
  for (const Rational* r : parts) l = boost::multiprecision::lcm(l, Integer(denominator(*r)));
  Integer ints[4];
  Integer g = 0;
  for (int t = 0; t < 4; ++t) {
    ints[t] = Integer(numerator(*parts[t])) * (l / Integer(denominator(*parts[t])));
    g = boost::multiprecision::gcd(g, ints[t]);
  }
  for (auto& v : ints) v /= g;
  for (const auto& v : ints) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : ints) w = -w;
    break;
  }
  return {Rational(ints[0]), Rational(ints[1]), Rational(ints[2]), Rational(ints[3])};
}

// --- Element ---------------------------------------------------------------

Element::Element() : v_(FieldValue{nullptr, 0}) {}

bool Element::is_zero() const {
  if (is_field()) return field_value().value == 0;
  return quaternion().is_zero();
}

bool Element::is_one() const {
  if (is_field()) return field_value().value == 1;
  const auto& q = quaternion();
  return q.a == 1 && q.is_real();
}

Element Element::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_field()) {
    const auto& fv = field_value();
    return {fv.field, fv.field->inv(fv.value)};
  }
  return Element(quaternion().inverse());
}

Element operator+(const Element& x, const Element& y) {
  if (x.is_field() && y.is_field()) {
    const auto* f = common_field(x.field_value(), y.field_value());
    return {f, f->add(x.field_value().value, y.field_value().value)};
  }
  if (x.is_quaternion() && y.is_quaternion()) return Element(x.quaternion() + y.quaternion());
  throw Error(Errc::MixedBackends, "finite-field and quaternion elements");
}

Element operator-(const Element& x) {
  if (x.is_field()) {
    const auto& fv = x.field_value();
    if (!fv.field) throw Error(Errc::MixedBackends, "uninitialized finite-field element");
    return {fv.field, fv.field->neg(fv.value)};
  }
  return Element(-x.quaternion());
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator*(const Element& x, const Element& y) {
  if (x.is_field() && y.is_field()) {
    const auto* f = common_field(x.field_value(), y.field_value());
    return {f, f->mul(x.field_value().value, y.field_value().value)};
  }
  if (x.is_quaternion() && y.is_quaternion()) return Element(x.quaternion() * y.quaternion());
  throw Error(Errc::MixedBackends, "finite-field and quaternion elements");
}

Element operator/(const Element& x, const Element& y) {
  if (x.is_field() != y.is_field()) throw Error(Errc::MixedBackends, "finite-field and quaternion elements");
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return x * y.inverse();
}

bool operator==(const Element& x, const Element& y) {
  if (x.is_field() && y.is_field()) {
    const auto& a = x.field_value();
    const auto& b = y.field_value();
    if (a.value != b.value) return false;
    return a.field == b.field || (a.field && b.field && a.field->same_field(*b.field));
  }
  if (x.is_quaternion() && y.is_quaternion()) return x.quaternion() == y.quaternion();
  return false;
}

bool operator<(const Element& x, const Element& y) {
  if (x.is_field() != y.is_field()) return x.is_field();
  if (x.is_field()) return x.field_value().value < y.field_value().value;
  return x.quaternion() < y.quaternion();
}

std::string Element::to_string() const {
  std::ostringstream os;
  if (is_field()) {
    const auto& fv = field_value();
    os << '[';
    const std::uint32_t k = fv.field ? fv.field->k : 1;
    for (std::uint32_t t = 0; t < k; ++t) {
      if (t) os << ',';
      os << (fv.field ? fv.field->digit(fv.value, t) : fv.value);
    }
    os << ']';
    return os.str();
  }
  const auto& q = quaternion();
  os << '(' << rational_string(q.a) << ',' << rational_string(q.b) << ',' << rational_string(q.c) << ','
     << rational_string(q.d) << ')';
  return os.str();
}

// --- Automorphism ----------------------------------------------------------

Automorphism::Automorphism() : v_(Frobenius{nullptr, 0}) {}

Automorphism Automorphism::frobenius(const detail::FieldTables* field, std::uint32_t power) {
  Automorphism a;
  a.v_ = Frobenius{field, field ? power % field->k : power};
  return a;
}

Automorphism Automorphism::conjugation(const Quaternion& q) {
  Automorphism a;
  a.v_ = Conjugation{canonical_conjugator(q)};
  return a;
}

Element Automorphism::operator()(const Element& x) const {
  if (const auto* f = std::get_if<Frobenius>(&v_)) {
    if (!x.is_field()) throw Error(Errc::MixedBackends, "Frobenius applied to a quaternion");
    if (f->power == 0) return x;
    const auto& fv = x.field_value();
    if (f->field && fv.field && !f->field->same_field(*fv.field))
      throw Error(Errc::MixedBackends, "Frobenius of a different field");
    return {fv.field, fv.field->frobenius(fv.value, f->power)};
  }
  if (!x.is_quaternion()) throw Error(Errc::MixedBackends, "conjugation applied to a field element");
  const auto& q = std::get<Conjugation>(v_).q;
  if (q == Quaternion{1}) return x;
  return Element(q * x.quaternion() * q.inverse());
}

Automorphism Automorphism::inverse() const {
  if (const auto* f = std::get_if<Frobenius>(&v_)) {
    if (f->power == 0) return *this;
    return frobenius(f->field, f->field->k - f->power);
  }
  return conjugation(std::get<Conjugation>(v_).q.conjugate());
}

bool Automorphism::is_identity() const {
  if (const auto* f = std::get_if<Frobenius>(&v_)) return f->power == 0;
  return std::get<Conjugation>(v_).q == Quaternion{1};
}

std::optional<std::uint32_t> Automorphism::frobenius_power() const {
  if (const auto* f = std::get_if<Frobenius>(&v_)) return f->power;
  return std::nullopt;
}

const Quaternion* Automorphism::conjugator() const {
  if (const auto* c = std::get_if<Conjugation>(&v_)) return &c->q;
  return nullptr;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  const auto* fa = std::get_if<Automorphism::Frobenius>(&a.v_);
  const auto* fb = std::get_if<Automorphism::Frobenius>(&b.v_);
  if (fa && fb) {
    const detail::FieldTables* field = fa->field ? fa->field : fb->field;
    if (fa->field && fb->field && !fa->field->same_field(*fb->field))
      throw Error(Errc::MixedBackends, "Frobenius maps of different fields");
    return Automorphism::frobenius(field, fa->power + fb->power);
  }
  if (fa || fb) throw Error(Errc::MixedBackends, "Frobenius composed with conjugation");
  return Automorphism::conjugation(std::get<Automorphism::Conjugation>(a.v_).q *
                                   std::get<Automorphism::Conjugation>(b.v_).q);
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  const auto* fa = std::get_if<Automorphism::Frobenius>(&a.v_);
  const auto* fb = std::get_if<Automorphism::Frobenius>(&b.v_);
  if (fa && fb) return fa->power == fb->power;
  if (fa || fb) return false;
  return std::get<Automorphism::Conjugation>(a.v_).q == std::get<Automorphism::Conjugation>(b.v_).q;
}

bool operator<(const Automorphism& a, const Automorphism& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  if (const auto* fa = std::get_if<Automorphism::Frobenius>(&a.v_))
    return fa->power < std::get<Automorphism::Frobenius>(b.v_).power;
  return std::get<Automorphism::Conjugation>(a.v_).q < std::get<Automorphism::Conjugation>(b.v_).q;
}

std::string Automorphism::to_string() const {
  if (const auto* f = std::get_if<Frobenius>(&v_)) return "frob^" + std::to_string(f->power);
  return "conj" + Element(std::get<Conjugation>(v_).q).to_string();
}

Automorphism inner(const Element& d) {
  if (d.is_zero()) throw Error(Errc::ZeroConjugator, "tau_0 is undefined");
  if (d.is_field()) return Automorphism::frobenius(d.field_value().field, 0);
  return Automorphism::conjugation(d.quaternion());
}

// --- DivisionRing ----------------------------------------------------------

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::size_t k = monic.size() - 1;
  if (k == 0) return false;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < d; ++t) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1);
      std::uint64_t w = v;
      for (std::size_t t = 0; t < d; ++t) {
        g[t] = static_cast<std::uint32_t>(w % p);
        w /= p;
      }
      g[d] = 1;
      if (poly_mod(monic, g, p).empty()) return false;
    }
  }
  return true;
}

DivisionRing DivisionRing::finite_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::InvalidSpec, "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidSpec, "degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t t = 0; t < k; ++t) {
    q *= p;
    if (q > (1u << 16)) throw Error(Errc::InvalidSpec, "field order exceeds 65536");
  }
  if (modulus.size() != k + 1) throw Error(Errc::InvalidSpec, "modulus must have k+1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw Error(Errc::InvalidSpec, "modulus coefficient out of range [0,p)");
  if (modulus.back() != 1) throw Error(Errc::InvalidSpec, "modulus must be monic");
  if (!is_irreducible(p, modulus)) throw Error(Errc::InvalidSpec, "modulus is reducible over GF(p)");
  DivisionRing d;
  d.field_ = build_tables(p, k, std::move(modulus));
  return d;
}

DivisionRing DivisionRing::finite_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(Errc::InvalidSpec, "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidSpec, "degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t t = 0; t < k; ++t) {
    count *= p;
    if (count > (1u << 16)) throw Error(Errc::InvalidSpec, "field order exceeds 65536");
  }
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly m(k + 1);
    std::uint64_t w = v;
    for (std::uint32_t t = 0; t < k; ++t) {
      m[t] = static_cast<std::uint32_t>(w % p);
      w /= p;
    }
    m[k] = 1;
    if (is_irreducible(p, m)) return finite_field(p, k, m);
  }
  throw Error(Errc::InvalidSpec, "no irreducible polynomial found");
}

DivisionRing DivisionRing::quaternions() { return DivisionRing{}; }

std::uint32_t DivisionRing::characteristic() const { return field_ ? field_->p : 0; }
std::uint32_t DivisionRing::degree() const { return field_ ? field_->k : 4; }

std::uint64_t DivisionRing::order() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "the rational quaternions are infinite");
  return field_->q;
}

const std::vector<std::uint32_t>& DivisionRing::modulus() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "quaternions have no modulus");
  return field_->modulus;
}

Element DivisionRing::zero() const { return field_ ? Element(field_.get(), 0) : Element(Quaternion{0}); }
Element DivisionRing::one() const { return field_ ? Element(field_.get(), 1) : Element(Quaternion{1}); }

Element DivisionRing::from_int(long long n) const {
  if (!field_) return Element(Quaternion{Rational(n)});
  const long long p = field_->p;
  return {field_.get(), static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Element DivisionRing::from_coords(const std::vector<long long>& coords) const {
  if (!field_) throw Error(Errc::MixedBackends, "power-basis coordinates for quaternions");
  if (coords.size() > field_->k) throw Error(Errc::InvalidInput, "too many coordinates");
  const long long p = field_->p;
  std::uint32_t v = 0;
  for (std::size_t t = 0; t < coords.size(); ++t)
    v += static_cast<std::uint32_t>(((coords[t] % p) + p) % p) * field_->pow_p[t];
  return {field_.get(), v};
}

Element DivisionRing::quaternion(Rational a, Rational b, Rational c, Rational d) const {
  if (field_) throw Error(Errc::MixedBackends, "quaternion requested from a finite field");
  return Element(Quaternion{std::move(a), std::move(b), std::move(c), std::move(d)});
}

Element DivisionRing::generator() const {
  if (!field_) return Element(Quaternion{0, 1});
  if (field_->k == 1) return from_int(-static_cast<long long>(field_->modulus[0]));
  return {field_.get(), field_->p};
}

Element DivisionRing::primitive() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "quaternions have no primitive element");
  return {field_.get(), field_->exp[field_->q == 2 ? 0 : 1]};
}

std::vector<Element> DivisionRing::generators() const {
  if (!field_) return {one(), Element(Quaternion{0, 1}), Element(Quaternion{0, 0, 1})};
  if (field_->q == 2) return {one()};
  return {one(), primitive()};
}

std::vector<Element> DivisionRing::prime_basis() const {
  std::vector<Element> basis;
  if (!field_) {
    basis = {Element(Quaternion{1}), Element(Quaternion{0, 1}), Element(Quaternion{0, 0, 1}),
             Element(Quaternion{0, 0, 0, 1})};
    return basis;
  }
  for (std::uint32_t t = 0; t < field_->k; ++t) basis.emplace_back(field_.get(), field_->pow_p[t]);
  return basis;
}

std::vector<Element> DivisionRing::coordinates(const Element& x) const {
  if (!contains(x)) throw Error(Errc::MixedBackends, "element of a different division ring");
  std::vector<Element> c;
  if (!field_) {
    const auto& q = x.quaternion();
    for (const Rational* r : {&q.a, &q.b, &q.c, &q.d}) c.emplace_back(Quaternion{*r});
    return c;
  }
  for (std::uint32_t t = 0; t < field_->k; ++t)
    c.emplace_back(field_.get(), field_->digit(x.field_value().value, t));
  return c;
}

std::vector<std::uint32_t> DivisionRing::digits(const Element& x) const {
  if (!field_ || !contains(x)) throw Error(Errc::MixedBackends, "digits of a non-field element");
  std::vector<std::uint32_t> d(field_->k);
  for (std::uint32_t t = 0; t < field_->k; ++t) d[t] = field_->digit(x.field_value().value, t);
  return d;
}

bool DivisionRing::contains(const Element& x) const {
  if (!field_) return x.is_quaternion();
  if (!x.is_field()) return false;
  const auto* f = x.field_value().field;
  return f == field_.get() || (f && f->same_field(*field_));
}

bool DivisionRing::is_central(const Element& x) const {
  if (field_) return true;
  return x.quaternion().is_real();
}

std::vector<Element> DivisionRing::units() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "cannot enumerate quaternion units");
  std::vector<Element> u;
  u.reserve(field_->q - 1);
  for (std::uint32_t v = 1; v < field_->q; ++v) u.emplace_back(field_.get(), v);
  return u;
}

std::vector<Element> DivisionRing::elements() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "cannot enumerate quaternions");
  std::vector<Element> u;
  u.reserve(field_->q);
  for (std::uint32_t v = 0; v < field_->q; ++v) u.emplace_back(field_.get(), v);
  return u;
}

std::vector<Automorphism> DivisionRing::automorphisms() const {
  if (!field_) throw Error(Errc::InfiniteBackend, "cannot enumerate quaternion automorphisms");
  std::vector<Automorphism> a;
  for (std::uint32_t m = 0; m < field_->k; ++m) a.push_back(Automorphism::frobenius(field_.get(), m));
  return a;
}

Automorphism DivisionRing::identity() const {
  if (!field_) return Automorphism::conjugation(Quaternion{1});
  return Automorphism::frobenius(field_.get(), 0);
}

Automorphism DivisionRing::frobenius(std::uint32_t power) const {
  if (!field_) throw Error(Errc::MixedBackends, "Frobenius on quaternions");
  return Automorphism::frobenius(field_.get(), power);
}

bool operator==(const DivisionRing& a, const DivisionRing& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  return a.field_ == b.field_ || a.field_->same_field(*b.field_);
}

std::string DivisionRing::describe() const {
  if (!field_) return "rational quaternions";
  std::ostringstream os;
  os << "GF(" << field_->q << ") mod [";
  for (std::size_t t = 0; t < field_->modulus.size(); ++t) os << (t ? "," : "") << field_->modulus[t];
  os << ']';
  return os.str();
}

}  // namespace coeff
}  // namespace sqfree
