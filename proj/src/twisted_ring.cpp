#include "sqfree/twisted_ring.hpp"

#include <mutex>
#include <random>
#include <sstream>

#include "linalg.hpp"

namespace sqfree::ring {

namespace {

constexpr std::size_t kMaxReportedFailures = 16;

}  // namespace

struct TwistedRing::Impl {
  // Right factors that chain with a left pair: (right pair, triple, product pair).
  struct Step {
    int right, triple, out;
  };

  Semigroup s;
  DivisionRing d;
  TwoCocycle c;
  TwoCocycle input;
  GroupElement normalizer;
  std::vector<std::vector<Step>> steps;
  std::vector<Element> d_basis;
  std::vector<RingElement> prime_basis;

  std::once_flag units_once;
  std::vector<RingElement> units;
  std::exception_ptr units_error;

  Impl(Semigroup s_, DivisionRing d_, TwoCocycle c_, TwoCocycle input_, GroupElement h)
      : s(std::move(s_)), d(std::move(d_)), c(std::move(c_)), input(std::move(input_)), normalizer(std::move(h)) {
    steps.resize(s.num_pairs());
    for (std::size_t id = 0; id < s.num_pairs(); ++id) {
      const auto [i, j] = s.pair(static_cast<int>(id));
      for (int l = 0; l < s.size(); ++l)
        if (s.composes(i, j, l))
          steps[id].push_back({s.pair_index(j, l), s.triple_index(i, j, l), s.pair_index(i, l)});
    }
    d_basis = d.prime_basis();
    for (std::size_t id = 0; id < s.num_pairs(); ++id)
      for (const auto& b : d_basis) {
        RingElement e{std::vector<Element>(s.num_pairs(), d.zero())};
        e.coeffs[id] = b;
        prime_basis.push_back(std::move(e));
      }
  }
};

TwistedRing TwistedRing::from_cocycle(Semigroup s, DivisionRing d, TwoCocycle c) {
  auto t = cohom::normalize(s, d, c);
  TwistedRing r;
  r.impl_ = std::make_shared<Impl>(std::move(s), std::move(d), std::move(t.cocycle), std::move(c),
                                   std::move(t.witness));
  return r;
}

TwistedRing TwistedRing::raw(Semigroup s, DivisionRing d, TwoCocycle c) {
  if (c.alpha.size() != s.num_pairs() || c.xi.size() != s.num_triples())
    throw Error(Errc::InvalidInput, "cocycle does not match the semigroup");
  auto h = cohom::g_identity(s, d);
  TwistedRing r;
  r.impl_ = std::make_shared<Impl>(std::move(s), std::move(d), c, c, std::move(h));
  return r;
}

const Semigroup& TwistedRing::semigroup() const { return impl_->s; }
const DivisionRing& TwistedRing::coefficients() const { return impl_->d; }
const TwoCocycle& TwistedRing::cocycle() const { return impl_->c; }
const TwoCocycle& TwistedRing::input_cocycle() const { return impl_->input; }
const GroupElement& TwistedRing::normalizer() const { return impl_->normalizer; }

bool TwistedRing::same_ring(const TwistedRing& other) const {
  return impl_ == other.impl_ || (impl_->s == other.impl_->s && impl_->d == other.impl_->d && impl_->c == other.impl_->c);
}

RingElement TwistedRing::zero() const { return {std::vector<Element>(impl_->s.num_pairs(), impl_->d.zero())}; }

RingElement TwistedRing::one() const {
  auto out = zero();
  for (int i = 0; i < impl_->s.size(); ++i) out.coeffs[impl_->s.pair_index(i, i)] = impl_->d.one();
  return out;
}

RingElement TwistedRing::basis(int i, int j) const { return term(impl_->d.one(), i, j); }

RingElement TwistedRing::term(const Element& x, int i, int j) const {
  if (i < 0 || j < 0 || i >= impl_->s.size() || j >= impl_->s.size() || !impl_->s.has(i, j))
    throw Error(Errc::InvalidInput, "no basis element s" + sgrp::to_string({i, j}));
  auto out = zero();
  out.coeffs[impl_->s.pair_index(i, j)] = x;
  return out;
}

namespace {

void require_member(const TwistedRing& r, const RingElement& a) {
  if (a.coeffs.size() != r.semigroup().num_pairs())
    throw Error(Errc::MixedRings, "element does not belong to this ring");
}

}  // namespace

RingElement TwistedRing::add(const RingElement& a, const RingElement& b) const {
  require_member(*this, a);
  require_member(*this, b);
  auto out = a;
  for (std::size_t t = 0; t < out.coeffs.size(); ++t) out.coeffs[t] = out.coeffs[t] + b.coeffs[t];
  return out;
}

RingElement TwistedRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement TwistedRing::neg(const RingElement& a) const {
  require_member(*this, a);
  auto out = a;
  for (auto& x : out.coeffs) x = -x;
  return out;
}

RingElement TwistedRing::mul(const RingElement& a, const RingElement& b) const {
  require_member(*this, a);
  require_member(*this, b);
  auto out = zero();
  const auto& c = impl_->c;
  for (std::size_t p = 0; p < a.coeffs.size(); ++p) {
    if (a.coeffs[p].is_zero()) continue;
    // (x s_ij)(y s_jl) = x alpha_ij(y) xi_ijl s_il
    for (const auto& st : impl_->steps[p]) {
      const auto& y = b.coeffs[st.right];
      if (y.is_zero()) continue;
      out.coeffs[st.out] += a.coeffs[p] * c.alpha[p](y) * c.xi[st.triple];
    }
  }
  return out;
}

RingElement TwistedRing::scale(const Element& x, const RingElement& a) const {
  require_member(*this, a);
  auto out = a;
  for (auto& y : out.coeffs) y = x * y;
  return out;
}

bool TwistedRing::is_zero(const RingElement& a) const {
  require_member(*this, a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Element& x) { return x.is_zero(); });
}

std::size_t TwistedRing::prime_dimension() const { return impl_->prime_basis.size(); }
const std::vector<RingElement>& TwistedRing::prime_basis() const { return impl_->prime_basis; }

std::vector<Element> TwistedRing::prime_coordinates(const RingElement& a) const {
  require_member(*this, a);
  std::vector<Element> out;
  out.reserve(prime_dimension());
  for (const auto& x : a.coeffs)
    for (auto& y : impl_->d.coordinates(x)) out.push_back(std::move(y));
  return out;
}

RingElement TwistedRing::from_prime_coordinates(const std::vector<Element>& c) const {
  if (c.size() != prime_dimension()) throw Error(Errc::InvalidInput, "wrong number of prime coordinates");
  auto out = zero();
  const std::size_t k = impl_->d_basis.size();
  for (std::size_t t = 0; t < c.size(); ++t) out.coeffs[t / k] += c[t] * impl_->d_basis[t % k];
  return out;
}

std::string TwistedRing::to_string(const RingElement& a) const {
  require_member(*this, a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t p = 0; p < a.coeffs.size(); ++p) {
    if (a.coeffs[p].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const auto [i, j] = impl_->s.pair(static_cast<int>(p));
    os << "(" << a.coeffs[p].to_string() << ")s" << sgrp::to_string({i, j});
  }
  return first ? "0" : os.str();
}

const std::vector<RingElement>& TwistedRing::cached_units(const SearchBounds& bounds) const {
  std::call_once(impl_->units_once, [&] {
    try {
      impl_->units = ring::units(*this, bounds);
    } catch (...) {
      impl_->units_error = std::current_exception();
    }
  });
  if (impl_->units_error) std::rethrow_exception(impl_->units_error);
  return impl_->units;
}

// ---------------------------------------------------------------------------

AssocReport check_associativity(const TwistedRing& r, AssocMode mode, std::uint64_t seed, int samples) {
  const auto& s = r.semigroup();
  const auto& d = r.coefficients();
  AssocReport report;
  auto record = [&](std::vector<int> path, std::vector<Element> scalars, const RingElement& lhs,
                    const RingElement& rhs) {
    ++report.checked;
    if (lhs == rhs) return;
    ++report.failure_count;
    if (report.failures.size() < kMaxReportedFailures)
      report.failures.push_back({std::move(path), std::move(scalars), r.to_string(lhs), r.to_string(rhs)});
  };

  if (mode == AssocMode::ExhaustiveBasis) {
    const auto gens = d.generators();
    for (const auto& [i, j] : s.pairs())
      for (int k = 0; k < s.size(); ++k) {
        if (!s.has(j, k)) continue;
        for (int l = 0; l < s.size(); ++l) {
          if (!s.has(k, l)) continue;
          for (const auto& x : gens)
            for (const auto& y : gens)
              for (const auto& z : gens) {
                const auto a = r.term(x, i, j), b = r.term(y, j, k), c = r.term(z, k, l);
                record({i, j, k, l}, {x, y, z}, r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
              }
        }
      }
    return report;
  }

  std::mt19937_64 rng(seed);
  auto random_scalar = [&]() -> Element {
    if (d.is_finite()) {
      const auto all = d.elements();
      return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    }
    std::uniform_int_distribution<int> small(-3, 3);
    return d.quaternion(small(rng), small(rng), small(rng), small(rng));
  };
  auto random_element = [&] {
    auto e = r.zero();
    for (auto& x : e.coeffs) x = random_scalar();
    return e;
  };
  for (int t = 0; t < samples; ++t) {
    const auto a = random_element(), b = random_element(), c = random_element();
    std::vector<Element> scalars;
    for (const auto* e : {&a, &b, &c}) scalars.insert(scalars.end(), e->coeffs.begin(), e->coeffs.end());
    record({}, std::move(scalars), r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
  }
  return report;
}

std::vector<RingElement> elements(const TwistedRing& r, const SearchBounds& bounds) {
  const auto& d = r.coefficients();
  const auto field = d.elements();  // throws InfiniteBackend
  const std::size_t m = r.semigroup().num_pairs();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < m; ++t) {
    if (total > bounds.max_elements / field.size())
      throw Error(Errc::SearchBoundExceeded, "ring has more than " + std::to_string(bounds.max_elements) + " elements");
    total *= field.size();
  }
  std::vector<RingElement> out;
  out.reserve(total);
  std::vector<std::size_t> digit(m, 0);
  auto e = r.zero();
  for (std::uint64_t n = 0; n < total; ++n) {
    out.push_back(e);
    for (std::size_t t = m; t-- > 0;) {
      if (++digit[t] < field.size()) {
        e.coeffs[t] = field[digit[t]];
        break;
      }
      digit[t] = 0;
      e.coeffs[t] = field[0];
    }
  }
  return out;
}

std::vector<RingElement> idempotents(const TwistedRing& r, const SearchBounds& bounds) {
  std::vector<RingElement> out;
  for (const auto& e : elements(r, bounds))
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

namespace {

// Prime coordinates of a * b_t for every prime basis element b_t.
std::vector<detail::Vec> left_multiplication(const TwistedRing& r, const RingElement& a) {
  std::vector<detail::Vec> cols;
  for (const auto& b : r.prime_basis()) cols.push_back(r.prime_coordinates(r.mul(a, b)));
  return cols;
}

}  // namespace

bool is_unit(const TwistedRing& r, const RingElement& a) {
  // In a finite-dimensional algebra, a is a unit iff x -> ax is bijective.
  return detail::rank(left_multiplication(r, a)) == r.prime_dimension();
}

std::optional<RingElement> inverse(const TwistedRing& r, const RingElement& a) {
  const auto zero = r.coefficients().zero();
  auto x = detail::solve(left_multiplication(r, a), r.prime_coordinates(r.one()), zero);
  if (!x) return std::nullopt;
  auto b = r.from_prime_coordinates(*x);
  if (r.mul(b, a) != r.one()) return std::nullopt;
  return b;
}

std::vector<RingElement> units(const TwistedRing& r, const SearchBounds& bounds) {
  std::vector<RingElement> out;
  for (const auto& e : elements(r, bounds))
    if (is_unit(r, e)) out.push_back(e);
  return out;
}

std::optional<bool> is_primitive_idempotent(const TwistedRing& r, const RingElement& e, const SearchBounds& bounds) {
  const auto& d = r.coefficients();
  if (!d.is_finite() || d.degree() != 1 || d.characteristic() > 3) return std::nullopt;
  if (r.mul(e, e) != e) throw Error(Errc::InvalidInput, "not an idempotent");
  if (r.is_zero(e)) return false;
  for (const auto& f : idempotents(r, bounds)) {
    if (r.is_zero(f) || f == e) continue;
    if (r.mul(e, f) == f && r.mul(f, e) == f) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RingMap::RingMap(TwistedRing source, TwistedRing target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.prime_dimension())
    throw Error(Errc::InvalidInput, "a ring map needs one image per prime basis element");
  for (const auto& x : images_) require_member(target_, x);
  if (!(source_.coefficients() == target_.coefficients()))
    throw Error(Errc::MixedRings, "rings over different coefficients");
}

RingMap RingMap::identity(const TwistedRing& r) { return RingMap(r, r, r.prime_basis()); }

RingElement RingMap::operator()(const RingElement& a) const {
  const auto coords = source_.prime_coordinates(a);
  auto out = target_.zero();
  for (std::size_t t = 0; t < coords.size(); ++t)
    if (!coords[t].is_zero()) out = target_.add(out, target_.scale(coords[t], images_[t]));
  return out;
}

MapCheck RingMap::check() const {
  MapCheck out;
  std::vector<detail::Vec> cols;
  for (const auto& x : images_) cols.push_back(target_.prime_coordinates(x));
  out.additive_bijection =
      source_.prime_dimension() == target_.prime_dimension() && detail::rank(cols) == target_.prime_dimension();
  if (!out.additive_bijection) out.first_failure = "not bijective";

  out.multiplicative = true;
  const auto& basis = source_.prime_basis();
  for (std::size_t a = 0; a < basis.size() && out.multiplicative; ++a)
    for (std::size_t b = 0; b < basis.size() && out.multiplicative; ++b) {
      if (target_.mul(images_[a], images_[b]) == (*this)(source_.mul(basis[a], basis[b]))) continue;
      out.multiplicative = false;
      if (out.first_failure.empty())
        out.first_failure = "f(xy) != f(x)f(y) for x = " + source_.to_string(basis[a]) +
                            ", y = " + source_.to_string(basis[b]);
    }
  out.unital = (*this)(source_.one()) == target_.one();
  if (!out.unital && out.first_failure.empty()) out.first_failure = "f(1) != 1";
  return out;
}

std::optional<RingMap> RingMap::inverse() const {
  const auto zero = source_.coefficients().zero();
  std::vector<detail::Vec> cols;
  for (const auto& x : images_) cols.push_back(target_.prime_coordinates(x));
  if (source_.prime_dimension() != target_.prime_dimension() || detail::rank(cols) != target_.prime_dimension())
    return std::nullopt;
  std::vector<RingElement> back;
  for (const auto& b : target_.prime_basis()) {
    auto x = detail::solve(cols, target_.prime_coordinates(b), zero);
    if (!x) return std::nullopt;
    back.push_back(source_.from_prime_coordinates(*x));
  }
  return RingMap(target_, source_, std::move(back));
}

RingMap operator*(const RingMap& f, const RingMap& g) {
  if (!g.target().same_ring(f.source())) throw Error(Errc::MixedRings, "maps do not compose");
  std::vector<RingElement> images;
  for (const auto& x : g.images()) images.push_back(f(x));
  return RingMap(g.source(), f.target(), std::move(images));
}

RingMap witness_map(const TwistedRing& source, const TwistedRing& target, const GroupElement& g,
                    const SemigroupAutomorphism& phi) {
  const auto& s = source.semigroup();
  if (!(s == target.semigroup()) || !(source.coefficients() == target.coefficients()))
    throw Error(Errc::MixedRings, "witness map between rings over different data");
  if (phi.size() != s.size() || !sgrp::is_automorphism(s, phi))
    throw Error(Errc::InvalidInput, "phi is not an automorphism of S");
  if (g.mu.size() != static_cast<std::size_t>(s.size()) || g.eta.size() != s.num_pairs())
    throw Error(Errc::InvalidInput, "witness does not match the semigroup");
  const auto d_basis = source.coefficients().prime_basis();
  std::vector<RingElement> images;
  for (std::size_t id = 0; id < s.num_pairs(); ++id) {
    const auto [i, j] = s.pair(static_cast<int>(id));
    for (const auto& b : d_basis) images.push_back(target.term(g.mu[i](b) * g.eta[id], phi(i), phi(j)));
  }
  RingMap f(source, target, std::move(images));
  auto check = f.check();
  if (!check.ok()) throw Error(Errc::WitnessRejected, check.first_failure);
  return f;
}

RingMap iso_from_witness(const TwistedRing& r1, const TwistedRing& r2, const GroupElement& g,
                         const SemigroupAutomorphism& phi) {
  const auto& s = r1.semigroup();
  if (!(s == r2.semigroup())) throw Error(Errc::MixedRings, "rings over different semigroups");
  if (phi.size() != s.size() || !sgrp::is_automorphism(s, phi))
    throw Error(Errc::InvalidInput, "phi is not an automorphism of S");
  // stored_k = star(h_k, input_k), so stored2 = star(total, aut_act(phi, stored1)).
  const auto h1_inv = cohom::g_inv(s, r1.normalizer());
  const auto total = cohom::g_mul(s, cohom::g_mul(s, cohom::aut_act(s, phi, h1_inv), g), r2.normalizer());
  return witness_map(r2, r1, total, phi);
}

// ---------------------------------------------------------------------------

TensorComparison::TensorComparison(TwistedRing ring, std::vector<Element> center_generators)
    : ring_(std::move(ring)), center_generators_(std::move(center_generators)) {}

RingElement TensorComparison::image(const Element& x, const Element& k, int i, int j) const {
  if (!ring_.coefficients().is_central(k)) throw Error(Errc::InvalidInput, "k is not central");
  return ring_.term(x * k, i, j);
}

MapCheck TensorComparison::verify() const {
  const auto& s = ring_.semigroup();
  const auto& d = ring_.coefficients();
  const auto& zeta = ring_.cocycle();
  MapCheck out;
  // Both sides have dimension dim_K(D) |pairs| over K, and the image of
  // prime_basis (x) 1 (x) s_ij is the prime basis of the ring.
  out.additive_bijection = true;
  out.multiplicative = true;
  const auto gens = d.generators();
  for (const auto& [i, j] : s.pairs())
    for (int l = 0; l < s.size() && out.multiplicative; ++l) {
      if (!s.has(j, l)) continue;
      for (const auto& x : gens)
        for (const auto& k : center_generators_)
          for (const auto& y : gens)
            for (const auto& k2 : center_generators_) {
              // (x (x) k s_ij)(y (x) k2 s_jl) = xy (x) k k2 zeta_ijl s_il
              RingElement lhs = s.composes(i, j, l) ? image(x * y, k * k2 * zeta.x(s, i, j, l), i, l) : ring_.zero();
              RingElement rhs = ring_.mul(image(x, k, i, j), image(y, k2, j, l));
              if (lhs == rhs) continue;
              if (out.multiplicative)
                out.first_failure = "tensor product not preserved at s" + sgrp::to_string({i, j, l});
              out.multiplicative = false;
            }
    }
  auto one = ring_.zero();
  for (int i = 0; i < s.size(); ++i) one = ring_.add(one, image(d.one(), d.one(), i, i));
  out.unital = one == ring_.one();
  return out;
}

TensorComparison tensor_ring(const Semigroup& s, const DivisionRing& d, const TwoCocycle& zeta) {
  if (zeta.alpha.size() != s.num_pairs() || zeta.xi.size() != s.num_triples())
    throw Error(Errc::InvalidInput, "cocycle does not match the semigroup");
  for (const auto& a : zeta.alpha)
    if (!a.is_identity()) throw Error(Errc::InvalidInput, "tensor rings need identity automorphisms");
  for (const auto& x : zeta.xi)
    if (!d.is_central(x)) throw Error(Errc::NonCentralXi, x.to_string() + " is not central");
  auto report = cohom::verify_two_cocycle(s, d, zeta);
  if (!report.ok()) throw Error(Errc::InvalidCocycle, "zeta fails " + report.violations.front().identity);
  std::vector<Element> center;
  if (d.is_finite())
    center = d.generators();
  else
    center = {d.one(), d.from_int(2)};
  return TensorComparison(TwistedRing::raw(s, d, zeta), std::move(center));
}

std::optional<GroupElement> is_d_algebra(const TwistedRing& r, const SearchBounds& bounds) {
  return cohom::d_algebra_witness(r.semigroup(), r.coefficients(), r.input_cocycle(), bounds);
}

}  // namespace sqfree::ring
