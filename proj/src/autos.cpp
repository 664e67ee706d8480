#include "sqfree/autos.hpp"

#include <algorithm>
#include <set>

#include "linalg.hpp"

namespace sqfree::autos {

using coeff::Element;
using ring::MapCheck;

namespace {

void require_finite(const TwistedRing& r) {
  if (!r.coefficients().is_finite()) throw Error(Errc::InfiniteBackend, "automorphism searches need a finite field");
}

RingElement sum(const TwistedRing& r, const std::vector<RingElement>& xs) {
  auto out = r.zero();
  for (const auto& x : xs) out = r.add(out, x);
  return out;
}

std::size_t dimension(const TwistedRing& r, const std::vector<RingElement>& xs) {
  std::vector<detail::Vec> rows;
  for (const auto& x : xs) rows.push_back(r.prime_coordinates(x));
  return detail::rank(std::move(rows));
}

// All elements of the prime-field span of xs.
std::vector<RingElement> span(const TwistedRing& r, const std::vector<RingElement>& xs) {
  std::vector<detail::Vec> rows;
  for (const auto& x : xs) rows.push_back(r.prime_coordinates(x));
  const auto basis = detail::rref(std::move(rows)).rows;
  const auto& d = r.coefficients();
  std::vector<Element> scalars;
  for (std::uint32_t t = 0; t < d.characteristic(); ++t) scalars.push_back(d.from_int(t));
  std::vector<RingElement> out{r.zero()};
  for (const auto& row : basis) {
    const auto v = r.from_prime_coordinates(row);
    std::vector<RingElement> next;
    next.reserve(out.size() * scalars.size());
    for (const auto& x : out)
      for (const auto& c : scalars) next.push_back(r.add(x, r.scale(c, v)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The corner y R z.
std::vector<RingElement> corner(const TwistedRing& r, const RingElement& y, const RingElement& z) {
  std::vector<RingElement> gens;
  for (const auto& b : r.prime_basis()) gens.push_back(r.mul(y, r.mul(b, z)));
  return span(r, gens);
}

struct Shape {
  std::size_t corner, left, right;  // dims of yRy, Ry, yR
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape(const TwistedRing& r, const RingElement& y) {
  std::vector<RingElement> yry, ry, yr;
  for (const auto& b : r.prime_basis()) {
    yry.push_back(r.mul(y, r.mul(b, y)));
    ry.push_back(r.mul(b, y));
    yr.push_back(r.mul(y, b));
  }
  return {dimension(r, yry), dimension(r, ry), dimension(r, yr)};
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_)
      throw Error(Errc::SearchBoundExceeded, "Aut R search exceeded " + std::to_string(limit_) + " nodes");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Completes an assignment of idempotent images to full automorphisms.
class ArrowSearch {
 public:
  ArrowSearch(const TwistedRing& r, const std::vector<RingElement>& y, NodeBudget& budget)
      : r_(r), s_(r.semigroup()), d_(r.coefficients()), y_(y), budget_(budget) {}

  void run(std::vector<RingMap>& out) {
    const int n = s_.size();
    // Field images: roots of the modulus inside each corner y_i R y_i.
    roots_.resize(n);
    for (int i = 0; i < n; ++i) {
      for (const auto& z : corner(r_, y_[i], y_[i])) {
        budget_.tick();
        if (is_root(z, y_[i])) roots_[i].push_back(z);
      }
      if (roots_[i].empty()) return;
    }
    arrows_.clear();
    for (std::size_t p = 0; p < s_.num_pairs(); ++p)
      if (s_.pair(static_cast<int>(p)).i != s_.pair(static_cast<int>(p)).j) arrows_.push_back(static_cast<int>(p));
    arrow_cands_.assign(s_.num_pairs(), {});
    for (int p : arrows_) {
      const auto [i, j] = s_.pair(p);
      for (auto& x : corner(r_, y_[i], y_[j]))
        if (!r_.is_zero(x)) arrow_cands_[p].push_back(std::move(x));
      if (arrow_cands_[p].empty()) return;
    }
    field_.assign(n, {});
    choose_field(0, out);
  }

 private:
  bool is_root(const RingElement& z, const RingElement& unit) const {
    auto value = r_.zero();
    auto power = unit;
    for (auto m : d_.modulus()) {
      value = r_.add(value, r_.scale(d_.from_int(m), power));
      power = r_.mul(power, z);
    }
    return r_.is_zero(value);
  }

  // F_i(x) = sum_t c_t(x) z_i^t, the image of x e_i.
  RingElement field_image(int i, const Element& x) const {
    const auto c = d_.coordinates(x);
    auto out = r_.zero();
    for (std::size_t t = 0; t < c.size(); ++t) out = r_.add(out, r_.scale(c[t], field_[i][t]));
    return out;
  }

  void choose_field(int i, std::vector<RingMap>& out) {
    if (i == s_.size()) {
      images_.assign(s_.num_pairs(), std::nullopt);
      for (int v = 0; v < s_.size(); ++v) images_[s_.pair_index(v, v)] = y_[v];
      choose_arrow(0, out);
      return;
    }
    for (const auto& z : roots_[i]) {
      budget_.tick();
      field_[i].assign(1, y_[i]);
      for (std::uint32_t t = 1; t < d_.degree(); ++t) field_[i].push_back(r_.mul(field_[i].back(), z));
      choose_field(i + 1, out);
    }
  }

  bool consistent(int p) const {
    const auto [i, j] = s_.pair(p);
    const auto& fp = *images_[p];
    // s_ij x = alpha_ij(x) s_ij on the field generator.
    const auto gen = d_.generator();
    if (r_.mul(fp, field_image(j, gen)) != r_.mul(field_image(i, r_.cocycle().alpha[p](gen)), fp)) return false;
    // Products with assigned arrows on either side.
    for (int q : arrows_) {
      if (!images_[q]) continue;
      const auto [a, b] = s_.pair(q);
      if (b == i && !product_ok(a, i, j)) return false;
      if (a == j && !product_ok(i, j, b)) return false;
    }
    return true;
  }

  bool product_ok(int i, int j, int l) const {
    const auto& x = *images_[s_.pair_index(i, j)];
    const auto& y = *images_[s_.pair_index(j, l)];
    const auto prod = r_.mul(x, y);
    if (!s_.composes(i, j, l)) return r_.is_zero(prod);
    const auto& target = images_[s_.pair_index(i, l)];
    if (!target) return true;
    return prod == r_.mul(field_image(i, r_.cocycle().x(s_, i, j, l)), *target);
  }

  void choose_arrow(std::size_t t, std::vector<RingMap>& out) {
    if (t == arrows_.size()) {
      emit(out);
      return;
    }
    const int p = arrows_[t];
    for (const auto& x : arrow_cands_[p]) {
      budget_.tick();
      images_[p] = x;
      if (consistent(p)) choose_arrow(t + 1, out);
    }
    images_[p] = std::nullopt;
  }

  void emit(std::vector<RingMap>& out) {
    std::vector<RingElement> imgs;
    const auto basis = d_.prime_basis();
    for (std::size_t p = 0; p < s_.num_pairs(); ++p) {
      const int i = s_.pair(static_cast<int>(p)).i;
      for (const auto& b : basis) imgs.push_back(r_.mul(field_image(i, b), *images_[p]));
    }
    RingMap f(r_, r_, std::move(imgs));
    if (f.check().ok()) out.push_back(std::move(f));
  }

  const TwistedRing& r_;
  const Semigroup& s_;
  const DivisionRing& d_;
  const std::vector<RingElement>& y_;
  NodeBudget& budget_;
  std::vector<std::vector<RingElement>> roots_;
  std::vector<std::vector<RingElement>> field_;  // powers of the chosen root per idempotent
  std::vector<int> arrows_;
  std::vector<std::vector<RingElement>> arrow_cands_;
  std::vector<std::optional<RingElement>> images_;
};

void choose_idempotents(const TwistedRing& r, const std::vector<std::vector<RingElement>>& cands, std::size_t i,
                        std::vector<RingElement>& chosen, NodeBudget& budget, std::vector<RingMap>& out) {
  if (i == cands.size()) {
    if (sum(r, chosen) != r.one()) return;
    ArrowSearch(r, chosen, budget).run(out);
    return;
  }
  for (const auto& y : cands[i]) {
    budget.tick();
    bool orthogonal = true;
    for (const auto& x : chosen)
      if (!r.is_zero(r.mul(x, y)) || !r.is_zero(r.mul(y, x))) {
        orthogonal = false;
        break;
      }
    if (!orthogonal) continue;
    chosen.push_back(y);
    choose_idempotents(r, cands, i + 1, chosen, budget, out);
    chosen.pop_back();
  }
}

std::size_t coset_of(const OutResult& out, const RingMap& f) {
  auto it = std::lower_bound(out.automorphisms.begin(), out.automorphisms.end(), f);
  if (it == out.automorphisms.end() || !(*it == f)) throw std::logic_error("map is not in the computed Aut R");
  return out.coset[static_cast<std::size_t>(it - out.automorphisms.begin())];
}

}  // namespace

RingMap sigma(const TwistedRing& r, const GroupElement& g) {
  const auto& s = r.semigroup();
  if (!cohom::verify_one_cocycle(s, r.coefficients(), r.cocycle(), g))
    throw Error(Errc::NotAOneCocycle, "(mu, eta) is not a 1-cocycle for this ring");
  return ring::witness_map(r, r, g, SemigroupAutomorphism::identity(s.size()));
}

RingMap tau(const TwistedRing& r, const InnerWitness& w) {
  const auto sx = sum(r, w.x), sy = sum(r, w.y);
  if (r.mul(sx, sy) != r.one() || r.mul(sy, sx) != r.one())
    throw Error(Errc::NotInvertible, "sum X and sum Y are not inverse to each other");
  std::vector<RingElement> images;
  for (const auto& b : r.prime_basis()) images.push_back(r.mul(sy, r.mul(b, sx)));
  return RingMap(r, r, std::move(images));
}

InnerWitness unit_witness(const TwistedRing& r, const RingElement& u) {
  auto inv = ring::inverse(r, u);
  if (!inv) throw Error(Errc::NotInvertible, r.to_string(u) + " is not a unit");
  return {{u}, {*inv}};
}

RingMap conjugation(const TwistedRing& r, const RingElement& u) { return tau(r, unit_witness(r, u)); }

std::optional<InnerWitness> is_inner(const TwistedRing& r, const RingMap& f, const SearchBounds& bounds) {
  require_finite(r);
  if (!f.source().same_ring(r) || !f.target().same_ring(r)) throw Error(Errc::MixedRings, "not an endomorphism of R");
  const auto& basis = r.prime_basis();
  // f(a) = u^{-1} a u  <=>  u f(a) = a u.
  for (const auto& u : r.cached_units(bounds)) {
    bool ok = true;
    for (std::size_t t = 0; t < basis.size() && ok; ++t) ok = r.mul(u, f.images()[t]) == r.mul(basis[t], u);
    if (ok) return unit_witness(r, u);
  }
  return std::nullopt;
}

std::vector<RingMap> aut_r(const TwistedRing& r, const SearchBounds& bounds) {
  require_finite(r);
  const auto& s = r.semigroup();
  if (!cohom::is_normal(s, r.cocycle())) throw Error(Errc::InvalidInput, "Aut R search needs normal structure constants");
  const auto idem = ring::idempotents(r, bounds);
  std::vector<std::vector<RingElement>> cands(s.size());
  for (int i = 0; i < s.size(); ++i) {
    const auto want = shape(r, r.basis(i, i));
    for (const auto& y : idem)
      if (!r.is_zero(y) && shape(r, y) == want) cands[i].push_back(y);
  }
  NodeBudget budget(bounds.max_search);
  std::vector<RingMap> out;
  std::vector<RingElement> chosen;
  choose_idempotents(r, cands, 0, chosen, budget, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OutResult out_r(const TwistedRing& r, const SearchBounds& bounds) {
  OutResult out;
  out.automorphisms = aut_r(r, bounds);
  std::vector<RingMap> rep_inverses;
  for (const auto& f : out.automorphisms) {
    std::size_t c = 0;
    for (; c < out.representatives.size(); ++c)
      if (is_inner(r, rep_inverses[c] * f, bounds)) break;
    if (c == out.representatives.size()) {
      out.representatives.push_back(f);
      rep_inverses.push_back(*f.inverse());
    }
    out.coset.push_back(c);
  }
  out.order = out.representatives.size();
  return out;
}

SemigroupAutomorphism phi_map(const TwistedRing& r, const RingMap& f, const SearchBounds& bounds) {
  require_finite(r);
  const auto& s = r.semigroup();
  const int n = s.size();
  const auto labels = sgrp::block_labels(s);
  std::vector<RingElement> fe;
  for (int i = 0; i < n; ++i) fe.push_back(f(r.basis(i, i)));
  // (tau_u f)(e_i) = u^{-1} f(e_i) u = e_j  <=>  f(e_i) u = u e_j.
  for (const auto& u : r.cached_units(bounds)) {
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const auto lhs = r.mul(fe[i], u);
      ok = false;
      for (int j = 0; j < n; ++j) {
        if (used[j] || labels[j] != labels[i] || lhs != r.mul(u, r.basis(j, j))) continue;
        perm[i] = j;
        used[j] = 1;
        ok = true;
        break;
      }
    }
    if (!ok) continue;
    SemigroupAutomorphism phi(perm);
    if (sgrp::is_automorphism(s, phi)) return phi;
  }
  throw Error(Errc::NormalizationFailed, "no inner correction maps E onto E");
}

LambdaReport lambda_check(const TwistedRing& r, const SearchBounds& bounds) {
  require_finite(r);
  const auto h = cohom::h1(r.semigroup(), r.coefficients(), r.cocycle(), bounds);
  LambdaReport report;
  for (const auto& z : h.z1) {
    ++report.checked;
    const bool inner = is_inner(r, sigma(r, z), bounds).has_value();
    const bool in_b1 = std::binary_search(h.b1.begin(), h.b1.end(), z);
    if (inner != in_b1) report.violations.push_back(z);
  }
  return report;
}

RingMap section(const TwistedRing& r, const SemigroupAutomorphism& phi) {
  const auto& s = r.semigroup();
  if (!(r.cocycle() == cohom::trivial_cocycle(s, r.coefficients())))
    throw Error(Errc::InvalidInput, "the section is defined on the ring with trivial cocycle");
  return ring::witness_map(r, r, cohom::g_identity(s, r.coefficients()), phi);
}

SesReport verify_ses(const TwistedRing& input, const SearchBounds& bounds) {
  require_finite(input);
  const auto& s = input.semigroup();
  const auto& d = input.coefficients();
  const auto c = cohom::trivialize_on_blocks(s, d, input.input_cocycle()).cocycle;
  const auto r = TwistedRing::from_cocycle(s, d, c);

  SesReport rep;
  const auto h = cohom::h1(s, d, c, bounds);
  const auto stab = cohom::stabilizer(s, d, c, bounds, true);
  rep.h1_order = h.order;
  rep.stab_order = stab.size();
  rep.stab_full_order = cohom::stabilizer(s, d, c, bounds, false).size();
  const auto all_auts = sgrp::automorphisms(s, bounds.max_aut_n);
  rep.aut_s_order = all_auts.size();
  rep.aut0_s_order =
      std::count_if(all_auts.begin(), all_auts.end(), [&](const auto& a) { return sgrp::is_normal(s, a); });

  const auto out = out_r(r, bounds);
  rep.out_order = out.order;
  rep.order_identity = rep.out_order == rep.h1_order * rep.stab_order;

  // Lambda: cosets of sigma over the H^1 representatives.
  std::set<std::size_t> lambda_image;
  for (const auto& z : h.representatives) lambda_image.insert(coset_of(out, sigma(r, z)));
  rep.lambda_injective = lambda_image.size() == h.representatives.size() && lambda_check(r, bounds).ok();

  // Phi on every automorphism, compared with its coset representative.
  std::vector<SemigroupAutomorphism> phis;
  for (const auto& f : out.automorphisms) phis.push_back(phi_map(r, f, bounds));
  std::vector<SemigroupAutomorphism> rep_phi(out.order);
  for (std::size_t t = 0; t < out.automorphisms.size(); ++t)
    if (out.automorphisms[t] == out.representatives[out.coset[t]]) rep_phi[out.coset[t]] = phis[t];
  rep.phi_well_defined = true;
  for (std::size_t t = 0; t < phis.size(); ++t)
    if (!(phis[t] == rep_phi[out.coset[t]])) rep.phi_well_defined = false;

  std::set<std::size_t> kernel;
  for (std::size_t c2 = 0; c2 < out.order; ++c2)
    if (rep_phi[c2].is_identity()) kernel.insert(c2);
  rep.lambda_image_is_kernel = kernel == lambda_image;
  rep.phi_image_is_stab = std::set<SemigroupAutomorphism>(rep_phi.begin(), rep_phi.end()) ==
                          std::set<SemigroupAutomorphism>(stab.begin(), stab.end());

  // Splitting: the basis permutations give a homomorphic section of Phi.
  const auto trivial = cohom::trivial_cocycle(s, d);
  if (cohom::cohomologous(s, d, c, trivial, bounds)) {
    const auto t = TwistedRing::from_cocycle(s, d, trivial);
    const auto out_t = c == trivial ? out : out_r(t, bounds);
    std::vector<SemigroupAutomorphism> aut0;
    for (const auto& a : all_auts)
      if (sgrp::is_normal(s, a)) aut0.push_back(a);
    bool ok = true;
    std::set<std::size_t> cosets;
    for (const auto& a : aut0) {
      const auto sa = section(t, a);
      ok = ok && phi_map(t, sa, bounds) == a;
      cosets.insert(coset_of(out_t, sa));
      for (const auto& b : aut0) ok = ok && section(t, a) * section(t, b) == section(t, a * b);
    }
    rep.splits = ok && cosets.size() == aut0.size();
  }
  return rep;
}

}  // namespace sqfree::autos
