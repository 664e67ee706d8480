#include "sqfree/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sqfree::cohom {

namespace {

std::vector<int> drop_vertex(const std::vector<int>& path, std::size_t t) {
  std::vector<int> face;
  face.reserve(path.size() - 1);
  for (std::size_t v = 0; v < path.size(); ++v)
    if (v != t) face.push_back(path[v]);
  return face;
}

void require_commutative(const DivisionRing& d) {
  if (!d.is_commutative())
    throw Error(Errc::NonCommutativeCoefficients, "abelian cochains need commutative coefficients");
}

void require_finite(const DivisionRing& d) {
  if (!d.is_finite()) throw Error(Errc::InfiniteBackend, "search requires a finite-field backend");
}

void require_valid(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c) {
  auto report = verify_two_cocycle(s, d, c);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::InvalidCocycle, v.identity + " fails at " + sgrp::to_string(v.tuple));
  }
}

void require_shape(const Semigroup& s, const GroupElement& g) {
  if (g.mu.size() != static_cast<std::size_t>(s.size()) || g.eta.size() != s.num_pairs())
    throw Error(Errc::InvalidInput, "group element does not match the semigroup");
  for (const auto& e : g.eta)
    if (e.is_zero()) throw Error(Errc::InvalidInput, "eta takes the value 0");
}

// Product of finitely many big counts, saturating at limit + 1.
std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t t = 0; t < exp; ++t) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

// --- abelian cochains -------------------------------------------------------

const Element& Cochain::operator()(const std::vector<int>& path) const {
  auto it = values.find(path);
  if (it == values.end()) throw Error(Errc::InvalidInput, "cochain undefined at " + sgrp::to_string(path));
  return it->second;
}

Cochain constant_cochain(const Semigroup& s, const DivisionRing& d, int m, const Element& value) {
  if (value.is_zero() || !d.contains(value)) throw Error(Errc::InvalidInput, "cochain values must be nonzero elements of D");
  Cochain c;
  c.m = m;
  for (auto& path : s.paths(m)) c.values.emplace(std::move(path), value);
  return c;
}

Cochain boundary(const Semigroup& s, const DivisionRing& d, const Cochain& phi) {
  require_commutative(d);
  if (phi.m < 0 || phi.m > 3) throw Error(Errc::InvalidInput, "boundary degree must be in 0..3");
  Cochain out;
  out.m = phi.m + 1;
  for (auto& path : s.paths(out.m)) {
    Element v = d.one();
    for (std::size_t t = 0; t < path.size(); ++t) {
      const Element& f = phi(drop_vertex(path, t));
      v = (t % 2 == 0) ? v * f : v / f;
    }
    out.values.emplace(std::move(path), v);
  }
  return out;
}

bool is_abelian_cocycle(const Semigroup& s, const DivisionRing& d, const Cochain& phi) {
  auto b = boundary(s, d, phi);
  return std::all_of(b.values.begin(), b.values.end(), [](const auto& kv) { return kv.second.is_one(); });
}

std::optional<Cochain> abelian_coboundary_preimage(const Semigroup& s, const DivisionRing& d, const Cochain& phi,
                                                   std::uint64_t limit) {
  require_commutative(d);
  require_finite(d);
  if (phi.m < 1 || phi.m > 2) throw Error(Errc::InvalidInput, "coboundary search supports degrees 1 and 2");
  const auto domain = s.paths(phi.m - 1);
  const auto units = d.units();
  if (capped_power(units.size(), domain.size(), limit) > limit)
    throw Error(Errc::SearchBoundExceeded, "coboundary search space exceeds the limit");

  std::vector<std::size_t> digit(domain.size(), 0);
  Cochain psi;
  psi.m = phi.m - 1;
  while (true) {
    psi.values.clear();
    for (std::size_t t = 0; t < domain.size(); ++t) psi.values.emplace(domain[t], units[digit[t]]);
    if (boundary(s, d, psi) == phi) return psi;
    std::size_t t = 0;
    while (t < digit.size() && ++digit[t] == units.size()) digit[t++] = 0;
    if (t == digit.size()) return std::nullopt;
  }
}

// --- 2-cocycles ---------------------------------------------------------------

TwoCocycle trivial_cocycle(const Semigroup& s, const DivisionRing& d) {
  return {std::vector<Automorphism>(s.num_pairs(), d.identity()), std::vector<Element>(s.num_triples(), d.one())};
}

CocycleReport verify_two_cocycle(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c) {
  CocycleReport report;
  if (c.alpha.size() != s.num_pairs() || c.xi.size() != s.num_triples()) {
    report.violations.push_back({"shape", {}, "", "alpha/xi not total on support/comp"});
    return report;
  }
  for (std::size_t t = 0; t < c.xi.size(); ++t) {
    const auto& tr = s.triple(static_cast<int>(t));
    if (!d.contains(c.xi[t]))
      report.violations.push_back({"shape", {tr.i, tr.j, tr.k}, c.xi[t].to_string(), "element of another backend"});
    else if (c.xi[t].is_zero())
      report.violations.push_back({"xi-nonzero", {tr.i, tr.j, tr.k}, "0", "nonzero"});
  }
  for (std::size_t t = 0; t < c.alpha.size(); ++t) {
    const auto& pr = s.pair(static_cast<int>(t));
    const bool fits = d.is_finite() ? c.alpha[t].frobenius_power().has_value() : c.alpha[t].conjugator() != nullptr;
    if (!fits) report.violations.push_back({"shape", {pr.i, pr.j}, c.alpha[t].to_string(), "automorphism of another backend"});
  }
  if (!report.ok()) return report;

  for (const auto& p : s.paths(3)) {
    const int i = p[0], j = p[1], k = p[2], l = p[3];
    Element lhs = c.a(s, i, j)(c.x(s, j, k, l)) * c.x(s, i, j, l);
    Element rhs = c.x(s, i, j, k) * c.x(s, i, k, l);
    if (lhs != rhs) report.violations.push_back({"xi-cocycle", p, lhs.to_string(), rhs.to_string()});
  }
  for (const auto& p : s.paths(2)) {
    const int i = p[0], j = p[1], k = p[2];
    Automorphism lhs = c.a(s, i, j) * c.a(s, j, k);
    Automorphism rhs = coeff::inner(c.x(s, i, j, k)) * c.a(s, i, k);
    if (lhs != rhs) report.violations.push_back({"alpha-composition", p, lhs.to_string(), rhs.to_string()});
  }
  return report;
}

bool is_normal(const Semigroup& s, const TwoCocycle& c) {
  for (int i = 0; i < s.size(); ++i)
    if (!c.x(s, i, i, i).is_one()) return false;
  return true;
}

bool is_trivial_on_blocks(const Semigroup& s, const TwoCocycle& c) {
  for (const auto& cls : sgrp::sim_classes(s))
    for (int j : cls)
      for (int k : cls) {
        if (!c.a(s, j, k).is_identity()) return false;
        for (int l : cls)
          if (!c.x(s, j, k, l).is_one()) return false;
      }
  return true;
}

// --- G(S,D) ---------------------------------------------------------------------

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.mu != b.mu) return std::lexicographical_compare(a.mu.begin(), a.mu.end(), b.mu.begin(), b.mu.end());
  return std::lexicographical_compare(a.eta.begin(), a.eta.end(), b.eta.begin(), b.eta.end());
}

GroupElement g_identity(const Semigroup& s, const DivisionRing& d) {
  return {std::vector<Automorphism>(s.size(), d.identity()), std::vector<Element>(s.num_pairs(), d.one())};
}

bool is_identity(const GroupElement& g) {
  return std::all_of(g.mu.begin(), g.mu.end(), [](const Automorphism& a) { return a.is_identity(); }) &&
         std::all_of(g.eta.begin(), g.eta.end(), [](const Element& e) { return e.is_one(); });
}

GroupElement g_mul(const Semigroup& s, const GroupElement& a, const GroupElement& b) {
  require_shape(s, a);
  require_shape(s, b);
  GroupElement r;
  r.mu.reserve(a.mu.size());
  for (std::size_t i = 0; i < a.mu.size(); ++i) r.mu.push_back(a.mu[i] * b.mu[i]);
  r.eta.reserve(a.eta.size());
  for (std::size_t id = 0; id < a.eta.size(); ++id) {
    const int i = s.pair(static_cast<int>(id)).i;
    r.eta.push_back(a.mu[i](b.eta[id]) * a.eta[id]);
  }
  return r;
}

GroupElement g_inv(const Semigroup& s, const GroupElement& a) {
  require_shape(s, a);
  GroupElement r;
  for (const auto& m : a.mu) r.mu.push_back(m.inverse());
  for (std::size_t id = 0; id < a.eta.size(); ++id) {
    const int i = s.pair(static_cast<int>(id)).i;
    r.eta.push_back(r.mu[i](a.eta[id].inverse()));
  }
  return r;
}

TwoCocycle star_unchecked(const Semigroup& s, const GroupElement& g, const TwoCocycle& c) {
  require_shape(s, g);
  std::vector<Automorphism> mu_inv;
  for (const auto& m : g.mu) mu_inv.push_back(m.inverse());
  TwoCocycle r;
  r.alpha.reserve(c.alpha.size());
  for (std::size_t id = 0; id < c.alpha.size(); ++id) {
    const auto [i, j] = s.pair(static_cast<int>(id));
    r.alpha.push_back(mu_inv[i] * coeff::inner(g.eta[id]) * c.alpha[id] * g.mu[j]);
  }
  r.xi.reserve(c.xi.size());
  for (std::size_t id = 0; id < c.xi.size(); ++id) {
    const auto [i, j, k] = s.triple(static_cast<int>(id));
    const int ij = s.pair_index(i, j), jk = s.pair_index(j, k), ik = s.pair_index(i, k);
    r.xi.push_back(mu_inv[i](g.eta[ij] * c.alpha[ij](g.eta[jk]) * c.xi[id] * g.eta[ik].inverse()));
  }
  return r;
}

TwoCocycle star(const Semigroup& s, const DivisionRing& d, const GroupElement& g, const TwoCocycle& c) {
  require_valid(s, d, c);
  return star_unchecked(s, g, c);
}

Transformed normalize(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c) {
  require_valid(s, d, c);
  Transformed out{c, g_identity(s, d)};
  // One step already suffices; the loop guards against a bad witness.
  for (int round = 0; round < 4 && !is_normal(s, out.cocycle); ++round) {
    GroupElement step = g_identity(s, d);
    for (int i = 0; i < s.size(); ++i) step.eta[s.pair_index(i, i)] = out.cocycle.x(s, i, i, i).inverse();
    out.cocycle = star_unchecked(s, step, out.cocycle);
    out.witness = g_mul(s, out.witness, step);
  }
  if (!is_normal(s, out.cocycle)) throw Error(Errc::InvalidCocycle, "normalization did not converge");
  return out;
}

Transformed trivialize_on_blocks(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c) {
  Transformed out = normalize(s, d, c);
  const TwoCocycle& cn = out.cocycle;
  GroupElement g = g_identity(s, d);
  for (const auto& cls : sgrp::sim_classes(s)) {
    if (cls.size() < 2) continue;
    const int b = cls.front();
    for (int j : cls) {
      const Automorphism back = cn.a(s, b, j).inverse();
      g.mu[j] = back;
      for (int k : cls) g.eta[s.pair_index(j, k)] = back(cn.x(s, b, j, k).inverse());
    }
  }
  out.cocycle = star_unchecked(s, g, cn);
  out.witness = g_mul(s, out.witness, g);
  if (!is_trivial_on_blocks(s, out.cocycle))
    throw Error(Errc::InvalidCocycle, "block trivialization failed; is the semigroup valid?");
  return out;
}

TwoCocycle aut_act(const Semigroup& s, const SemigroupAutomorphism& phi, const TwoCocycle& c) {
  if (phi.size() != s.size()) throw Error(Errc::InvalidInput, "automorphism has the wrong degree");
  TwoCocycle r;
  for (const auto& p : s.pairs()) r.alpha.push_back(c.a(s, phi(p.i), phi(p.j)));
  for (const auto& t : s.triples()) r.xi.push_back(c.x(s, phi(t.i), phi(t.j), phi(t.k)));
  return r;
}

GroupElement aut_act(const Semigroup& s, const SemigroupAutomorphism& phi, const GroupElement& g) {
  if (phi.size() != s.size()) throw Error(Errc::InvalidInput, "automorphism has the wrong degree");
  GroupElement r;
  for (int i = 0; i < s.size(); ++i) r.mu.push_back(g.mu[phi(i)]);
  for (const auto& p : s.pairs()) r.eta.push_back(g.eta[s.pair_index(phi(p.i), phi(p.j))]);
  return r;
}

// --- witness search -------------------------------------------------------------

namespace {

// All mu with mu_i beta_ij mu_j^{-1} = alpha_ij (inner automorphisms are
// trivial over a field). mu is propagated along a spanning forest from
// one free choice per connected component.
std::vector<std::vector<Automorphism>> solve_mu(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                                const TwoCocycle& c2) {
  const int n = s.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& p : s.pairs())
    if (p.i != p.j) {
      adj[p.i].push_back(p.j);
      adj[p.j].push_back(p.i);
    }
  const auto gal = d.automorphisms();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> order;  // BFS order per component
  // Roots are the largest indices, so the first witness fixes the sinks.
  for (int r = n - 1; r >= 0; --r) {
    if (component[r] >= 0) continue;
    const int cid = static_cast<int>(order.size());
    order.emplace_back();
    std::deque<int> queue{r};
    component[r] = cid;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      order[cid].push_back(i);
      for (int j : adj[i])
        if (component[j] < 0) {
          component[j] = cid;
          queue.push_back(j);
        }
    }
  }

  // Per component, the consistent assignments.
  std::vector<std::vector<std::vector<Automorphism>>> options(order.size());
  for (std::size_t cid = 0; cid < order.size(); ++cid) {
    for (const auto& root : gal) {
      std::vector<Automorphism> mu(n, d.identity());
      std::vector<char> known(n, 0);
      mu[order[cid].front()] = root;
      known[order[cid].front()] = 1;
      for (int i : order[cid]) {
        for (int j : adj[i]) {
          if (known[j]) continue;
          if (s.has(i, j)) {
            const int id = s.pair_index(i, j);
            mu[j] = c1.alpha[id].inverse() * mu[i] * c2.alpha[id];
          } else {
            const int id = s.pair_index(j, i);
            mu[j] = c1.alpha[id] * mu[i] * c2.alpha[id].inverse();
          }
          known[j] = 1;
        }
      }
      bool ok = true;
      for (std::size_t id = 0; id < s.num_pairs() && ok; ++id) {
        const auto [i, j] = s.pair(static_cast<int>(id));
        if (component[i] != static_cast<int>(cid)) continue;
        ok = mu[i] * c2.alpha[id] * mu[j].inverse() == c1.alpha[id];
      }
      if (ok) options[cid].push_back(std::move(mu));
    }
    if (options[cid].empty()) return {};
  }

  std::vector<std::vector<Automorphism>> out;
  std::vector<std::size_t> pick(order.size(), 0);
  while (true) {
    std::vector<Automorphism> mu(n, d.identity());
    for (std::size_t cid = 0; cid < order.size(); ++cid)
      for (int i : order[cid]) mu[i] = options[cid][pick[cid]][i];
    out.push_back(std::move(mu));
    std::size_t cid = 0;
    while (cid < pick.size() && ++pick[cid] == options[cid].size()) pick[cid++] = 0;
    if (cid == pick.size()) break;
  }
  return out;
}

// Backtracking over eta with unit propagation on the constraints
//   L_t * eta_ik = eta_ij * alpha_ij(eta_jk) * xi_t,   L_t = mu_i(zeta_t),
// one per comp triple t = (i,j,k).
class EtaSearch {
 public:
  EtaSearch(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1, const TwoCocycle& c2,
            const std::vector<Automorphism>& mu, std::uint64_t& nodes, std::uint64_t max_nodes, bool all)
      : s_(s), c1_(c1), units_(d.units()), nodes_(nodes), max_nodes_(max_nodes), all_(all) {
    const std::size_t m = s.num_pairs();
    watch_.resize(m);
    for (std::size_t t = 0; t < s.num_triples(); ++t) {
      const auto [i, j, k] = s.triple(static_cast<int>(t));
      Constraint con{s.pair_index(i, j), s.pair_index(j, k), s.pair_index(i, k), mu[i](c2.xi[t]), c1.xi[t],
                     c1.alpha[s.pair_index(i, j)]};
      cons_.push_back(con);
      watch_[con.a].push_back(t);
      if (con.b != con.a) watch_[con.b].push_back(t);
      if (con.c != con.a && con.c != con.b) watch_[con.c].push_back(t);
    }
    value_.assign(m, d.one());
    assigned_.assign(m, 0);
    mu_ = mu;
  }

  void run(std::vector<GroupElement>& out) {
    out_ = &out;
    search();
  }

 private:
  struct Constraint {
    int a, b, c;
    Element lhs;  // L
    Element xi;
    Automorphism alpha;
  };

  bool holds(const Constraint& k) const {
    return k.lhs * value_[k.c] == value_[k.a] * k.alpha(value_[k.b]) * k.xi;
  }

  void assign(int var, const Element& v) {
    value_[var] = v;
    assigned_[var] = 1;
    trail_.push_back(var);
  }

  bool propagate(std::size_t from) {
    std::deque<std::size_t> queue;
    for (std::size_t t = from; t < trail_.size(); ++t)
      for (std::size_t c : watch_[trail_[t]]) queue.push_back(c);
    while (!queue.empty()) {
      const Constraint& k = cons_[queue.front()];
      queue.pop_front();
      const bool ua = !assigned_[k.a], ub = !assigned_[k.b], uc = !assigned_[k.c];
      if (!ua && !ub && !uc) {
        if (!holds(k)) return false;
        continue;
      }
      int var = -1;
      Element v;
      if (ua && !ub && !uc && k.a != k.b && k.a != k.c) {
        var = k.a;
        v = k.lhs * value_[k.c] * k.xi.inverse() * k.alpha(value_[k.b]).inverse();
      } else if (ub && !ua && !uc && k.b != k.a && k.b != k.c) {
        var = k.b;
        v = k.alpha.inverse()(value_[k.a].inverse() * k.lhs * value_[k.c] * k.xi.inverse());
      } else if (uc && !ua && !ub && k.c != k.a && k.c != k.b) {
        var = k.c;
        v = k.lhs.inverse() * value_[k.a] * k.alpha(value_[k.b]) * k.xi;
      }
      if (var < 0) continue;
      assign(var, v);
      for (std::size_t c : watch_[var]) queue.push_back(c);
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  // Returns true once a solution is found and only one is wanted.
  bool search() {
    const auto it = std::find(assigned_.begin(), assigned_.end(), 0);
    if (it == assigned_.end()) {
      out_->push_back({mu_, value_});
      return !all_;
    }
    const int var = static_cast<int>(it - assigned_.begin());
    for (const auto& u : units_) {
      if (++nodes_ > max_nodes_) throw Error(Errc::SearchBoundExceeded, "witness search exceeded max_search nodes");
      const std::size_t mark = trail_.size();
      assign(var, u);
      if (propagate(mark) && search()) return true;
      undo(mark);
    }
    return false;
  }

  const Semigroup& s_;
  const TwoCocycle& c1_;
  std::vector<Element> units_;
  std::uint64_t& nodes_;
  std::uint64_t max_nodes_;
  bool all_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<Automorphism> mu_;
  std::vector<Element> value_;
  std::vector<char> assigned_;
  std::vector<int> trail_;
  std::vector<GroupElement>* out_ = nullptr;
};

std::vector<GroupElement> solve(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                const TwoCocycle& c2, const SearchBounds& bounds, bool all) {
  require_finite(d);
  require_valid(s, d, c1);
  require_valid(s, d, c2);
  std::vector<GroupElement> found;
  std::uint64_t nodes = 0;
  for (const auto& mu : solve_mu(s, d, c1, c2)) {
    // Constraint derived from star: mu_i(zeta) eta_ik = eta_ij alpha_ij(eta_jk) xi.
    EtaSearch search(s, d, c1, c2, mu, nodes, bounds.max_search, all);
    search.run(found);
    if (!all && !found.empty()) break;
  }
  for (const auto& g : found)
    if (star_unchecked(s, g, c1) != c2) throw std::logic_error("witness search produced an invalid witness");
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::optional<GroupElement> cohomologous(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                         const TwoCocycle& c2, const SearchBounds& bounds) {
  auto found = solve(s, d, c1, c2, bounds, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<GroupElement> all_witnesses(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c1,
                                        const TwoCocycle& c2, const SearchBounds& bounds) {
  return solve(s, d, c1, c2, bounds, true);
}

std::optional<GroupElement> d_algebra_witness(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c,
                                              const SearchBounds&) {
  require_finite(d);
  require_valid(s, d, c);
  TwoCocycle untwisted = c;
  std::fill(untwisted.alpha.begin(), untwisted.alpha.end(), d.identity());
  auto mus = solve_mu(s, d, c, untwisted);
  if (mus.empty()) return std::nullopt;
  GroupElement g = g_identity(s, d);
  g.mu = mus.front();
  const auto r = star_unchecked(s, g, c);
  for (const auto& a : r.alpha)
    if (!a.is_identity()) throw std::logic_error("d-algebra witness does not untwist alpha");
  return g;
}

std::vector<SemigroupAutomorphism> stabilizer(const Semigroup& s, const DivisionRing& d, const TwoCocycle& c,
                                              const SearchBounds& bounds, bool normal_only) {
  require_finite(d);
  require_valid(s, d, c);
  std::vector<SemigroupAutomorphism> out;
  for (const auto& phi : sgrp::automorphisms(s, bounds.max_aut_n)) {
    if (normal_only && !sgrp::is_normal(s, phi)) continue;
    if (cohomologous(s, d, c, aut_act(s, phi, c), bounds)) out.push_back(phi);
  }
  return out;
}

// --- first cohomology ---------------------------------------------------------

bool verify_one_cocycle(const Semigroup& s, const DivisionRing& d, const TwoCocycle& base, const GroupElement& g) {
  if (g.mu.size() != static_cast<std::size_t>(s.size()) || g.eta.size() != s.num_pairs()) return false;
  for (const auto& e : g.eta)
    if (e.is_zero() || !d.contains(e)) return false;
  for (std::size_t id = 0; id < s.num_pairs(); ++id) {
    const auto [i, j] = s.pair(static_cast<int>(id));
    if (g.mu[i] * base.alpha[id] * g.mu[j].inverse() != coeff::inner(g.eta[id]) * base.alpha[id]) return false;
  }
  for (std::size_t t = 0; t < s.num_triples(); ++t) {
    const auto [i, j, k] = s.triple(static_cast<int>(t));
    const int ij = s.pair_index(i, j), jk = s.pair_index(j, k), ik = s.pair_index(i, k);
    if (g.mu[i](base.xi[t]) != g.eta[ij] * base.alpha[ij](g.eta[jk]) * base.xi[t] * g.eta[ik].inverse()) return false;
  }
  return true;
}

GroupElement coboundary(const Semigroup& s, const TwoCocycle& base, const std::vector<Element>& nu) {
  if (nu.size() != static_cast<std::size_t>(s.size())) throw Error(Errc::InvalidInput, "nu must have one value per idempotent");
  GroupElement g;
  for (const auto& v : nu) g.mu.push_back(coeff::inner(v));
  for (std::size_t id = 0; id < s.num_pairs(); ++id) {
    const auto [i, j] = s.pair(static_cast<int>(id));
    g.eta.push_back(nu[i] * base.alpha[id](nu[j].inverse()));
  }
  return g;
}

H1Result h1(const Semigroup& s, const DivisionRing& d, const TwoCocycle& base, const SearchBounds& bounds) {
  require_finite(d);
  require_valid(s, d, base);
  H1Result r;
  r.z1 = all_witnesses(s, d, base, base, bounds);

  const auto units = d.units();
  const std::size_t n = static_cast<std::size_t>(s.size());
  if (capped_power(units.size(), n, bounds.max_search) > bounds.max_search)
    throw Error(Errc::SearchBoundExceeded, "coboundary enumeration exceeds max_search");
  std::set<GroupElement> b1;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Element> nu;
    for (std::size_t i = 0; i < n; ++i) nu.push_back(units[digit[i]]);
    b1.insert(coboundary(s, base, nu));
    std::size_t t = 0;
    while (t < n && ++digit[t] == units.size()) digit[t++] = 0;
    if (t == n) break;
  }
  r.b1.assign(b1.begin(), b1.end());

  const std::set<GroupElement> z1(r.z1.begin(), r.z1.end());
  r.b1_in_z1 = std::all_of(r.b1.begin(), r.b1.end(), [&](const GroupElement& b) { return z1.count(b) > 0; });
  r.b1_normal = true;
  for (const auto& z : r.z1) {
    const auto zi = g_inv(s, z);
    for (const auto& b : r.b1)
      if (!b1.count(g_mul(s, g_mul(s, z, b), zi))) r.b1_normal = false;
  }

  std::set<GroupElement> covered;
  for (const auto& z : r.z1) {
    if (covered.count(z)) continue;
    r.representatives.push_back(z);
    for (const auto& b : r.b1) covered.insert(g_mul(s, z, b));
  }
  r.order = r.representatives.size();
  return r;
}

}  // namespace sqfree::cohom
