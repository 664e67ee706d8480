#include "sqfree/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sqfree::sgrp {

Semigroup::Semigroup(int n, std::vector<Pair> support, std::vector<Triple> comp, bool close_units) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative idempotent count");
  auto in_range = [n](int x) { return x >= 0 && x < n; };
  for (const auto& p : support)
    if (!in_range(p.i) || !in_range(p.j))
      throw Error(Errc::InvalidInput, "support pair out of range: " + to_string({p.i, p.j}));
  for (const auto& t : comp)
    if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k))
      throw Error(Errc::InvalidInput, "comp triple out of range: " + to_string({t.i, t.j, t.k}));

  if (close_units) {
    for (const auto& p : support) {
      comp.push_back({p.i, p.i, p.j});
      comp.push_back({p.i, p.j, p.j});
    }
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::sort(comp.begin(), comp.end());
  comp.erase(std::unique(comp.begin(), comp.end()), comp.end());

  pairs_ = std::move(support);
  triples_ = std::move(comp);
  pair_id_.assign(static_cast<std::size_t>(n) * n, -1);
  triple_id_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (std::size_t id = 0; id < pairs_.size(); ++id) pair_id_[pairs_[id].i * n + pairs_[id].j] = static_cast<int>(id);
  for (std::size_t id = 0; id < triples_.size(); ++id) {
    const auto& t = triples_[id];
    triple_id_[(t.i * n + t.j) * n + t.k] = static_cast<int>(id);
  }
}

std::vector<std::vector<int>> Semigroup::paths(int m) const {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    for (int i = 0; i < n_; ++i) out.push_back({i});
    return out;
  }
  for (const auto& p : pairs_) out.push_back({p.i, p.j});
  for (int len = 2; len <= m; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& path : out) {
      const int first = path.front();
      const int last = path.back();
      for (int x = 0; x < n_; ++x) {
        if (!has(last, x) || !composes(first, last, x)) continue;
        auto extended = path;
        extended.push_back(x);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

Semigroup Semigroup::induced(const std::vector<int>& indices) const {
  const int m = static_cast<int>(indices.size());
  std::vector<Pair> support;
  std::vector<Triple> comp;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!has(indices[a], indices[b])) continue;
      support.push_back({a, b});
      for (int c = 0; c < m; ++c)
        if (composes(indices[a], indices[b], indices[c])) comp.push_back({a, b, c});
    }
  return Semigroup(m, std::move(support), std::move(comp), false);
}

ValidationReport validate(const Semigroup& s) {
  ValidationReport report;
  const int n = s.size();
  auto add = [&](std::string kind, std::vector<int> tuple, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(tuple), std::move(detail)});
  };
  for (int i = 0; i < n; ++i)
    if (!s.has(i, i)) add("idempotent", {i, i}, "e_i missing from support");
  for (const auto& t : s.triples()) {
    if (!s.has(t.i, t.j) || !s.has(t.j, t.k) || !s.has(t.i, t.k))
      add("comp-support", {t.i, t.j, t.k}, "comp triple uses a pair outside the support");
  }
  for (const auto& p : s.pairs()) {
    if (!s.composes(p.i, p.i, p.j)) add("unit-law", {p.i, p.j}, "e_i s_ij != s_ij");
    if (!s.composes(p.i, p.j, p.j)) add("unit-law", {p.i, p.j}, "s_ij e_j != s_ij");
  }
  for (const auto& a : s.pairs())
    for (int k = 0; k < n; ++k) {
      if (!s.has(a.j, k)) continue;
      for (int l = 0; l < n; ++l) {
        if (!s.has(k, l)) continue;
        const int i = a.i, j = a.j;
        const bool left = s.composes(i, j, k) && s.composes(i, k, l);
        const bool right = s.composes(j, k, l) && s.composes(i, j, l);
        if (left != right)
          add("associativity", {i, j, k, l}, left ? "(s_ij s_jk) s_kl != 0 but s_ij (s_jk s_kl) = 0"
                                                  : "s_ij (s_jk s_kl) != 0 but (s_ij s_jk) s_kl = 0");
      }
    }
  return report;
}

bool related(const Semigroup& s, int i, int j) {
  return i == j || (s.has(i, j) && s.has(j, i) && s.composes(i, j, i));
}

std::vector<std::vector<int>> sim_classes(const Semigroup& s) {
  const int n = s.size();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    std::vector<int> cls;
    for (int j = i; j < n; ++j)
      if (owner[j] < 0 && related(s, i, j)) {
        owner[j] = static_cast<int>(classes.size());
        cls.push_back(j);
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Block> blocks(const Semigroup& s) {
  std::vector<Block> out;
  for (const auto& cls : sim_classes(s)) {
    Semigroup b = s.induced(cls);
    const int m = b.size();
    if (b.num_pairs() != static_cast<std::size_t>(m * m) || b.num_triples() != static_cast<std::size_t>(m * m * m))
      throw Error(Errc::BlockNotMatrixUnits, "~-block " + to_string(cls) + " is not a matrix-unit semigroup");
    out.push_back({std::move(b), cls});
  }
  return out;
}

Reduced reduced(const Semigroup& s) {
  std::vector<int> reps;
  for (const auto& cls : sim_classes(s)) reps.push_back(cls.front());
  return {s.induced(reps), reps};
}

Reduced reduced(const Semigroup& s, const std::vector<int>& representatives) {
  const auto classes = sim_classes(s);
  if (representatives.size() != classes.size())
    throw Error(Errc::InvalidInput, "need exactly one representative per ~-class");
  for (const auto& cls : classes) {
    const auto hits = std::count_if(representatives.begin(), representatives.end(), [&](int r) {
      return std::find(cls.begin(), cls.end(), r) != cls.end();
    });
    if (hits != 1) throw Error(Errc::InvalidInput, "representatives do not meet every ~-class once");
  }
  return {s.induced(representatives), representatives};
}

std::vector<int> block_labels(const Semigroup& s) {
  std::vector<int> label(s.size(), 0);
  for (const auto& cls : sim_classes(s))
    for (std::size_t t = 0; t < cls.size(); ++t) label[cls[t]] = static_cast<int>(t);
  return label;
}

SemigroupAutomorphism SemigroupAutomorphism::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return SemigroupAutomorphism(std::move(p));
}

bool SemigroupAutomorphism::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

SemigroupAutomorphism SemigroupAutomorphism::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int i = 0; i < size(); ++i) inv[perm_[i]] = i;
  return SemigroupAutomorphism(std::move(inv));
}

SemigroupAutomorphism operator*(const SemigroupAutomorphism& a, const SemigroupAutomorphism& b) {
  std::vector<int> p(b.perm_.size());
  for (int i = 0; i < b.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return SemigroupAutomorphism(std::move(p));
}

bool is_automorphism(const Semigroup& s, const SemigroupAutomorphism& phi) {
  const int n = s.size();
  if (phi.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (phi(i) < 0 || phi(i) >= n || seen[phi(i)]) return false;
    seen[phi(i)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (s.has(i, j) != s.has(phi(i), phi(j))) return false;
      for (int k = 0; k < n; ++k)
        if (s.composes(i, j, k) != s.composes(phi(i), phi(j), phi(k))) return false;
    }
  return true;
}

bool is_normal(const Semigroup& s, const SemigroupAutomorphism& phi) {
  const auto label = block_labels(s);
  for (int i = 0; i < s.size(); ++i)
    if (label[phi(i)] != label[i]) return false;
  return true;
}

namespace {

struct Profile {
  int out = 0, in = 0, comp_first = 0, comp_mid = 0, comp_last = 0;
  friend bool operator==(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const Semigroup& s) {
  std::vector<Profile> prof(s.size());
  for (const auto& p : s.pairs()) {
    ++prof[p.i].out;
    ++prof[p.j].in;
  }
  for (const auto& t : s.triples()) {
    ++prof[t.i].comp_first;
    ++prof[t.j].comp_mid;
    ++prof[t.k].comp_last;
  }
  return prof;
}

// Backtracking over injective maps a -> b preserving support and comp on the
// assigned prefix; profile equality prunes candidates.
void extend(const Semigroup& a, const Semigroup& b, const std::vector<Profile>& pa, const std::vector<Profile>& pb,
            std::vector<int>& image, std::vector<char>& used, int next, bool first_only,
            std::vector<SemigroupAutomorphism>& out) {
  const int n = a.size();
  if (next == n) {
    out.emplace_back(image);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || !(pa[next] == pb[cand])) continue;
    image[next] = cand;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x)
      for (int y = 0; y <= next && ok; ++y) {
        if (x != next && y != next) continue;
        if (a.has(x, y) != b.has(image[x], image[y])) ok = false;
        for (int z = 0; z <= next && ok; ++z)
          if (a.composes(x, y, z) != b.composes(image[x], image[y], image[z])) ok = false;
      }
    if (!ok) continue;
    for (int x = 0; x < next && ok; ++x)
      for (int y = 0; y < next && ok; ++y)
        if (a.composes(x, y, next) != b.composes(image[x], image[y], cand) ||
            a.composes(x, next, y) != b.composes(image[x], cand, image[y]) ||
            a.composes(next, x, y) != b.composes(cand, image[x], image[y]))
          ok = false;
    if (!ok) continue;
    used[cand] = 1;
    extend(a, b, pa, pb, image, used, next + 1, first_only, out);
    used[cand] = 0;
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<SemigroupAutomorphism> automorphisms(const Semigroup& s, int max_n) {
  if (s.size() > max_n)
    throw Error(Errc::SearchBoundExceeded,
                "Aut S search limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(s.size()));
  const auto prof = profiles(s);
  std::vector<int> image(s.size());
  std::vector<char> used(s.size(), 0);
  std::vector<SemigroupAutomorphism> out;
  extend(s, s, prof, prof, image, used, 0, false, out);
  return out;
}

bool isomorphic(const Semigroup& a, const Semigroup& b) {
  if (a.size() != b.size() || a.num_pairs() != b.num_pairs() || a.num_triples() != b.num_triples()) return false;
  const auto pa = profiles(a);
  const auto pb = profiles(b);
  std::vector<int> image(a.size());
  std::vector<char> used(a.size(), 0);
  std::vector<SemigroupAutomorphism> out;
  extend(a, b, pa, pb, image, used, 0, true, out);
  return !out.empty();
}

std::string to_string(const std::vector<int>& tuple, bool one_based) {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < tuple.size(); ++t) os << (t ? "," : "") << tuple[t] + (one_based ? 1 : 0);
  os << ')';
  return os.str();
}

namespace fixtures {

Semigroup single() { return Semigroup(1, {{0, 0}}, {}); }

Semigroup t2() { return Semigroup(2, {{0, 0}, {1, 1}, {0, 1}}, {}); }

Semigroup a3() { return Semigroup(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}}); }

Semigroup z3() { return Semigroup(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {}); }

Semigroup matrix_units(int n) {
  std::vector<Pair> support;
  std::vector<Triple> comp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      support.push_back({i, j});
      for (int k = 0; k < n; ++k) comp.push_back({i, j, k});
    }
  return Semigroup(n, std::move(support), std::move(comp), false);
}

Semigroup chain(int n) {
  std::vector<Pair> support;
  std::vector<Triple> comp;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      support.push_back({i, j});
      for (int k = j; k < n; ++k) comp.push_back({i, j, k});
    }
  return Semigroup(n, std::move(support), std::move(comp), false);
}

}  // namespace fixtures

}  // namespace sqfree::sgrp
