#include "sqfree/json_io.hpp"

#include <sstream>

namespace sqfree::io {

using coeff::Integer;
using coeff::Quaternion;
using coeff::Rational;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::InvalidSpec, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

// "i,j,k" -> 0-based indices, each checked against n.
std::vector<int> parse_key(const std::string& key, int n, std::size_t arity, const std::string& path) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      fail(path, "bad index list \"" + key + "\"");
    }
    if (used != part.size()) fail(path, "bad index list \"" + key + "\"");
    if (v < 1 || v > n) fail(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  if (out.size() != arity)
    fail(path, "\"" + key + "\" should have " + std::to_string(arity) + " indices");
  return out;
}

std::string key_of(const std::vector<int>& zero_based) {
  std::string out;
  for (std::size_t t = 0; t < zero_based.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(zero_based[t] + 1);
  }
  return out;
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(path, "expected a \"num/den\" string");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("+-0123456789") != std::string::npos) fail(path, "bad rational \"" + s + "\"");
    try {
      return Integer(t);
    } catch (const std::exception&) {
      fail(path, "bad rational \"" + s + "\"");
    }
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(path, "zero denominator");
  return Rational(parse_int(s.substr(0, slash)), den);
}

std::string rational_json(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Quaternion parse_quaternion(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) fail(path, "expected 4 rational coordinates");
  return {parse_rational(j[0], path + "[0]"), parse_rational(j[1], path + "[1]"), parse_rational(j[2], path + "[2]"),
          parse_rational(j[3], path + "[3]")};
}

Json quaternion_json(const Quaternion& q) {
  return Json::array({rational_json(q.a), rational_json(q.b), rational_json(q.c), rational_json(q.d)});
}

Element parse_unit(const DivisionRing& d, const Json& j, const std::string& path) {
  auto x = parse_element(d, j, path);
  if (x.is_zero()) fail(path, "value must be nonzero");
  return x;
}

}  // namespace

DivisionRing parse_coefficients(const Json& j, const std::string& path) {
  const auto& backend = field(j, "backend", path);
  if (backend == "quaternion") return DivisionRing::quaternions();
  if (backend != "finite_field") fail(path + ".backend", "expected \"finite_field\" or \"quaternion\"");
  const auto p = as_int(field(j, "p", path), path + ".p");
  const auto k = as_int(field(j, "k", path), path + ".k");
  if (p < 2 || k < 1 || p > 65536 || k > 32) fail(path, "p and k out of range");
  try {
    auto it = j.find("modulus");
    if (it == j.end()) return DivisionRing::finite_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
    if (!it->is_array()) fail(path + ".modulus", "expected an array");
    std::vector<std::uint32_t> modulus;
    for (std::size_t t = 0; t < it->size(); ++t) {
      const auto c = as_int((*it)[t], path + ".modulus[" + std::to_string(t) + "]");
      if (c < 0 || c >= p) fail(path + ".modulus[" + std::to_string(t) + "]", "coefficient out of range [0,p)");
      modulus.push_back(static_cast<std::uint32_t>(c));
    }
    return DivisionRing::finite_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), std::move(modulus));
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidSpec && std::string(e.what()).find(path) != std::string::npos) throw;
    fail(path, e.what());
  }
}

Json to_json(const DivisionRing& d) {
  if (!d.is_finite()) return {{"backend", "quaternion"}};
  return {{"backend", "finite_field"}, {"p", d.characteristic()}, {"k", d.degree()}, {"modulus", d.modulus()}};
}

Element parse_element(const DivisionRing& d, const Json& j, const std::string& path) {
  if (!d.is_finite()) {
    const auto q = parse_quaternion(j, path);
    return d.quaternion(q.a, q.b, q.c, q.d);
  }
  if (!j.is_array() || j.size() != d.degree())
    fail(path, "expected an array of " + std::to_string(d.degree()) + " coordinates");
  std::vector<long long> coords;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto c = as_int(j[t], path + "[" + std::to_string(t) + "]");
    if (c < 0 || c >= static_cast<long long>(d.characteristic()))
      fail(path + "[" + std::to_string(t) + "]", "coordinate out of range [0,p)");
    coords.push_back(c);
  }
  return d.from_coords(coords);
}

Json to_json(const Element& x) {
  if (x.is_quaternion()) return quaternion_json(x.quaternion());
  const auto& fv = x.field_value();
  Json out = Json::array();
  for (std::uint32_t t = 0; t < fv.field->k; ++t) out.push_back(fv.field->digit(fv.value, t));
  return out;
}

Automorphism parse_automorphism(const DivisionRing& d, const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) fail(path, "expected {\"frobenius\": m} or {\"conj\": [...]}");
  if (j.contains("frobenius")) {
    const auto m = as_int(j["frobenius"], path + ".frobenius");
    if (!d.is_finite()) {
      if (m != 0) fail(path, "quaternion automorphisms are given by \"conj\"");
      return d.identity();
    }
    if (m < 0 || m >= static_cast<long long>(d.degree()))
      fail(path + ".frobenius", "exponent out of range [0,k)");
    return d.frobenius(static_cast<std::uint32_t>(m));
  }
  if (j.contains("conj")) {
    if (d.is_finite()) fail(path, "finite-field automorphisms are given by \"frobenius\"");
    const auto q = parse_quaternion(j["conj"], path + ".conj");
    if (q.is_zero()) fail(path + ".conj", "conjugator must be nonzero");
    return Automorphism::conjugation(q);
  }
  fail(path, "expected {\"frobenius\": m} or {\"conj\": [...]}");
}

Json to_json(const Automorphism& a) {
  if (auto m = a.frobenius_power()) return {{"frobenius", *m}};
  return {{"conj", quaternion_json(*a.conjugator())}};
}

Semigroup parse_semigroup(const Json& j, const std::string& path) {
  const auto n = as_int(field(j, "n", path), path + ".n");
  if (n < 1 || n > 64) fail(path + ".n", "expected 1..64 idempotents");
  auto tuples = [&](const char* key, std::size_t arity) {
    std::vector<std::vector<int>> out;
    auto it = j.find(key);
    if (it == j.end()) return out;
    if (!it->is_array()) fail(path + "." + key, "expected an array");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const auto sub = path + "." + key + "[" + std::to_string(t) + "]";
      const auto& e = (*it)[t];
      if (!e.is_array() || e.size() != arity) fail(sub, "expected " + std::to_string(arity) + " indices");
      std::vector<int> v;
      for (const auto& x : e) {
        const auto i = as_int(x, sub);
        if (i < 1 || i > n) fail(sub, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        v.push_back(static_cast<int>(i) - 1);
      }
      out.push_back(std::move(v));
    }
    return out;
  };
  std::vector<sgrp::Pair> support;
  for (const auto& v : tuples("support", 2)) support.push_back({v[0], v[1]});
  std::vector<sgrp::Triple> comp;
  for (const auto& v : tuples("comp", 3)) comp.push_back({v[0], v[1], v[2]});
  return Semigroup(static_cast<int>(n), std::move(support), std::move(comp));
}

Json to_json(const Semigroup& s) {
  Json support = Json::array(), comp = Json::array();
  for (const auto& p : s.pairs()) support.push_back({p.i + 1, p.j + 1});
  for (const auto& t : s.triples())
    if (t.i != t.j && t.j != t.k) comp.push_back({t.i + 1, t.j + 1, t.k + 1});
  return {{"n", s.size()}, {"support", support}, {"comp", comp}};
}

TwoCocycle parse_cocycle(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path) {
  auto c = cohom::trivial_cocycle(s, d);
  if (j.is_null()) return c;
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "alpha" && key != "xi") fail(path, "unknown key \"" + key + "\"");
  if (auto it = j.find("alpha"); it != j.end()) {
    if (!it->is_object()) fail(path + ".alpha", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const auto sub = path + ".alpha[\"" + key + "\"]";
      const auto v = parse_key(key, s.size(), 2, sub);
      if (!s.has(v[0], v[1])) fail(sub, "not a support pair");
      c.alpha[s.pair_index(v[0], v[1])] = parse_automorphism(d, value, sub);
    }
  }
  if (auto it = j.find("xi"); it != j.end()) {
    if (!it->is_object()) fail(path + ".xi", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const auto sub = path + ".xi[\"" + key + "\"]";
      const auto v = parse_key(key, s.size(), 3, sub);
      if (!s.composes(v[0], v[1], v[2])) fail(sub, "not a composable triple");
      c.xi[s.triple_index(v[0], v[1], v[2])] = parse_unit(d, value, sub);
    }
  }
  return c;
}

Json to_json(const Semigroup& s, const TwoCocycle& c) {
  Json alpha = Json::object(), xi = Json::object();
  for (std::size_t id = 0; id < s.num_pairs(); ++id)
    if (!c.alpha[id].is_identity()) {
      const auto [i, j] = s.pair(static_cast<int>(id));
      alpha[key_of({i, j})] = to_json(c.alpha[id]);
    }
  for (std::size_t id = 0; id < s.num_triples(); ++id)
    if (!c.xi[id].is_one()) {
      const auto [i, j, k] = s.triple(static_cast<int>(id));
      xi[key_of({i, j, k})] = to_json(c.xi[id]);
    }
  return {{"alpha", alpha}, {"xi", xi}};
}

GroupElement parse_group_element(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path) {
  auto g = cohom::g_identity(s, d);
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "mu" && key != "eta") fail(path, "unknown key \"" + key + "\"");
  if (auto it = j.find("mu"); it != j.end()) {
    if (!it->is_object()) fail(path + ".mu", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const auto sub = path + ".mu[\"" + key + "\"]";
      g.mu[parse_key(key, s.size(), 1, sub)[0]] = parse_automorphism(d, value, sub);
    }
  }
  if (auto it = j.find("eta"); it != j.end()) {
    if (!it->is_object()) fail(path + ".eta", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const auto sub = path + ".eta[\"" + key + "\"]";
      const auto v = parse_key(key, s.size(), 2, sub);
      if (!s.has(v[0], v[1])) fail(sub, "not a support pair");
      g.eta[s.pair_index(v[0], v[1])] = parse_unit(d, value, sub);
    }
  }
  return g;
}

Json to_json(const Semigroup& s, const GroupElement& g) {
  Json mu = Json::object(), eta = Json::object();
  for (int i = 0; i < s.size(); ++i) mu[std::to_string(i + 1)] = to_json(g.mu[i]);
  for (std::size_t id = 0; id < s.num_pairs(); ++id) {
    const auto [i, j] = s.pair(static_cast<int>(id));
    eta[key_of({i, j})] = to_json(g.eta[id]);
  }
  return {{"mu", mu}, {"eta", eta}};
}

SemigroupAutomorphism parse_permutation(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  const int n = static_cast<int>(j.size());
  std::vector<int> perm;
  std::vector<char> seen(n, 0);
  for (int t = 0; t < n; ++t) {
    const auto v = as_int(j[t], path + "[" + std::to_string(t) + "]");
    if (v < 1 || v > n || seen[v - 1]) fail(path, "not a permutation of 1.." + std::to_string(n));
    seen[v - 1] = 1;
    perm.push_back(static_cast<int>(v) - 1);
  }
  return SemigroupAutomorphism(std::move(perm));
}

Json to_json(const SemigroupAutomorphism& phi) {
  Json out = Json::array();
  for (int v : phi.perm()) out.push_back(v + 1);
  return out;
}

Cochain parse_cochain(const Semigroup& s, const DivisionRing& d, const Json& j, const std::string& path) {
  Cochain c;
  const auto m = as_int(field(j, "m", path), path + ".m");
  if (m < 0 || m > 3) fail(path + ".m", "degree must be in 0..3");
  c.m = static_cast<int>(m);
  const auto& values = field(j, "values", path);
  if (!values.is_object()) fail(path + ".values", "expected an object");
  const auto paths = s.paths(c.m);
  for (const auto& [key, value] : values.items()) {
    const auto sub = path + ".values[\"" + key + "\"]";
    auto v = parse_key(key, s.size(), static_cast<std::size_t>(m) + 1, sub);
    if (!std::binary_search(paths.begin(), paths.end(), v)) fail(sub, "not a path of S^<" + std::to_string(m) + ">");
    c.values.emplace(std::move(v), parse_unit(d, value, sub));
  }
  for (const auto& p : paths)
    if (!c.values.count(p)) fail(path + ".values", "missing value at \"" + key_of(p) + "\"");
  return c;
}

Json to_json(const Cochain& c) {
  Json values = Json::object();
  for (const auto& [p, v] : c.values) values[key_of(p)] = to_json(v);
  return {{"m", c.m}, {"values", values}};
}

Json to_json(const ring::TwistedRing& r, const ring::RingElement& a) {
  Json out = Json::object();
  const auto& s = r.semigroup();
  for (std::size_t id = 0; id < a.coeffs.size(); ++id)
    if (!a.coeffs[id].is_zero()) {
      const auto [i, j] = s.pair(static_cast<int>(id));
      out[key_of({i, j})] = to_json(a.coeffs[id]);
    }
  return out;
}

ring::RingElement parse_ring_element(const ring::TwistedRing& r, const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto& s = r.semigroup();
  auto out = r.zero();
  for (const auto& [key, value] : j.items()) {
    const auto sub = path + "[\"" + key + "\"]";
    const auto v = parse_key(key, s.size(), 2, sub);
    if (!s.has(v[0], v[1])) fail(sub, "not a support pair");
    out.coeffs[s.pair_index(v[0], v[1])] = parse_element(r.coefficients(), value, sub);
  }
  return out;
}

Json to_json(const ring::RingMap& f) {
  Json out = Json::array();
  const auto& r = f.source();
  for (std::size_t t = 0; t < f.images().size(); ++t)
    out.push_back({{"basis", to_json(r, r.prime_basis()[t])}, {"image", to_json(f.target(), f.images()[t])}});
  return out;
}

SearchBounds parse_bounds(const Json& j, SearchBounds base, const std::string& path) {
  if (j.is_null()) return base;
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const auto v = as_int(value, path + "." + key);
    if (v <= 0) fail(path + "." + key, "bound must be positive");
    if (key == "max_search")
      base.max_search = static_cast<std::uint64_t>(v);
    else if (key == "max_units" || key == "max_elements")
      base.max_elements = static_cast<std::uint64_t>(v);
    else if (key == "max_aut_n")
      base.max_aut_n = static_cast<int>(v);
    else
      fail(path, "unknown bound \"" + key + "\"");
  }
  return base;
}

Json to_json(const SearchBounds& b) {
  return {{"max_search", b.max_search}, {"max_units", b.max_elements}, {"max_aut_n", b.max_aut_n}};
}

}  // namespace sqfree::io
