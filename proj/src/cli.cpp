#include "sqfree/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sqfree/autos.hpp"
#include "sqfree/json_io.hpp"

namespace sqfree::cli {

using io::Json;

namespace {

struct Options {
  std::string bundle_path = "-";
  std::string target_path;
  std::string witness_path;
  bool phi = false;
  bool timing = false;
  std::optional<std::uint64_t> max_units;
  std::optional<std::uint64_t> max_search;
};

struct Result {
  Json report;
  int code = Success;
};

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(Errc::InvalidSpec, "cannot open " + path);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::InvalidSpec, (path == "-" ? std::string("<stdin>") : path) + ": malformed JSON: " + e.what());
  }
}

// The parsed bundle; the cocycle is only read by commands that use it.
class Job {
 public:
  Job(Json bundle, const Options& opt, bool require_valid_semigroup)
      : bundle_(std::move(bundle)), opt_(opt) {
    if (!bundle_.is_object()) throw Error(Errc::InvalidSpec, "bundle: expected an object");
    s_ = io::parse_semigroup(member("semigroup"));
    d_ = io::parse_coefficients(member("coefficients"));
    if (require_valid_semigroup) {
      auto report = sgrp::validate(s_);
      if (!report.ok())
        throw Error(Errc::InvalidInput, "semigroup: " + report.violations.front().kind + " at " +
                                            sgrp::to_string(report.violations.front().tuple));
    }
    bounds_ = io::parse_bounds(bundle_.value("bounds", Json()));
    if (opt.max_units) bounds_.max_elements = *opt.max_units;
    if (opt.max_search) bounds_.max_search = *opt.max_search;
  }

  const Json& member(const char* key) const {
    auto it = bundle_.find(key);
    if (it == bundle_.end()) throw Error(Errc::InvalidSpec, std::string("bundle: missing \"") + key + "\"");
    return *it;
  }
  bool has(const char* key) const { return bundle_.contains(key); }

  const sgrp::Semigroup& s() const { return s_; }
  const coeff::DivisionRing& d() const { return d_; }
  const cohom::SearchBounds& bounds() const { return bounds_; }

  cohom::TwoCocycle cocycle() const { return io::parse_cocycle(s_, d_, bundle_.value("cocycle", Json())); }

  // A cocycle given in a side file (either a bundle holding "cocycle" or a
  // bare cocycle) or under `key` in the bundle.
  cohom::TwoCocycle side_cocycle(const std::string& path, const char* key, std::istream& in) const {
    Json j;
    if (!path.empty()) {
      j = read_json(path, in);
      if (j.is_object() && j.contains("cocycle")) j = j["cocycle"];
    } else {
      j = member(key);
    }
    return io::parse_cocycle(s_, d_, j, key);
  }

  // {"g": GroupElement, "phi": [...]} from a side file (possibly a report
  // holding "witness") or from the bundle.
  std::pair<cohom::GroupElement, sgrp::SemigroupAutomorphism> witness(std::istream& in) const {
    Json j = opt_.witness_path.empty() ? member("witness") : read_json(opt_.witness_path, in);
    if (j.is_object() && j.contains("witness")) j = j["witness"];
    if (!j.is_object()) throw Error(Errc::InvalidSpec, "witness: expected an object");
    auto g = io::parse_group_element(s_, d_, j.value("g", Json::object()), "witness.g");
    auto phi = j.contains("phi") ? io::parse_permutation(j["phi"], "witness.phi")
                                 : sgrp::SemigroupAutomorphism::identity(s_.size());
    if (phi.size() != s_.size() || !sgrp::is_automorphism(s_, phi))
      throw Error(Errc::InvalidInput, "witness.phi: not an automorphism of S");
    return {std::move(g), std::move(phi)};
  }

 private:
  Json bundle_;
  const Options& opt_;
  sgrp::Semigroup s_;
  coeff::DivisionRing d_ = coeff::DivisionRing::quaternions();
  cohom::SearchBounds bounds_;
};

Json witness_json(const sgrp::Semigroup& s, const cohom::GroupElement& g, const sgrp::SemigroupAutomorphism& phi) {
  return {{"g", io::to_json(s, g)}, {"phi", io::to_json(phi)}};
}

cohom::TwoCocycle require_cocycle(const Job& job) {
  auto c = job.cocycle();
  auto report = cohom::verify_two_cocycle(job.s(), job.d(), c);
  if (!report.ok())
    throw Error(Errc::InvalidCocycle, "cocycle: " + report.violations.front().identity + " fails at " +
                                          sgrp::to_string(report.violations.front().tuple));
  return c;
}

Json violations_json(const cohom::CocycleReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations)
    out.push_back({{"identity", v.identity}, {"tuple", sgrp::to_string(v.tuple)}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return out;
}

Result cmd_validate(const Job& job) {
  auto report = sgrp::validate(job.s());
  Json v = Json::array();
  for (const auto& x : report.violations)
    v.push_back({{"kind", x.kind}, {"tuple", sgrp::to_string(x.tuple)}, {"detail", x.detail}});
  Json out{{"valid", report.ok()}, {"violations", v}, {"semigroup", io::to_json(job.s())},
           {"coefficients", io::to_json(job.d())}};
  if (report.ok() && job.has("cocycle")) job.cocycle();  // shape errors surface as input errors
  return {out, report.ok() ? Success : Negative};
}

Result cmd_verify_cocycle(const Job& job) {
  const auto c = job.cocycle();
  auto report = cohom::verify_two_cocycle(job.s(), job.d(), c);
  Json out{{"valid", report.ok()}, {"violations", violations_json(report)}};
  if (report.ok()) {
    out["normal"] = cohom::is_normal(job.s(), c);
    out["trivial_on_blocks"] = cohom::is_trivial_on_blocks(job.s(), c);
  }
  return {out, report.ok() ? Success : Negative};
}

Result cmd_transform(const Job& job, bool blocks) {
  const auto c = require_cocycle(job);
  const auto t = blocks ? cohom::trivialize_on_blocks(job.s(), job.d(), c) : cohom::normalize(job.s(), job.d(), c);
  return {{{"cocycle", io::to_json(job.s(), t.cocycle)},
           {"witness", witness_json(job.s(), t.witness, sgrp::SemigroupAutomorphism::identity(job.s().size()))}},
          Success};
}

Result cmd_cohomologous(const Job& job, const Options& opt, std::istream& in) {
  const auto& s = job.s();
  const auto c1 = require_cocycle(job);
  const auto c2 = job.side_cocycle(opt.target_path, "target", in);
  if (!opt.witness_path.empty() || job.has("witness")) {
    auto [g, phi] = job.witness(in);
    const bool ok = cohom::star(s, job.d(), g, cohom::aut_act(s, phi, c1)) == c2;
    return {{{"valid", ok}}, ok ? Success : Negative};
  }
  std::vector<sgrp::SemigroupAutomorphism> phis{sgrp::SemigroupAutomorphism::identity(s.size())};
  if (opt.phi) phis = sgrp::automorphisms(s, job.bounds().max_aut_n);
  for (const auto& phi : phis)
    if (auto g = cohom::cohomologous(s, job.d(), cohom::aut_act(s, phi, c1), c2, job.bounds()))
      return {{{"cohomologous", true}, {"witness", witness_json(s, *g, phi)}}, Success};
  return {{{"cohomologous", false}}, Negative};
}

Result cmd_aut_s(const Job& job) {
  Json list = Json::array();
  std::size_t normal = 0;
  for (const auto& a : sgrp::automorphisms(job.s(), job.bounds().max_aut_n)) {
    const bool n = sgrp::is_normal(job.s(), a);
    normal += n;
    list.push_back({{"perm", io::to_json(a)}, {"normal", n}});
  }
  return {{{"order", list.size()}, {"normal_order", normal}, {"automorphisms", list}}, Success};
}

Result cmd_stab(const Job& job) {
  const auto c = require_cocycle(job);
  auto perms = [](const std::vector<sgrp::SemigroupAutomorphism>& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(io::to_json(a));
    return out;
  };
  const auto full = cohom::stabilizer(job.s(), job.d(), c, job.bounds(), false);
  const auto normal = cohom::stabilizer(job.s(), job.d(), c, job.bounds(), true);
  return {{{"order", full.size()}, {"normal_order", normal.size()}, {"stabilizer", perms(full)},
           {"normal_stabilizer", perms(normal)}},
          Success};
}

Result cmd_ring_check(const Job& job) {
  const auto c = job.cocycle();
  const auto raw = ring::TwistedRing::raw(job.s(), job.d(), c);
  const auto assoc = ring::check_associativity(raw);
  Json failures = Json::array();
  for (const auto& f : assoc.failures) {
    Json scalars = Json::array();
    for (const auto& x : f.scalars) scalars.push_back(io::to_json(x));
    failures.push_back({{"path", sgrp::to_string(f.path)}, {"scalars", scalars}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  Json out{{"associativity",
            {{"ok", assoc.ok()}, {"checked", assoc.checked}, {"failure_count", assoc.failure_count},
             {"failures", failures}}}};
  const bool valid = cohom::verify_two_cocycle(job.s(), job.d(), c).ok();
  out["cocycle_valid"] = valid;
  if (valid && job.d().is_finite()) {
    try {
      const auto r = ring::TwistedRing::from_cocycle(job.s(), job.d(), c);
      out["idempotent_count"] = ring::idempotents(r, job.bounds()).size();
      out["unit_count"] = ring::units(r, job.bounds()).size();
    } catch (const Error& e) {
      if (e.code() != Errc::SearchBoundExceeded) throw;
      out["counts_skipped"] = e.what();
    }
  }
  return {out, assoc.ok() ? Success : Negative};
}

Result cmd_d_algebra(const Job& job, const Options& opt, std::istream& in) {
  const auto& s = job.s();
  const auto c = require_cocycle(job);
  auto untwisted = [&](const cohom::GroupElement& g) {
    const auto t = cohom::star(s, job.d(), g, c);
    for (const auto& a : t.alpha)
      if (!a.is_identity()) return false;
    for (const auto& x : t.xi)
      if (!job.d().is_central(x)) return false;
    return true;
  };
  if (!opt.witness_path.empty() || job.has("witness")) {
    auto [g, phi] = job.witness(in);
    const bool ok = untwisted(g);
    return {{{"valid", ok}}, ok ? Success : Negative};
  }
  const auto r = ring::TwistedRing::from_cocycle(s, job.d(), c);
  auto w = ring::is_d_algebra(r, job.bounds());
  if (!w) return {{{"d_algebra", false}}, Negative};
  return {{{"d_algebra", true},
           {"witness", witness_json(s, *w, sgrp::SemigroupAutomorphism::identity(s.size()))},
           {"cocycle", io::to_json(s, cohom::star(s, job.d(), *w, c))}},
          Success};
}

Result cmd_h1(const Job& job) {
  const auto c = require_cocycle(job);
  const auto h = cohom::h1(job.s(), job.d(), c, job.bounds());
  Json reps = Json::array();
  for (const auto& g : h.representatives) reps.push_back(io::to_json(job.s(), g));
  return {{{"order", h.order}, {"z1_order", h.z1.size()}, {"b1_order", h.b1.size()}, {"representatives", reps}},
          Success};
}

Result cmd_out_r(const Job& job) {
  const auto c = require_cocycle(job);
  const auto r = ring::TwistedRing::from_cocycle(job.s(), job.d(), c);
  const auto o = autos::out_r(r, job.bounds());
  Json reps = Json::array();
  for (const auto& f : o.representatives) reps.push_back(io::to_json(f));
  return {{{"order", o.order}, {"aut_order", o.automorphisms.size()}, {"representatives", reps}}, Success};
}

Result cmd_verify_ses(const Job& job) {
  const auto c = require_cocycle(job);
  const auto r = ring::TwistedRing::from_cocycle(job.s(), job.d(), c);
  const auto rep = autos::verify_ses(r, job.bounds());
  Json out{{"h1_order", rep.h1_order},
           {"stab_order", rep.stab_order},
           {"stab_full_order", rep.stab_full_order},
           {"out_order", rep.out_order},
           {"aut_s_order", rep.aut_s_order},
           {"aut0_s_order", rep.aut0_s_order},
           {"order_identity", rep.order_identity},
           {"lambda_injective", rep.lambda_injective},
           {"lambda_image_is_kernel", rep.lambda_image_is_kernel},
           {"phi_image_is_stab", rep.phi_image_is_stab},
           {"phi_well_defined", rep.phi_well_defined},
           {"exact", rep.exact()}};
  out["splits"] = rep.splits ? Json(*rep.splits) : Json();
  return {out, rep.exact() ? Success : Negative};
}

Result cmd_boundary(const Job& job) {
  const auto phi = io::parse_cochain(job.s(), job.d(), job.member("cochain"));
  const auto b = cohom::boundary(job.s(), job.d(), phi);
  return {{{"boundary", io::to_json(b)}, {"is_cocycle", cohom::is_abelian_cocycle(job.s(), job.d(), phi)}}, Success};
}

int exit_for(const Error& e) { return e.code() == Errc::SearchBoundExceeded ? BoundExceeded : InputError; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted semigroup rings over square-free semigroups", "sqfree"};
  app.require_subcommand(1);
  Options opt;

  using Handler = std::function<Result(const Job&)>;
  std::map<std::string, Handler> handlers{
      {"validate", cmd_validate},
      {"verify-cocycle", cmd_verify_cocycle},
      {"normalize", [](const Job& j) { return cmd_transform(j, false); }},
      {"trivialize-blocks", [](const Job& j) { return cmd_transform(j, true); }},
      {"cohomologous", [&](const Job& j) { return cmd_cohomologous(j, opt, in); }},
      {"aut-s", cmd_aut_s},
      {"stab", cmd_stab},
      {"ring-check", cmd_ring_check},
      {"d-algebra", [&](const Job& j) { return cmd_d_algebra(j, opt, in); }},
      {"h1", cmd_h1},
      {"out-r", cmd_out_r},
      {"verify-ses", cmd_verify_ses},
      {"boundary", cmd_boundary},
  };
  const std::map<std::string, std::string> help{
      {"validate", "Check the semigroup axioms"},
      {"verify-cocycle", "Check both 2-cocycle identities"},
      {"normalize", "Normal representative with its witness"},
      {"trivialize-blocks", "Representative trivial on every ~-block"},
      {"cohomologous", "Witness for [cocycle] = [target]"},
      {"aut-s", "Automorphisms of S"},
      {"stab", "Stabilizer of the class in Aut S"},
      {"ring-check", "Associativity and element counts of the twisted ring"},
      {"d-algebra", "Witness that the ring is a D-algebra"},
      {"h1", "First cohomology of the cocycle"},
      {"out-r", "Outer automorphism group of the ring"},
      {"verify-ses", "Check 1 -> H^1 -> Out R -> Stab -> 1"},
      {"boundary", "Abelian coboundary of a cochain"},
  };
  for (const auto& [name, _] : handlers) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("bundle", opt.bundle_path, "Job bundle (JSON file, - for standard input)");
    sub->add_flag("--timing", opt.timing, "Add wall-clock time to the report");
    sub->add_option("--bounds.max-units", opt.max_units, "Bound on enumerated ring elements and units");
    sub->add_option("--bounds.max-search", opt.max_search, "Bound on search nodes");
    if (name == "cohomologous") {
      sub->add_option("--target", opt.target_path, "Second cocycle (file)");
      sub->add_flag("--phi", opt.phi, "Also search Aut S for phi");
    }
    if (name == "cohomologous" || name == "d-algebra")
      sub->add_option("--witness", opt.witness_path, "Verify the given witness instead of searching");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return Success;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return InputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Json report;
  int code = Success;
  const auto start = std::chrono::steady_clock::now();
  try {
    Job job(read_json(opt.bundle_path, in), opt, command != "validate");
    auto result = handlers.at(command)(job);
    report = std::move(result.report);
    code = result.code;
    report["bounds"] = io::to_json(job.bounds());
  } catch (const Error& e) {
    err << "sqfree " << command << ": " << e.what() << "\n";
    report = {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    code = exit_for(e);
  } catch (const Json::exception& e) {
    err << "sqfree " << command << ": " << e.what() << "\n";
    report = {{"error", {{"code", "InvalidSpec"}, {"message", e.what()}}}};
    code = InputError;
  } catch (const std::logic_error& e) {
    err << "sqfree " << command << ": internal check failed: " << e.what() << "\n";
    report = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    code = InternalError;
  }
  report["command"] = command;
  if (opt.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace sqfree::cli
