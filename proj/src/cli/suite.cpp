#include "cointerval/cli/suite.hpp"

#include <algorithm>
#include <chrono>

#include "cointerval/chaincat/interval.hpp"
#include "cointerval/cocat/cocycle.hpp"
#include "cointerval/cocat/invertible.hpp"
#include "cointerval/error.hpp"
#include "cointerval/fincat/interval.hpp"
#include "cointerval/fincat/parser.hpp"

namespace cointerval::cli {

using cocat::CheckReport;
using cocat::Status;
using nlohmann::json;

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kPass;
    case Status::Fail: return kFail;
    case Status::Inconclusive: return kInconclusive;
  }
  return kFail;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "cocategory", "cogroupoid", "comonoid", "lattice", "lattice-unique", "hopf",
      "representable", "invertibility", "cocycle", "phi-psi", "free-J", "J-hopf"};
  return names;
}

std::vector<std::string> default_checks(bool has_sigma) {
  std::vector<std::string> out{"cocategory", "comonoid", "lattice", "hopf", "representable"};
  if (has_sigma) out.insert(out.begin() + 1, "cogroupoid");
  return out;
}

namespace {

// Checks that need functor categories or quotients.
bool fincat_only(const std::string& check) {
  return check == "cocycle" || check == "phi-psi" || check == "free-J" || check == "J-hopf";
}

}  // namespace

void SuiteConfig::validate() const {
  if (context != "fincat" && context != "chaincat")
    throw ConfigError("unknown context '" + context + "' (expected fincat or chaincat)");
  if (context == "chaincat") chaincat::Ring::parse(ring);
  if (depth_bound == 0) throw ConfigError("depth bound must be positive");
  if (cap == 0) throw ConfigError("cap must be positive");
  if (coeff_box < 0) throw ConfigError("coefficient box must be non-negative");
  if (checks.empty() && !defaults_when_empty) throw ConfigError("no checks selected");
  for (const auto& c : checks) {
    const auto& k = known_checks();
    if (std::find(k.begin(), k.end(), c) == k.end()) throw ConfigError("unknown check '" + c + "'");
    if (context == "chaincat" && fincat_only(c))
      throw ConfigError("check '" + c + "' needs the fincat context");
  }
}

json SuiteConfig::to_json() const {
  json j = {{"context", context}, {"interval", interval}, {"checks", checks},
            {"depth_bound", depth_bound}, {"cap", cap}};
  if (context == "chaincat") {
    j["ring"] = ring;
    j["coeff_box"] = coeff_box;
  }
  return j;
}

std::string render(const Report& r) {
  return json{{"report", r.report}, {"timing", r.timing}}.dump(2) + "\n";
}

std::string render_payload(const Report& r) { return r.report.dump(2) + "\n"; }

namespace {

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t k = 0; k < at; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

template <class Ctx>
struct Subject {
  cocat::Interval<Ctx> I;
  std::vector<cocat::SquareFamily<Ctx>> probes;
};

Subject<fincat::FinContext> fincat_subject(const fincat::FinContext& ctx, const std::string& name,
                                           const std::optional<std::string>& input) {
  using namespace fincat;
  auto build = [&]() -> cocat::Interval<FinContext> {
    if (input) return parse_interval(*input, ctx);
    if (name == "two" || name == "2") return interval_two(ctx);
    if (name == "iso" || name == "I") return interval_iso(ctx);
    if (name == "coproduct" || name == "U+U") return cocat::coproduct_interval(ctx);
    if (name == "discrete") return cocat::discrete_interval(ctx);
    throw ConfigError("unknown fincat interval '" + name +
                      "' (expected two, iso, coproduct, discrete or an input file)");
  };
  Subject<FinContext> s{build(), {}};
  const auto two = interval_two(ctx).C1;
  s.probes.push_back(cocat::all_squares(ctx, s.I, "U->I", ctx.unit(), s.I.C1));
  if (!same_category(two, s.I.C1))
    s.probes.push_back(cocat::all_squares(ctx, s.I, "U->2", ctx.unit(), two));
  return s;
}

// Chaincat input: {"C1", "C2": complexes; "bot", "top", "i", "down", "up",
// "star" and optional "sigma", "meet", "join": per-degree matrix lists;
// optional "probes": {"target": complex, "squares": [maps I (x) I -> target]}}.
Subject<chaincat::ChainContext> chaincat_subject(const chaincat::ChainContext& ctx,
                                                 const std::string& name,
                                                 const std::optional<std::string>& input) {
  using namespace chaincat;
  using Family = cocat::SquareFamily<ChainContext>;
  const auto& ring = ctx.ring();
  const auto U = ctx.unit();
  if (!input) {
    if (name == "I") {
      Subject<ChainContext> s{interval_I(ring), {}};
      const auto cx = counterexample_C(ring);
      const auto lam = ctx.lambda(ctx.tensor(s.I.C1, s.I.C1));
      s.probes.push_back(Family{"counterexample", U,
                                {ctx.compose(cx.phi, lam), ctx.compose(cx.psi, lam)}, false, {}});
      return s;
    }
    if (name == "discrete") return {cocat::discrete_interval(ctx), {}};
    if (name == "coproduct" || name == "U+U") return {cocat::coproduct_interval(ctx), {}};
    throw ConfigError("unknown chaincat interval '" + name +
                      "' (expected I, discrete, coproduct or an input file)");
  }
  const json j = parse_json_text(*input);
  try {
    const auto C1 = complex_from_json(j.at("C1"), ring);
    const auto C2 = complex_from_json(j.at("C2"), ring);
    const auto C11 = ctx.tensor(C1, C1);
    auto map = [&](const char* key, const ChainComplex& s, const ChainComplex& t) {
      return map_from_json(j.at(key), s, t);
    };
    auto opt = [&](const char* key, const ChainComplex& s, const ChainComplex& t) {
      return j.contains(key) ? std::optional(map(key, s, t)) : std::nullopt;
    };
    Subject<ChainContext> s{
        cocat::Interval<ChainContext>{{U, C1, C2, map("bot", U, C1), map("top", U, C1),
                                       map("i", C1, U), map("down", C1, C2), map("up", C1, C2),
                                       map("star", C1, C2)},
                                      j.value("name", std::string("input")),
                                      opt("sigma", C1, C1),
                                      opt("meet", C11, C1),
                                      opt("join", C11, C1)},
        {}};
    if (j.contains("probes")) {
      const auto& p = j.at("probes");
      const auto A = complex_from_json(p.at("target"), ring);
      const auto lam = ctx.lambda(C11);
      Family fam{"input", U, {}, false, {}};
      for (const auto& sq : p.at("squares"))
        fam.squares.push_back(ctx.compose(map_from_json(sq, C11, A), lam));
      s.probes.push_back(std::move(fam));
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("chaincat input: ") + e.what());
  }
}

template <class Ctx>
CheckReport cogroupoid_or_search(const Ctx& ctx, const cocat::Interval<Ctx>& I) {
  if (I.sigma) return cocat::check_cogroupoid(ctx, I, *I.sigma);
  auto [found, sigma] = cocat::find_coinverse(ctx, I);
  if (found == cocat::Found::Yes) {
    CheckReport r = cocat::check_cogroupoid(ctx, I, *sigma);
    r.info()["sigma"] = ctx.to_json(*sigma);
    return r;
  }
  CheckReport r("cogroupoid");
  if (found == cocat::Found::No)
    r.fail("coinverse", {{"sigma", nullptr}}, "no map I -> I is a coinverse");
  else
    r.inconclusive("coinverse", "no coinverse among the enumerated maps; search not exhaustive");
  return r;
}

template <class Ctx>
CheckReport hopf_both(const Ctx& ctx, const cocat::Interval<Ctx>& I) {
  if (!I.meet || !I.join) throw MissingLattice(I.name + " carries no meet and join");
  CheckReport r("hopf");
  const auto [co, rep] = cocat::comonoid_of(ctx, I);
  r.merge(rep, "comonoid");
  r.merge(cocat::check_hopf(ctx, I.C1, *I.meet, I.top, co), "meet-top");
  r.merge(cocat::check_hopf(ctx, I.C1, *I.join, I.bot, co), "join-bot");
  return r;
}

template <class Ctx>
CheckReport generic_check(const std::string& name, const Ctx& ctx, const Subject<Ctx>& s) {
  const auto& I = s.I;
  if (name == "cocategory") return cocat::check_interval(ctx, I);
  if (name == "cogroupoid") return cogroupoid_or_search(ctx, I);
  if (name == "comonoid") return cocat::comonoid_of(ctx, I).second;
  if (name == "lattice") return cocat::check_lattice(ctx, I);
  if (name == "lattice-unique") return cocat::check_lattice_uniqueness(ctx, I);
  if (name == "hopf") return hopf_both(ctx, I);
  if (name == "representable") return cocat::check_representable(ctx, I, s.probes);
  if (name == "invertibility") return cocat::check_invertibility(ctx, I);
  throw ConfigError("check '" + name + "' is not available here");
}

CheckReport fincat_check(const std::string& name, const fincat::FinContext& ctx,
                         const Subject<fincat::FinContext>& s) {
  const auto& I = s.I;
  const auto U = ctx.unit();
  if (name == "cocycle" || name == "phi-psi") {
    const auto cells = ctx.enumerate(ctx.tensor(U, I.C1), I.C1);
    if (!cells.exhaustive) {
      CheckReport r(name);
      r.inconclusive("cells", "cell enumeration not exhaustive");
      return r;
    }
    if (name == "cocycle") return cocat::check_cocycle(ctx, I, U, cells.items);
    const auto sq = ctx.enumerate(ctx.tensor(ctx.tensor(U, I.C1), I.C1), I.C1);
    return cocat::check_phi_psi(ctx, I, U, cells.items, sq.items, sq.exhaustive);
  }
  if (name == "free-J") {
    const auto F = cocat::free_invertible_interval(ctx, I);
    CheckReport r("free-J");
    r.merge(F.steps, "construction");
    r.merge(cocat::check_interval(ctx, F.J), "cocategory");
    r.merge(cocat::check_cogroupoid(ctx, F.J, *F.J.sigma), "cogroupoid");
    r.merge(cocat::check_interval_map(ctx, I, F.J, F.iota), "iota");
    r.info()["objects"] = F.J.C1->objects().size();
    r.info()["morphisms"] = F.J.C1->morphisms().size();
    return r;
  }
  if (name == "J-hopf") return cocat::check_J_hopf(ctx, I, cocat::free_invertible_interval(ctx, I));
  return generic_check(name, ctx, s);
}

// Runs one check, mapping bounded-search errors to inconclusive and any
// other library error to a failed item.
template <class F>
CheckReport guarded(const std::string& name, F&& run) {
  try {
    return run();
  } catch (const DepthExceeded& e) {
    CheckReport r(name);
    r.inconclusive("run", e.what());
    return r;
  } catch (const CapExceeded& e) {
    CheckReport r(name);
    r.inconclusive("run", e.what());
    return r;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    CheckReport r(name);
    r.fail("run", {{"error", e.what()}});
    return r;
  }
}

template <class Ctx, class RunCheck>
Report assemble(const SuiteConfig& config, const Ctx& ctx, const Subject<Ctx>& s,
                std::vector<std::string> checks, RunCheck&& run_check) {
  Report out;
  json results = json::array();
  Status overall = Status::Pass;
  for (const auto& name : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r = guarded(name, [&] { return run_check(name); });
    const auto t1 = std::chrono::steady_clock::now();
    out.timing[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    results.push_back(r.to_json());
    const Status st = r.status();
    if (st == Status::Fail || (st == Status::Inconclusive && overall == Status::Pass)) overall = st;
  }
  json cfg = config.to_json();
  cfg["checks"] = checks;
  out.report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                {"config", cfg},
                {"interval", {{"name", s.I.name}, {"C1", ctx.to_json(s.I.C1)}}},
                {"results", results},
                {"verdict", cocat::to_string(overall)}};
  out.status = overall;
  return out;
}

Report setup_inconclusive(const SuiteConfig& config, const std::string& why) {
  CheckReport r("setup");
  r.inconclusive("build", why);
  Report out;
  out.status = Status::Inconclusive;
  out.report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                {"config", config.to_json()},
                {"interval", nullptr},
                {"results", json::array({r.to_json()})},
                {"verdict", cocat::to_string(out.status)}};
  return out;
}

}  // namespace

Report run_suite(const SuiteConfig& config, const std::optional<std::string>& input) {
  config.validate();
  std::vector<std::string> checks;
  for (const auto& c : config.checks)
    if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
  if (!input && config.interval.empty()) throw ConfigError("no interval named and no input file");

  // Bounds hit while building the subject make the whole run inconclusive.
  auto bounded = [&](const auto& run) -> Report {
    try {
      return run();
    } catch (const DepthExceeded& e) {
      return setup_inconclusive(config, e.what());
    } catch (const CapExceeded& e) {
      return setup_inconclusive(config, e.what());
    }
  };
  if (config.context == "fincat") {
    return bounded([&] {
      fincat::Limits limits{config.depth_bound, config.cap};
      fincat::FinContext ctx(limits, config.cap);
      const auto s = fincat_subject(ctx, config.interval, input);
      if (checks.empty()) checks = default_checks(s.I.sigma.has_value());
      return assemble(config, ctx, s, checks,
                      [&](const std::string& name) { return fincat_check(name, ctx, s); });
    });
  }
  return bounded([&] {
    chaincat::ChainContext ctx(chaincat::Ring::parse(config.ring), chaincat::kDefaultMaxDeg,
                               config.coeff_box, config.cap);
    const auto s = chaincat_subject(ctx, config.interval, input);
    if (checks.empty()) checks = default_checks(s.I.sigma.has_value());
    return assemble(config, ctx, s, checks,
                    [&](const std::string& name) { return generic_check(name, ctx, s); });
  });
}

}  // namespace cointerval::cli
