#include "cointerval/cli/scenarios.hpp"

#include <chrono>
#include <functional>

#include "cointerval/chaincat/interval.hpp"
#include "cointerval/cocat/invertible.hpp"
#include "cointerval/cocat/laws.hpp"
#include "cointerval/error.hpp"
#include "cointerval/fincat/enumerate.hpp"
#include "cointerval/fincat/interval.hpp"

#ifndef COINTERVAL_GOLDEN_DIR
#define COINTERVAL_GOLDEN_DIR "tests/golden"
#endif

namespace cointerval::cli {

using cocat::CheckReport;
using cocat::Status;
using json = nlohmann::json;

namespace {

// Collects cases; a case reproduces when its status equals the expected one.
class Scenario {
 public:
  explicit Scenario(std::string name) : name_(std::move(name)) {}

  void suite(const std::string& label, SuiteConfig config, Status expected) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = run_suite(config);
    tick(label, t0);
    push(label, r.report, r.status, expected);
  }

  void check(const std::string& label, const std::function<CheckReport()>& run, Status expected) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r = run();
    tick(label, t0);
    push(label, r.to_json(), r.status(), expected);
  }

  json& facts() { return facts_; }

  Report finish() {
    Report out;
    out.status = all_ ? Status::Pass : Status::Fail;
    out.timing = timing_;
    out.report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                  {"scenario", name_},
                  {"cases", cases_},
                  {"facts", facts_},
                  {"verdict", cocat::to_string(out.status)}};
    return out;
  }

 private:
  void tick(const std::string& label, std::chrono::steady_clock::time_point t0) {
    timing_[label] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  void push(const std::string& label, json report, Status got, Status expected) {
    const bool ok = got == expected;
    all_ = all_ && ok;
    cases_.push_back({{"label", label},
                      {"expected", cocat::to_string(expected)},
                      {"status", cocat::to_string(got)},
                      {"reproduced", ok},
                      {"report", std::move(report)}});
  }

  std::string name_;
  json cases_ = json::array();
  json facts_ = json::object();
  json timing_ = json::object();
  bool all_ = true;
};

SuiteConfig fin(const std::string& interval, std::vector<std::string> checks) {
  SuiteConfig c;
  c.interval = interval;
  c.checks = std::move(checks);
  return c;
}

SuiteConfig chain(const std::string& ring, const std::string& interval,
                  std::vector<std::string> checks) {
  SuiteConfig c;
  c.context = "chaincat";
  c.ring = ring;
  c.interval = interval;
  c.checks = std::move(checks);
  return c;
}

const std::vector<std::string> kAxioms = {"cocategory", "cogroupoid", "comonoid", "lattice",
                                          "hopf"};

void discrete_interval(Scenario& s) {
  auto checks = kAxioms;
  checks.push_back("representable");
  checks.push_back("invertibility");
  s.suite("fincat", fin("discrete", checks), Status::Pass);
  s.suite("chaincat-Z", chain("Z", "discrete", kAxioms), Status::Pass);
}

void coproduct_interval(Scenario& s) {
  auto checks = kAxioms;
  checks.push_back("representable");
  checks.push_back("invertibility");
  s.suite("fincat", fin("coproduct", checks), Status::Pass);
  s.suite("chaincat-Z", chain("Z", "coproduct", kAxioms), Status::Pass);
}

// Vertical composites of functors 2 (x) 2 -> 2, compared with composites of
// natural transformations computed componentwise.
CheckReport nat_trans_oracle() {
  fincat::FinContext ctx;
  const auto I = fincat::interval_two(ctx);
  const auto A = I.C1;
  cocat::Cells<fincat::FinContext> cells(ctx, I);
  CheckReport r("nat-trans-oracle");
  const auto cs = ctx.enumerate(ctx.tensor(A, I.C1), A);
  std::size_t pairs = 0;
  cells.guard(r, "vertical", [&] {
    for (const auto& x : cs.items)
      for (const auto& y : cs.items) {
        if (!ctx.equal(cells.cod(A, x), cells.dom(A, y))) continue;
        ++pairs;
        const auto got = fincat::cell_components(cells.vcomp(A, x, y));
        const auto want =
            fincat::vertical(A, fincat::cell_components(x), fincat::cell_components(y));
        if (!(got == want)) {
          r.fail("vertical", {{"x", ctx.to_json(x)}, {"y", ctx.to_json(y)}});
          return;
        }
      }
    r.pass("vertical");
  });
  r.info()["cells"] = cs.items.size();
  r.info()["composable_pairs"] = pairs;
  return r;
}

void cat_two(Scenario& s) {
  s.suite("axioms", fin("two", {"cocategory", "comonoid", "lattice", "lattice-unique", "hopf",
                             "representable"}),
          Status::Pass);
  s.suite("cogroupoid", fin("two", {"cogroupoid"}), Status::Fail);
  s.check("two-category", [] {
    fincat::FinContext ctx;
    const auto I = fincat::interval_two(ctx);
    return cocat::check_two_category(ctx, I, I.C1, ctx.enumerate(ctx.tensor(I.C1, I.C1), I.C1).items);
  }, Status::Pass);
  s.check("nat-trans-oracle", nat_trans_oracle, Status::Pass);
}

void cat_iso(Scenario& s) {
  auto checks = kAxioms;
  checks.push_back("lattice-unique");
  checks.push_back("representable");
  checks.push_back("invertibility");
  s.suite("axioms", fin("iso", checks), Status::Pass);
  s.check("two-category", [] {
    fincat::FinContext ctx;
    const auto I = fincat::interval_iso(ctx);
    const auto A = fincat::interval_two(ctx).C1;
    return cocat::check_two_category(ctx, I, A, ctx.enumerate(ctx.tensor(A, I.C1), A).items);
  }, Status::Pass);
}

void chain_interval(Scenario& s) {
  for (const char* ring : {"Z", "Zmod:5", "Q"})
    s.suite(std::string("I-") + ring, chain(ring, "I", {"cocategory", "comonoid", "lattice", "hopf"}),
            Status::Pass);
}

void chain_counterexample(Scenario& s) {
  s.suite("representable", chain("Z", "I", {"representable"}), Status::Fail);
  using namespace chaincat;
  const ChainContext ctx(Ring::integers());
  const auto I = interval_I(ctx.ring());
  const auto cx = counterexample_C(ctx.ring());
  const auto lam = ctx.lambda(ctx.tensor(I.C1, I.C1));
  const auto bphi = cocat::boundary(ctx, I, ctx.unit(), ctx.compose(cx.phi, lam));
  const auto bpsi = cocat::boundary(ctx, I, ctx.unit(), ctx.compose(cx.psi, lam));
  bool same = bphi.size() == bpsi.size();
  for (std::size_t k = 0; same && k < bphi.size(); ++k) same = ctx.equal(bphi[k], bpsi[k]);
  auto& f = s.facts();
  f["C"] = complex_to_json(cx.C);
  f["phi_2"] = matrix_to_json(cx.phi.component(2));
  f["psi_2"] = matrix_to_json(cx.psi.component(2));
  f["degree_2_differs"] = !(cx.phi.component(2) == cx.psi.component(2));
  f["boundaries_equal"] = same;
  f["d1_d2_zero"] = (cx.C.d(1) * cx.C.d(2)).is_zero();
}

void free_J_from_two(Scenario& s) {
  s.suite("free-J", fin("two", {"free-J"}), Status::Pass);
  fincat::FinContext ctx;
  const auto two = fincat::interval_two(ctx);
  const auto F = cocat::free_invertible_interval(ctx, two);
  s.check("iso-to-I", [&] {
    return cocat::check_interval_iso(ctx, F.J, fincat::interval_iso(ctx));
  }, Status::Pass);
  s.check("sigma", [&] { return cocat::check_cogroupoid(ctx, F.J, *F.J.sigma); }, Status::Pass);
  auto& f = s.facts();
  f["objects"] = F.J.C1->objects().size();
  f["morphisms"] = F.J.C1->morphisms().size();
}

void invertibility_ladder(Scenario& s) {
  s.suite("two", fin("two", {"invertibility"}), Status::Pass);
  s.suite("iso", fin("iso", {"invertibility"}), Status::Pass);
  fincat::FinContext ctx;
  auto& f = s.facts();
  f["two"] = cocat::check_invertibility(ctx, fincat::interval_two(ctx)).info()["conditions"];
  f["iso"] = cocat::check_invertibility(ctx, fincat::interval_iso(ctx)).info()["conditions"];
}

void cocycle_lemmas(Scenario& s) {
  for (const char* name : {"two", "iso"})
    s.suite(name, fin(name, {"cocycle", "phi-psi"}), Status::Pass);
}

void hopf_structures(Scenario& s) {
  for (const char* name : {"two", "iso", "coproduct"})
    s.suite(name, fin(name, {"comonoid", "hopf"}), Status::Pass);
  s.suite("chain-I-Z", chain("Z", "I", {"hopf"}), Status::Pass);
  s.suite("J-two", fin("two", {"J-hopf"}), Status::Pass);
}

using Runner = void (*)(Scenario&);

const std::vector<std::pair<std::string, Runner>>& table() {
  static const std::vector<std::pair<std::string, Runner>> t = {
      {"discrete-interval", discrete_interval},
      {"coproduct-interval", coproduct_interval},
      {"cat-two", cat_two},
      {"cat-iso", cat_iso},
      {"chain-interval", chain_interval},
      {"chain-counterexample", chain_counterexample},
      {"free-J-from-two", free_J_from_two},
      {"invertibility-ladder", invertibility_ladder},
      {"cocycle-lemmas", cocycle_lemmas},
      {"hopf-structures", hopf_structures},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, _] : table()) v.push_back(n);
    return v;
  }();
  return names;
}

Report reproduce(const std::string& name) {
  for (const auto& [n, run] : table()) {
    if (n != name) continue;
    Scenario s(n);
    run(s);
    return s.finish();
  }
  throw UnknownScenario("unknown scenario '" + name + "'");
}

std::string golden_path(const std::string& name) {
  return std::string(COINTERVAL_GOLDEN_DIR) + "/" + name + ".json";
}

}  // namespace cointerval::cli
