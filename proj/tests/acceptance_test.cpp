// One line per acceptance criterion; exit status is nonzero if any fails.
// Every equality is exact.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cointerval/chaincat/interval.hpp"
#include "cointerval/cli/scenarios.hpp"
#include "cointerval/cocat/cocycle.hpp"
#include "cointerval/cocat/invertible.hpp"
#include "cointerval/cocat/laws.hpp"
#include "cointerval/error.hpp"
#include "cointerval/fincat/enumerate.hpp"
#include "cointerval/fincat/interval.hpp"

using namespace cointerval;
using namespace cointerval::cocat;
using chaincat::ChainContext;
using chaincat::Ring;
using fincat::FinContext;

namespace {

// Records the first failed condition of a criterion.
struct Verdict {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

bool item_passes(const CheckReport& r, const std::string& name) {
  const CheckItem* it = r.find(name);
  return it != nullptr && it->status == Status::Pass;
}

std::vector<fincat::Functor> all_cells(const FinContext& ctx, const Interval<FinContext>& I,
                                       const fincat::CatPtr& B, const fincat::CatPtr& A) {
  const auto e = ctx.enumerate(ctx.tensor(B, I.C1), A);
  if (!e.exhaustive) throw CapExceeded("cell enumeration not exhaustive");
  return e.items;
}

void axiom_suites(Verdict& v) {
  FinContext fc;
  for (const auto& I : {discrete_interval(fc), coproduct_interval(fc), fincat::interval_two(fc),
                        fincat::interval_iso(fc)})
    v.require(check_interval(fc, I).passed(), "cocategory " + I.name);
  for (const auto& ring : {Ring::integers(), Ring::integers_mod(5)}) {
    ChainContext cc(ring);
    const auto I = chaincat::interval_I(ring);
    v.require(check_interval(cc, I).passed(), "cocategory I over " + ring.tag());
    v.require(check_cogroupoid(cc, I, *I.sigma).passed(), "cogroupoid I over " + ring.tag());
  }
  const auto iso = fincat::interval_iso(fc);
  v.require(check_cogroupoid(fc, iso, *iso.sigma).passed(), "cogroupoid iso");
  const auto uu = coproduct_interval(fc);
  v.require(check_cogroupoid(fc, uu, *uu.sigma).passed(), "cogroupoid U+U");
  v.require(find_coinverse(fc, fincat::interval_two(fc)).first == Found::No,
            "2 must have no coinverse");
}

void counterexample(Verdict& v) {
  ChainContext cc(Ring::integers());
  const auto I = chaincat::interval_I(cc.ring());
  const auto cx = chaincat::counterexample_C(cc.ring());
  const auto lam = cc.lambda(cc.tensor(I.C1, I.C1));
  const auto phi = cc.compose(cx.phi, lam), psi = cc.compose(cx.psi, lam);
  const auto bphi = boundary(cc, I, cc.unit(), phi);
  const auto bpsi = boundary(cc, I, cc.unit(), psi);
  v.require(bphi.size() == 4 && bpsi.size() == 4, "four boundary components");
  for (std::size_t k = 0; k < 4 && k < bphi.size(); ++k)
    v.require(cc.equal(bphi[k], bpsi[k]), "boundary component " + std::to_string(k));
  v.require(!(cx.phi.component(2) == cx.psi.component(2)), "phi_2 != psi_2");
  v.require((cx.C.d(1) * cx.C.d(2)).is_zero(), "d1 d2 = 0");
  const CheckReport r = check_representable(
      cc, I, {SquareFamily<ChainContext>{"counterexample", cc.unit(), {phi, psi}, false, {}}});
  v.require(r.info()["verdict"] == "not representable", "verdict not representable");
  const CheckItem* it = r.find("injective-boundaries/family/counterexample");
  v.require(it != nullptr && it->status == Status::Fail, "injective-boundaries fails");
  v.require(it != nullptr && it->witness.is_object(), "witness recorded");
  if (it != nullptr && it->witness.is_object()) {
    const auto& w = it->witness;
    v.require(w.value("square_1", nlohmann::json()) == cc.to_json(phi) &&
                  w.value("square_2", nlohmann::json()) == cc.to_json(psi),
              "witness is (phi, psi)");
  }
}

void representability(Verdict& v) {
  FinContext fc;
  const auto A = fincat::interval_two(fc).C1;
  for (const auto& I : {fincat::interval_two(fc), fincat::interval_iso(fc), coproduct_interval(fc),
                        discrete_interval(fc)}) {
    const CheckReport r = check_representable(fc, I, {all_squares(fc, I, "U->2", fc.unit(), A)});
    v.require(r.passed(), "representable " + I.name);
    for (const char* cond : {"meet", "meet-tau", "join", "join-tau"})
      for (const char* side : {"domain", "codomain"})
        v.require(item_passes(r, std::string("boundary/") + cond + "/" + side),
                  I.name + " boundary " + cond + "/" + side);
  }
}

void lattice_hopf(Verdict& v) {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  ChainContext cc(Ring::integers());
  const CheckReport lt = check_lattice(fc, two);
  const CheckReport lc = check_lattice(cc, chaincat::interval_I(cc.ring()));
  for (const CheckReport* r : {&lt, &lc}) {
    v.require(r->passed(), "lattice");
    for (const char* k : {"idempotent-chain/step3", "absorption/meet-join", "absorption/join-meet",
                          "meet/unit-left", "join/unit-right", "distributivity/meet-over-join",
                          "distributivity/join-over-meet"})
      v.require(item_passes(*r, k), std::string("lattice item ") + k);
  }
  const auto co = comonoid_of(fc, two).first;
  v.require(check_hopf(fc, two.C1, *two.join, two.bot, co).passed(), "Hopf (2, join, bot)");
  v.require(check_hopf(fc, two.C1, *two.meet, two.top, co).passed(), "Hopf (2, meet, top)");
  const auto U = fc.unit();
  const Comonoid<FinContext> trivial{fc.lambda_inv(U), fc.id(U)};
  v.require(check_hopf(fc, U, fc.lambda(U), fc.id(U), trivial).passed(), "trivial Hopf on U");
}

void two_category(Verdict& v) {
  FinContext fc;
  const auto I = fincat::interval_two(fc);
  const auto A = I.C1;
  const auto cs = all_cells(fc, I, A, A);
  const CheckReport r = check_two_category(fc, I, A, cs);
  v.require(r.passed(), "unit, associativity, interchange");
  for (const char* k : {"associativity_instances", "interchange_instances"})
    v.require(r.info()[k].get<std::size_t>() > 0, std::string("nonempty ") + k);
  // Oracle: componentwise composition of the natural transformations.
  Cells<FinContext> cells(fc, I);
  std::size_t pairs = 0;
  for (const auto& x : cs)
    for (const auto& y : cs) {
      if (!fc.equal(cells.cod(A, x), cells.dom(A, y))) continue;
      ++pairs;
      v.require(fincat::cell_components(cells.vcomp(A, x, y)) ==
                    fincat::vertical(A, fincat::cell_components(x), fincat::cell_components(y)),
                "vcomp matches natural-transformation composition");
    }
  v.require(pairs > 0, "composable pairs exist");
}

void cocycles(Verdict& v) {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  for (const auto& B : {fc.unit(), two.C1}) {
    const CheckReport r = check_cocycle(fc, two, B, all_cells(fc, two, B, two.C1));
    v.require(r.passed(), "cocycle identities");
    for (const char* k : {"theta-cocycle", "upsilon-cocycle", "cocycle-square"})
      v.require(r.info()["instances"][k].get<std::size_t>() > 0, std::string("instances ") + k);
  }
}

void phi_psi(Verdict& v) {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto A = two.C1;
  for (const auto& B : {fc.unit(), two.C1}) {
    const auto sq = fc.enumerate(fc.tensor(fc.tensor(B, two.C1), two.C1), A);
    v.require(sq.exhaustive, "square enumeration exhaustive");
    const CheckReport r = check_phi_psi(fc, two, B, all_cells(fc, two, B, A), sq.items,
                                        sq.exhaustive);
    v.require(item_passes(r, "phi-after-psi"), "phi o psi = id");
    v.require(item_passes(r, "psi-after-phi"), "psi o phi = id");
  }
}

void free_J(Verdict& v) {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto iso = fincat::interval_iso(fc);
  const auto F = free_invertible_interval(fc, two);
  v.require(check_interval_iso(fc, F.J, iso).passed(), "J(2) isomorphic to iso");
  v.require(check_J_hopf(fc, two, F).passed(), "J-hopf");
  auto all_equal = [](const nlohmann::json& conds, bool want) {
    if (conds.size() != 4) return false;
    for (const auto& [k, c] : conds.items())
      if (c != want) return false;
    return true;
  };
  v.require(all_equal(check_invertibility(fc, two).info()["conditions"], false), "2: 4x false");
  v.require(all_equal(check_invertibility(fc, F.J).info()["conditions"], true), "J: 4x true");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return in ? ss.str() : std::string();
}

void determinism(Verdict& v) {
  v.require(cli::scenario_names().size() == 10, "ten scenarios");
  for (const auto& name : cli::scenario_names()) {
    const std::string a = cli::render_payload(cli::reproduce(name));
    const std::string b = cli::render_payload(cli::reproduce(name));
    v.require(a == b, name + ": two runs differ");
    v.require(a == slurp(cli::golden_path(name)), name + ": golden mismatch");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"axiom suites", axiom_suites},
      {"counterexample reproduction", counterexample},
      {"representability criterion", representability},
      {"lattice and Hopf suites", lattice_hopf},
      {"2-category laws", two_category},
      {"cocycle lemmas", cocycles},
      {"phi/psi round trip", phi_psi},
      {"free J", free_J},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("threw: ") + e.what());
    }
    failures += !v.ok;
    std::cout << (v.ok ? "PASS " : "FAIL ") << (k + 1) << " " << criteria[k].first;
    if (!v.ok) std::cout << " (" << v.why << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
