#include "doctest.h"

#include "cointerval/error.hpp"
#include "cointerval/fincat/interval.hpp"
#include "cointerval/fincat/parser.hpp"

using namespace cointerval;
using namespace cointerval::fincat;

namespace {

CatPtr two() { return Category::presented("2", {"bot", "top"}, {{"u", 0, 1}}, {}); }

CatPtr cycle() {
  return Category::presented("K", {"bot", "top"}, {{"u", 0, 1}, {"d", 1, 0}}, {});
}

Functor point(const CatPtr& C, int obj) { return Functor(terminal_category(), C, {obj}, {}); }

// Number of morphisms between each ordered pair of objects.
std::vector<std::size_t> hom_sizes(const CatPtr& C) {
  std::vector<std::size_t> out;
  for (int x = 0; x < int(C->objects().size()); ++x)
    for (int y = 0; y < int(C->objects().size()); ++y) out.push_back(C->hom(x, y).size());
  return out;
}

}  // namespace

TEST_CASE("normal forms") {
  CatPtr K = cycle();
  CHECK(K->normalize(Path{0, 0, {}}).word.empty());
  // Free on a 2-cycle: alternating words are already reduced.
  Path udu{0, 1, {0, 1, 0}};
  CHECK(K->normalize(udu) == udu);
  CHECK_FALSE(K->finite());
  CHECK_THROWS_AS(K->normalize(Path{0, 0, {0, 0}}), NonComposable);

  FinContext ctx;
  auto I = interval_iso(ctx);
  CHECK(I.C1->normalize(Path{1, 1, {1, 0}}).word.empty());
  CHECK(I.C1->normalize(Path{0, 1, {0, 1, 0, 1, 0}}).word == Word{0});
  CHECK(I.C1->morphisms().size() == 4);

  // normalize(v w) = normalize(normalize(v) normalize(w)) on every pair of short words.
  std::vector<Path> words;
  for (int len = 0; len <= 4; ++len)
    for (int start = 0; start < 2; ++start) {
      Path p{start, start, {}};
      for (int k = 0; k < len; ++k) {
        p.word.push_back(p.tgt == 0 ? 0 : 1);
        p.tgt = 1 - p.tgt;
      }
      words.push_back(p);
    }
  for (const Path& v : words)
    for (const Path& w : words) {
      if (v.tgt != w.src) continue;
      Path vw{v.src, w.tgt, v.word};
      vw.word.insert(vw.word.end(), w.word.begin(), w.word.end());
      CHECK(I.C1->normalize(vw) == I.C1->then(I.C1->normalize(v), I.C1->normalize(w)));
      CHECK(I.C1->normalize(I.C1->normalize(vw)) == I.C1->normalize(vw));
    }
}

TEST_CASE("pushouts of categories") {
  CatPtr T = two();
  Cospan p = pushout(point(T, 1), point(T, 0));
  CHECK(p.object->objects().size() == 3);
  CHECK(p.object->generators().size() == 2);
  CHECK(p.object->rewriting().rules().empty());
  CHECK(compose(p.in_f, point(T, 1)) == compose(p.in_g, point(T, 0)));

  // Universal property on every cocone into 2.
  int cocones = 0;
  for (const Functor& h : enumerate_functors(T, T))
    for (const Functor& k : enumerate_functors(T, T)) {
      if (h.object(1) != k.object(0)) {
        CHECK_THROWS_AS(induced_functor(p.object, {p.in_f, p.in_g}, {h, k}), NonCommutingCocone);
        continue;
      }
      ++cocones;
      Functor m = induced_functor(p.object, {p.in_f, p.in_g}, {h, k});
      CHECK(compose(m, p.in_f) == h);
      CHECK(compose(m, p.in_g) == k);
      int matches = 0;
      for (const Functor& other : enumerate_functors(p.object, T))
        if (compose(other, p.in_f) == h && compose(other, p.in_g) == k) ++matches;
      CHECK(matches == 1);
    }
  CHECK(cocones == 4);

  Functor id = Functor::identity(T);
  Cospan q = pushout(id, id);
  // The apex is a copy of 2 with a redundant generator; the comparison maps are inverse.
  CHECK(q.object->morphisms().size() == 3);
  Functor back = induced_functor(q.object, {q.in_f, q.in_g}, {id, id});
  CHECK(compose(back, q.in_f) == id);
  CHECK(compose(q.in_f, back) == Functor::identity(q.object));

  FinContext ctx;
  auto I = interval_iso(ctx);
  CHECK(I.C2->morphisms().size() == 9);
  CHECK(hom_sizes(I.C2) == std::vector<std::size_t>(9, 1));
}

TEST_CASE("quotients") {
  CatPtr K = cycle();
  Functor q = quotient_by_paths(K, {{Path{1, 1, {1, 0}}, Path{1, 1, {}}},
                                    {Path{0, 0, {0, 1}}, Path{0, 0, {}}}});
  CHECK(q.target()->objects().size() == 2);
  CHECK(q.target()->morphisms().size() == 4);

  FinContext ctx;
  Functor again = quotient_by_paths(q.target(), {{Path{0, 0, {0, 1}}, Path{0, 0, {}}}});
  CHECK(again.target()->morphisms().size() == 4);
  CHECK(same_category(again.target(), q.target()));

  CatPtr T = two();
  CHECK_THROWS_AS(quotient_by_paths(T, {{Path{0, 1, {0}}, Path{0, 0, {}}}}), NonParallel);
}

TEST_CASE("enumeration") {
  CatPtr T = two();
  auto fs = enumerate_functors(T, T);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].object_map() == std::vector<int>{0, 0});
  CHECK(fs[1].object_map() == std::vector<int>{0, 1});
  CHECK(fs[2].object_map() == std::vector<int>{1, 1});
  const Functor& id = fs[1];
  const Functor& const_top = fs[2];
  const Functor& const_bot = fs[0];
  auto a = enumerate_nat_trans(id, const_top);
  REQUIRE(a.size() == 1);
  CHECK(a[0].components[0].word == Word{0});
  CHECK(a[0].components[1].word.empty());
  CHECK(enumerate_nat_trans(const_top, const_bot).empty());
  CHECK_THROWS_AS(enumerate_functors(cycle(), T), CapExceeded);
  CHECK_THROWS_AS(enumerate_functors(T, T, 2), CapExceeded);

  // Brute force over all assignments agrees with the backtracking count.
  FinContext ctx;
  CatPtr TT = ctx.tensor(T, T);
  std::size_t brute = 0;
  const auto& mor = T->morphisms();
  std::vector<std::size_t> pick(TT->generators().size(), 0);
  for (int o = 0; o < 16; ++o) {
    std::vector<int> obj = {o & 1, (o >> 1) & 1, (o >> 2) & 1, (o >> 3) & 1};
    std::function<void(std::size_t, std::vector<Path>&)> rec = [&](std::size_t g,
                                                                  std::vector<Path>& img) {
      if (g == pick.size()) {
        try {
          Functor(TT, T, obj, img);
          ++brute;
        } catch (const InvalidMorphism&) {
        }
        return;
      }
      for (const Path& m : mor) {
        if (m.src != obj[TT->generators()[g].src] || m.tgt != obj[TT->generators()[g].tgt]) continue;
        img.push_back(m);
        rec(g + 1, img);
        img.pop_back();
      }
    };
    std::vector<Path> img;
    rec(0, img);
  }
  CHECK(enumerate_functors(TT, T).size() == brute);
  CHECK(brute == 6);
}

TEST_CASE("cartesian structure") {
  FinContext ctx;
  CatPtr T = two();
  CatPtr UT = ctx.tensor(ctx.unit(), T);
  CHECK(UT->objects().size() == 2);
  CHECK(compose(ctx.lambda(T), ctx.lambda_inv(T)) == ctx.id(T));
  CHECK(compose(ctx.lambda_inv(T), ctx.lambda(T)) == ctx.id(UT));
  CHECK(compose(ctx.rho(T), ctx.rho_inv(T)) == ctx.id(T));

  CatPtr TT = ctx.tensor(T, T);
  CHECK(TT->morphisms().size() == 9);
  Functor tau = ctx.tau(T, T);
  CHECK(compose(tau, tau) == ctx.id(TT));
  CHECK(tau.object(product_object(*TT, 0, 1)) == product_object(*TT, 1, 0));

  Functor a = ctx.alpha(T, T, T);
  CHECK(compose(ctx.alpha_inv(T, T, T), a) == ctx.id(ctx.tensor(TT, T)));
  CHECK(ctx.tensor(TT, T)->morphisms().size() == 27);

  // Naturality of the symmetry on every pair of endofunctors of 2.
  for (const Functor& f : enumerate_functors(T, T))
    for (const Functor& g : enumerate_functors(T, T))
      CHECK(compose(tau, ctx.tensor(f, g)) == compose(ctx.tensor(g, f), tau));

  auto c = ctx.coproduct(ctx.unit(), ctx.unit());
  CHECK(c.object->objects().size() == 2);
  CHECK(c.object->morphisms().size() == 2);
}

TEST_CASE("intervals 2 and I") {
  FinContext ctx;
  auto T = interval_two(ctx);
  CHECK(T.C2->objects().size() == 3);
  CHECK(T.star.generator(0).word.size() == 2);
  REQUIRE(T.meet);
  REQUIRE(T.join);
  CatPtr TT = ctx.tensor(T.C1, T.C1);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      const int o = product_object(*TT, s, t);
      CHECK(T.join->object(o) == ((s == 0 && t == 0) ? 0 : 1));
      CHECK(T.meet->object(o) == ((s == 1 && t == 1) ? 1 : 0));
    }
  CHECK_FALSE(T.sigma);

  auto I = interval_iso(ctx);
  REQUIRE(I.sigma);
  CHECK(compose(*I.sigma, *I.sigma) == ctx.id(I.C1));
  CHECK(compose(*I.sigma, I.bot) == I.top);
}

TEST_CASE("text format") {
  const std::string text =
      "# the walking isomorphism\n"
      "obj bot\nobj top\n"
      "gen u: bot -> top\n"
      "gen d: top -> bot\n"
      "rel u;d = id_bot\n"
      "rel d ; u = id\n";
  CatPtr C = parse_category(text);
  CHECK(C->morphisms().size() == 4);

  auto err = [](const std::string& t) {
    try {
      parse_category(t);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  CHECK(err("obj a\ngen f: a -> b\n") == std::make_pair(2, 13));
  CHECK(err("obj a\nfoo\n") == std::make_pair(2, 1));
  CHECK(err("obj a\nobj b\ngen f: a -> b\nrel f = id_a\n") == std::make_pair(4, 5));
  CHECK(err("obj a\ngen f: a -> a\nrel f;g = f\n") == std::make_pair(3, 7));
  CHECK(err("obj a\ngen f a -> a\n") == std::make_pair(2, 7));

  FinContext ctx;
  auto I = parse_interval(text +
                              "interval J\n"
                              "star u = u.1;u.2\n"
                              "star d = d.2;d.1\n"
                              "sigma obj bot = top\nsigma obj top = bot\n"
                              "sigma u = d\nsigma d = u\n",
                          ctx);
  CHECK(I.name == "J");
  CHECK(I.sigma);
  CHECK(I.meet);
  auto ref = interval_iso(ctx);
  CHECK(same_category(I.C1, ref.C1));
  CHECK(I.star == ref.star);
  CHECK_THROWS_AS(parse_interval(text + "star u = u.1;u.3\n", ctx), ParseError);
}
