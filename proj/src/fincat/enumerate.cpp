#include "cointerval/fincat/enumerate.hpp"

#include <functional>
#include <optional>

#include "cointerval/error.hpp"
#include "cointerval/fincat/constructions.hpp"

namespace cointerval::fincat {

namespace {

void require_finite(const CatPtr& C) {
  if (!C->finite())
    throw CapExceeded(C->name() + " has more than " + std::to_string(C->limits().normal_form_cap) +
                      " normal forms");
}

}  // namespace

std::vector<Functor> enumerate_functors(const CatPtr& C, const CatPtr& D, std::size_t cap) {
  require_finite(C);
  require_finite(D);
  const auto& gens = C->generators();
  const int nObj = int(C->objects().size());
  const int nGen = int(gens.size());
  const int nTarget = int(D->objects().size());

  // Generators whose endpoints are both among the first k objects, by k.
  std::vector<std::vector<int>> closes_at(nObj);
  for (int g = 0; g < nGen; ++g) closes_at[std::max(gens[g].src, gens[g].tgt)].push_back(g);
  // Rules become checkable once their largest letter is assigned.
  std::vector<std::vector<const Rule*>> rules_at(nGen);
  for (const Rule& r : C->rewriting().rules()) {
    int m = 0;
    for (int x : r.lhs) m = std::max(m, x);
    for (int x : r.rhs) m = std::max(m, x);
    rules_at[m].push_back(&r);
  }

  std::vector<Functor> out;
  std::vector<int> obj(nObj);
  std::vector<Path> img(nGen);
  auto image = [&](const Word& w, int src) {
    Path p{obj[src], obj[src], {}};
    for (int x : w) {
      p.word.insert(p.word.end(), img[x].word.begin(), img[x].word.end());
      p.tgt = img[x].tgt;
    }
    return D->normalize(p);
  };
  std::function<void(int)> assign_gen = [&](int g) {
    if (g == nGen) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " functors " + C->name() + " -> " +
                          D->name());
      out.push_back(Functor::unchecked(C, D, obj, img));
      return;
    }
    for (std::size_t m : D->hom(obj[gens[g].src], obj[gens[g].tgt])) {
      img[g] = D->morphisms()[m];
      bool ok = true;
      for (const Rule* r : rules_at[g]) {
        const int src = gens[r->lhs.front()].src;
        if (!(image(r->lhs, src) == image(r->rhs, src))) {
          ok = false;
          break;
        }
      }
      if (ok) assign_gen(g + 1);
    }
  };
  std::function<void(int)> assign_obj = [&](int o) {
    if (o == nObj) return assign_gen(0);
    for (int t = 0; t < nTarget; ++t) {
      obj[o] = t;
      bool ok = true;
      for (int g : closes_at[o])
        if (D->hom(obj[gens[g].src], obj[gens[g].tgt]).empty()) ok = false;
      if (ok) assign_obj(o + 1);
    }
  };
  assign_obj(0);
  return out;
}

bool is_natural(const Functor& F, const Functor& G, const NatTrans& a) {
  const CatPtr& C = F.source();
  const CatPtr& D = F.target();
  if (a.components.size() != C->objects().size()) return false;
  for (int x = 0; x < int(C->objects().size()); ++x) {
    const Path& c = a.components[x];
    if (c.src != F.object(x) || c.tgt != G.object(x)) return false;
  }
  for (int g = 0; g < int(C->generators().size()); ++g) {
    const Generator& gen = C->generators()[g];
    if (!(D->then(F.generator(g), a.components[gen.tgt]) ==
          D->then(a.components[gen.src], G.generator(g))))
      return false;
  }
  return true;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& F, const Functor& G, std::size_t cap) {
  if (!same_category(F.source(), G.source()) || !same_category(F.target(), G.target()))
    throw NonParallel("natural transformations need parallel functors");
  const CatPtr& C = F.source();
  const CatPtr& D = F.target();
  require_finite(D);
  const auto& gens = C->generators();
  const int nObj = int(C->objects().size());
  std::vector<std::vector<int>> closes_at(nObj);
  for (int g = 0; g < int(gens.size()); ++g)
    closes_at[std::max(gens[g].src, gens[g].tgt)].push_back(g);

  std::vector<NatTrans> out;
  NatTrans cur{std::vector<Path>(nObj)};
  std::function<void(int)> assign = [&](int x) {
    if (x == nObj) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " natural transformations");
      out.push_back(cur);
      return;
    }
    for (std::size_t m : D->hom(F.object(x), G.object(x))) {
      cur.components[x] = D->morphisms()[m];
      bool ok = true;
      for (int g : closes_at[x]) {
        const Generator& gen = gens[g];
        if (!(D->then(F.generator(g), cur.components[gen.tgt]) ==
              D->then(cur.components[gen.src], G.generator(g)))) {
          ok = false;
          break;
        }
      }
      if (ok) assign(x + 1);
    }
  };
  assign(0);
  return out;
}

NatTrans vertical(const CatPtr& D, const NatTrans& a, const NatTrans& b) {
  if (a.components.size() != b.components.size())
    throw NonComposable("natural transformations over different sources");
  NatTrans out;
  for (std::size_t x = 0; x < a.components.size(); ++x)
    out.components.push_back(D->then(a.components[x], b.components[x]));
  return out;
}

NatTrans cell_components(const Functor& cell, int g) {
  const Category& P = *cell.source();
  if (!P.product()) throw InvalidMorphism(P.name() + " is not a product category");
  NatTrans out;
  for (int x = 0; x < int(P.product()->left->objects().size()); ++x)
    out.components.push_back(cell.generator(right_generator(P, x, g)));
  return out;
}

Functor inverse_relabelling(const Functor& F) {
  const CatPtr& S = F.source();
  const CatPtr& T = F.target();
  if (S->objects().size() != T->objects().size())
    throw InvalidMorphism("functor is not bijective on objects");
  std::vector<int> obj(T->objects().size(), -1);
  for (int x = 0; x < int(S->objects().size()); ++x) obj[F.object(x)] = x;
  for (int o : obj)
    if (o < 0) throw InvalidMorphism("functor is not bijective on objects");
  std::vector<std::optional<Path>> found(T->generators().size());
  for (int g = 0; g < int(S->generators().size()); ++g) {
    const Path& p = F.generator(g);
    if (p.word.size() == 1 && !found[p.word[0]]) found[p.word[0]] = S->generator(g);
  }
  // Generators not hit letter for letter are images of composites.
  std::vector<Path> gens;
  for (int t = 0; t < int(T->generators().size()); ++t) {
    if (!found[t]) {
      const Path want = T->generator(t);
      for (std::size_t k : S->hom(obj[want.src], obj[want.tgt])) {
        const Path& m = S->morphisms()[k];
        if (F.apply(m) == want) {
          found[t] = m;
          break;
        }
      }
    }
    if (!found[t]) throw InvalidMorphism("functor is not surjective onto " + T->name());
    gens.push_back(*found[t]);
  }
  Functor G(T, S, std::move(obj), std::move(gens));
  if (!(compose(G, F) == Functor::identity(S)))
    throw InvalidMorphism("functor is not injective on " + S->name());
  return G;
}

}  // namespace cointerval::fincat
