#include "cointerval/fincat/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cointerval/error.hpp"

namespace cointerval::fincat {

namespace {

const ProductInfo& factors(const Category& P) {
  if (!P.product()) throw InvalidMorphism(P.name() + " is not a product category");
  return *P.product();
}

struct GenCode {
  bool left;
  int a_or_x, y_or_b;
};

GenCode decode(const Category& P, int k) {
  const ProductInfo& f = factors(P);
  const int nObjR = int(f.right->objects().size());
  const int nL = int(f.left->generators().size()) * nObjR;
  if (k < nL) return {true, k / nObjR, k % nObjR};
  const int nGenR = int(f.right->generators().size());
  return {false, (k - nL) / nGenR, (k - nL) % nGenR};
}

std::pair<int, int> decode_object(const Category& P, int o) {
  const int nR = int(factors(P).right->objects().size());
  return {o / nR, o % nR};
}

// Functor relabelling objects and generators one-to-one.
Functor relabel(const CatPtr& S, const CatPtr& T, std::vector<int> obj, const std::vector<int>& gens) {
  std::vector<Path> g;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Generator& sg = S->generators()[k];
    g.push_back(Path{obj[sg.src], obj[sg.tgt], {gens[k]}});
  }
  return Functor(S, T, std::move(obj), std::move(g));
}

std::vector<int> iota(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::string> disambiguate(std::vector<std::string> names,
                                      const std::vector<int>& side) {
  std::map<std::string, int> count;
  for (const auto& n : names) ++count[n];
  for (std::size_t i = 0; i < names.size(); ++i)
    if (count[names[i]] > 1) names[i] += "." + std::to_string(side[i]);
  return names;
}

}  // namespace

CatPtr terminal_category() {
  return Category::from_complete("1", {"*"}, {}, RewriteSystem());
}

int product_object(const Category& P, int x, int y) {
  return x * int(factors(P).right->objects().size()) + y;
}

int left_generator(const Category& P, int a, int y) {
  return a * int(factors(P).right->objects().size()) + y;
}

int right_generator(const Category& P, int x, int b) {
  const ProductInfo& f = factors(P);
  return int(f.left->generators().size() * f.right->objects().size()) +
         x * int(f.right->generators().size()) + b;
}

CatPtr product(const CatPtr& A, const CatPtr& B, const Limits& limits) {
  const auto& tA = A->morphisms();
  const auto& tB = B->morphisms();
  const int nA = int(A->objects().size()), nB = int(B->objects().size());
  std::vector<std::string> objects;
  for (int x = 0; x < nA; ++x)
    for (int y = 0; y < nB; ++y)
      objects.push_back("(" + A->objects()[x] + "," + B->objects()[y] + ")");
  std::vector<Generator> gens;
  for (const auto& g : A->generators())
    for (int y = 0; y < nB; ++y)
      gens.push_back({"(" + g.name + "," + B->objects()[y] + ")", g.src * nB + y, g.tgt * nB + y});
  for (int x = 0; x < nA; ++x)
    for (const auto& g : B->generators())
      gens.push_back({"(" + A->objects()[x] + "," + g.name + ")", x * nB + g.src, x * nB + g.tgt});

  // Composition tables of the factors: index of m then generator.
  auto step_table = [](const CatPtr& C) {
    const auto& t = C->morphisms();
    std::vector<std::vector<std::size_t>> out(t.size(),
                                              std::vector<std::size_t>(C->generators().size()));
    for (std::size_t m = 0; m < t.size(); ++m)
      for (std::size_t g = 0; g < C->generators().size(); ++g)
        if (C->generators()[g].src == t[m].tgt)
          out[m][g] = C->morphism_index(C->then(t[m], C->generator(int(g))));
    return out;
  };
  const auto stepA = step_table(A), stepB = step_table(B);

  // Shortlex-first words per value become normal forms; every other one-letter
  // extension of a normal form becomes a rule into the normal form.
  using Value = std::pair<std::size_t, std::size_t>;
  std::map<Value, Word> canon;
  std::deque<std::pair<Value, int>> queue;  // value and its product target object
  std::vector<Rule> rules;
  for (int x = 0; x < nA; ++x)
    for (int y = 0; y < nB; ++y) {
      Value v{A->morphism_index(A->identity(x)), B->morphism_index(B->identity(y))};
      canon[v] = {};
      queue.emplace_back(v, x * nB + y);
    }
  const int nLeft = int(A->generators().size()) * nB;
  while (!queue.empty()) {
    auto [v, at] = queue.front();
    queue.pop_front();
    const Word w = canon[v];
    for (int k = 0; k < int(gens.size()); ++k) {
      if (gens[k].src != at) continue;
      Value nv = v;
      if (k < nLeft)
        nv.first = stepA[v.first][k / nB];
      else
        nv.second = stepB[v.second][(k - nLeft) % int(B->generators().size())];
      Word nw = w;
      nw.push_back(k);
      auto it = canon.find(nv);
      if (it == canon.end()) {
        canon.emplace(nv, nw);
        queue.emplace_back(nv, gens[k].tgt);
      } else {
        rules.push_back({std::move(nw), it->second});
      }
    }
  }
  // Interreduce: a left side containing another left side is redundant.
  std::set<Word> lhs;
  for (const auto& r : rules) lhs.insert(r.lhs);
  std::vector<Rule> kept;
  for (auto& r : rules) {
    bool redundant = false;
    for (std::size_t len = 1; len < r.lhs.size() && !redundant; ++len)
      for (std::size_t pos = 0; pos + len <= r.lhs.size() && !redundant; ++pos)
        redundant = lhs.count(Word(r.lhs.begin() + pos, r.lhs.begin() + pos + len)) > 0;
    if (!redundant) kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Rule& a, const Rule& b) { return shortlex_less(a.lhs, b.lhs); });
  return Category::from_complete(A->name() + "x" + B->name(), std::move(objects), std::move(gens),
                                 RewriteSystem(std::move(kept)), limits, ProductInfo{A, B});
}

Functor product_map(const Functor& F, const Functor& G, const CatPtr& source,
                    const CatPtr& target) {
  const Category& S = *source;
  const Category& T = *target;
  std::vector<int> obj(S.objects().size());
  for (int o = 0; o < int(obj.size()); ++o) {
    auto [x, y] = decode_object(S, o);
    obj[o] = product_object(T, F.object(x), G.object(y));
  }
  std::vector<Path> gens;
  for (int k = 0; k < int(S.generators().size()); ++k) {
    GenCode c = decode(S, k);
    const Generator& g = S.generators()[k];
    Path p{obj[g.src], obj[g.tgt], {}};
    if (c.left)
      for (int a : F.generator(c.a_or_x).word) p.word.push_back(left_generator(T, a, G.object(c.y_or_b)));
    else
      for (int b : G.generator(c.y_or_b).word)
        p.word.push_back(right_generator(T, F.object(c.a_or_x), b));
    gens.push_back(T.normalize(p));
  }
  return Functor::unchecked(source, target, std::move(obj), std::move(gens));
}

Functor unitor_left(const CatPtr& UX, const CatPtr& X) {
  return relabel(UX, X, iota(X->objects().size()), iota(X->generators().size()));
}
Functor unitor_left_inv(const CatPtr& X, const CatPtr& UX) {
  return relabel(X, UX, iota(X->objects().size()), iota(X->generators().size()));
}
Functor unitor_right(const CatPtr& XU, const CatPtr& X) {
  return relabel(XU, X, iota(X->objects().size()), iota(X->generators().size()));
}
Functor unitor_right_inv(const CatPtr& X, const CatPtr& XU) {
  return relabel(X, XU, iota(X->objects().size()), iota(X->generators().size()));
}

Functor associator(const CatPtr& XY_Z, const CatPtr& X_YZ) {
  const Category& S = *XY_Z;
  const Category& T = *X_YZ;
  const Category& XY = *factors(S).left;
  const Category& YZ = *factors(T).right;
  std::vector<int> obj(S.objects().size());
  for (int o = 0; o < int(obj.size()); ++o) {
    auto [xy, z] = decode_object(S, o);
    auto [x, y] = decode_object(XY, xy);
    obj[o] = product_object(T, x, product_object(YZ, y, z));
  }
  std::vector<int> gens(S.generators().size());
  for (int k = 0; k < int(gens.size()); ++k) {
    GenCode c = decode(S, k);
    if (c.left) {
      GenCode in = decode(XY, c.a_or_x);
      const int z = c.y_or_b;
      gens[k] = in.left ? left_generator(T, in.a_or_x, product_object(YZ, in.y_or_b, z))
                        : right_generator(T, in.a_or_x, left_generator(YZ, in.y_or_b, z));
    } else {
      auto [x, y] = decode_object(XY, c.a_or_x);
      gens[k] = right_generator(T, x, right_generator(YZ, y, c.y_or_b));
    }
  }
  return relabel(XY_Z, X_YZ, std::move(obj), gens);
}

Functor swap(const CatPtr& XY, const CatPtr& YX) {
  const Category& S = *XY;
  const Category& T = *YX;
  std::vector<int> obj(S.objects().size());
  for (int o = 0; o < int(obj.size()); ++o) {
    auto [x, y] = decode_object(S, o);
    obj[o] = product_object(T, y, x);
  }
  std::vector<int> gens(S.generators().size());
  for (int k = 0; k < int(gens.size()); ++k) {
    GenCode c = decode(S, k);
    gens[k] = c.left ? right_generator(T, c.y_or_b, c.a_or_x) : left_generator(T, c.y_or_b, c.a_or_x);
  }
  return relabel(XY, YX, std::move(obj), gens);
}

Cospan coproduct(const CatPtr& A, const CatPtr& B) {
  const int nA = int(A->objects().size());
  const int gA = int(A->generators().size());
  std::vector<std::string> names = A->objects();
  names.insert(names.end(), B->objects().begin(), B->objects().end());
  std::vector<int> side(A->objects().size(), 1);
  side.resize(names.size(), 2);
  std::vector<Generator> gens = A->generators();
  std::vector<int> gside(gens.size(), 1);
  for (auto g : B->generators()) {
    g.src += nA;
    g.tgt += nA;
    gens.push_back(g);
    gside.push_back(2);
  }
  std::vector<std::string> gnames;
  for (const auto& g : gens) gnames.push_back(g.name);
  gnames = disambiguate(gnames, gside);
  for (std::size_t k = 0; k < gens.size(); ++k) gens[k].name = gnames[k];
  std::vector<Rule> rules = A->rewriting().rules();
  for (Rule r : B->rewriting().rules()) {
    for (int& x : r.lhs) x += gA;
    for (int& x : r.rhs) x += gA;
    rules.push_back(std::move(r));
  }
  CatPtr S = Category::from_complete(A->name() + "+" + B->name(), disambiguate(names, side),
                                     std::move(gens), RewriteSystem(std::move(rules)),
                                     A->limits());
  std::vector<int> offA = iota(A->generators().size()), offB;
  std::vector<int> objB;
  for (int o = 0; o < int(B->objects().size()); ++o) objB.push_back(o + nA);
  for (int g = 0; g < int(B->generators().size()); ++g) offB.push_back(g + gA);
  return Cospan{S, relabel(A, S, iota(nA), offA), relabel(B, S, objB, offB)};
}

Cospan pushout(const Functor& f, const Functor& g, const Limits& limits) {
  if (!same_category(f.source(), g.source()))
    throw NonCommutingCocone("pushout legs have different sources");
  const CatPtr& A = f.source();
  const CatPtr& B = f.target();
  const CatPtr& C = g.target();
  const int nB = int(B->objects().size()), nC = int(C->objects().size());
  const int gB = int(B->generators().size());

  std::vector<int> parent(nB + nC);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < int(A->objects().size()); ++a) {
    int r1 = find(f.object(a)), r2 = find(nB + g.object(a));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::vector<int> rep(nB + nC, -1);
  std::vector<std::string> names;
  std::vector<int> side;
  for (int o = 0; o < nB + nC; ++o) {
    int r = find(o);
    if (rep[r] == -1) {
      rep[r] = int(names.size());
      names.push_back(o < nB ? B->objects()[o] : C->objects()[o - nB]);
      side.push_back(o < nB ? 1 : 2);
    }
    rep[o] = rep[r];
  }

  std::vector<Generator> gens;
  std::vector<int> gside;
  for (const auto& gen : B->generators()) {
    gens.push_back({gen.name, rep[gen.src], rep[gen.tgt]});
    gside.push_back(1);
  }
  for (const auto& gen : C->generators()) {
    gens.push_back({gen.name, rep[nB + gen.src], rep[nB + gen.tgt]});
    gside.push_back(2);
  }
  std::vector<std::string> gnames;
  for (const auto& gen : gens) gnames.push_back(gen.name);
  gnames = disambiguate(gnames, gside);
  for (std::size_t k = 0; k < gens.size(); ++k) gens[k].name = gnames[k];

  auto lift = [&](const Word& w, int offset, int src_obj) {
    Path p{src_obj, src_obj, {}};
    for (int x : w) {
      p.word.push_back(x + offset);
      p.tgt = gens[x + offset].tgt;
    }
    return p;
  };
  std::vector<std::pair<Path, Path>> rel;
  for (const Rule& r : B->rewriting().rules()) {
    int s = rep[B->generators()[r.lhs.front()].src];
    rel.emplace_back(lift(r.lhs, 0, s), lift(r.rhs, 0, s));
  }
  for (const Rule& r : C->rewriting().rules()) {
    int s = rep[nB + C->generators()[r.lhs.front()].src];
    rel.emplace_back(lift(r.lhs, gB, s), lift(r.rhs, gB, s));
  }
  for (int a = 0; a < int(A->generators().size()); ++a) {
    const Path& fb = f.generator(a);
    const Path& gc = g.generator(a);
    Path l = lift(fb.word, 0, rep[fb.src]), r = lift(gc.word, gB, rep[nB + gc.src]);
    l.tgt = rep[fb.tgt];
    r.tgt = rep[nB + gc.tgt];
    rel.emplace_back(std::move(l), std::move(r));
  }
  CatPtr P = Category::presented("(" + B->name() + "+_" + A->name() + C->name() + ")",
                                 disambiguate(names, side), std::move(gens), rel, limits);
  std::vector<int> objB(rep.begin(), rep.begin() + nB), objC(rep.begin() + nB, rep.end());
  std::vector<int> genB = iota(gB), genC;
  for (int k = 0; k < int(C->generators().size()); ++k) genC.push_back(gB + k);
  return Cospan{P, relabel(B, P, objB, genB), relabel(C, P, objC, genC)};
}

Functor quotient_by_paths(const CatPtr& C, const std::vector<std::pair<Path, Path>>& relations,
                          const Limits& limits) {
  std::vector<std::pair<Path, Path>> rel;
  for (const Rule& r : C->rewriting().rules()) {
    const int s = C->generators()[r.lhs.front()].src;
    const int t = C->generators()[r.lhs.back()].tgt;
    rel.push_back({Path{s, t, r.lhs}, Path{s, t, r.rhs}});
  }
  for (const auto& [a, b] : relations) {
    Path na = C->normalize(a), nb = C->normalize(b);
    if (na.src != nb.src || na.tgt != nb.tgt)
      throw NonParallel("relation " + C->describe(a) + " = " + C->describe(b) +
                        " is not between parallel morphisms");
    rel.emplace_back(na, nb);
  }
  CatPtr Q = Category::presented(C->name() + "/~", C->objects(), C->generators(), rel, limits);
  return relabel(C, Q, iota(C->objects().size()), iota(C->generators().size()));
}

Functor quotient_by_functors(const CatPtr& C,
                             const std::vector<std::pair<Functor, Functor>>& pairs,
                             const Limits& limits) {
  std::vector<std::pair<Path, Path>> rel;
  for (const auto& [F, G] : pairs) {
    if (!same_category(F.source(), G.source()) || !same_category(F.target(), C) ||
        !same_category(G.target(), C))
      throw NonParallel("quotient relation functors are not parallel into " + C->name());
    if (F.object_map() != G.object_map())
      throw NonParallel("quotient relation functors disagree on objects");
    for (std::size_t k = 0; k < F.generator_map().size(); ++k)
      rel.emplace_back(F.generator(int(k)), G.generator(int(k)));
  }
  return quotient_by_paths(C, rel, limits);
}

Functor induced_functor(const CatPtr& Q, const std::vector<Functor>& legs,
                        const std::vector<Functor>& maps) {
  if (legs.empty() || legs.size() != maps.size())
    throw NonCommutingCocone("induced functor needs matching, nonempty legs and maps");
  const CatPtr& T = maps.front().target();
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!same_category(legs[k].target(), Q))
      throw NonComposable("leg does not land in " + Q->name());
    if (!same_category(maps[k].target(), T) || !same_category(maps[k].source(), legs[k].source()))
      throw NonCommutingCocone("cocone map is not typed like its leg");
  }
  std::vector<int> obj(Q->objects().size(), -1);
  for (std::size_t k = 0; k < legs.size(); ++k)
    for (int a = 0; a < int(legs[k].source()->objects().size()); ++a)
      if (obj[legs[k].object(a)] == -1) obj[legs[k].object(a)] = maps[k].object(a);
  for (std::size_t q = 0; q < obj.size(); ++q)
    if (obj[q] == -1) throw NonCommutingCocone("object " + Q->objects()[q] + " has no preimage");

  std::vector<Path> gens;
  for (int g = 0; g < int(Q->generators().size()); ++g) {
    const Path target = Q->generator(g);
    std::optional<Path> img;
    if (target.word != Word{g}) {
      // A reducible generator rewrites to letters of smaller index.
      img = Path{obj[target.src], obj[target.src], {}};
      for (int x : target.word) {
        img->word.insert(img->word.end(), gens[x].word.begin(), gens[x].word.end());
        img->tgt = gens[x].tgt;
      }
      img->tgt = obj[target.tgt];
      img = T->normalize(*img);
    }
    for (std::size_t k = 0; k < legs.size() && !img; ++k)
      for (int s = 0; s < int(legs[k].source()->generators().size()) && !img; ++s)
        if (legs[k].generator(s) == target) img = maps[k].generator(s);
    for (std::size_t k = 0; k < legs.size() && !img; ++k) {
      const CatPtr& S = legs[k].source();
      if (!S->finite()) continue;
      for (const Path& m : S->morphisms())
        if (legs[k].apply(m) == target) {
          img = maps[k].apply(m);
          break;
        }
    }
    if (!img)
      throw NonCommutingCocone("generator '" + Q->generators()[g].name + "' has no preimage");
    gens.push_back(*img);
  }
  std::optional<Functor> M;
  try {
    M.emplace(Q, T, obj, gens);
  } catch (const InvalidMorphism& e) {
    throw NonCommutingCocone(std::string("cocone does not induce a functor: ") + e.what());
  }
  for (std::size_t k = 0; k < legs.size(); ++k)
    if (!(compose(*M, legs[k]) == maps[k]))
      throw NonCommutingCocone("cocone does not commute on leg " + std::to_string(k));
  return *M;
}

Functor thin_functor(const CatPtr& source, const CatPtr& target, std::vector<int> objects) {
  std::vector<Path> gens;
  for (const auto& g : source->generators()) {
    const auto& h = target->hom(objects.at(g.src), objects.at(g.tgt));
    if (h.size() != 1)
      throw InvalidMorphism("object map does not determine the image of '" + g.name + "'");
    gens.push_back(target->morphisms()[h.front()]);
  }
  return Functor(source, target, std::move(objects), std::move(gens));
}

}  // namespace cointerval::fincat
