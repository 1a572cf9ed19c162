#include "cointerval/fincat/category.hpp"

#include <deque>
#include <functional>

#include "cointerval/error.hpp"

namespace cointerval::fincat {

namespace {

std::size_t budget(const Limits& l, std::size_t len) {
  return std::max<std::size_t>(4096, l.depth_bound * (len + 1) * (len + 1));
}

void hash_mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

}  // namespace

Category::Category(std::string name, std::vector<std::string> objects,
                   std::vector<Generator> generators, RewriteSystem rules, Limits limits,
                   std::optional<ProductInfo> product)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      limits_(limits),
      product_(std::move(product)) {
  for (const auto& g : generators_)
    if (g.src < 0 || g.tgt < 0 || g.src >= static_cast<int>(objects_.size()) ||
        g.tgt >= static_cast<int>(objects_.size()))
      throw InvalidMorphism("generator '" + g.name + "' has an unknown endpoint");
  hash_mix(hash_, objects_.size());
  for (const auto& g : generators_) {
    hash_mix(hash_, static_cast<std::size_t>(g.src));
    hash_mix(hash_, static_cast<std::size_t>(g.tgt));
  }
  for (const auto& r : rules_.rules()) {
    for (int x : r.lhs) hash_mix(hash_, static_cast<std::size_t>(x));
    hash_mix(hash_, 0xfeed);
    for (int x : r.rhs) hash_mix(hash_, static_cast<std::size_t>(x));
  }
}

CatPtr Category::presented(std::string name, std::vector<std::string> objects,
                           std::vector<Generator> generators,
                           const std::vector<std::pair<Path, Path>>& relations,
                           const Limits& limits) {
  // Type-check relations against a rule-free copy before completing.
  Category free(name, objects, generators, RewriteSystem(), limits, std::nullopt);
  std::vector<std::pair<Word, Word>> eqs;
  for (const auto& [a, b] : relations) {
    Path na = free.normalize(a), nb = free.normalize(b);
    if (na.src != nb.src || na.tgt != nb.tgt)
      throw NonParallel("relation " + free.describe(a) + " = " + free.describe(b) +
                        " is not between parallel paths");
    eqs.emplace_back(a.word, b.word);
  }
  RewriteSystem sys = complete(eqs, CompletionLimits{limits.depth_bound});
  return CatPtr(new Category(std::move(name), std::move(objects), std::move(generators),
                             std::move(sys), limits, std::nullopt));
}

CatPtr Category::from_complete(std::string name, std::vector<std::string> objects,
                               std::vector<Generator> generators, RewriteSystem rules,
                               const Limits& limits, std::optional<ProductInfo> product) {
  return CatPtr(new Category(std::move(name), std::move(objects), std::move(generators),
                             std::move(rules), limits, std::move(product)));
}

int Category::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return -1;
}

int Category::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return -1;
}

Path Category::identity(int obj) const {
  if (obj < 0 || obj >= static_cast<int>(objects_.size()))
    throw InvalidMorphism("no object " + std::to_string(obj) + " in " + name_);
  return Path{obj, obj, {}};
}

Path Category::generator(int g) const {
  const Generator& gen = generators_.at(g);
  return normalize(Path{gen.src, gen.tgt, {g}});
}

Path Category::then(const Path& f, const Path& g) const {
  if (f.tgt != g.src)
    throw NonComposable("cannot compose " + describe(f) + " with " + describe(g) + " in " + name_);
  Path p{f.src, g.tgt, f.word};
  p.word.insert(p.word.end(), g.word.begin(), g.word.end());
  return normalize(p);
}

Path Category::normalize(const Path& p) const {
  const int n = static_cast<int>(objects_.size());
  if (p.src < 0 || p.src >= n || p.tgt < 0 || p.tgt >= n)
    throw NonComposable("path endpoints outside " + name_);
  int at = p.src;
  for (int g : p.word) {
    if (g < 0 || g >= static_cast<int>(generators_.size()))
      throw NonComposable("unknown generator index in " + name_);
    if (generators_[g].src != at)
      throw NonComposable("word is not composable at '" + generators_[g].name + "' in " + name_);
    at = generators_[g].tgt;
  }
  if (at != p.tgt) throw NonComposable("word does not end at its declared target in " + name_);
  return Path{p.src, p.tgt, rules_.normalize(p.word, budget(limits_, p.word.size()))};
}

void Category::materialize() const {
  std::call_once(table_once_, [this] {
    const std::size_t n = objects_.size();
    std::vector<Path> table;
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
      table.push_back(Path{int(x), int(x), {}});
      queue.push_back(table.size() - 1);
    }
    bool capped = false;
    while (!queue.empty() && !capped) {
      Path cur = table[queue.front()];
      queue.pop_front();
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (generators_[g].src != cur.tgt) continue;
        Word w = cur.word;
        w.push_back(int(g));
        if (!rules_.suffix_irreducible(w)) continue;
        if (table.size() >= limits_.normal_form_cap) {
          capped = true;
          break;
        }
        table.push_back(Path{cur.src, generators_[g].tgt, std::move(w)});
        queue.push_back(table.size() - 1);
      }
    }
    if (capped) return;
    hom_.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t k = 0; k < table.size(); ++k) hom_[table[k].src][table[k].tgt].push_back(k);
    table_ = std::move(table);
    finite_ = true;
  });
}

bool Category::finite() const {
  materialize();
  return finite_;
}

const std::vector<Path>& Category::morphisms() const {
  if (!finite())
    throw CapExceeded(name_ + " has more than " + std::to_string(limits_.normal_form_cap) +
                      " normal forms");
  return table_;
}

const std::vector<std::size_t>& Category::hom(int x, int y) const {
  morphisms();
  return hom_.at(x).at(y);
}

std::size_t Category::morphism_index(const Path& normal) const {
  for (std::size_t k : hom(normal.src, normal.tgt))
    if (table_[k].word == normal.word) return k;
  throw InvalidMorphism(describe(normal) + " is not a normal form of " + name_);
}

std::string Category::describe(const Path& p) const {
  if (p.word.empty()) {
    const bool ok = p.src >= 0 && p.src < static_cast<int>(objects_.size());
    return "id_" + (ok ? objects_[p.src] : std::to_string(p.src));
  }
  std::string s;
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    const int g = p.word[i];
    if (i) s += ";";
    s += g >= 0 && g < static_cast<int>(generators_.size()) ? generators_[g].name
                                                            : "#" + std::to_string(g);
  }
  return s;
}

bool Category::same_as(const Category& o) const {
  if (this == &o) return true;
  if (hash_ != o.hash_ || objects_.size() != o.objects_.size() ||
      generators_.size() != o.generators_.size())
    return false;
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g].src != o.generators_[g].src || generators_[g].tgt != o.generators_[g].tgt)
      return false;
  return rules_.rules() == o.rules_.rules();
}

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || a->same_as(*b); }

std::optional<Rule> first_violated_rule(const CatPtr& source, const CatPtr& target,
                                        const std::vector<int>& objects,
                                        const std::vector<Path>& generators) {
  auto image = [&](const Word& w, int obj) {
    Path p{objects[obj], objects[obj], {}};
    for (int g : w) {
      p.word.insert(p.word.end(), generators[g].word.begin(), generators[g].word.end());
      p.tgt = generators[g].tgt;
    }
    return target->normalize(p);
  };
  for (const Rule& r : source->rewriting().rules()) {
    const int src = source->generators()[r.lhs.front()].src;
    if (!(image(r.lhs, src) == image(r.rhs, src))) return r;
  }
  return std::nullopt;
}

Functor::Functor(CatPtr source, CatPtr target, std::vector<int> objects,
                 std::vector<Path> generators)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      generators_(std::move(generators)) {
  if (objects_.size() != source_->objects().size() ||
      generators_.size() != source_->generators().size())
    throw InvalidMorphism("functor data does not match the size of " + source_->name());
  for (int o : objects_)
    if (o < 0 || o >= static_cast<int>(target_->objects().size()))
      throw InvalidMorphism("functor object image outside " + target_->name());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const Generator& gen = source_->generators()[g];
    Path& img = generators_[g];
    if (img.src != objects_[gen.src] || img.tgt != objects_[gen.tgt])
      throw InvalidMorphism("image of '" + gen.name + "' has the wrong endpoints");
    img = target_->normalize(img);
  }
  if (auto r = first_violated_rule(source_, target_, objects_, generators_)) {
    const int src = source_->generators()[r->lhs.front()].src;
    const int tgt = source_->generators()[r->lhs.back()].tgt;
    throw InvalidMorphism("functor " + source_->name() + " -> " + target_->name() +
                          " breaks relation " + source_->describe(Path{src, tgt, r->lhs}) +
                          " = " + source_->describe(Path{src, tgt, r->rhs}));
  }
}

Functor Functor::identity(const CatPtr& C) {
  std::vector<int> obj(C->objects().size());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = int(i);
  std::vector<Path> gens;
  for (std::size_t g = 0; g < C->generators().size(); ++g) gens.push_back(C->generator(int(g)));
  return unchecked(C, C, std::move(obj), std::move(gens));
}

Functor Functor::unchecked(CatPtr source, CatPtr target, std::vector<int> objects,
                           std::vector<Path> generators) {
  Functor F;
  F.source_ = std::move(source);
  F.target_ = std::move(target);
  F.objects_ = std::move(objects);
  F.generators_ = std::move(generators);
  return F;
}

Path Functor::apply(const Path& p) const {
  Path out{objects_.at(p.src), objects_.at(p.tgt), {}};
  for (int g : p.word) {
    const Word& w = generators_.at(g).word;
    out.word.insert(out.word.end(), w.begin(), w.end());
  }
  return target_->normalize(out);
}

bool operator==(const Functor& a, const Functor& b) {
  return same_category(a.source_, b.source_) && same_category(a.target_, b.target_) &&
         a.objects_ == b.objects_ && a.generators_ == b.generators_;
}

Functor compose(const Functor& G, const Functor& F) {
  if (!same_category(F.target(), G.source()))
    throw NonComposable("functor " + F.source()->name() + " -> " + F.target()->name() +
                        " cannot be followed by " + G.source()->name() + " -> " +
                        G.target()->name());
  std::vector<int> obj;
  for (int o : F.object_map()) obj.push_back(G.object(o));
  std::vector<Path> gens;
  for (const Path& p : F.generator_map()) gens.push_back(G.apply(p));
  return Functor::unchecked(F.source(), G.target(), std::move(obj), std::move(gens));
}

}  // namespace cointerval::fincat
