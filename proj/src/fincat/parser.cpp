#include "cointerval/fincat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "cointerval/error.hpp"
#include "cointerval/fincat/interval.hpp"

namespace cointerval::fincat {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == ':' || line[i] == '=' || line[i] == ';') {
      ++i;
    } else if (line.compare(i, 2, "->") == 0) {
      i += 2;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != ':' && line[i] != '=' && line[i] != ';' && line.compare(i, 2, "->") != 0 &&
             line[i] != '#')
        ++i;
    }
    out.push_back({line.substr(start, i - start), int(start) + 1});
  }
  return out;
}

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = tokenize(line);
    if (!t.empty()) out.push_back({n, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(const std::string& what, int line, int column) {
  throw ParseError(what, line, column);
}

void expect(const Line& l, std::size_t k, const std::string& tok) {
  if (k >= l.tokens.size())
    fail("expected '" + tok + "' at end of line", l.number, l.tokens.back().column);
  if (l.tokens[k].text != tok)
    fail("expected '" + tok + "', found '" + l.tokens[k].text + "'", l.number, l.tokens[k].column);
}

const Token& name_at(const Line& l, std::size_t k) {
  if (k >= l.tokens.size()) fail("expected a name at end of line", l.number, l.tokens.back().column);
  const Token& t = l.tokens[k];
  if (t.text == ":" || t.text == "=" || t.text == ";" || t.text == "->")
    fail("expected a name, found '" + t.text + "'", l.number, t.column);
  return t;
}

int object_of(const Category& C, const Line& l, std::size_t k) {
  const Token& t = name_at(l, k);
  int o = C.object_index(t.text);
  if (o < 0) fail("unknown object '" + t.text + "'", l.number, t.column);
  return o;
}

// A word from token k up to (excluding) `stop` or end of line. Endpoints are
// -1 for a bare `id`.
Path word_of(const Category& C, const Line& l, std::size_t& k, const std::string& stop) {
  Path p{-1, -1, {}};
  bool first = true;
  while (k < l.tokens.size() && l.tokens[k].text != stop) {
    if (!first) {
      expect(l, k, ";");
      ++k;
    }
    first = false;
    const Token& t = name_at(l, k);
    if (t.text == "id") {
      // Typed by the surrounding context.
    } else if (t.text.rfind("id_", 0) == 0) {
      int o = C.object_index(t.text.substr(3));
      if (o < 0) fail("unknown object in '" + t.text + "'", l.number, t.column);
      if (p.tgt >= 0 && p.tgt != o) fail("identity does not compose here", l.number, t.column);
      if (p.src < 0) p.src = o;
      p.tgt = o;
    } else {
      int g = C.generator_index(t.text);
      if (g < 0) fail("unknown generator '" + t.text + "'", l.number, t.column);
      const Generator& gen = C.generators()[g];
      if (p.tgt >= 0 && p.tgt != gen.src)
        fail("'" + t.text + "' does not compose with the preceding word", l.number, t.column);
      if (p.src < 0) p.src = gen.src;
      p.tgt = gen.tgt;
      p.word.push_back(g);
    }
    ++k;
  }
  if (first) {
    const int col = k < l.tokens.size() ? l.tokens[k].column : l.tokens.back().column;
    fail("expected a word", l.number, col);
  }
  return p;
}

void type_from(Path& p, const Path& other, const Line& l, int column) {
  if (p.src >= 0) return;
  if (other.src < 0) fail("cannot infer the object of a bare 'id'", l.number, column);
  if (other.src != other.tgt) fail("'id' is not parallel to the other side", l.number, column);
  p.src = p.tgt = other.src;
}

struct Presentation {
  CatPtr category;
  std::vector<Line> rest;  // non-presentation lines, in order
};

Presentation read_presentation(const std::string& text, const Limits& limits,
                               const std::vector<std::string>& extra_keywords) {
  std::vector<std::string> objects;
  std::vector<Generator> gens;
  std::vector<Line> rels;
  Presentation out;
  for (const Line& l : lines_of(text)) {
    const Token& kw = l.tokens.front();
    if (kw.text == "obj") {
      const Token& t = name_at(l, 1);
      if (l.tokens.size() > 2) fail("unexpected token after object name", l.number, l.tokens[2].column);
      for (const auto& o : objects)
        if (o == t.text) fail("duplicate object '" + t.text + "'", l.number, t.column);
      objects.push_back(t.text);
    } else if (kw.text == "gen") {
      const Token& t = name_at(l, 1);
      expect(l, 2, ":");
      auto obj = [&](std::size_t k) {
        const Token& o = name_at(l, k);
        for (std::size_t i = 0; i < objects.size(); ++i)
          if (objects[i] == o.text) return int(i);
        fail("unknown object '" + o.text + "'", l.number, o.column);
      };
      const int s = obj(3);
      expect(l, 4, "->");
      const int d = obj(5);
      if (l.tokens.size() > 6) fail("unexpected token after target", l.number, l.tokens[6].column);
      for (const auto& g : gens)
        if (g.name == t.text) fail("duplicate generator '" + t.text + "'", l.number, t.column);
      if (t.text == "id" || t.text.rfind("id_", 0) == 0)
        fail("generator names may not start with 'id'", l.number, t.column);
      gens.push_back({t.text, s, d});
    } else if (kw.text == "rel") {
      rels.push_back(l);
    } else if (std::find(extra_keywords.begin(), extra_keywords.end(), kw.text) !=
               extra_keywords.end()) {
      out.rest.push_back(l);
    } else {
      fail("unknown declaration '" + kw.text + "'", l.number, kw.column);
    }
  }
  if (objects.empty()) throw ParseError("presentation declares no objects", 1, 1);
  CatPtr free = Category::from_complete("free", objects, gens, RewriteSystem(), limits);
  std::vector<std::pair<Path, Path>> relations;
  for (const Line& l : rels) {
    std::size_t k = 1;
    Path a = word_of(*free, l, k, "=");
    const int col_b = k + 1 < l.tokens.size() ? l.tokens[k + 1].column : l.tokens.back().column;
    expect(l, k, "=");
    ++k;
    Path b = word_of(*free, l, k, "");
    type_from(a, b, l, l.tokens[1].column);
    type_from(b, a, l, col_b);
    if (a.src != b.src || a.tgt != b.tgt)
      fail("relation sides are not parallel", l.number, l.tokens[1].column);
    relations.emplace_back(a, b);
  }
  std::string name = "C";
  for (const Line& l : out.rest)
    if (l.tokens.front().text == "interval") name = name_at(l, 1).text;
  out.category = Category::presented(name, objects, gens, relations, limits);
  return out;
}

}  // namespace

CatPtr parse_category(const std::string& text, const Limits& limits) {
  return read_presentation(text, limits, {}).category;
}

cocat::Interval<FinContext> parse_interval(const std::string& text, const FinContext& ctx) {
  Presentation pres =
      read_presentation(text, ctx.limits(), {"interval", "bottom", "top", "star", "sigma"});
  const CatPtr& I = pres.category;
  int bot = I->object_index("bot"), top = I->object_index("top");
  int bot_line = 1, top_line = 1;
  for (const Line& l : pres.rest) {
    const std::string& kw = l.tokens.front().text;
    if (kw == "bottom") {
      bot = object_of(*I, l, 1);
      bot_line = l.number;
    } else if (kw == "top") {
      top = object_of(*I, l, 1);
      top_line = l.number;
    }
  }
  if (bot < 0) throw ParseError("no bottom object (declare 'bottom OBJ')", bot_line, 1);
  if (top < 0) throw ParseError("no top object (declare 'top OBJ')", top_line, 1);

  FinContext::Colimit two = cocomposable(ctx, I, bot, top);
  const CatPtr& C2 = two.object;
  std::vector<std::optional<Path>> star(I->generators().size()), sigma(I->generators().size());
  std::vector<int> star_obj, sigma_obj(I->objects().size(), -1);
  bool has_sigma = false;
  int last_line = 1;
  for (const Line& l : pres.rest) {
    const std::string& kw = l.tokens.front().text;
    last_line = l.number;
    if (kw != "star" && kw != "sigma") continue;
    const Category& target = kw == "star" ? *C2 : *I;
    if (kw == "sigma") has_sigma = true;
    if (name_at(l, 1).text == "obj") {
      const int x = object_of(*I, l, 2);
      expect(l, 3, "=");
      const int y = object_of(target, l, 4);
      if (kw == "star") {
        if (star_obj.empty()) star_obj.assign(I->objects().size(), -1);
        star_obj[x] = y;
      } else {
        sigma_obj[x] = y;
      }
      continue;
    }
    const Token& g = name_at(l, 1);
    const int gi = I->generator_index(g.text);
    if (gi < 0) fail("unknown generator '" + g.text + "'", l.number, g.column);
    expect(l, 2, "=");
    std::size_t k = 3;
    Path p = word_of(target, l, k, "");
    (kw == "star" ? star : sigma)[gi] = p;
  }
  std::vector<Path> star_paths;
  if (!star_obj.empty())
    for (int y : star_obj)
      if (y < 0) throw ParseError("star object map is incomplete", last_line, 1);
  for (std::size_t g = 0; g < star.size(); ++g) {
    if (!star[g])
      throw ParseError("no star image for generator '" + I->generators()[g].name + "'", last_line, 1);
    star_paths.push_back(*star[g]);
  }
  // Bare identities take their endpoints from the object map.
  auto fix = [&](std::vector<Path>& paths, const std::vector<int>& obj) {
    for (std::size_t g = 0; g < paths.size(); ++g)
      if (paths[g].src < 0) paths[g].src = paths[g].tgt = obj[I->generators()[g].src];
  };
  cocat::Interval<FinContext> out = [&] {
    std::vector<int> obj = star_obj;
    if (obj.empty())
      for (int x = 0; x < int(I->objects().size()); ++x)
        obj.push_back(x == bot ? two.in_f.object(x) : two.in_g.object(x));
    fix(star_paths, obj);
    return make_interval(ctx, I, I->name(), bot, top, two, star_paths, obj);
  }();
  if (has_sigma) {
    std::vector<Path> paths;
    for (std::size_t g = 0; g < sigma.size(); ++g) {
      if (!sigma[g])
        throw ParseError("no sigma image for generator '" + I->generators()[g].name + "'",
                         last_line, 1);
      paths.push_back(*sigma[g]);
    }
    for (int y : sigma_obj)
      if (y < 0) throw ParseError("sigma object map is incomplete", last_line, 1);
    fix(paths, sigma_obj);
    out.sigma = Functor(I, I, sigma_obj, paths);
  }
  return out;
}

}  // namespace cointerval::fincat
