#include "brisk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace brisk {

namespace {

enum class Tok { ident, integer, symbol };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize_line(const std::string& s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), line, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, s.substr(i, j - i), line, col});
      i = j;
    } else if (std::string("+-*^,=():").find(c) != std::string::npos) {
      out.push_back({Tok::symbol, std::string(1, c), line, col});
      ++i;
    } else {
      throw InputError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  return out;
}

long long to_int(const Token& t) {
  if (t.text.size() > 15) throw InputError("integer too large", t.line, t.column);
  return std::stoll(t.text);
}

/// Splits an identifier into generator names, longest name first.
std::vector<std::string> split_monomial(const Token& t, const std::vector<std::string>& gens) {
  std::vector<std::string> sorted = gens;
  std::sort(sorted.begin(), sorted.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < t.text.size()) {
    bool found = false;
    for (const auto& g : sorted)
      if (t.text.compare(i, g.size(), g) == 0) {
        parts.push_back(g);
        i += g.size();
        found = true;
        break;
      }
    if (!found)
      throw InputError("unknown generator in '" + t.text + "'", t.line,
                       t.column + static_cast<int>(i));
  }
  return parts;
}

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  int line;
  int end_column;

  bool done() const { return pos >= toks.size(); }
  const Token* peek() const { return done() ? nullptr : &toks[pos]; }
  bool is_symbol(const std::string& s) const {
    return !done() && toks[pos].kind == Tok::symbol && toks[pos].text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    if (done()) throw InputError(msg, line, end_column);
    throw InputError(msg, toks[pos].line, toks[pos].column);
  }
};

/// Signed integer prefix of a term; returns the coefficient and whether one was given.
std::pair<long long, bool> coefficient(Cursor& c, bool first) {
  long long sign = 1;
  bool had_sign = false;
  while (c.is_symbol("+") || c.is_symbol("-")) {
    if (c.toks[c.pos].text == "-") sign = -sign;
    had_sign = true;
    ++c.pos;
  }
  if (!first && !had_sign) c.fail("expected '+' or '-' between terms");
  if (!c.done() && c.peek()->kind == Tok::integer) {
    long long v = to_int(*c.peek());
    ++c.pos;
    if (c.is_symbol("*")) ++c.pos;
    return {sign * v, true};
  }
  return {sign, false};
}

/// Degree-2 relation: returns g^2 coefficients.
std::vector<long long> parse_relation(Cursor& c, const std::vector<std::string>& gens) {
  const std::size_t g = gens.size();
  std::vector<long long> coef(g * g, 0);
  auto index_of = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(gens.begin(), gens.end(), s) - gens.begin());
  };
  bool first = true;
  if (c.done()) c.fail("empty relation");
  while (!c.done()) {
    const Token* start = c.peek();
    auto [k, given] = coefficient(c, first);
    first = false;
    std::vector<std::string> mono;
    while (!c.done() && c.peek()->kind == Tok::ident) {
      auto parts = split_monomial(*c.peek(), gens);
      const Token& id = *c.peek();
      ++c.pos;
      if (c.is_symbol("^")) {
        ++c.pos;
        if (c.done() || c.peek()->kind != Tok::integer) c.fail("expected exponent after '^'");
        long long e = to_int(*c.peek());
        if (parts.size() != 1) throw InputError("exponent applies to a single generator", id.line, id.column);
        if (e < 1 || e > 3) c.fail("exponent out of range");
        ++c.pos;
        for (long long r = 1; r < e; ++r) parts.push_back(parts[0]);
      }
      mono.insert(mono.end(), parts.begin(), parts.end());
      if (c.is_symbol("*")) {
        ++c.pos;
        if (c.done() || c.peek()->kind != Tok::ident) c.fail("expected generator after '*'");
      }
    }
    if (mono.size() >= 3)
      throw InputError("monomials of degree >= 3 are not allowed in relations", start->line,
                       start->column);
    if (mono.size() != 2)
      throw InputError("relations must be homogeneous of degree 2", start->line, start->column);
    (void)given;
    auto& slot = coef[monomial_index(g, index_of(mono[0]), index_of(mono[1]))];
    slot += k;
    if (!c.done() && !c.is_symbol("+") && !c.is_symbol("-")) c.fail("unexpected token in relation");
  }
  return coef;
}

/// Linear combination of labels; a bare integer is a multiple of "1".
std::vector<std::pair<std::string, long long>> parse_combination(
    Cursor& c, const std::vector<std::string>& labels) {
  std::map<std::string, long long> acc;
  std::vector<std::string> order;
  bool first = true;
  if (c.done()) c.fail("empty linear combination");
  while (!c.done()) {
    auto [k, given] = coefficient(c, first);
    first = false;
    std::string label = "1";
    if (!c.done() && c.peek()->kind == Tok::ident) {
      label = c.peek()->text;
      if (std::find(labels.begin(), labels.end(), label) == labels.end())
        c.fail("unknown basis element '" + label + "'");
      ++c.pos;
    } else if (!given) {
      c.fail("expected a coefficient or basis element");
    }
    if (!acc.count(label)) order.push_back(label);
    acc[label] += k;
    if (!c.done() && !c.is_symbol("+") && !c.is_symbol("-")) c.fail("unexpected token");
  }
  std::vector<std::pair<std::string, long long>> out;
  // Canonical order: basis order of the labels.
  for (const auto& l : labels)
    if (acc.count(l) && acc[l] != 0) out.emplace_back(l, acc[l]);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

std::string strip_comment(const std::string& s) {
  auto h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile p;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_name = false, have_field = false, have_gens = false, have_comm = false;
  bool in_body = false;
  std::set<std::pair<std::string, std::string>> seen_products;
  int body_line = 0;
  auto labels = [&]() {
    std::vector<std::string> l{"1"};
    l.insert(l.end(), p.generators.begin(), p.generators.end());
    l.insert(l.end(), p.basis.begin(), p.basis.end());
    return l;
  };
  auto relation_chunks = [&](const std::vector<Token>& toks, std::size_t from, int ln,
                             int width) {
    std::vector<Token> chunk;
    auto flush = [&]() {
      if (chunk.empty()) return;
      Cursor c{chunk, 0, ln, width};
      p.relations.push_back(parse_relation(c, p.generators));
      chunk.clear();
    };
    for (std::size_t i = from; i < toks.size(); ++i) {
      if (toks[i].kind == Tok::symbol && toks[i].text == ",") {
        if (chunk.empty()) throw InputError("empty relation", toks[i].line, toks[i].column);
        flush();
      } else {
        chunk.push_back(toks[i]);
      }
    }
    flush();
  };

  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string s = strip_comment(raw);
    auto toks = tokenize_line(s, line);
    if (toks.empty()) continue;
    const int width = static_cast<int>(s.size()) + 1;
    if (in_body && p.mode == PresentationFile::Mode::relations) {
      relation_chunks(toks, 0, line, width);
      continue;
    }
    const Token& key = toks[0];
    if (key.kind != Tok::ident) throw InputError("expected a key", key.line, key.column);
    auto rest_idents = [&](std::size_t from) {
      std::vector<std::string> out;
      for (std::size_t i = from; i < toks.size(); ++i) {
        if (toks[i].kind == Tok::symbol && toks[i].text == ",") continue;
        if (toks[i].kind != Tok::ident)
          throw InputError("expected a name", toks[i].line, toks[i].column);
        out.push_back(toks[i].text);
      }
      return out;
    };
    if (in_body) {
      if (key.text == "basis") {
        if (!p.products.empty()) throw InputError("basis must precede mul lines", key.line, key.column);
        for (const auto& b : rest_idents(1)) {
          auto l = labels();
          if (std::find(l.begin(), l.end(), b) != l.end())
            throw InputError("duplicate basis name '" + b + "'", key.line, key.column);
          p.basis.push_back(b);
        }
      } else if (key.text == "mul") {
        if (toks.size() < 5 || toks[1].kind != Tok::ident || toks[2].kind != Tok::ident ||
            toks[3].text != "=")
          throw InputError("expected 'mul <a> <b> = <combination>'", key.line, key.column);
        auto l = labels();
        for (int k : {1, 2})
          if (toks[k].text == "1" ||
              std::find(l.begin() + 1, l.end(), toks[k].text) == l.end())
            throw InputError("unknown radical basis element '" + toks[k].text + "'", toks[k].line,
                             toks[k].column);
        auto key_pair = std::make_pair(toks[1].text, toks[2].text);
        if (seen_products.count(key_pair))
          throw InputError("duplicate product", key.line, key.column);
        seen_products.insert(key_pair);
        std::vector<Token> rhs(toks.begin() + 4, toks.end());
        Cursor c{rhs, 0, line, width};
        p.products.push_back({toks[1].text, toks[2].text, parse_combination(c, l)});
      } else {
        throw InputError("unknown key '" + key.text + "' in table body", key.line, key.column);
      }
      continue;
    }
    if (key.text == "algebra") {
      if (have_name) throw InputError("duplicate key 'algebra'", key.line, key.column);
      if (toks.size() != 2 || toks[1].kind != Tok::ident)
        throw InputError("expected 'algebra <name>'", key.line, key.column);
      p.name = toks[1].text;
      have_name = true;
    } else if (key.text == "field") {
      if (have_field) throw InputError("duplicate key 'field'", key.line, key.column);
      std::string spec;
      for (std::size_t i = 1; i < toks.size(); ++i) spec += (i > 1 && toks[i].text != ":" && toks[i - 1].text != ":" ? " " : "") + toks[i].text;
      try {
        p.field = FieldSpec::parse(spec);
      } catch (const Error& e) {
        throw InputError(e.what(), key.line, key.column);
      }
      have_field = true;
    } else if (key.text == "generators") {
      if (have_gens) throw InputError("duplicate key 'generators'", key.line, key.column);
      p.generators = rest_idents(1);
      if (p.generators.size() < 2 || p.generators.size() > 3)
        throw InputError("expected two or three generators", key.line, key.column);
      std::set<std::string> uniq(p.generators.begin(), p.generators.end());
      if (uniq.size() != p.generators.size())
        throw InputError("duplicate generator name", key.line, key.column);
      for (const auto& g : p.generators)
        if (g == "1" || !valid_name(g)) throw InputError("invalid generator name", key.line, key.column);
      have_gens = true;
    } else if (key.text == "commutative") {
      if (have_comm) throw InputError("duplicate key 'commutative'", key.line, key.column);
      if (toks.size() != 2 || (toks[1].text != "true" && toks[1].text != "false"))
        throw InputError("expected 'commutative true|false'", key.line, key.column);
      p.commutative = toks[1].text == "true";
      have_comm = true;
    } else if (key.text == "relations" || key.text == "table") {
      if (!have_gens) throw InputError("generators must precede the body", key.line, key.column);
      in_body = true;
      body_line = line;
      if (key.text == "relations") {
        p.mode = PresentationFile::Mode::relations;
        relation_chunks(toks, 1, line, width);
      } else {
        p.mode = PresentationFile::Mode::table;
        if (toks.size() > 1) throw InputError("unexpected text after 'table'", toks[1].line, toks[1].column);
      }
    } else {
      throw InputError("unknown key '" + key.text + "'", key.line, key.column);
    }
  }
  if (!have_gens) throw InputError("missing 'generators'", line, 1);
  if (!in_body) throw InputError("missing 'relations' or 'table' section", line, 1);
  (void)body_line;
  return p;
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

namespace {

std::string signed_term(long long c, const std::string& label, bool first) {
  std::string out;
  if (c < 0)
    out += "-";
  else if (!first)
    out += "+";
  long long m = c < 0 ? -c : c;
  if (label == "1") return out + std::to_string(m);
  if (m != 1) out += std::to_string(m) + "*";
  return out + label;
}

}  // namespace

std::string to_text(const PresentationFile& p) {
  std::ostringstream o;
  if (!p.name.empty()) o << "algebra " << p.name << "\n";
  o << "field " << (p.field.is_prime_field() ? "prime " + std::to_string(p.field.p) : "rational")
    << "\n";
  o << "generators";
  for (const auto& g : p.generators) o << " " << g;
  o << "\ncommutative " << (p.commutative ? "true" : "false") << "\n";
  const std::size_t g = p.generators.size();
  if (p.mode == PresentationFile::Mode::relations) {
    o << "relations\n";
    for (const auto& r : p.relations) {
      bool first = true;
      std::string line;
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
          long long c = r[monomial_index(g, i, j)];
          if (c == 0) continue;
          std::string mono = p.generators[i] + "*" + p.generators[j];
          line += signed_term(c, mono, first);
          first = false;
        }
      o << (line.empty() ? "0*" + p.generators[0] + "*" + p.generators[0] : line) << "\n";
    }
  } else {
    o << "table\n";
    if (!p.basis.empty()) {
      o << "basis";
      for (const auto& b : p.basis) o << " " << b;
      o << "\n";
    }
    for (const auto& pr : p.products) {
      o << "mul " << pr.left << " " << pr.right << " = ";
      if (pr.terms.empty()) o << "0";
      bool first = true;
      for (const auto& [l, c] : pr.terms) {
        o << signed_term(c, l, first);
        first = false;
      }
      o << "\n";
    }
  }
  return o.str();
}

template <class K>
AlgebraTable<K> build_algebra(const PresentationFile& p, const K& f) {
  const std::size_t g = p.generators.size();
  if (p.mode == PresentationFile::Mode::relations) {
    std::vector<Vec<K>> rels;
    for (const auto& r : p.relations) {
      Vec<K> v(g * g, f.zero());
      for (std::size_t i = 0; i < g * g; ++i) v[i] = f.from_int(r[i]);
      rels.push_back(v);
    }
    return from_quadratic_presentation(f, p.generators, rels, p.commutative, p.name);
  }
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), p.generators.begin(), p.generators.end());
  labels.insert(labels.end(), p.basis.begin(), p.basis.end());
  const std::size_t n = labels.size();
  auto index = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec(f, n)));
  for (std::size_t i = 0; i < n; ++i) {
    mul[0][i] = unit_vec(f, n, i);
    mul[i][0] = unit_vec(f, n, i);
  }
  for (const auto& pr : p.products) {
    Vec<K> v(n, f.zero());
    for (const auto& [l, c] : pr.terms) v[index(l)] = f.add(v[index(l)], f.from_int(c));
    mul[index(pr.left)][index(pr.right)] = v;
  }
  AlgebraTable<K> a(f, labels, mul, p.name);
  if (p.commutative && !is_commutative(a))
    throw InputError("table declared commutative but products differ");
  return a;
}

template <class K>
Vec<K> parse_element(const AlgebraTable<K>& a, const std::string& text) {
  auto toks = tokenize_line(text, 1);
  Cursor c{toks, 0, 1, static_cast<int>(text.size()) + 1};
  auto terms = parse_combination(c, a.labels());
  const K& f = a.field();
  Vec<K> v(a.dim(), f.zero());
  for (const auto& [l, k] : terms) {
    auto i = static_cast<std::size_t>(std::find(a.labels().begin(), a.labels().end(), l) -
                                      a.labels().begin());
    v[i] = f.add(v[i], f.from_int(k));
  }
  return v;
}

template <class K>
Vec<K> parse_coords(const K& f, const std::string& text, std::size_t n) {
  auto toks = tokenize_line(text, 1);
  Vec<K> v;
  std::size_t i = 0;
  if (i < toks.size() && toks[i].text == "(") ++i;
  while (i < toks.size() && toks[i].text != ")") {
    long long sign = 1;
    if (toks[i].text == "-") {
      sign = -1;
      ++i;
    }
    if (i >= toks.size() || toks[i].kind != Tok::integer)
      throw InputError("expected an integer coordinate", 1, i < toks.size() ? toks[i].column : 1);
    v.push_back(f.from_int(sign * to_int(toks[i])));
    ++i;
    if (i < toks.size() && toks[i].text == ",") ++i;
  }
  if (v.size() != n) throw InputError("expected " + std::to_string(n) + " coordinates");
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || !f.is_zero(x);
  if (!nonzero) throw InputError("coordinates of a projective point must not all vanish");
  return v;
}

template AlgebraTable<PrimeField> build_algebra<PrimeField>(const PresentationFile&,
                                                            const PrimeField&);
template AlgebraTable<RationalField> build_algebra<RationalField>(const PresentationFile&,
                                                                  const RationalField&);
template Vec<PrimeField> parse_element<PrimeField>(const AlgebraTable<PrimeField>&,
                                                   const std::string&);
template Vec<RationalField> parse_element<RationalField>(const AlgebraTable<RationalField>&,
                                                         const std::string&);
template Vec<PrimeField> parse_coords<PrimeField>(const PrimeField&, const std::string&,
                                                  std::size_t);
template Vec<RationalField> parse_coords<RationalField>(const RationalField&,
                                                        const std::string&, std::size_t);

}  // namespace brisk
