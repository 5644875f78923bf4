#include "solv/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace solv {
namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Names the module-element syntax or the order line would misread.
bool is_reserved_gen_name(const std::string& s) {
  if (s == "ztail") return true;
  if (s.size() >= 2 && s[0] == 'e') {
    bool digits = true;
    for (size_t k = 1; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) digits = false;
    if (digits) return true;
  }
  return false;
}

long long parse_ll(const std::string& s, int line, const char* what) {
  std::string t = trim(s);
  size_t k = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (k == t.size()) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  for (; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k])))
      throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  try {
    return std::stoll(t);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
}

// Content lines with comments stripped and blanks dropped, as (line, text).
std::vector<std::pair<int, std::string>> split_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int line = 0;
  std::string cur;
  auto flush = [&]() {
    auto hash = cur.find('#');
    if (hash != std::string::npos) cur.erase(hash);
    std::string t = trim(cur);
    if (!t.empty()) out.push_back({line, t});
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      ++line;
      flush();
    } else if (c != '\r') {
      cur += c;
    }
  }
  ++line;
  flush();
  return out;
}

int gen_index(const AlgebraSpec& A, const std::string& name) {
  for (int k = 0; k < A.ngens(); ++k)
    if (A.gens[k] == name) return k;
  return -1;
}

struct SignedChunk {
  int sign = 1;
  std::string text;
};

// Splits at depth-0 +/- separators; a leading sign attaches to the first
// chunk.
std::vector<SignedChunk> split_signed(const std::string& s, int line) {
  std::vector<SignedChunk> out;
  std::string cur;
  int depth = 0;
  int sign = 1;
  bool have_sign = false;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth == 0) throw ParseError(line, "unbalanced ')'");
      --depth;
    }
    if (depth == 0 && (c == '+' || c == '-')) {
      std::string body = trim(cur);
      cur.clear();
      if (!body.empty()) {
        out.push_back({sign, body});
        sign = 1;
        have_sign = false;
      }
      if (have_sign) throw ParseError(line, "misplaced sign in '" + trim(s) + "'");
      sign = (c == '-') ? -1 : 1;
      have_sign = true;
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError(line, "unbalanced '('");
  std::string body = trim(cur);
  if (body.empty()) {
    if (have_sign || out.empty())
      throw ParseError(line, "empty expression in '" + trim(s) + "'");
  } else {
    out.push_back({sign, body});
  }
  return out;
}

Term parse_term(const AlgebraSpec& A, const std::string& chunk, int line) {
  Term t{Rational(1), ExponentVector(A.ngens(), 0)};
  std::vector<std::string> factors;
  std::string cur;
  for (char c : chunk) {
    if (c == '*') {
      factors.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(trim(cur));
  int last = -1;
  for (const std::string& f : factors) {
    if (f.empty()) throw ParseError(line, "empty factor in '" + chunk + "'");
    if (std::isdigit(static_cast<unsigned char>(f[0]))) {
      try {
        t.coef *= Rational::parse(f);
      } catch (const MathError& e) {
        throw ParseError(line, e.what());
      }
      continue;
    }
    auto caret = f.find('^');
    std::string name = trim(caret == std::string::npos ? f : f.substr(0, caret));
    long long e = 1;
    if (caret != std::string::npos) e = parse_ll(f.substr(caret + 1), line, "exponent");
    if (e < 0) throw ParseError(line, "negative exponent in '" + f + "'");
    if (e > 1000000000) throw ParseError(line, "exponent too large in '" + f + "'");
    int idx = gen_index(A, name);
    if (idx < 0) throw ParseError(line, "unknown generator '" + name + "'");
    if (idx < last)
      throw ParseError(line, "generator '" + name +
                                 "' out of declaration order in '" + chunk + "'");
    last = idx;
    t.mono[idx] += static_cast<int>(e);
  }
  return t;
}

Polynomial parse_polynomial_at(const AlgebraSpec& A, const std::string& text,
                               int line) {
  std::vector<Term> terms;
  for (const SignedChunk& c : split_signed(trim(text), line)) {
    Term t = parse_term(A, c.text, line);
    if (c.sign < 0) t.coef = -t.coef;
    if (!t.coef.is_zero()) terms.push_back(std::move(t));
  }
  return make_poly(A, std::move(terms));
}

// Magnitude rendering without sign; "" when the whole factor is an implicit 1.
std::string term_body(const AlgebraSpec& A, const Rational& mag,
                      const ExponentVector& mono) {
  std::vector<std::string> parts;
  bool have_gen = false;
  for (int k = 0; k < A.ngens(); ++k)
    if (mono[k] != 0) have_gen = true;
  if (!have_gen || !mag.is_one()) parts.push_back(mag.str());
  for (int k = 0; k < A.ngens(); ++k) {
    if (mono[k] == 0) continue;
    parts.push_back(mono[k] == 1 ? A.gens[k]
                                 : A.gens[k] + "^" + std::to_string(mono[k]));
  }
  return join(parts, "*");
}

int parse_comp_token(const FreeModuleSpec& M, const std::string& tok, int line) {
  bool ok = tok.size() >= 2 && tok[0] == 'e';
  for (size_t k = 1; ok && k < tok.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(tok[k]))) ok = false;
  if (!ok) throw ParseError(line, "expected component e<k>, got '" + tok + "'");
  long long k = parse_ll(tok.substr(1), line, "component");
  if (k < 1 || k > M.rank)
    throw ParseError(line, "component " + tok + " outside 1.." +
                               std::to_string(M.rank));
  return static_cast<int>(k - 1);
}

ModuleElement parse_module_element_at(const FreeModuleSpec& M,
                                      const std::string& text, int line) {
  const AlgebraSpec& A = M.alg();
  std::vector<ModuleTerm> terms;
  for (const SignedChunk& c : split_signed(trim(text), line)) {
    if (c.text == "0") continue;
    Polynomial poly;
    int comp = 0;
    if (c.text[0] == '(') {
      int depth = 0;
      size_t close = std::string::npos;
      for (size_t k = 0; k < c.text.size(); ++k) {
        if (c.text[k] == '(') ++depth;
        if (c.text[k] == ')' && --depth == 0) {
          close = k;
          break;
        }
      }
      if (close == std::string::npos) throw ParseError(line, "unbalanced '('");
      std::string rest = trim(c.text.substr(close + 1));
      if (rest.size() < 2 || rest[0] != '*')
        throw ParseError(line, "expected *e<k> after ')' in '" + c.text + "'");
      comp = parse_comp_token(M, trim(rest.substr(1)), line);
      poly = parse_polynomial_at(A, c.text.substr(1, close - 1), line);
    } else {
      auto star = c.text.rfind('*');
      if (star == std::string::npos) {
        comp = parse_comp_token(M, c.text, line);
        poly = poly_constant(Rational(1), A.ngens());
      } else {
        comp = parse_comp_token(M, trim(c.text.substr(star + 1)), line);
        poly = parse_polynomial_at(A, c.text.substr(0, star), line);
      }
    }
    for (const Term& t : poly.terms) {
      Rational coef = c.sign < 0 ? -t.coef : t.coef;
      terms.push_back({std::move(coef), t.mono, comp});
    }
  }
  return make_element(M, std::move(terms));
}

}  // namespace

Polynomial parse_polynomial(const AlgebraSpec& A, const std::string& text) {
  return parse_polynomial_at(A, text, 0);
}

std::string print_polynomial(const AlgebraSpec& A, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms) {
    bool neg = t.coef.sign() < 0;
    Rational mag = neg ? -t.coef : t.coef;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(A, mag, t.mono);
  }
  return out;
}

ModuleElement parse_module_element(const FreeModuleSpec& M,
                                   const std::string& text) {
  return parse_module_element_at(M, text, 0);
}

std::string print_module_element(const FreeModuleSpec& M,
                                 const ModuleElement& x) {
  if (x.is_zero()) return "0";
  const AlgebraSpec& A = M.alg();
  std::map<int, std::vector<Term>> by_comp;
  for (const ModuleTerm& t : x.terms) by_comp[t.comp].push_back({t.coef, t.mono});
  std::string out;
  bool first = true;
  for (auto& [comp, terms] : by_comp) {
    Polynomial p = make_poly(A, std::move(terms));
    std::string ek = "e" + std::to_string(comp + 1);
    std::string body;
    bool neg = false;
    if (p.terms.size() == 1) {
      const Term& t = p.lead();
      neg = t.coef.sign() < 0;
      Rational mag = neg ? -t.coef : t.coef;
      std::string tb = term_body(A, mag, t.mono);
      body = (tb == "1") ? ek : tb + "*" + ek;
    } else {
      body = "(" + print_polynomial(A, p) + ")*" + ek;
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

AlgebraPtr parse_algebra_file(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(0, "empty algebra file");

  AlgebraSpec spec;
  bool have_gens = false, have_weights = false, have_order = false;
  struct RawRel {
    int line, j, i;
    std::string rhs;
  };
  std::vector<RawRel> raw_rels;

  {
    auto& [ln, s] = lines.front();
    auto t = split_ws(s);
    if (t.size() != 2 || t[0] != "algebra" || !is_ident(t[1]))
      throw ParseError(ln, "expected 'algebra <name>'");
    spec.name = t[1];
  }
  for (size_t k = 1; k < lines.size(); ++k) {
    auto& [ln, s] = lines[k];
    auto t = split_ws(s);
    const std::string& head = t.front();
    if (head == "algebra") {
      throw ParseError(ln, "duplicate algebra line");
    } else if (head == "gens") {
      if (have_gens) throw ParseError(ln, "duplicate gens line");
      if (t.size() < 2) throw ParseError(ln, "gens line needs at least one name");
      for (size_t q = 1; q < t.size(); ++q) {
        if (!is_ident(t[q])) throw ParseError(ln, "bad generator name '" + t[q] + "'");
        if (is_reserved_gen_name(t[q]))
          throw ParseError(ln, "generator name '" + t[q] +
                                   "' is reserved by the file syntax");
        if (gen_index(spec, t[q]) >= 0)
          throw ParseError(ln, "duplicate generator '" + t[q] + "'");
        spec.gens.push_back(t[q]);
      }
      have_gens = true;
    } else if (head == "weights") {
      if (have_weights) throw ParseError(ln, "duplicate weights line");
      if (!have_gens) throw ParseError(ln, "weights line before gens");
      if (t.size() != spec.gens.size() + 1)
        throw ParseError(ln, "weights line needs one value per generator");
      for (size_t q = 1; q < t.size(); ++q) {
        long long w = parse_ll(t[q], ln, "weight");
        if (w < 1) throw ParseError(ln, "weights must be >= 1");
        spec.weights.push_back(w);
      }
      have_weights = true;
    } else if (head == "order") {
      if (have_order) throw ParseError(ln, "duplicate order line");
      if (!have_gens) throw ParseError(ln, "order line before gens");
      if (t.size() < 2) throw ParseError(ln, "order line needs a kind");
      if (t[1] == "lex")
        spec.order.kind = OrderKind::Lex;
      else if (t[1] == "grlex")
        spec.order.kind = OrderKind::GrLex;
      else if (t[1] == "grevlex")
        spec.order.kind = OrderKind::GrevLex;
      else
        throw ParseError(ln, "unknown ordering '" + t[1] + "'");
      size_t q = 2;
      if (q < t.size() && t[q] == "ztail") {
        spec.order.z_tail = true;
        ++q;
      }
      if (q < t.size()) {
        std::vector<bool> seen(spec.gens.size(), false);
        for (; q < t.size(); ++q) {
          int idx = gen_index(spec, t[q]);
          if (idx < 0) throw ParseError(ln, "unknown generator '" + t[q] + "'");
          if (seen[idx]) throw ParseError(ln, "repeated generator '" + t[q] + "'");
          seen[idx] = true;
          spec.order.priority.push_back(idx);
        }
        if (spec.order.priority.size() != spec.gens.size())
          throw ParseError(ln, "ordering priority must list every generator");
      }
      have_order = true;
    } else if (head == "rel") {
      if (!have_gens) throw ParseError(ln, "rel line before gens");
      std::string rest = trim(s.substr(s.find("rel") + 3));
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "rel line needs '='");
      std::string lhs = trim(rest.substr(0, eq));
      std::string rhs = trim(rest.substr(eq + 1));
      auto star = lhs.find('*');
      if (star == std::string::npos)
        throw ParseError(ln, "rel left side must be <gj>*<gi>");
      int j = gen_index(spec, trim(lhs.substr(0, star)));
      int i = gen_index(spec, trim(lhs.substr(star + 1)));
      if (j < 0 || i < 0) throw ParseError(ln, "unknown generator in '" + lhs + "'");
      if (j <= i)
        throw ParseError(ln, "rel left side must put the later generator first");
      for (const RawRel& r : raw_rels)
        if (r.j == j && r.i == i)
          throw ParseError(ln, "duplicate relation for " + lhs);
      raw_rels.push_back({ln, j, i, rhs});
    } else {
      throw ParseError(ln, "unknown directive '" + head + "'");
    }
  }
  if (!have_gens) throw ParseError(0, "missing gens line");
  if (!have_weights) spec.weights.assign(spec.gens.size(), 1);

  for (const RawRel& r : raw_rels) {
    Polynomial rhs = parse_polynomial_at(spec, r.rhs, r.line);
    ExponentVector prod(spec.ngens(), 0);
    prod[r.i] += 1;
    prod[r.j] += 1;
    Relation rel;
    rel.lambda = Rational(0);
    std::vector<Term> lower;
    for (const Term& t : rhs.terms) {
      if (t.mono == prod)
        rel.lambda = t.coef;
      else
        lower.push_back(t);
    }
    if (rel.lambda.is_zero())
      throw ParseError(r.line, "rel right side must contain the monomial " +
                                   spec.gens[r.i] + "*" + spec.gens[r.j]);
    rel.lower = make_poly(spec, std::move(lower));
    spec.relations[{r.j, r.i}] = std::move(rel);
  }

  ValidationReport rep = validate_algebra(spec);
  if (!rep.ok()) {
    std::string msg = "invalid algebra: " + join(rep.violations, "; ");
    throw ParseError(0, msg);
  }
  return make_algebra(std::move(spec));
}

std::string print_algebra_file(const AlgebraSpec& A) {
  std::ostringstream o;
  o << "algebra " << A.name << "\n";
  o << "gens";
  for (const std::string& g : A.gens) o << " " << g;
  o << "\n";
  o << "weights";
  for (long long w : A.weights) o << " " << w;
  o << "\n";
  o << "order ";
  switch (A.order.kind) {
    case OrderKind::Lex: o << "lex"; break;
    case OrderKind::GrLex: o << "grlex"; break;
    case OrderKind::GrevLex: o << "grevlex"; break;
  }
  if (A.order.z_tail) o << " ztail";
  for (int idx : A.order.priority) o << " " << A.gens[idx];
  o << "\n";
  for (const auto& [ji, rel] : A.relations) {
    auto [j, i] = ji;
    std::vector<Term> rhs;
    ExponentVector prod(A.ngens(), 0);
    prod[i] += 1;
    prod[j] += 1;
    rhs.push_back({rel.lambda, prod});
    for (const Term& t : rel.lower.terms) rhs.push_back(t);
    o << "rel " << A.gens[j] << "*" << A.gens[i] << " = "
      << print_polynomial(A, make_poly(A, std::move(rhs))) << "\n";
  }
  return o.str();
}

ModuleFile parse_module_file(AlgebraPtr algebra, const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(0, "empty module file");

  std::string mod_name, alg_name;
  int rank = -1;
  bool have_shifts = false, have_order = false;
  std::vector<long long> shifts;
  ModuleOrderingSpec mo;
  mo.kind = ModOrderKind::TOP;
  struct RawGen {
    int line;
    std::string name, rhs;
  };
  std::vector<RawGen> raw_gens;

  {
    auto& [ln, s] = lines.front();
    auto t = split_ws(s);
    if (t.size() != 4 || t[0] != "module" || t[2] != "over" || !is_ident(t[1]))
      throw ParseError(ln, "expected 'module <name> over <algebra>'");
    mod_name = t[1];
    alg_name = t[3];
  }
  for (size_t k = 1; k < lines.size(); ++k) {
    auto& [ln, s] = lines[k];
    auto t = split_ws(s);
    const std::string& head = t.front();
    if (head == "module") {
      throw ParseError(ln, "duplicate module line");
    } else if (head == "rank") {
      if (rank >= 0) throw ParseError(ln, "duplicate rank line");
      if (t.size() != 2) throw ParseError(ln, "expected 'rank <s>'");
      long long r = parse_ll(t[1], ln, "rank");
      if (r < 0 || r > 1000000) throw ParseError(ln, "rank out of range");
      rank = static_cast<int>(r);
    } else if (head == "shifts") {
      if (have_shifts) throw ParseError(ln, "duplicate shifts line");
      for (size_t q = 1; q < t.size(); ++q)
        shifts.push_back(parse_ll(t[q], ln, "shift"));
      have_shifts = true;
    } else if (head == "modorder") {
      if (have_order) throw ParseError(ln, "duplicate modorder line");
      if (t.size() < 2) throw ParseError(ln, "modorder line needs a kind");
      if (t[1] == "top")
        mo.kind = ModOrderKind::TOP;
      else if (t[1] == "pot")
        mo.kind = ModOrderKind::POT;
      else if (t[1] == "schreyer")
        throw ParseError(ln,
                         "schreyer orderings carry parent data and have no file "
                         "form; use top or pot");
      else
        throw ParseError(ln, "unknown module ordering '" + t[1] + "'");
      size_t q = 2;
      if (q < t.size() && t[q] == "graded") {
        mo.graded = true;
        ++q;
      }
      if (q < t.size()) throw ParseError(ln, "trailing tokens on modorder line");
      have_order = true;
    } else if (head == "gen") {
      std::string rest = trim(s.substr(s.find("gen") + 3));
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "gen line needs '='");
      std::string name = trim(rest.substr(0, eq));
      std::string rhs = trim(rest.substr(eq + 1));
      if (!is_ident(name)) throw ParseError(ln, "bad generator name '" + name + "'");
      for (const RawGen& g : raw_gens)
        if (g.name == name) throw ParseError(ln, "duplicate generator '" + name + "'");
      raw_gens.push_back({ln, name, rhs});
    } else {
      throw ParseError(ln, "unknown directive '" + head + "'");
    }
  }
  if (rank < 0) throw ParseError(0, "missing rank line");
  if (alg_name != algebra->name)
    throw ParseError(0, "module is over algebra '" + alg_name +
                            "' but '" + algebra->name + "' was loaded");
  if (have_shifts && static_cast<int>(shifts.size()) != rank)
    throw ParseError(0, "shifts line needs one value per component");
  if (!have_shifts) shifts.assign(rank, 0);
  if (!have_order) mo.graded = true;

  ModuleFile mf;
  mf.module = make_module(algebra, rank, std::move(shifts), mo, mod_name);
  for (const RawGen& g : raw_gens) {
    mf.gen_names.push_back(g.name);
    mf.gens.push_back(parse_module_element_at(*mf.module, g.rhs, g.line));
  }
  return mf;
}

std::string print_module_file(const ModuleFile& mf) {
  const FreeModuleSpec& M = *mf.module;
  if (M.order.kind == ModOrderKind::Schreyer)
    throw MathError("schreyer orderings have no file form");
  std::ostringstream o;
  o << "module " << M.name << " over " << M.alg().name << "\n";
  o << "rank " << M.rank << "\n";
  o << "shifts";
  for (long long b : M.shifts) o << " " << b;
  o << "\n";
  o << "modorder " << (M.order.kind == ModOrderKind::TOP ? "top" : "pot");
  if (M.order.graded) o << " graded";
  o << "\n";
  for (size_t k = 0; k < mf.gens.size(); ++k) {
    std::string name = k < mf.gen_names.size() ? mf.gen_names[k]
                                               : "f" + std::to_string(k + 1);
    o << "gen " << name << " = " << print_module_element(M, mf.gens[k]) << "\n";
  }
  return o.str();
}

namespace {

std::string strip_colon(const std::string& tok, int line) {
  if (tok.empty() || tok.back() != ':')
    throw ParseError(line, "expected ':' after '" + tok + "'");
  return tok.substr(0, tok.size() - 1);
}

}  // namespace

RawResolution parse_resolution_file(const AlgebraSpec& A,
                                    const std::string& text) {
  auto lines = split_lines(text);
  size_t pos = 0;
  auto need = [&](const char* what) -> const std::pair<int, std::string>& {
    if (pos >= lines.size())
      throw ParseError(lines.empty() ? 0 : lines.back().first,
                       std::string("unexpected end of file, expected ") + what);
    return lines[pos];
  };

  RawResolution R;
  {
    auto& [ln, s] = need("resolution header");
    auto t = split_ws(s);
    if (t.size() != 5 || t[0] != "resolution" || t[1] != "over" || t[3] != "of")
      throw ParseError(ln, "expected 'resolution over <algebra> of <module>'");
    R.algebra_name = t[2];
    R.module_name = t[4];
    ++pos;
  }

  auto parse_step = [&](int expect_idx, int expect_rank) {
    auto& [ln, s] = need("step line");
    auto t = split_ws(s);
    if (t.size() < 5 || t[0] != "step" || t[2] != "rank" || t[4] != "shifts")
      throw ParseError(ln, "expected 'step <i>: rank <r> shifts ...'");
    if (strip_colon(t[1], ln) != std::to_string(expect_idx))
      throw ParseError(ln, "expected step " + std::to_string(expect_idx));
    long long r = parse_ll(t[3], ln, "rank");
    if (r < 0 || r > 1000000) throw ParseError(ln, "rank out of range");
    if (expect_rank >= 0 && r != expect_rank)
      throw ParseError(ln, "step rank disagrees with the preceding map");
    std::vector<long long> sh;
    for (size_t q = 5; q < t.size(); ++q) sh.push_back(parse_ll(t[q], ln, "shift"));
    if (static_cast<long long>(sh.size()) != r)
      throw ParseError(ln, "shifts list needs one value per component");
    R.ranks.push_back(static_cast<int>(r));
    R.shifts.push_back(std::move(sh));
    ++pos;
  };

  parse_step(0, -1);
  int level = 1;
  while (pos < lines.size()) {
    auto& [ln, s] = lines[pos];
    auto t = split_ws(s);
    if (t.empty() || t[0] != "map")
      throw ParseError(ln, "expected 'map' line or end of file");
    if (t.size() != 6 || t[3] != "x" || t[5] != "matrix")
      throw ParseError(ln, "expected 'map <l>: <rows> x <cols> matrix'");
    if (strip_colon(t[1], ln) != std::to_string(level))
      throw ParseError(ln, "expected map " + std::to_string(level));
    long long rows = parse_ll(t[2], ln, "row count");
    long long cols = parse_ll(t[4], ln, "column count");
    if (rows < 0 || cols < 0 || rows > 1000000 || cols > 1000000)
      throw ParseError(ln, "matrix size out of range");
    if (cols != R.ranks.back())
      throw ParseError(ln, "map columns disagree with the previous step rank");
    ++pos;

    std::vector<std::vector<Polynomial>> mat;
    for (long long k = 0; k < rows; ++k) {
      auto& [rln, rs] = need("row line");
      auto colon = rs.find(':');
      if (colon == std::string::npos) throw ParseError(rln, "row line needs ':'");
      auto left = split_ws(rs.substr(0, colon));
      if (left.size() != 2 || left[0] != "row" ||
          left[1] != std::to_string(k + 1))
        throw ParseError(rln, "expected 'row " + std::to_string(k + 1) + ":'");
      std::string rest = trim(rs.substr(colon + 1));
      std::vector<Polynomial> row;
      if (!rest.empty()) {
        std::string cur;
        for (char ch : rest) {
          if (ch == '|') {
            row.push_back(parse_polynomial_at(A, cur, rln));
            cur.clear();
          } else {
            cur += ch;
          }
        }
        row.push_back(parse_polynomial_at(A, cur, rln));
      }
      if (static_cast<long long>(row.size()) != cols)
        throw ParseError(rln, "row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(cols));
      mat.push_back(std::move(row));
      ++pos;
    }
    R.maps.push_back(std::move(mat));
    parse_step(level, static_cast<int>(rows));
    ++level;
  }
  return R;
}

std::string print_raw_resolution(const AlgebraSpec& A, const RawResolution& R) {
  std::ostringstream o;
  o << "resolution over " << R.algebra_name << " of " << R.module_name << "\n";
  for (size_t l = 0; l < R.ranks.size(); ++l) {
    o << "step " << l << ": rank " << R.ranks[l] << " shifts";
    for (long long b : R.shifts[l]) o << " " << b;
    o << "\n";
    if (l < R.maps.size()) {
      o << "map " << (l + 1) << ": " << R.ranks[l + 1] << " x " << R.ranks[l]
        << " matrix\n";
      o << print_matrix_block(A, R.maps[l]);
    }
  }
  return o.str();
}

std::string print_resolution_file(const Resolution& R,
                                  const std::string& algebra_name,
                                  const std::string& module_name) {
  RawResolution raw;
  raw.algebra_name = algebra_name;
  raw.module_name = module_name;
  raw.ranks.push_back(R.presentation.reduced_ambient->rank);
  raw.shifts.push_back(R.presentation.reduced_ambient->shifts);
  for (const ResolutionStep& st : R.steps) {
    raw.ranks.push_back(st.source->rank);
    raw.shifts.push_back(st.source->shifts);
    raw.maps.push_back(st.matrix);
  }
  return print_raw_resolution(R.presentation.reduced_ambient->alg(), raw);
}

std::string print_matrix_block(const AlgebraSpec& A,
                               const std::vector<std::vector<Polynomial>>& m) {
  std::ostringstream o;
  for (size_t k = 0; k < m.size(); ++k) {
    o << "  row " << (k + 1) << ":";
    std::vector<std::string> entries;
    for (const Polynomial& p : m[k]) entries.push_back(print_polynomial(A, p));
    if (!entries.empty()) o << " " << join(entries, " | ");
    o << "\n";
  }
  return o.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace solv
