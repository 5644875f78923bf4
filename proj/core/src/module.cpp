#include "solv/module.hpp"

#include <algorithm>
#include <utility>

namespace solv {

namespace {

Cmp compare_components(const FreeModuleSpec& M, int ca, int cb) {
  if (ca == cb) return Cmp::EQ;
  const auto& pr = M.order.component_priority;
  if (pr.empty()) return ca < cb ? Cmp::GT : Cmp::LT;
  int pa = -1, pb = -1;
  for (int k = 0; k < static_cast<int>(pr.size()); ++k) {
    if (pr[k] == ca) pa = k;
    if (pr[k] == cb) pb = k;
  }
  return pa < pb ? Cmp::GT : Cmp::LT;
}

Cmp compare_z(const ExponentVector& a, const ExponentVector& b) {
  int za = a.back(), zb = b.back();
  if (za != zb) return za < zb ? Cmp::LT : Cmp::GT;
  return Cmp::EQ;
}

}  // namespace

Cmp compare_module_monomials(const FreeModuleSpec& M, const ExponentVector& a,
                             int ca, const ExponentVector& b, int cb) {
  const AlgebraSpec& A = M.alg();
  const ModuleOrderingSpec& ord = M.order;
  if (ord.z_tail) {
    ExponentVector sa(a.begin(), a.end() - 1);
    ExponentVector sb(b.begin(), b.end() - 1);
    Cmp c = compare_module_monomials(*ord.source, sa, ca, sb, cb);
    if (c != Cmp::EQ) return c;
    return compare_z(a, b);
  }
  if (ord.graded) {
    long long da = filtered_term_degree(M, a, ca);
    long long db = filtered_term_degree(M, b, cb);
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  }
  switch (ord.kind) {
    case ModOrderKind::Schreyer: {
      const SchreyerImage& ia = ord.images[ca];
      const SchreyerImage& ib = ord.images[cb];
      ExponentVector ma = a, mb = b;
      for (size_t k = 0; k < ma.size(); ++k) {
        ma[k] += ia.mu[k];
        mb[k] += ib.mu[k];
      }
      Cmp c = compare_module_monomials(*ord.parent, ma, ia.comp, mb, ib.comp);
      if (c != Cmp::EQ) return c;
      if (ca != cb) return ca < cb ? Cmp::LT : Cmp::GT;
      return Cmp::EQ;
    }
    case ModOrderKind::TOP: {
      Cmp c = compare_monomials(A, a, b);
      if (c != Cmp::EQ) return c;
      return compare_components(M, ca, cb);
    }
    case ModOrderKind::POT: {
      Cmp c = compare_components(M, ca, cb);
      if (c != Cmp::EQ) return c;
      return compare_monomials(A, a, b);
    }
  }
  return Cmp::EQ;
}

long long filtered_term_degree(const FreeModuleSpec& M,
                               const ExponentVector& mono, int comp) {
  return weighted_degree(M.alg(), mono) + M.shifts[comp];
}

long long filtered_degree(const FreeModuleSpec& M, const ModuleElement& x) {
  long long d = 0;
  bool first = true;
  for (const ModuleTerm& t : x.terms) {
    long long td = filtered_term_degree(M, t.mono, t.comp);
    if (first || td > d) d = td;
    first = false;
  }
  return d;
}

ModulePtr make_module(AlgebraPtr algebra, int rank,
                      std::vector<long long> shifts, ModuleOrderingSpec order,
                      std::string name) {
  if (!algebra) throw MathError("module requires an algebra");
  if (rank < 0) throw MathError("module rank must be nonnegative");
  if (shifts.empty()) shifts.assign(static_cast<size_t>(rank), 0);
  if (static_cast<int>(shifts.size()) != rank)
    throw MathError("shift count does not match rank");
  if (!order.component_priority.empty()) {
    std::vector<int> p = order.component_priority;
    std::sort(p.begin(), p.end());
    for (int k = 0; k < rank; ++k)
      if (k >= static_cast<int>(p.size()) || p[k] != k)
        throw MathError("component priority is not a permutation");
  }
  if (order.z_tail) {
    if (!algebra->order.z_tail)
      throw MathError("module tail flag requires matching algebra ordering");
    if (!order.source) throw MathError("module tail flag requires a source");
    if (order.source->rank != rank)
      throw MathError("tail source rank does not match");
    if (order.source->alg().ngens() + 1 != algebra->ngens())
      throw MathError("tail source arity does not match");
  }
  if (order.kind == ModOrderKind::Schreyer) {
    if (!order.parent) throw MathError("schreyer ordering requires a parent");
    if (static_cast<int>(order.images.size()) != rank)
      throw MathError("schreyer ordering requires one image per component");
    for (const SchreyerImage& im : order.images) {
      if (im.mu.size() != algebra->gens.size())
        throw MathError("schreyer image has wrong arity");
      if (im.comp < 0 || im.comp >= order.parent->rank)
        throw MathError("schreyer image component out of range");
    }
  }
  auto M = std::make_shared<FreeModuleSpec>();
  M->algebra = std::move(algebra);
  M->rank = rank;
  M->shifts = std::move(shifts);
  M->order = std::move(order);
  M->name = std::move(name);
  return M;
}

ModuleElement module_zero() { return ModuleElement{}; }

ModuleElement module_term(const FreeModuleSpec& M, Rational c,
                          ExponentVector mono, int comp) {
  if (comp < 0 || comp >= M.rank) throw MathError("component out of range");
  if (c.is_zero()) return ModuleElement{};
  ModuleElement x;
  x.terms.push_back(ModuleTerm{std::move(c), std::move(mono), comp});
  return x;
}

ModuleElement make_element(const FreeModuleSpec& M,
                           std::vector<ModuleTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [&M](const ModuleTerm& x, const ModuleTerm& y) {
                     return compare_module_monomials(M, x.mono, x.comp, y.mono,
                                                     y.comp) == Cmp::GT;
                   });
  ModuleElement out;
  for (ModuleTerm& t : terms) {
    if (!out.terms.empty() && out.terms.back().comp == t.comp &&
        out.terms.back().mono == t.mono) {
      out.terms.back().coef += t.coef;
      if (out.terms.back().coef.is_zero()) out.terms.pop_back();
    } else if (!t.coef.is_zero()) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

ModuleElement add(const FreeModuleSpec& M, const ModuleElement& a,
                  const ModuleElement& b) {
  ModuleElement out;
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    const ModuleTerm& x = a.terms[i];
    const ModuleTerm& y = b.terms[j];
    Cmp c = compare_module_monomials(M, x.mono, x.comp, y.mono, y.comp);
    if (c == Cmp::GT) {
      out.terms.push_back(x);
      ++i;
    } else if (c == Cmp::LT) {
      out.terms.push_back(y);
      ++j;
    } else {
      Rational s = x.coef + y.coef;
      if (!s.is_zero())
        out.terms.push_back(ModuleTerm{std::move(s), x.mono, x.comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

ModuleElement sub(const FreeModuleSpec& M, const ModuleElement& a,
                  const ModuleElement& b) {
  return add(M, a, negate(b));
}

ModuleElement scale(const Rational& c, const ModuleElement& a) {
  if (c.is_zero()) return ModuleElement{};
  ModuleElement out = a;
  for (ModuleTerm& t : out.terms) t.coef *= c;
  return out;
}

ModuleElement negate(const ModuleElement& a) {
  ModuleElement out = a;
  for (ModuleTerm& t : out.terms) t.coef = -t.coef;
  return out;
}

bool element_equal(const ModuleElement& a, const ModuleElement& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].comp != b.terms[i].comp) return false;
    if (a.terms[i].mono != b.terms[i].mono) return false;
    if (!(a.terms[i].coef == b.terms[i].coef)) return false;
  }
  return true;
}

ModuleElement act_term(const FreeModuleSpec& M, const Rational& c,
                       const ExponentVector& mono, const ModuleElement& x) {
  std::vector<ModuleTerm> acc;
  for (const ModuleTerm& t : x.terms) {
    Polynomial p = mul_mono(M.alg(), mono, t.mono);
    for (const Term& pt : p.terms)
      acc.push_back(ModuleTerm{c * t.coef * pt.coef, pt.mono, t.comp});
  }
  return make_element(M, std::move(acc));
}

ModuleElement act(const FreeModuleSpec& M, const Polynomial& f,
                  const ModuleElement& x) {
  ModuleElement out;
  for (const Term& ft : f.terms)
    out = add(M, out, act_term(M, ft.coef, ft.mono, x));
  return out;
}

ModuleElement embed(const FreeModuleSpec& M, const Polynomial& f) {
  std::vector<ModuleTerm> terms;
  terms.reserve(f.terms.size());
  for (const Term& t : f.terms)
    terms.push_back(ModuleTerm{t.coef, t.mono, 0});
  return make_element(M, std::move(terms));
}

std::optional<ExponentVector> monomial_divides(const ExponentVector& alpha,
                                               const ExponentVector& beta) {
  if (alpha.size() != beta.size()) return std::nullopt;
  ExponentVector q(alpha.size());
  for (size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] > beta[k]) return std::nullopt;
    q[k] = beta[k] - alpha[k];
  }
  return q;
}

DivisionResult divide(const FreeModuleSpec& M, const ModuleElement& x,
                      const std::vector<ModuleElement>& divisors) {
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial{});
  std::vector<std::vector<Term>> qterms(divisors.size());
  std::vector<ModuleTerm> rem;
  ModuleElement work = x;
  while (!work.is_zero()) {
    const ModuleTerm lead = work.lead();
    int found = -1;
    ExponentVector gamma;
    for (size_t j = 0; j < divisors.size(); ++j) {
      if (divisors[j].is_zero()) continue;
      const ModuleTerm& dl = divisors[j].lead();
      if (dl.comp != lead.comp) continue;
      auto q = monomial_divides(dl.mono, lead.mono);
      if (q) {
        found = static_cast<int>(j);
        gamma = std::move(*q);
        break;
      }
    }
    if (found < 0) {
      rem.push_back(lead);
      work.terms.erase(work.terms.begin());
      continue;
    }
    ModuleElement prod = act_term(M, Rational(1), gamma, divisors[found]);
    Rational c = lead.coef / prod.lead().coef;
    work = sub(M, work, scale(c, prod));
    qterms[found].push_back(Term{std::move(c), gamma});
  }
  for (size_t j = 0; j < divisors.size(); ++j)
    res.quotients[j] = make_poly(M.alg(), std::move(qterms[j]));
  res.remainder = make_element(M, std::move(rem));
  return res;
}

std::string describe_ordering(const FreeModuleSpec& M) {
  std::string base;
  switch (M.alg().order.kind) {
    case OrderKind::Lex: base = "lex"; break;
    case OrderKind::GrLex: base = "grlex"; break;
    case OrderKind::GrevLex: base = "grevlex"; break;
  }
  std::string kind;
  switch (M.order.kind) {
    case ModOrderKind::TOP: kind = "TOP"; break;
    case ModOrderKind::POT: kind = "POT"; break;
    case ModOrderKind::Schreyer: kind = "schreyer"; break;
  }
  std::string out = kind + "(" + base;
  if (M.order.z_tail) out += ",ztail";
  out += ")";
  if (M.order.graded) out = "gr-" + out;
  return out;
}

}  // namespace solv
