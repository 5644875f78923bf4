#include "solv/graded.hpp"

#include <algorithm>
#include <utility>

namespace solv {

namespace {

std::string fresh_name(const std::vector<std::string>& taken,
                       std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base += "_";
  return base;
}

}  // namespace

AlgebraPtr assoc_graded_algebra(const AlgebraPtr& A) {
  AlgebraSpec B;
  B.name = A->name + "_gr";
  B.gens = A->gens;
  B.weights = A->weights;
  B.order = A->order;
  for (const auto& [key, rel] : A->relations) {
    long long target = A->weights[key.second] + A->weights[key.first];
    Relation r;
    r.lambda = rel.lambda;
    std::vector<Term> keep;
    for (const Term& t : rel.lower.terms)
      if (weighted_degree(*A, t.mono) == target) keep.push_back(t);
    r.lower.terms = std::move(keep);
    B.relations.emplace(key, std::move(r));
  }
  return make_algebra(std::move(B));
}

AlgebraPtr rees_algebra(const AlgebraPtr& A) {
  const int n = A->ngens();
  AlgebraSpec B;
  B.name = A->name + "_rees";
  B.gens = A->gens;
  B.gens.push_back(fresh_name(A->gens, "Z"));
  B.weights = A->weights;
  B.weights.push_back(1);
  B.order = A->order;
  B.order.z_tail = true;
  if (!B.order.priority.empty()) B.order.priority.push_back(n);
  for (const auto& [key, rel] : A->relations) {
    long long target = A->weights[key.second] + A->weights[key.first];
    Relation r;
    r.lambda = rel.lambda;
    for (const Term& t : rel.lower.terms) {
      long long z = target - weighted_degree(*A, t.mono);
      ExponentVector mono = t.mono;
      mono.push_back(static_cast<int>(z));
      r.lower.terms.push_back(Term{t.coef, std::move(mono)});
    }
    B.relations.emplace(key, std::move(r));
  }
  return make_algebra(std::move(B));
}

GradedContext make_graded_context(AlgebraPtr A) {
  GradedContext ctx;
  ctx.graded = assoc_graded_algebra(A);
  ctx.rees = rees_algebra(A);
  ctx.source = std::move(A);
  return ctx;
}

ModulePtr graded_module(const GradedContext& ctx, const ModulePtr& L) {
  return make_module(ctx.graded, L->rank, L->shifts, L->order,
                     L->name + "_gr");
}

ModulePtr rees_module(const GradedContext& ctx, const ModulePtr& L) {
  ModuleOrderingSpec ord;
  ord.kind = L->order.kind;
  ord.z_tail = true;
  ord.source = L;
  return make_module(ctx.rees, L->rank, L->shifts, std::move(ord),
                     L->name + "_rees");
}

Polynomial sigma_poly(const AlgebraSpec& A, const Polynomial& f) {
  if (f.is_zero()) throw MathError("principal part of zero");
  long long d = weighted_degree(A, f);
  Polynomial out;
  for (const Term& t : f.terms)
    if (weighted_degree(A, t.mono) == d) out.terms.push_back(t);
  return out;
}

ModuleElement sigma_element(const FreeModuleSpec& L, const ModuleElement& xi) {
  if (xi.is_zero()) throw MathError("principal part of zero");
  long long d = filtered_degree(L, xi);
  ModuleElement out;
  for (const ModuleTerm& t : xi.terms)
    if (filtered_term_degree(L, t.mono, t.comp) == d) out.terms.push_back(t);
  return out;
}

Polynomial rees_poly(const AlgebraSpec& A, const AlgebraSpec& rees,
                     const Polynomial& f, long long q) {
  if (f.is_zero()) throw MathError("homogenization of zero");
  long long d = weighted_degree(A, f);
  if (q < 0) q = d;
  if (q < d) throw MathError("homogenization degree below actual degree");
  std::vector<Term> terms;
  for (const Term& t : f.terms) {
    ExponentVector mono = t.mono;
    mono.push_back(static_cast<int>(q - weighted_degree(A, t.mono)));
    terms.push_back(Term{t.coef, std::move(mono)});
  }
  return make_poly(rees, std::move(terms));
}

ModuleElement rees_element(const FreeModuleSpec& L, const FreeModuleSpec& Lt,
                           const ModuleElement& xi, long long q) {
  if (xi.is_zero()) throw MathError("homogenization of zero");
  long long d = filtered_degree(L, xi);
  if (q < 0) q = d;
  if (q < d) throw MathError("homogenization degree below actual degree");
  std::vector<ModuleTerm> terms;
  for (const ModuleTerm& t : xi.terms) {
    ExponentVector mono = t.mono;
    mono.push_back(
        static_cast<int>(q - filtered_term_degree(L, t.mono, t.comp)));
    terms.push_back(ModuleTerm{t.coef, std::move(mono), t.comp});
  }
  return make_element(Lt, std::move(terms));
}

Polynomial dehomogenize_poly(const AlgebraSpec& A, const Polynomial& f) {
  std::vector<Term> terms;
  for (const Term& t : f.terms) {
    ExponentVector mono(t.mono.begin(), t.mono.end() - 1);
    terms.push_back(Term{t.coef, std::move(mono)});
  }
  return make_poly(A, std::move(terms));
}

ModuleElement dehomogenize(const FreeModuleSpec& L, const ModuleElement& x) {
  std::vector<ModuleTerm> terms;
  for (const ModuleTerm& t : x.terms) {
    ExponentVector mono(t.mono.begin(), t.mono.end() - 1);
    terms.push_back(ModuleTerm{t.coef, std::move(mono), t.comp});
  }
  return make_element(L, std::move(terms));
}

bool is_homogeneous(const FreeModuleSpec& M, const ModuleElement& x) {
  if (x.is_zero()) return true;
  long long d = filtered_term_degree(M, x.terms[0].mono, x.terms[0].comp);
  for (const ModuleTerm& t : x.terms)
    if (filtered_term_degree(M, t.mono, t.comp) != d) return false;
  return true;
}

std::vector<int> minimal_homogeneous_indices(
    ModulePtr M, const std::vector<ModuleElement>& gens) {
  for (const ModuleElement& g : gens) {
    if (g.is_zero()) throw MathError("zero generator in minimization");
    if (!is_homogeneous(*M, g))
      throw MathError("non-homogeneous generator in minimization");
  }
  std::vector<int> visit(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) visit[k] = static_cast<int>(k);
  std::stable_sort(visit.begin(), visit.end(), [&](int x, int y) {
    return filtered_degree(*M, gens[x]) < filtered_degree(*M, gens[y]);
  });

  std::vector<bool> alive(gens.size(), true);
  for (int idx : visit) {
    std::vector<ModuleElement> others;
    for (size_t k = 0; k < gens.size(); ++k)
      if (alive[k] && static_cast<int>(k) != idx) others.push_back(gens[k]);
    if (others.empty()) continue;
    GroebnerRecord rec = buchberger(M, others);
    if (normal_form(*M, gens[idx], rec.basis).is_zero()) alive[idx] = false;
  }
  std::vector<int> out;
  for (size_t k = 0; k < gens.size(); ++k)
    if (alive[k]) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<ModuleElement> minimal_homogeneous_generators(
    ModulePtr M, const std::vector<ModuleElement>& gens) {
  std::vector<ModuleElement> out;
  for (int k : minimal_homogeneous_indices(std::move(M), gens))
    out.push_back(gens[k]);
  return out;
}

namespace {

std::vector<ModuleElement> sigma_set(const FreeModuleSpec& L,
                                     const FreeModuleSpec& Lg,
                                     const std::vector<ModuleElement>& xs) {
  std::vector<ModuleElement> out;
  for (const ModuleElement& x : xs) {
    if (x.is_zero()) continue;
    ModuleElement s = sigma_element(L, x);
    out.push_back(make_element(Lg, std::move(s.terms)));
  }
  return out;
}

}  // namespace

TransferReport check_transfer_sigma(const GradedContext& ctx, const ModulePtr& L,
                                    const std::vector<ModuleElement>& basis,
                                    const std::vector<ModuleElement>& ngens) {
  TransferReport rep;
  ModulePtr Lg = graded_module(ctx, L);
  std::vector<ModuleElement> sG = sigma_set(*L, *Lg, basis);
  if (!check_groebner(*Lg, sG)) {
    rep.pass = false;
    rep.failures.push_back(
        "principal parts fail S-element reduction over the graded algebra");
  }
  std::vector<ModuleElement> sN = sigma_set(*L, *Lg, ngens);
  for (size_t k = 0; k < sN.size(); ++k) {
    if (!normal_form(*Lg, sN[k], sG).is_zero()) {
      rep.pass = false;
      rep.failures.push_back(
          "principal part of generator " + std::to_string(k + 1) +
          " is outside the span of the basis principal parts");
    }
  }
  return rep;
}

TransferReport check_transfer_rees(const GradedContext& ctx, const ModulePtr& L,
                                   const std::vector<ModuleElement>& basis,
                                   const std::vector<ModuleElement>& ngens) {
  TransferReport rep;
  ModulePtr Lt = rees_module(ctx, L);
  std::vector<ModuleElement> tG;
  for (const ModuleElement& g : basis)
    if (!g.is_zero()) tG.push_back(rees_element(*L, *Lt, g));
  if (!check_groebner(*Lt, tG)) {
    rep.pass = false;
    rep.failures.push_back(
        "homogenized basis fails S-element reduction over the homogenized "
        "algebra");
  }
  for (size_t k = 0; k < ngens.size(); ++k) {
    if (ngens[k].is_zero()) continue;
    ModuleElement h = rees_element(*L, *Lt, ngens[k]);
    if (!normal_form(*Lt, h, tG).is_zero()) {
      rep.pass = false;
      rep.failures.push_back(
          "homogenized generator " + std::to_string(k + 1) +
          " is outside the span of the homogenized basis");
    }
  }
  return rep;
}

}  // namespace solv
