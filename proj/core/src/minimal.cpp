#include "solv/minimal.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "solv/graded.hpp"

namespace solv {

namespace {

// The coefficient of e_comp in x when it is a nonzero constant; monostate
// otherwise. A constant coefficient at full filtered degree forces the
// coefficient polynomial to be that single constant term.
const Rational* constant_coefficient(const ModuleElement& x, int comp,
                                     Rational& store) {
  const Rational* found = nullptr;
  for (const ModuleTerm& t : x.terms) {
    if (t.comp != comp) continue;
    bool constant =
        std::all_of(t.mono.begin(), t.mono.end(), [](int e) { return e == 0; });
    if (!constant) return nullptr;
    if (found) return nullptr;
    store = t.coef;
    found = &store;
  }
  return found;
}

Polynomial coefficient_of(const AlgebraSpec& A, const ModuleElement& x,
                          int comp) {
  std::vector<Term> terms;
  for (const ModuleTerm& t : x.terms)
    if (t.comp == comp) terms.push_back(Term{t.coef, t.mono});
  return make_poly(A, std::move(terms));
}

ModuleOrderingSpec restrict_ordering(const ModuleOrderingSpec& ord,
                                     const std::vector<int>& retained) {
  ModuleOrderingSpec out;
  out.kind = ord.kind;
  out.graded = ord.graded;
  std::map<int, int> remap;
  for (size_t k = 0; k < retained.size(); ++k)
    remap[retained[k]] = static_cast<int>(k);
  for (int c : ord.component_priority) {
    auto it = remap.find(c);
    if (it != remap.end()) out.component_priority.push_back(it->second);
  }
  if (ord.kind == ModOrderKind::Schreyer) {
    out.parent = ord.parent;
    for (int c : retained) out.images.push_back(ord.images[c]);
  }
  return out;
}

}  // namespace

QuotientPresentation minimize_presentation(
    ModulePtr L0, const std::vector<ModuleElement>& W) {
  const FreeModuleSpec& M = *L0;
  for (const ModuleElement& w : W)
    if (w.is_zero()) throw MathError("zero relation in presentation");

  QuotientPresentation out;
  out.ambient = L0;
  out.relations = W;

  std::vector<int> live_comp(M.rank);
  for (int k = 0; k < M.rank; ++k) live_comp[k] = k;
  std::vector<ModuleElement> rels = W;

  for (;;) {
    int pick_i = -1, pick_j = -1;
    Rational unit;
    for (int i : live_comp) {
      for (size_t j = 0; j < rels.size(); ++j) {
        Rational c;
        const Rational* cc = constant_coefficient(rels[j], i, c);
        if (!cc) continue;
        if (M.shifts[i] != filtered_degree(M, rels[j])) continue;
        pick_i = i;
        pick_j = static_cast<int>(j);
        unit = c;
        break;
      }
      if (pick_i >= 0) break;
    }
    if (pick_i < 0) break;

    ModuleElement vj = rels[pick_j];
    std::vector<ModuleElement> next;
    for (size_t l = 0; l < rels.size(); ++l) {
      if (static_cast<int>(l) == pick_j) continue;
      Polynomial fil = coefficient_of(M.alg(), rels[l], pick_i);
      ModuleElement v = rels[l];
      if (!fil.is_zero())
        v = sub(M, v, act(M, scale(fil, unit.inverse()), vj));
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    rels = std::move(next);
    live_comp.erase(std::find(live_comp.begin(), live_comp.end(), pick_i));
  }

  out.retained = live_comp;
  out.reduced_relations = rels;

  std::vector<long long> shifts;
  for (int c : live_comp) shifts.push_back(M.shifts[c]);
  out.reduced_ambient = make_module(
      M.algebra, static_cast<int>(live_comp.size()), std::move(shifts),
      restrict_ordering(M.order, live_comp), M.name + "_min");

  std::map<int, int> remap;
  for (size_t k = 0; k < live_comp.size(); ++k)
    remap[live_comp[k]] = static_cast<int>(k);
  for (const ModuleElement& r : rels) {
    std::vector<ModuleTerm> terms;
    for (const ModuleTerm& t : r.terms)
      terms.push_back(ModuleTerm{t.coef, t.mono, remap.at(t.comp)});
    out.reduced_in_prime.push_back(
        make_element(*out.reduced_ambient, std::move(terms)));
  }
  return out;
}

std::vector<ModuleElement> minimal_standard_basis(
    ModulePtr L, const std::vector<ModuleElement>& Theta, long long step_cap) {
  if (!L->order.graded)
    throw MathError("minimal standard basis requires a degree-first ordering");
  GroebnerRecord rec = buchberger(L, Theta, step_cap);

  GradedContext ctx = make_graded_context(L->algebra);
  ModulePtr Lg = graded_module(ctx, L);
  std::vector<ModuleElement> sU;
  for (const ModuleElement& u : rec.basis) {
    ModuleElement s = sigma_element(*L, u);
    sU.push_back(make_element(*Lg, std::move(s.terms)));
  }
  std::vector<int> keep = minimal_homogeneous_indices(Lg, sU);
  std::vector<ModuleElement> W;
  for (int k : keep) W.push_back(rec.basis[k]);
  return W;
}

bool check_basis_multiset_invariance(
    const std::vector<std::pair<ModulePtr, std::vector<ModuleElement>>>& runs) {
  if (runs.empty()) return true;
  std::vector<long long> base;
  for (size_t r = 0; r < runs.size(); ++r) {
    std::vector<long long> degs;
    for (const ModuleElement& x : runs[r].second)
      degs.push_back(filtered_degree(*runs[r].first, x));
    std::sort(degs.begin(), degs.end());
    if (r == 0)
      base = std::move(degs);
    else if (degs != base)
      return false;
  }
  return true;
}

}  // namespace solv
