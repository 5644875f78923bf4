#include "solv/groebner.hpp"

#include <algorithm>
#include <utility>

namespace solv {

namespace {

ExponentVector exponent_lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector g(a.size());
  for (size_t k = 0; k < a.size(); ++k) g[k] = std::max(a[k], b[k]);
  return g;
}

struct Pair {
  int i = 0;
  int j = 0;
  int comp = 0;
  ExponentVector gamma;
};

// Normal selection: smallest (gamma, comp) under the module ordering, then
// least i, then least j.
size_t select_pair(const FreeModuleSpec& M, const std::vector<Pair>& pending) {
  size_t best = 0;
  for (size_t k = 1; k < pending.size(); ++k) {
    const Pair& a = pending[k];
    const Pair& b = pending[best];
    Cmp c = compare_module_monomials(M, a.gamma, a.comp, b.gamma, b.comp);
    if (c == Cmp::LT) {
      best = k;
    } else if (c == Cmp::EQ) {
      if (a.i < b.i || (a.i == b.i && a.j < b.j)) best = k;
    }
  }
  return best;
}

Polynomial term_poly(const AlgebraSpec& A, Rational c, ExponentVector mono) {
  return make_poly(A, {Term{std::move(c), std::move(mono)}});
}

}  // namespace

ModuleElement s_poly(const FreeModuleSpec& M, const ModuleElement& xi,
                     const ModuleElement& xj) {
  if (xi.is_zero() || xj.is_zero()) return ModuleElement{};
  const ModuleTerm& li = xi.lead();
  const ModuleTerm& lj = xj.lead();
  if (li.comp != lj.comp) return ModuleElement{};
  ExponentVector gamma = exponent_lcm(li.mono, lj.mono);
  ExponentVector qi(gamma.size()), qj(gamma.size());
  for (size_t k = 0; k < gamma.size(); ++k) {
    qi[k] = gamma[k] - li.mono[k];
    qj[k] = gamma[k] - lj.mono[k];
  }
  ModuleElement pi = act_term(M, Rational(1), qi, xi);
  ModuleElement pj = act_term(M, Rational(1), qj, xj);
  pi = scale(pi.lead().coef.inverse(), pi);
  pj = scale(pj.lead().coef.inverse(), pj);
  return sub(M, pi, pj);
}

GroebnerRecord buchberger(ModulePtr Mp, std::vector<ModuleElement> inputs,
                          long long step_cap) {
  const FreeModuleSpec& M = *Mp;
  const AlgebraSpec& A = M.alg();
  GroebnerRecord rec;
  rec.module = Mp;
  rec.inputs = inputs;

  const size_t m = inputs.size();
  for (size_t l = 0; l < m; ++l) {
    if (inputs[l].is_zero()) continue;
    Rational lc = inputs[l].lead().coef;
    rec.basis.push_back(scale(lc.inverse(), inputs[l]));
    std::vector<Polynomial> vrow(m);
    vrow[l] = poly_constant(lc.inverse(), A.ngens());
    rec.vmat.push_back(std::move(vrow));
  }

  std::vector<Pair> pending;
  auto push_pairs_for = [&](int jnew) {
    const ModuleTerm& lj = rec.basis[jnew].lead();
    for (int i = 0; i < jnew; ++i) {
      const ModuleTerm& li = rec.basis[i].lead();
      if (li.comp != lj.comp) continue;
      pending.push_back(
          Pair{i, jnew, lj.comp, exponent_lcm(li.mono, lj.mono)});
    }
  };
  for (int j = 1; j < static_cast<int>(rec.basis.size()); ++j)
    push_pairs_for(j);

  long long steps = 0;
  while (!pending.empty()) {
    if (++steps > step_cap)
      throw StepCapError("buchberger step cap exceeded");
    size_t at = select_pair(M, pending);
    Pair pr = std::move(pending[at]);
    pending.erase(pending.begin() + static_cast<long>(at));

    const ModuleElement& gi = rec.basis[pr.i];
    const ModuleElement& gj = rec.basis[pr.j];
    ExponentVector di(pr.gamma.size()), dj(pr.gamma.size());
    for (size_t k = 0; k < pr.gamma.size(); ++k) {
      di[k] = pr.gamma[k] - gi.lead().mono[k];
      dj[k] = pr.gamma[k] - gj.lead().mono[k];
    }
    ModuleElement prodi = act_term(M, Rational(1), di, gi);
    ModuleElement prodj = act_term(M, Rational(1), dj, gj);
    Rational ci = prodi.lead().coef;
    Rational cj = prodj.lead().coef;
    ModuleElement S =
        sub(M, scale(ci.inverse(), prodi), scale(cj.inverse(), prodj));

    DivisionResult dr = divide(M, S, rec.basis);

    SyzygySeed seed;
    seed.i = pr.i;
    seed.j = pr.j;
    seed.gamma = pr.gamma;
    seed.row.reserve(rec.basis.size() + 1);
    for (const Polynomial& q : dr.quotients) seed.row.push_back(negate(q));
    seed.row[pr.i] =
        add(A, seed.row[pr.i], term_poly(A, ci.inverse(), di));
    seed.row[pr.j] =
        sub(A, seed.row[pr.j], term_poly(A, cj.inverse(), dj));

    if (!dr.remainder.is_zero()) {
      Rational lc = dr.remainder.lead().coef;
      int jnew = static_cast<int>(rec.basis.size());
      seed.row.push_back(poly_constant(-lc, A.ngens()));

      // vrow_new = (1/lc) * (ui . vrow_i - uj . vrow_j - sum_k q_k . vrow_k)
      std::vector<Polynomial> vrow(m);
      Polynomial ui = term_poly(A, ci.inverse(), di);
      Polynomial uj = term_poly(A, cj.inverse(), dj);
      for (size_t l = 0; l < m; ++l) {
        Polynomial acc = sub(A, mul(A, ui, rec.vmat[pr.i][l]),
                             mul(A, uj, rec.vmat[pr.j][l]));
        for (size_t k = 0; k < rec.basis.size(); ++k) {
          if (dr.quotients[k].is_zero()) continue;
          acc = sub(A, acc, mul(A, dr.quotients[k], rec.vmat[k][l]));
        }
        vrow[l] = scale(acc, lc.inverse());
      }
      rec.basis.push_back(scale(lc.inverse(), dr.remainder));
      rec.vmat.push_back(std::move(vrow));
      push_pairs_for(jnew);
    }
    rec.seeds.push_back(std::move(seed));
  }

  const size_t t = rec.basis.size();
  for (SyzygySeed& s : rec.seeds) s.row.resize(t);

  rec.umat.assign(m, {});
  for (size_t l = 0; l < m; ++l) {
    DivisionResult dr = divide(M, inputs[l], rec.basis);
    if (!dr.remainder.is_zero())
      throw MathError("input failed to reduce to zero by its own basis");
    rec.umat[l] = std::move(dr.quotients);
  }
  return rec;
}

ModuleElement normal_form(const FreeModuleSpec& M, const ModuleElement& x,
                          const std::vector<ModuleElement>& divisors) {
  return divide(M, x, divisors).remainder;
}

bool check_groebner(const FreeModuleSpec& M,
                    const std::vector<ModuleElement>& basis) {
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      ModuleElement S = s_poly(M, basis[i], basis[j]);
      if (S.is_zero()) continue;
      if (!normal_form(M, S, basis).is_zero()) return false;
    }
  }
  return true;
}

std::vector<ModuleElement> interreduce(const FreeModuleSpec& M,
                                       const std::vector<ModuleElement>& gens) {
  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (!gens[i].is_zero()) live.push_back(i);

  auto dominated = [&](int i) {
    const ModuleTerm& li = gens[i].lead();
    for (int j : live) {
      if (j == i) continue;
      const ModuleTerm& lj = gens[j].lead();
      if (lj.comp != li.comp) continue;
      if (!monomial_divides(lj.mono, li.mono)) continue;
      if (lj.mono != li.mono || j < i) return true;
    }
    return false;
  };
  std::vector<int> kept;
  for (int i : live)
    if (!dominated(i)) kept.push_back(i);

  std::vector<ModuleElement> out;
  out.reserve(kept.size());
  for (size_t p = 0; p < kept.size(); ++p) {
    std::vector<ModuleElement> others;
    for (size_t q = 0; q < kept.size(); ++q)
      if (q != p) others.push_back(gens[kept[q]]);
    ModuleElement r = normal_form(M, gens[kept[p]], others);
    out.push_back(scale(r.lead().coef.inverse(), r));
  }
  return out;
}

bool in_submodule(const FreeModuleSpec& M, const ModuleElement& x,
                  const std::vector<ModuleElement>& basis) {
  return normal_form(M, x, basis).is_zero();
}

}  // namespace solv
