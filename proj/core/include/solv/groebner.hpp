#pragma once

#include <vector>

#include "solv/module.hpp"

namespace solv {

// Record of one processed critical pair (i, j), i < j, with equal leading
// components. row has one polynomial per final basis element and satisfies
// sum_k row[k] * basis[k] == 0; its leading term under the Schreyer ordering
// induced by the basis sits at index j.
struct SyzygySeed {
  int i = 0;
  int j = 0;
  ExponentVector gamma;
  std::vector<Polynomial> row;
};

struct GroebnerRecord {
  ModulePtr module;
  std::vector<ModuleElement> inputs;
  // Monic left basis; the first entries are the scaled nonzero inputs.
  std::vector<ModuleElement> basis;
  // inputs[l] == sum_k umat[l][k] * basis[k].
  std::vector<std::vector<Polynomial>> umat;
  // basis[k] == sum_l vmat[k][l] * inputs[l].
  std::vector<std::vector<Polynomial>> vmat;
  std::vector<SyzygySeed> seeds;
};

// Left S-element of xi and xj: zero unless the leading components agree, in
// which case both pieces are normalized to leading coefficient one.
ModuleElement s_poly(const FreeModuleSpec& M, const ModuleElement& xi,
                     const ModuleElement& xj);

// Left Buchberger completion processing every critical pair, with full
// transition tracking. Throws StepCapError after step_cap processed pairs.
GroebnerRecord buchberger(ModulePtr M, std::vector<ModuleElement> inputs,
                          long long step_cap = 100000);

ModuleElement normal_form(const FreeModuleSpec& M, const ModuleElement& x,
                          const std::vector<ModuleElement>& divisors);

// True when every S-element of the set reduces to zero by the set.
bool check_groebner(const FreeModuleSpec& M,
                    const std::vector<ModuleElement>& basis);

// Minimal reduced monic basis with the same leading-monomial set: drops
// elements whose leading monomial another element divides, then tail-reduces.
std::vector<ModuleElement> interreduce(const FreeModuleSpec& M,
                                       const std::vector<ModuleElement>& gens);

// True when x reduces to zero by the given left basis.
bool in_submodule(const FreeModuleSpec& M, const ModuleElement& x,
                  const std::vector<ModuleElement>& basis);

}  // namespace solv
