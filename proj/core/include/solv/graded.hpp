#pragma once

#include <string>
#include <vector>

#include "solv/groebner.hpp"
#include "solv/module.hpp"

namespace solv {

// A filtered algebra together with its two degree-wise companions: the
// associated graded algebra (relation tails filtered to top degree) and the
// homogenized algebra with one extra central degree-one generator appended
// last (called Z below).
struct GradedContext {
  AlgebraPtr source;
  AlgebraPtr graded;
  AlgebraPtr rees;
};

// Same generators, weights, and ordering; each relation keeps only the terms
// of weighted degree exactly m_i + m_j.
AlgebraPtr assoc_graded_algebra(const AlgebraPtr& A);

// n+1 generators with a central Z of weight 1 appended; each relation term is
// padded by the Z power that lifts it to degree m_i + m_j; monomials compare
// by their Z-free part first, then by Z exponent (smaller first).
AlgebraPtr rees_algebra(const AlgebraPtr& A);

GradedContext make_graded_context(AlgebraPtr A);

// Mirror of L over the associated graded algebra (same rank/shifts/ordering).
ModulePtr graded_module(const GradedContext& ctx, const ModulePtr& L);

// Mirror of L over the homogenized algebra; monomials compare by L's full
// ordering on the Z-free part, then by Z exponent.
ModulePtr rees_module(const GradedContext& ctx, const ModulePtr& L);

// Principal part: the terms of top filtered degree. Rejects zero.
Polynomial sigma_poly(const AlgebraSpec& A, const Polynomial& f);
ModuleElement sigma_element(const FreeModuleSpec& L, const ModuleElement& xi);

// Degree-q homogenization: term c a^alpha e_i gains Z^(q - deg). q = -1 means
// the element's own filtered degree. Rejects zero and q below that degree.
Polynomial rees_poly(const AlgebraSpec& A, const AlgebraSpec& rees,
                     const Polynomial& f, long long q = -1);
ModuleElement rees_element(const FreeModuleSpec& L, const FreeModuleSpec& Lt,
                           const ModuleElement& xi, long long q = -1);

// Z := 1.
Polynomial dehomogenize_poly(const AlgebraSpec& A, const Polynomial& f);
ModuleElement dehomogenize(const FreeModuleSpec& L, const ModuleElement& x);

// All terms share one filtered degree (vacuously true for zero).
bool is_homogeneous(const FreeModuleSpec& M, const ModuleElement& x);

// Indices of a minimal generating subset among homogeneous elements:
// candidates are visited in ascending degree (ties by position) and dropped
// when the remaining ones generate them. Returned ascending.
std::vector<int> minimal_homogeneous_indices(
    ModulePtr M, const std::vector<ModuleElement>& gens);
std::vector<ModuleElement> minimal_homogeneous_generators(
    ModulePtr M, const std::vector<ModuleElement>& gens);

struct TransferReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Checks that the principal parts of a left basis form a left basis over the
// associated graded algebra and span the principal parts of the given
// submodule generators.
TransferReport check_transfer_sigma(const GradedContext& ctx, const ModulePtr& L,
                                    const std::vector<ModuleElement>& basis,
                                    const std::vector<ModuleElement>& ngens);

// Same for the homogenizations over the homogenized algebra.
TransferReport check_transfer_rees(const GradedContext& ctx, const ModulePtr& L,
                                   const std::vector<ModuleElement>& basis,
                                   const std::vector<ModuleElement>& ngens);

}  // namespace solv
