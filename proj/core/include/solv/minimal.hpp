#pragma once

#include <utility>
#include <vector>

#include "solv/groebner.hpp"

namespace solv {

// Result of eliminating the free-basis vectors that a relation makes
// redundant: the quotient of the reduced ambient by the reduced relations is
// strictly filtered-isomorphic to the original quotient, and the retained
// basis vectors map onto a minimal filtered generating set of it.
struct QuotientPresentation {
  ModulePtr ambient;
  std::vector<ModuleElement> relations;
  // Surviving component indices, ascending.
  std::vector<int> retained;
  // Surviving relations in ambient coordinates (only retained components).
  std::vector<ModuleElement> reduced_relations;
  // Free module on the retained components with their shifts.
  ModulePtr reduced_ambient;
  // reduced_relations rewritten in reduced_ambient coordinates.
  std::vector<ModuleElement> reduced_in_prime;
};

// Repeatedly picks the least component whose basis vector appears in some
// relation with a unit coefficient at full filtered degree, substitutes that
// relation into the others, and drops both. Requires W to be a standard
// basis of its span (a left basis under a degree-first ordering).
QuotientPresentation minimize_presentation(ModulePtr L0,
                                           const std::vector<ModuleElement>& W);

// Completes Theta to a left basis, then keeps exactly the elements whose
// principal parts survive graded minimization. Requires a degree-first
// ordering on L.
std::vector<ModuleElement> minimal_standard_basis(
    ModulePtr L, const std::vector<ModuleElement>& Theta,
    long long step_cap = 100000);

// True when all runs have the same cardinality and the same multiset of
// filtered degrees.
bool check_basis_multiset_invariance(
    const std::vector<std::pair<ModulePtr, std::vector<ModuleElement>>>& runs);

}  // namespace solv
