#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solv/algebra.hpp"

namespace solv {

// One term of a free-module element: coef * mono * e_comp (comp is 0-based).
struct ModuleTerm {
  Rational coef;
  ExponentVector mono;
  int comp = 0;
};

// Terms kept sorted strictly descending under the owning module's ordering.
struct ModuleElement {
  std::vector<ModuleTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const ModuleTerm& lead() const { return terms.front(); }
};

enum class ModOrderKind { TOP, POT, Schreyer };

struct FreeModuleSpec;
using ModulePtr = std::shared_ptr<const FreeModuleSpec>;

// Precomputed leading data of one Schreyer image: LM(a^mu e_c) in the parent.
struct SchreyerImage {
  ExponentVector mu;
  int comp = 0;
};

struct ModuleOrderingSpec {
  ModOrderKind kind = ModOrderKind::TOP;
  // Compare filtered degrees first.
  bool graded = false;
  // Compare by stripping the last generator exponent and applying the source
  // module's full ordering to what remains; the stripped exponent decides
  // only full ties, smaller first. Requires source.
  bool z_tail = false;
  // Module whose ordering governs the stripped comparison under z_tail.
  ModulePtr source;
  // Component priority, most significant first; empty means 0..rank-1.
  std::vector<int> component_priority;
  // Schreyer data: parent module and the leading monomials of the images.
  ModulePtr parent;
  std::vector<SchreyerImage> images;
};

struct FreeModuleSpec {
  AlgebraPtr algebra;
  int rank = 1;
  // Filtration shifts b_i, one per component.
  std::vector<long long> shifts;
  ModuleOrderingSpec order;
  std::string name;

  const AlgebraSpec& alg() const { return *algebra; }
};

ModulePtr make_module(AlgebraPtr algebra, int rank,
                      std::vector<long long> shifts, ModuleOrderingSpec order,
                      std::string name = "");

// Compares (mono_a, comp_a) against (mono_b, comp_b) under M's ordering.
Cmp compare_module_monomials(const FreeModuleSpec& M, const ExponentVector& a,
                             int ca, const ExponentVector& b, int cb);

// d(a^alpha) + b_comp.
long long filtered_term_degree(const FreeModuleSpec& M,
                               const ExponentVector& mono, int comp);
// Max over terms; 0 for the zero element by convention.
long long filtered_degree(const FreeModuleSpec& M, const ModuleElement& x);

ModuleElement module_zero();
ModuleElement module_term(const FreeModuleSpec& M, Rational c,
                          ExponentVector mono, int comp);
// Sorts, combines, and drops zero terms.
ModuleElement make_element(const FreeModuleSpec& M,
                           std::vector<ModuleTerm> terms);

ModuleElement add(const FreeModuleSpec& M, const ModuleElement& a,
                  const ModuleElement& b);
ModuleElement sub(const FreeModuleSpec& M, const ModuleElement& a,
                  const ModuleElement& b);
ModuleElement scale(const Rational& c, const ModuleElement& a);
ModuleElement negate(const ModuleElement& a);
bool element_equal(const ModuleElement& a, const ModuleElement& b);

// Left action: f * x with f in the algebra.
ModuleElement act(const FreeModuleSpec& M, const Polynomial& f,
                  const ModuleElement& x);
ModuleElement act_term(const FreeModuleSpec& M, const Rational& c,
                       const ExponentVector& mono, const ModuleElement& x);

// Embeds a polynomial as an element of a rank-1 module.
ModuleElement embed(const FreeModuleSpec& M, const Polynomial& f);

// alpha | beta componentwise: returns beta - alpha, or nullopt.
std::optional<ExponentVector> monomial_divides(const ExponentVector& alpha,
                                               const ExponentVector& beta);

struct DivisionResult {
  // One quotient polynomial per divisor.
  std::vector<Polynomial> quotients;
  ModuleElement remainder;
};

// Left division with the least-index divisor rule: no remainder term is
// divisible (with matching component) by any LM(divisor).
DivisionResult divide(const FreeModuleSpec& M, const ModuleElement& x,
                      const std::vector<ModuleElement>& divisors);

// Formats a descriptive name such as "TOP(grlex)" for reports.
std::string describe_ordering(const FreeModuleSpec& M);

}  // namespace solv
