#pragma once

#include <string>
#include <vector>

#include "solv/minimal.hpp"

namespace solv {

// One map of a free resolution: phi(eps_k) = sum_j matrix[k][j] e_j, a map
// from source into target.
struct ResolutionStep {
  ModulePtr source;
  ModulePtr target;
  std::vector<std::vector<Polynomial>> matrix;
};

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;
};

struct Resolution {
  QuotientPresentation presentation;
  std::vector<ResolutionStep> steps;
  VerifyReport verified;
};

// Free module on one generator per basis element, with shifts the basis
// filtered degrees and the basis-induced Schreyer ordering over rec's module.
ModulePtr schreyer_ambient(const GroebnerRecord& rec, std::string name = "");

// One element per processed critical pair, assembled from the recorded
// reduction rows; a left basis of the syzygies of rec.basis under the
// ordering of schreyer_ambient, with leading term at the pair's larger index.
std::vector<ModuleElement> schreyer_syzygies(const GroebnerRecord& rec);

// Same shape for the inputs: one generator per input, shifts the input
// filtered degrees, Schreyer ordering induced by the input leading terms.
// Inputs must all be nonzero.
ModulePtr syzygy_ambient(const GroebnerRecord& rec, std::string name = "");

// Generators of the syzygies of rec.inputs: the basis syzygies pushed through
// the basis-to-input matrix, plus the rows of (input-to-basis x
// basis-to-input) minus identity. Zero rows dropped.
std::vector<ModuleElement> syzygy_generators(const GroebnerRecord& rec);

// Rows of the step matrix as elements of the target module.
std::vector<ModuleElement> step_images(const ResolutionStep& st);

// Image of an element of the source module under the step map.
ModuleElement apply_step(const ResolutionStep& st, const ModuleElement& x);

// Builds the minimal filtered free resolution of coker(span Theta -> L0):
// completes Theta to a left basis, eliminates redundant ambient components,
// then repeatedly takes a minimal standard basis, maps a fresh ambient onto
// it, and continues with its syzygies until they vanish. Requires a
// degree-first ordering on L0 and nonzero Theta. max_length = -1 means the
// generator count of the algebra; exceeding it raises MathError.
Resolution minimal_filtered_resolution(ModulePtr L0,
                                       const std::vector<ModuleElement>& Theta,
                                       int max_length = -1,
                                       long long step_cap = 100000);

// Checks composition-zero, exactness (syzygies of each image reduce to zero
// against the next image; mutual membership against the reduced relations at
// the bottom; empty kernel at the top), absence of unit matrix entries at
// matching shifts, shift consistency, and the length bound.
VerifyReport verify_resolution(const Resolution& R);

}  // namespace solv
