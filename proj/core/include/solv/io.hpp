#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "solv/module.hpp"
#include "solv/resolution.hpp"

namespace solv {

// Raised on malformed input text. line is 1-based; 0 means "whole document".
struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                                     : what_),
        line(line_) {}
};

// --- polynomials and module elements ---
//
// Term syntax: [coef *] g^e * g^e * ...; coefficients are integers or p/q
// fractions; generator factors appear in non-decreasing declaration order and
// repeats accumulate. "1" is the empty monomial, "0" the zero polynomial.
Polynomial parse_polynomial(const AlgebraSpec& A, const std::string& text);
std::string print_polynomial(const AlgebraSpec& A, const Polynomial& f);

// Element syntax: groups (poly)*e<k>, term*e<k>, or e<k> joined by +/-;
// components are 1-based in text.
ModuleElement parse_module_element(const FreeModuleSpec& M,
                                   const std::string& text);
std::string print_module_element(const FreeModuleSpec& M,
                                 const ModuleElement& x);

// --- algebra files ---
//
//   algebra <name>
//   gens <g1> ... <gn>
//   weights <m1> ... <mn>
//   order <lex|grlex|grevlex> [ztail] [<gens most significant first>]
//   rel <gj>*<gi> = <polynomial>
//
// The order line is optional (default grlex). '#' starts a comment. The
// parsed algebra is validated; violations raise ParseError.
AlgebraPtr parse_algebra_file(const std::string& text);
std::string print_algebra_file(const AlgebraSpec& A);

struct ModuleFile {
  ModulePtr module;
  std::vector<std::string> gen_names;
  std::vector<ModuleElement> gens;
};

// --- module files ---
//
//   module <name> over <algebra-name>
//   rank <s>
//   shifts <b1> ... <bs>        (optional; default all 0)
//   modorder <top|pot> [graded]  (optional; default graded top)
//   gen <name> = <element>
ModuleFile parse_module_file(AlgebraPtr algebra, const std::string& text);
std::string print_module_file(const ModuleFile& mf);

// --- resolution files ---
//
//   resolution over <algebra-name> of <module-name>
//   step 0: rank <r0> shifts <...>
//   map 1: <r1> x <r0> matrix
//     row 1: <poly> | ... | <poly>
//   step 1: rank <r1> shifts <...>
//   ...
struct RawResolution {
  std::string algebra_name;
  std::string module_name;
  std::vector<int> ranks;                       // step 0, 1, ...
  std::vector<std::vector<long long>> shifts;   // parallel to ranks
  // maps[l] is the level-(l+1) matrix: ranks[l+1] rows by ranks[l] columns.
  std::vector<std::vector<std::vector<Polynomial>>> maps;
};

RawResolution parse_resolution_file(const AlgebraSpec& A,
                                    const std::string& text);
std::string print_resolution_file(const Resolution& R,
                                  const std::string& algebra_name,
                                  const std::string& module_name);
std::string print_raw_resolution(const AlgebraSpec& A, const RawResolution& R);

// Polynomial matrix block in the resolution row format, one "  row k: ..."
// line per row. Used by gb --track output.
std::string print_matrix_block(const AlgebraSpec& A,
                               const std::vector<std::vector<Polynomial>>& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace solv
