#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "solv/rational.hpp"

// Textbook Buchberger over commutative polynomial modules, written against
// the standard definitions with its own data structures. Shares only the
// Rational type with the library; used as an independent reference.
namespace comoracle {

enum class Ord { Lex, GrLex, GrevLex };
enum class ModOrd { TOP, POT };

struct Setup {
  int nvars = 2;
  int rank = 1;
  std::vector<long long> weights;  // empty = all 1
  Ord ord = Ord::GrLex;
  ModOrd modord = ModOrd::TOP;
};

using Mono = std::vector<int>;

struct Key {
  Mono m;
  int comp = 0;  // 0-based
  bool operator==(const Key&) const = default;
};

// Strict ascending comparator: a < b when a is the smaller monomial.
struct KeyLess {
  const Setup* s = nullptr;
  bool operator()(const Key& a, const Key& b) const;
};

// Sparse element as an ordered coefficient map; rbegin() is the lead.
using Elem = std::map<Key, solv::Rational, KeyLess>;

Elem make_elem(const Setup& s,
               std::vector<std::tuple<solv::Rational, Mono, int>> terms);

// Fully reduced Groebner basis of the span, monic, sorted by leading key.
std::vector<Elem> reduced_groebner(const Setup& s,
                                   const std::vector<Elem>& gens);

// Leading keys of reduced_groebner, ascending. This set is an invariant of
// the submodule and the ordering.
std::vector<Key> reduced_leading_monomials(const Setup& s,
                                           const std::vector<Elem>& gens);

// Normal form against an arbitrary basis (full reduction, first-divisor
// rule).
Elem normal_form(const Setup& s, Elem x, const std::vector<Elem>& basis);

}  // namespace comoracle
