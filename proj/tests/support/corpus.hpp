#pragma once

#include <random>
#include <string>
#include <vector>

#include "solv/graded.hpp"
#include "solv/io.hpp"
#include "solv/module.hpp"

// Shared algebras, modules, and deterministic random data for the test
// suite. Every generator takes an explicit seed so failures reproduce.
namespace corpus {

inline solv::AlgebraPtr comm2(const std::string& order = "grlex") {
  return solv::parse_algebra_file("algebra P2\ngens x y\nweights 1 1\norder " +
                                  order + "\n");
}

inline solv::AlgebraPtr comm3(const std::string& order = "grlex") {
  return solv::parse_algebra_file(
      "algebra P3\ngens x y z\nweights 1 1 1\norder " + order + "\n");
}

// First Weyl algebra: d x = x d + 1.
inline solv::AlgebraPtr weyl1() {
  return solv::parse_algebra_file(
      "algebra A1\ngens x d\nweights 1 1\norder grlex\n"
      "rel d*x = x*d + 1\n");
}

// Second Weyl algebra: d_i x_i = x_i d_i + 1, all other pairs commute.
inline solv::AlgebraPtr weyl2() {
  return solv::parse_algebra_file(
      "algebra A2\ngens x1 x2 d1 d2\nweights 1 1 1 1\norder grlex\n"
      "rel d1*x1 = x1*d1 + 1\n"
      "rel d2*x2 = x2*d2 + 1\n");
}

// Three generators with weights (2, 1, 4) and one nontrivial relation whose
// lower part mixes a full-degree term with a lower-degree tail.
inline solv::AlgebraPtr mixed214() {
  return solv::parse_algebra_file(
      "algebra E3\ngens a1 a2 a3\nweights 2 1 4\norder grlex\n"
      "rel a3*a1 = a1*a3 + a2^2*a3 + a2\n");
}

inline solv::ModulePtr free_module(solv::AlgebraPtr A, int rank = 1,
                                   std::vector<long long> shifts = {},
                                   bool graded = true,
                                   solv::ModOrderKind kind =
                                       solv::ModOrderKind::TOP) {
  solv::ModuleOrderingSpec mo;
  mo.kind = kind;
  mo.graded = graded;
  if (shifts.empty()) shifts.assign(rank, 0);
  return solv::make_module(std::move(A), rank, std::move(shifts), mo, "T");
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  int pick(int lo, int hi) {  // inclusive
    return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(eng));
  }
};

inline solv::Rational rand_coef(Rng& r) {
  int num = 0;
  while (num == 0) num = r.pick(-6, 6);
  int den = r.pick(1, 4);
  return solv::Rational(num, den);
}

inline solv::ExponentVector rand_mono(Rng& r, const solv::AlgebraSpec& A,
                                      int max_deg) {
  solv::ExponentVector m(A.ngens(), 0);
  int budget = r.pick(0, max_deg);
  for (int q = 0; q < budget; ++q) m[r.pick(0, A.ngens() - 1)] += 1;
  return m;
}

inline solv::Polynomial rand_poly(Rng& r, const solv::AlgebraSpec& A,
                                  int max_deg, int max_terms,
                                  bool allow_zero = false) {
  std::vector<solv::Term> ts;
  int nt = r.pick(allow_zero ? 0 : 1, max_terms);
  for (int q = 0; q < nt; ++q)
    ts.push_back({rand_coef(r), rand_mono(r, A, max_deg)});
  solv::Polynomial f = make_poly(A, std::move(ts));
  if (!allow_zero && f.is_zero())
    f = solv::poly_constant(solv::Rational(1), A.ngens());
  return f;
}

inline solv::ModuleElement rand_elem(Rng& r, const solv::FreeModuleSpec& M,
                                     int max_deg, int max_terms,
                                     bool allow_zero = false) {
  std::vector<solv::ModuleTerm> ts;
  int nt = r.pick(allow_zero ? 0 : 1, max_terms);
  for (int q = 0; q < nt; ++q)
    ts.push_back({rand_coef(r), rand_mono(r, M.alg(), max_deg),
                  r.pick(0, M.rank - 1)});
  solv::ModuleElement x = make_element(M, std::move(ts));
  if (!allow_zero && x.is_zero())
    x = solv::module_term(M, solv::Rational(1),
                          solv::ExponentVector(M.alg().ngens(), 0), 0);
  return x;
}

}  // namespace corpus
