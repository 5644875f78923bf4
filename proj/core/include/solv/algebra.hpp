#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solv/rational.hpp"

namespace solv {

// Exponent vector of a PBW monomial a1^e1 ... an^en.
using ExponentVector = std::vector<int>;

struct Term {
  Rational coef;  // nonzero
  ExponentVector mono;
};

// Terms sorted strictly descending under the owning algebra's ordering.
// Empty term list is the zero polynomial.
struct Polynomial {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

enum class Cmp { LT, EQ, GT };

enum class OrderKind { Lex, GrLex, GrevLex };

struct OrderingSpec {
  OrderKind kind = OrderKind::GrLex;
  // Generator indices, most significant first. Empty means 0..n-1
  // (the first declared generator is most significant).
  std::vector<int> priority;
  // Graded kinds compare the weighted degree first; with use_weights off the
  // degree is the plain total degree.
  bool use_weights = true;
  // The last generator is excluded from the base comparison and used only as
  // a final tie-break, smaller exponent first. This is the Rees-side rule.
  bool z_tail = false;
};

// One rewriting rule a_j a_i = lambda * a_i a_j + lower, declared for j > i.
// Pairs without an entry commute (lambda = 1, lower = 0).
struct Relation {
  Rational lambda;
  Polynomial lower;
};

namespace detail {
struct MulCache;
}

struct AlgebraSpec {
  std::string name;
  std::vector<std::string> gens;
  std::vector<long long> weights;  // all >= 1
  OrderingSpec order;
  std::map<std::pair<int, int>, Relation> relations;  // key (j, i), j > i

  int ngens() const { return static_cast<int>(gens.size()); }
  // Null when the pair commutes trivially (no table entry).
  const Relation* relation(int j, int i) const {
    auto it = relations.find({j, i});
    return it == relations.end() ? nullptr : &it->second;
  }

  mutable std::shared_ptr<detail::MulCache> cache;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

namespace detail {
struct PowKey {
  int j, i;
  long long s, t;
  bool operator==(const PowKey&) const = default;
};
struct PowKeyHash {
  size_t operator()(const PowKey& k) const {
    size_t h = std::hash<long long>()((static_cast<long long>(k.j) << 32) ^ k.i);
    h ^= std::hash<long long>()(k.s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<long long>()(k.t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};
// Shared per-algebra memo of a_j^s * a_i^t normal forms. Synchronized; the
// contract allows either a shared locked cache or per-thread caches as long
// as results agree.
struct MulCache {
  std::mutex mu;
  std::unordered_map<PowKey, Polynomial, PowKeyHash> pow;
};
}  // namespace detail

struct StepCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// --- monomial and degree primitives ---

Cmp compare_monomials(const AlgebraSpec& A, const ExponentVector& a,
                      const ExponentVector& b);
// Comparison of the z_tail-stripped parts only (identical to
// compare_monomials when z_tail is off). EQ means the stripped parts agree.
Cmp compare_monomials_base(const AlgebraSpec& A, const ExponentVector& a,
                           const ExponentVector& b);

long long weighted_degree(const AlgebraSpec& A, const ExponentVector& mono);
// Max over terms; throws MathError on the zero polynomial.
long long weighted_degree(const AlgebraSpec& A, const Polynomial& f);

// --- polynomial construction and linear arithmetic ---

Polynomial poly_zero();
Polynomial poly_constant(const Rational& c, int n);
Polynomial poly_monomial(const Rational& c, ExponentVector mono);
// Sorts descending, combines like monomials, drops zeros.
Polynomial make_poly(const AlgebraSpec& A, std::vector<Term> terms);

Polynomial add(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g);
Polynomial sub(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial negate(const Polynomial& f);
bool poly_equal(const Polynomial& f, const Polynomial& g);

// --- solvable multiplication ---

// Normal form of a^alpha * a^beta. Leading monomial is a^(alpha+beta).
Polynomial mul_mono(const AlgebraSpec& A, const ExponentVector& alpha,
                    const ExponentVector& beta);
Polynomial mul(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g);

std::pair<Rational, ExponentVector> leading_data(const AlgebraSpec& A,
                                                 const Polynomial& f);

// Checks the relation table (lambda != 0, LM(lower) below a_i a_j, weighted
// degree bound) and probes associativity on all generator triples.
ValidationReport validate_algebra(const AlgebraSpec& A);

AlgebraPtr make_algebra(AlgebraSpec spec);

}  // namespace solv
