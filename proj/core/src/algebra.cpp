#include "solv/algebra.hpp"

#include <algorithm>

namespace solv {

namespace {

std::vector<int> effective_priority(const AlgebraSpec& A) {
  int n = A.ngens();
  std::vector<int> p = A.order.priority;
  if (p.empty()) {
    p.resize(n);
    for (int k = 0; k < n; ++k) p[k] = k;
  }
  if (A.order.z_tail) std::erase(p, n - 1);
  return p;
}

long long base_degree(const AlgebraSpec& A, const ExponentVector& m,
                      const std::vector<int>& prio) {
  long long d = 0;
  for (int idx : prio) d += (A.order.use_weights ? A.weights[idx] : 1) * m[idx];
  return d;
}

}  // namespace

Cmp compare_monomials_base(const AlgebraSpec& A, const ExponentVector& a,
                           const ExponentVector& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != A.ngens())
    throw MathError("compare_monomials: size mismatch");
  std::vector<int> prio = effective_priority(A);
  if (A.order.kind != OrderKind::Lex) {
    long long da = base_degree(A, a, prio);
    long long db = base_degree(A, b, prio);
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  }
  if (A.order.kind == OrderKind::GrevLex) {
    for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
  }
  for (int idx : prio) {
    if (a[idx] != b[idx]) return a[idx] < b[idx] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

Cmp compare_monomials(const AlgebraSpec& A, const ExponentVector& a,
                      const ExponentVector& b) {
  Cmp c = compare_monomials_base(A, a, b);
  if (c != Cmp::EQ || !A.order.z_tail) return c;
  int last = A.ngens() - 1;
  if (a[last] != b[last]) return a[last] < b[last] ? Cmp::LT : Cmp::GT;
  return Cmp::EQ;
}

long long weighted_degree(const AlgebraSpec& A, const ExponentVector& mono) {
  long long d = 0;
  for (int k = 0; k < A.ngens(); ++k) d += A.weights[k] * mono[k];
  return d;
}

long long weighted_degree(const AlgebraSpec& A, const Polynomial& f) {
  if (f.is_zero()) throw MathError("weighted_degree: zero polynomial");
  long long d = 0;
  for (const Term& t : f.terms) d = std::max(d, weighted_degree(A, t.mono));
  return d;
}

Polynomial poly_zero() { return {}; }

Polynomial poly_constant(const Rational& c, int n) {
  if (c.is_zero()) return {};
  return {{Term{c, ExponentVector(n, 0)}}};
}

Polynomial poly_monomial(const Rational& c, ExponentVector mono) {
  if (c.is_zero()) return {};
  return {{Term{c, std::move(mono)}}};
}

Polynomial make_poly(const AlgebraSpec& A, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return compare_monomials(A, x.mono, y.mono) == Cmp::GT;
  });
  Polynomial out;
  for (Term& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coef += t.coef;
      if (out.terms.back().coef.is_zero()) out.terms.pop_back();
    } else if (!t.coef.is_zero()) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial add(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    Cmp c = compare_monomials(A, f.terms[i].mono, g.terms[j].mono);
    if (c == Cmp::GT) {
      out.terms.push_back(f.terms[i++]);
    } else if (c == Cmp::LT) {
      out.terms.push_back(g.terms[j++]);
    } else {
      Rational s = f.terms[i].coef + g.terms[j].coef;
      if (!s.is_zero()) out.terms.push_back(Term{std::move(s), f.terms[i].mono});
      ++i, ++j;
    }
  }
  for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
  return out;
}

Polynomial sub(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g) {
  return add(A, f, negate(g));
}

Polynomial scale(const Polynomial& f, const Rational& c) {
  if (c.is_zero()) return {};
  Polynomial out = f;
  for (Term& t : out.terms) t.coef *= c;
  return out;
}

Polynomial negate(const Polynomial& f) {
  Polynomial out = f;
  for (Term& t : out.terms) t.coef = -t.coef;
  return out;
}

bool poly_equal(const Polynomial& f, const Polynomial& g) {
  if (f.terms.size() != g.terms.size()) return false;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (f.terms[i].mono != g.terms[i].mono || f.terms[i].coef != g.terms[i].coef)
      return false;
  }
  return true;
}

namespace {

constexpr long long kMulStepCap = 10'000'000;

struct MulCtx {
  const AlgebraSpec& A;
  long long steps = 0;

  void tick(const ExponentVector& a, const ExponentVector& b) {
    if (++steps > kMulStepCap) {
      std::string msg = "mul_mono: step cap exceeded on pair (";
      for (size_t k = 0; k < a.size(); ++k) msg += (k ? "," : "") + std::to_string(a[k]);
      msg += ")*(";
      for (size_t k = 0; k < b.size(); ++k) msg += (k ? "," : "") + std::to_string(b[k]);
      msg += ")";
      throw StepCapError(msg);
    }
  }
};

detail::MulCache& cache_for(const AlgebraSpec& A) {
  static std::mutex init_mu;
  if (!A.cache) {
    std::lock_guard<std::mutex> lk(init_mu);
    if (!A.cache) A.cache = std::make_shared<detail::MulCache>();
  }
  return *A.cache;
}

ExponentVector add_expo(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Polynomial mul_mono_impl(MulCtx& ctx, const ExponentVector& alpha,
                         const ExponentVector& beta);

// a_j^s * a_i^t for j > i, as a normal-form polynomial.
Polynomial pow_prod(MulCtx& ctx, int j, long long s, int i, long long t) {
  const AlgebraSpec& A = ctx.A;
  int n = A.ngens();
  const Relation* rel = A.relation(j, i);
  if (rel == nullptr) {
    ExponentVector m(n, 0);
    m[i] = static_cast<int>(t);
    m[j] = static_cast<int>(s);
    return poly_monomial(Rational(1), std::move(m));
  }
  detail::MulCache& cache = cache_for(A);
  detail::PowKey key{j, i, s, t};
  {
    std::lock_guard<std::mutex> lk(cache.mu);
    auto it = cache.pow.find(key);
    if (it != cache.pow.end()) return it->second;
  }
  Polynomial result;
  if (s == 1 && t == 1) {
    ExponentVector m(n, 0);
    m[i] = 1;
    m[j] = 1;
    result = add(A, poly_monomial(rel->lambda, std::move(m)), rel->lower);
  } else if (t > 1) {
    // a_j^s a_i^t = (a_j^s a_i^{t-1}) a_i
    Polynomial q = pow_prod(ctx, j, s, i, t - 1);
    ExponentVector ei(n, 0);
    ei[i] = 1;
    for (const Term& tm : q.terms) {
      result = add(A, result, scale(mul_mono_impl(ctx, tm.mono, ei), tm.coef));
    }
  } else {
    // a_j^s a_i = a_j^{s-1} (a_j a_i)
    Polynomial r1 = pow_prod(ctx, j, 1, i, 1);
    ExponentVector js(n, 0);
    js[j] = static_cast<int>(s - 1);
    for (const Term& tm : r1.terms) {
      result = add(A, result, scale(mul_mono_impl(ctx, js, tm.mono), tm.coef));
    }
  }
  std::lock_guard<std::mutex> lk(cache.mu);
  cache.pow.emplace(key, result);
  return result;
}

Polynomial mul_mono_impl(MulCtx& ctx, const ExponentVector& alpha,
                         const ExponentVector& beta) {
  ctx.tick(alpha, beta);
  const AlgebraSpec& A = ctx.A;
  int n = A.ngens();
  int j = -1, i = -1;
  for (int k = n - 1; k >= 0; --k)
    if (alpha[k] > 0) { j = k; break; }
  for (int k = 0; k < n; ++k)
    if (beta[k] > 0) { i = k; break; }
  if (j < 0 || i < 0 || j <= i)
    return poly_monomial(Rational(1), add_expo(alpha, beta));

  ExponentVector ahead = alpha;
  long long s = ahead[j];
  ahead[j] = 0;
  ExponentVector btail = beta;
  long long t = btail[i];
  btail[i] = 0;

  Polynomial mid = pow_prod(ctx, j, s, i, t);
  Polynomial out;
  for (const Term& tm : mid.terms) {
    Polynomial left = mul_mono_impl(ctx, ahead, tm.mono);
    for (const Term& lt : left.terms) {
      Polynomial right = mul_mono_impl(ctx, lt.mono, btail);
      out = add(A, out, scale(right, tm.coef * lt.coef));
    }
  }
  return out;
}

}  // namespace

Polynomial mul_mono(const AlgebraSpec& A, const ExponentVector& alpha,
                    const ExponentVector& beta) {
  if (static_cast<int>(alpha.size()) != A.ngens() ||
      static_cast<int>(beta.size()) != A.ngens())
    throw MathError("mul_mono: size mismatch");
  MulCtx ctx{A};
  return mul_mono_impl(ctx, alpha, beta);
}

Polynomial mul(const AlgebraSpec& A, const Polynomial& f, const Polynomial& g) {
  MulCtx ctx{A};
  Polynomial out;
  for (const Term& ft : f.terms) {
    Polynomial row;
    for (const Term& gt : g.terms) {
      row = add(A, row, scale(mul_mono_impl(ctx, ft.mono, gt.mono), ft.coef * gt.coef));
    }
    out = add(A, out, row);
  }
  return out;
}

std::pair<Rational, ExponentVector> leading_data(const AlgebraSpec& A,
                                                 const Polynomial& f) {
  (void)A;
  if (f.is_zero()) throw MathError("leading_data: zero polynomial");
  return {f.lead().coef, f.lead().mono};
}

ValidationReport validate_algebra(const AlgebraSpec& A) {
  ValidationReport rep;
  int n = A.ngens();
  auto fail = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (n == 0) fail("algebra has no generators");
  if (static_cast<int>(A.weights.size()) != n) fail("weights length mismatch");
  for (size_t k = 0; k < A.weights.size(); ++k) {
    if (A.weights[k] < 1)
      fail("weight of " + A.gens[k] + " must be >= 1");
  }
  if (!A.order.priority.empty()) {
    std::vector<int> p = A.order.priority;
    std::sort(p.begin(), p.end());
    bool perm = static_cast<int>(p.size()) == n;
    for (int k = 0; perm && k < n; ++k) perm = (p[k] == k);
    if (!perm) fail("ordering priority is not a permutation of the generators");
  }
  if (!rep.ok()) return rep;

  for (const auto& [ji, rel] : A.relations) {
    auto [j, i] = ji;
    std::string pair = A.gens[j] + "*" + A.gens[i];
    if (!(0 <= i && i < j && j < n)) {
      fail("relation " + pair + ": indices out of range");
      continue;
    }
    if (rel.lambda.is_zero()) fail("relation " + pair + ": lambda must be nonzero");
    ExponentVector eiej(n, 0);
    eiej[i] += 1;
    eiej[j] += 1;
    if (!rel.lower.is_zero()) {
      bool sized = true;
      for (const Term& t : rel.lower.terms) {
        if (static_cast<int>(t.mono.size()) != n) {
          fail("relation " + pair + ": term size mismatch");
          sized = false;
          break;
        }
      }
      if (!sized) continue;
      if (compare_monomials(A, rel.lower.lead().mono, eiej) != Cmp::LT)
        fail("relation " + pair + ": leading monomial of the lower part is not below " +
             A.gens[i] + "*" + A.gens[j]);
      if (weighted_degree(A, rel.lower) > A.weights[i] + A.weights[j])
        fail("relation " + pair + ": lower part exceeds weighted degree bound");
    }
  }
  if (!rep.ok()) return rep;

  // Associativity probe on generator triples.
  for (int k = 0; k < n; ++k) {
    ExponentVector ek(n, 0);
    ek[k] = 1;
    Polynomial pk = poly_monomial(Rational(1), ek);
    for (int j = 0; j <= k; ++j) {
      ExponentVector ej(n, 0);
      ej[j] = 1;
      Polynomial pj = poly_monomial(Rational(1), ej);
      for (int i = 0; i <= j; ++i) {
        ExponentVector ei(n, 0);
        ei[i] = 1;
        Polynomial pi = poly_monomial(Rational(1), ei);
        try {
          Polynomial lhs = mul(A, mul(A, pk, pj), pi);
          Polynomial rhs = mul(A, pk, mul(A, pj, pi));
          if (!poly_equal(lhs, rhs))
            fail("associativity fails on (" + A.gens[k] + "," + A.gens[j] + "," +
                 A.gens[i] + ")");
        } catch (const StepCapError& e) {
          fail(std::string("associativity probe did not terminate: ") + e.what());
          return rep;
        }
      }
    }
  }
  return rep;
}

AlgebraPtr make_algebra(AlgebraSpec spec) {
  spec.cache = std::make_shared<detail::MulCache>();
  return std::make_shared<const AlgebraSpec>(std::move(spec));
}

}  // namespace solv
