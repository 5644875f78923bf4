#include "commutative_oracle.hpp"

#include <algorithm>

namespace comoracle {

using solv::Rational;

namespace {

long long wdeg(const Setup& s, const Mono& m) {
  long long d = 0;
  for (int k = 0; k < s.nvars; ++k)
    d += (s.weights.empty() ? 1 : s.weights[k]) * m[k];
  return d;
}

// -1 / 0 / +1 for a <,=,> b under the setup's monomial ordering.
int cmp_mono(const Setup& s, const Mono& a, const Mono& b) {
  if (s.ord != Ord::Lex) {
    long long da = wdeg(s, a), db = wdeg(s, b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (s.ord == Ord::GrevLex) {
    for (int k = s.nvars - 1; k >= 0; --k)
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    return 0;
  }
  for (int k = 0; k < s.nvars; ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

// Lower component index is the more significant one.
int cmp_comp(int ca, int cb) {
  if (ca == cb) return 0;
  return ca < cb ? 1 : -1;
}

int cmp_key(const Setup& s, const Key& a, const Key& b) {
  if (s.modord == ModOrd::TOP) {
    int c = cmp_mono(s, a.m, b.m);
    if (c != 0) return c;
    return cmp_comp(a.comp, b.comp);
  }
  int c = cmp_comp(a.comp, b.comp);
  if (c != 0) return c;
  return cmp_mono(s, a.m, b.m);
}

Key lead_key(const Elem& x) { return x.rbegin()->first; }
Rational lead_coef(const Elem& x) { return x.rbegin()->second; }

void add_term(Elem& x, const Key& k, const Rational& c) {
  auto it = x.find(k);
  if (it == x.end()) {
    if (!c.is_zero()) x.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

// x += c * m * y  (commutative monomial shift)
void add_scaled_shift(Elem& x, const Rational& c, const Mono& m, const Elem& y) {
  for (const auto& [k, yc] : y) {
    Key shifted = k;
    for (size_t q = 0; q < m.size(); ++q) shifted.m[q] += m[q];
    add_term(x, shifted, c * yc);
  }
}

bool divides(const Key& a, const Key& b, Mono& quot) {
  if (a.comp != b.comp) return false;
  quot.assign(a.m.size(), 0);
  for (size_t k = 0; k < a.m.size(); ++k) {
    if (a.m[k] > b.m[k]) return false;
    quot[k] = b.m[k] - a.m[k];
  }
  return true;
}

}  // namespace

bool KeyLess::operator()(const Key& a, const Key& b) const {
  return cmp_key(*s, a, b) < 0;
}

Elem make_elem(const Setup& s,
               std::vector<std::tuple<Rational, Mono, int>> terms) {
  Elem x{KeyLess{&s}};
  for (auto& [c, m, comp] : terms) add_term(x, Key{std::move(m), comp}, c);
  return x;
}

Elem normal_form(const Setup& s, Elem x, const std::vector<Elem>& basis) {
  Elem rem{KeyLess{&s}};
  Mono quot;
  while (!x.empty()) {
    Key lk = lead_key(x);
    bool reduced = false;
    for (const Elem& g : basis) {
      if (g.empty()) continue;
      if (!divides(lead_key(g), lk, quot)) continue;
      Rational c = lead_coef(x) / lead_coef(g);
      add_scaled_shift(x, -c, quot, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(lk, lead_coef(x));
      x.erase(std::prev(x.end()));
    }
  }
  return rem;
}

std::vector<Elem> reduced_groebner(const Setup& s,
                                   const std::vector<Elem>& gens) {
  std::vector<Elem> g;
  for (const Elem& f : gens)
    if (!f.empty()) g.push_back(f);

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.push_back({i, j});

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Key li = lead_key(g[i]), lj = lead_key(g[j]);
    if (li.comp != lj.comp) continue;
    Mono gamma(s.nvars);
    for (int k = 0; k < s.nvars; ++k) gamma[k] = std::max(li.m[k], lj.m[k]);
    Mono mi(s.nvars), mj(s.nvars);
    for (int k = 0; k < s.nvars; ++k) {
      mi[k] = gamma[k] - li.m[k];
      mj[k] = gamma[k] - lj.m[k];
    }
    Elem sp{KeyLess{&s}};
    add_scaled_shift(sp, lead_coef(g[i]).inverse(), mi, g[i]);
    add_scaled_shift(sp, -lead_coef(g[j]).inverse(), mj, g[j]);
    Elem r = normal_form(s, std::move(sp), g);
    if (r.empty()) continue;
    for (size_t k = 0; k < g.size(); ++k) pairs.push_back({k, g.size()});
    g.push_back(std::move(r));
  }

  // Minimalize: drop any element whose lead another lead divides.
  std::vector<Elem> min;
  Mono quot;
  for (size_t i = 0; i < g.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < g.size() && !drop; ++j) {
      if (i == j) continue;
      if (!divides(lead_key(g[j]), lead_key(g[i]), quot)) continue;
      // Equal leads: keep the earlier one.
      if (lead_key(g[j]) == lead_key(g[i]) && i < j) continue;
      drop = true;
    }
    if (!drop) min.push_back(g[i]);
  }
  // Tail-reduce and make monic.
  std::vector<Elem> out;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<Elem> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    Elem r = normal_form(s, min[i], others);
    Rational inv = lead_coef(r).inverse();
    Elem monic{KeyLess{&s}};
    for (const auto& [k, c] : r) monic.emplace(k, c * inv);
    out.push_back(std::move(monic));
  }
  std::sort(out.begin(), out.end(), [&s](const Elem& a, const Elem& b) {
    return cmp_key(s, lead_key(a), lead_key(b)) < 0;
  });
  return out;
}

std::vector<Key> reduced_leading_monomials(const Setup& s,
                                           const std::vector<Elem>& gens) {
  std::vector<Key> out;
  for (const Elem& g : reduced_groebner(s, gens)) out.push_back(lead_key(g));
  return out;
}

}  // namespace comoracle
