#include "weyl_oracle.hpp"

namespace weyloracle {

using solv::Rational;

XPoly xmono(std::vector<int> m, Rational c) {
  XPoly p;
  if (!c.is_zero()) p.emplace(std::move(m), std::move(c));
  return p;
}

XPoly xadd(const XPoly& a, const XPoly& b) {
  XPoly out = a;
  for (const auto& [m, c] : b) {
    auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

bool xequal(const XPoly& a, const XPoly& b) {
  return xadd(a, {}) == xadd(b, {});
}

namespace {

// d_i^k applied to one monomial: falling factorial coefficient.
void differentiate(std::vector<int>& m, Rational& c, int i, int k) {
  for (int q = 0; q < k; ++q) {
    if (m[i] == 0) {
      c = Rational(0);
      return;
    }
    c *= Rational(m[i]);
    m[i] -= 1;
  }
}

}  // namespace

XPoly apply(int nx, const solv::Polynomial& op, const XPoly& p) {
  XPoly out;
  for (const solv::Term& t : op.terms) {
    for (const auto& [m, c] : p) {
      std::vector<int> mono = m;
      Rational coef = t.coef * c;
      for (int i = 0; i < nx && !coef.is_zero(); ++i)
        differentiate(mono, coef, i, t.mono[nx + i]);
      if (coef.is_zero()) continue;
      for (int i = 0; i < nx; ++i) mono[i] += t.mono[i];
      out = xadd(out, xmono(std::move(mono), std::move(coef)));
    }
  }
  return out;
}

}  // namespace weyloracle
