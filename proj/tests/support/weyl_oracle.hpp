#pragma once

#include <map>
#include <vector>

#include "solv/algebra.hpp"

// Reference model for Weyl algebras: operators act on commutative
// polynomials by differentiation and multiplication. Validates the
// library's noncommutative product through functional composition, with no
// shared multiplication code.
namespace weyloracle {

// Commutative polynomial in the x variables, exponent vector -> coefficient.
using XPoly = std::map<std::vector<int>, solv::Rational>;

XPoly xmono(std::vector<int> m, solv::Rational c = solv::Rational(1));
XPoly xadd(const XPoly& a, const XPoly& b);
bool xequal(const XPoly& a, const XPoly& b);

// Applies a Weyl-algebra operator (generators x_1..x_nx followed by
// d_1..d_nx) to p: each term c * x^a d^b maps p to c * x^a * (d^b p).
XPoly apply(int nx, const solv::Polynomial& op, const XPoly& p);

}  // namespace weyloracle
