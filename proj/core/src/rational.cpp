#include "solv/rational.hpp"

namespace solv {

Rational Rational::parse(std::string_view s) {
  std::string text(s);
  if (text.empty()) throw MathError("rational: empty literal");
  for (char c : text) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw MathError("rational: bad literal '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw MathError("rational: bad literal '" + text + "'");
  if (v.get_den() == 0) throw MathError("rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace solv
