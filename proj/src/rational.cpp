#include "polyfaces/rational.hpp"

namespace polyfaces {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational '" + text + "'", 0);
  }
}

}  // namespace polyfaces
