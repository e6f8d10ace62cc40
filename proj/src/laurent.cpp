#include "polyfaces/laurent.hpp"

#include <sstream>

namespace polyfaces {

LaurentPoly::LaurentPoly(Rational constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::eps(int exponent, Rational coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
  return p;
}

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

int LaurentPoly::order() const {
  if (is_zero()) throw PreconditionError("order of the zero polynomial");
  return coeffs_.begin()->first;
}

const Rational& LaurentPoly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.begin()->second;
}

Rational LaurentPoly::evaluate(const Rational& e) const {
  Rational out(0);
  for (const auto& [exp, c] : coeffs_) {
    Rational p(1);
    if (exp >= 0) {
      for (int i = 0; i < exp; ++i) p *= e;
    } else {
      if (e == 0) throw PreconditionError("evaluating a negative power at 0");
      for (int i = 0; i < -exp; ++i) p /= e;
    }
    out += c * p;
  }
  return out;
}

std::string LaurentPoly::text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : coeffs_) {
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    Rational a = c > 0 ? c : -c;
    if (exp == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "e";
      if (exp != 1) os << "^" << exp;
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [exp, c] : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [exp, c] : b.coeffs_) out.coeffs_[exp] += c;
  out.trim();
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [e1, c1] : a.coeffs_)
    for (const auto& [e2, c2] : b.coeffs_) out.coeffs_[e1 + e2] += c1 * c2;
  out.trim();
  return out;
}

namespace {

struct PolyParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  Integer parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && isdigit(text[pos])) ++pos;
    if (pos == start || (pos == start + 1 && !isdigit(text[start])))
      fail("expected an integer");
    return Integer(text.substr(start, pos - start));
  }

  LaurentPoly parse_term(bool negate) {
    skip_ws();
    Rational coeff(1);
    bool saw_coeff = false;
    if (pos < text.size() && (isdigit(text[pos]))) {
      Integer num = parse_int();
      Integer den(1);
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        Integer e = parse_int();
        exponent = static_cast<int>(e);
      }
    } else if (!saw_coeff) {
      fail("expected a coefficient or 'e'");
    }
    if (negate) coeff = -coeff;
    return LaurentPoly::eps(exponent, coeff);
  }

  LaurentPoly parse_poly() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    LaurentPoly out = parse_term(neg);
    while (true) {
      skip_ws();
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) break;
      bool minus = text[pos] == '-';
      ++pos;
      out = out + parse_term(minus);
    }
    return out;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  PolyParser p{text};
  LaurentPoly out = p.parse_poly();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters in polynomial");
  return out;
}

ExtendedQ ratio_limit(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw PreconditionError("zero polynomial in a denominator");
  if (p.is_zero()) return ExtendedQ(Rational(0));
  int dp = p.order(), dq = q.order();
  if (dp > dq) return ExtendedQ(Rational(0));
  if (dp < dq) return ExtendedQ::infinity();
  Rational v = p.leading() / q.leading();
  if (v < 0)
    throw PreconditionError("ratio limit is negative; path is not interior");
  return ExtendedQ(v);
}

EpsilonPath::EpsilonPath(std::vector<LaurentPoly> coords) : coords_(std::move(coords)) {
  auto ts = padded();
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    LaurentPoly diff = ts[i + 1] - ts[i];
    if (diff.is_zero())
      throw PreconditionError("path coordinates t_" + std::to_string(i) + " and t_" +
                              std::to_string(i + 1) + " coincide identically");
    if (diff.order() < 0 || diff.leading() <= 0)
      throw PreconditionError("path violates 0 < t_1 < ... < t_n < 1 for small e (gap " +
                              std::to_string(i) + ")");
  }
}

EpsilonPath EpsilonPath::parse(const std::string& text) {
  std::vector<LaurentPoly> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    if (piece.find_first_not_of(' ') != std::string::npos)
      coords.push_back(LaurentPoly::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return EpsilonPath(std::move(coords));
}

std::vector<LaurentPoly> EpsilonPath::padded() const {
  std::vector<LaurentPoly> ts;
  ts.emplace_back();  // t_0 = 0
  ts.insert(ts.end(), coords_.begin(), coords_.end());
  ts.emplace_back(Rational(1));
  return ts;
}

}  // namespace polyfaces
