#pragma once

// Laurent polynomials in a degeneration parameter and the epsilon-paths used
// to approach compactification boundary strata.

#include <map>
#include <string>
#include <vector>

#include "polyfaces/rational.hpp"

namespace polyfaces {

class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(Rational constant);
  static LaurentPoly eps(int exponent, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  int order() const;               // smallest exponent; throws on zero
  const Rational& leading() const; // coefficient of the smallest exponent
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& e) const;
  std::string text() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly operator-(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // grammar: term (("+"|"-") term)*; term = coeff ["*" epart] | ["-"] epart;
  // epart = "e" ["^" int]; coeff = int ["/" int]
  static LaurentPoly parse(const std::string& text);

private:
  std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
  void trim();
};

// limit of p/q as the parameter tends to 0+; q must be nonzero
ExtendedQ ratio_limit(const LaurentPoly& p, const LaurentPoly& q);

// Coordinates t_1(e), .., t_n(e) of a degenerating configuration; valid when
// every consecutive difference (with t_0 = 0, t_{n+1} = 1) is a nonzero
// polynomial of order >= 0 with positive leading coefficient, so the
// evaluated vector is an interior configuration for all small e > 0.
class EpsilonPath {
public:
  explicit EpsilonPath(std::vector<LaurentPoly> coords);
  static EpsilonPath parse(const std::string& text);  // comma-separated

  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<LaurentPoly>& coords() const { return coords_; }
  // t_0 = 0 and t_{n+1} = 1 included
  std::vector<LaurentPoly> padded() const;

private:
  std::vector<LaurentPoly> coords_;
};

}  // namespace polyfaces
