#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "polyfaces/errors.hpp"

namespace polyfaces {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A value in [0, +infinity]. The compactification coordinates live here; the
// smooth chart onto [0,1] is x -> x/(1+x).
class ExtendedQ {
public:
  ExtendedQ() : finite_(0) {}
  ExtendedQ(Rational v) : finite_(std::move(v)) {
    if (finite_ < 0) throw PreconditionError("ExtendedQ must be nonnegative");
  }
  static ExtendedQ infinity() {
    ExtendedQ e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  const Rational& value() const {
    if (inf_) throw PreconditionError("value() on infinite ExtendedQ");
    return finite_;
  }

  // chart [0,+inf] -> [0,1], t -> t/(1+t)
  Rational chart01() const {
    if (inf_) return Rational(1);
    return finite_ / (1 + finite_);
  }
  static ExtendedQ from_chart01(const Rational& y) {
    if (y < 0 || y > 1) throw PreconditionError("chart value outside [0,1]");
    if (y == 1) return infinity();
    return ExtendedQ(y / (1 - y));
  }

  // 1/x with 1/0 = inf and 1/inf = 0
  ExtendedQ reciprocal() const {
    if (inf_) return ExtendedQ(Rational(0));
    if (finite_ == 0) return infinity();
    return ExtendedQ(1 / finite_);
  }

  friend bool operator==(const ExtendedQ& a, const ExtendedQ& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.finite_ == b.finite_;
  }

  std::string str() const;

private:
  Rational finite_;
  bool inf_ = false;
};

inline std::string ExtendedQ::str() const {
  if (inf_) return "inf";
  return finite_.str();
}

// Parses "p", "-p", or "p/q". Used by the CLI for configuration input.
Rational parse_rational(const std::string& text);

}  // namespace polyfaces
