#include "cliquebounds/weight.hpp"

#include <cstdio>
#include <ostream>

#include "cliquebounds/error.hpp"

namespace cliquebounds {

Weight::Weight(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw PreconditionError("zero denominator");
  // Keep the denominator positive; the rational backend rejects negative ones.
  if (denominator < 0) {
    value_ = Rational(-Integer(numerator), -Integer(denominator));
  } else {
    value_ = Rational(Integer(numerator), Integer(denominator));
  }
}

Weight Weight::unit_fraction(std::size_t denominator) {
  if (denominator == 0) throw PreconditionError("zero denominator");
  return Weight(Rational(1, Integer(denominator)));
}

Weight::Integer Weight::ceil() const {
  Integer num = numerator();
  Integer den = denominator();
  Integer q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

double Weight::approx() const { return value_.convert_to<double>(); }

std::string Weight::str() const { return numerator_string() + "/" + denominator_string(); }

std::string Weight::display() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", approx());
  return str() + " (≈ " + buf + ")";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

}  // namespace cliquebounds
