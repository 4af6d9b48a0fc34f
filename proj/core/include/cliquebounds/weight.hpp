#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquebounds {

/// Exact rational, always held in lowest terms with a
/// positive denominator.
class Weight {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  Weight() = default;
  Weight(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Weight(std::int64_t numerator, std::int64_t denominator);
  explicit Weight(Rational value) : value_(std::move(value)) {}

  /// 1/denominator, the term contributed by one vertex.
  static Weight unit_fraction(std::size_t denominator);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  std::string numerator_string() const { return numerator().str(); }
  std::string denominator_string() const { return denominator().str(); }

  /// Smallest integer not below the value.
  Integer ceil() const;
  /// Nearest double; for display only.
  double approx() const;

  /// "p/q", always with the denominator.
  std::string str() const;
  /// "p/q (≈ d.ddd)" for human tables.
  std::string display() const;

  const Rational& value() const noexcept { return value_; }

  Weight& operator+=(const Weight& other) {
    value_ += other.value_;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(const Weight& a, const Weight& b) { return Weight(Rational(a.value_ - b.value_)); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace cliquebounds
