#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace wrp {

//! Exact rational value used for capacities, weights, demands and costs.
//!
//! Thin wrapper around boost::rational<long long> that owns parsing and
//! formatting.  All comparisons are exact; there is no implicit conversion
//! to floating point (call to_double() where an approximation is wanted).
class Rational {
 public:
  using Backing = boost::rational<long long>;

  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long numerator() const { return value_.numerator(); }
  long long denominator() const { return value_.denominator(); }
  bool is_integer() const { return value_.denominator() == 1; }
  bool is_negative() const { return value_ < Backing(0); }
  bool is_zero() const { return value_ == Backing(0); }

  double to_double() const;

  //! Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  //! Accepts "p", "p/q" and decimal literals such as "2.5" or "-0.25".
  //! Returns nullopt on malformed input (including "/0").
  static std::optional<Rational> parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ < b.value_ || a.value_ == b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

 private:
  explicit Rational(Backing v) : value_(v) {}
  Backing value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wrp
