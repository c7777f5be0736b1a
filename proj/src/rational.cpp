#include "wrp/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace wrp {

Rational::Rational(long long num, long long den) : value_(0) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = Backing(num, den);
}

double Rational::to_double() const {
  return static_cast<double>(value_.numerator()) /
         static_cast<double>(value_.denominator());
}

std::string Rational::str() const {
  std::string s = std::to_string(value_.numerator());
  if (value_.denominator() != 1) {
    s += '/';
    s += std::to_string(value_.denominator());
  }
  return s;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == Backing(0)) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool parse_ll(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = 0, den = 0;
    if (!parse_ll(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_ll(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17) return std::nullopt;
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    long long whole_part = 0;
    if (!whole.empty() && !parse_ll(whole, whole_part)) return std::nullopt;
    long long frac_part = 0;
    if (!parse_ll(frac, frac_part)) return std::nullopt;
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) {
      if (den > (1LL << 60) / 10) return std::nullopt;  // would overflow
      den *= 10;
    }
    Rational r = Rational(whole_part) + Rational(frac_part, den);
    return negative ? -r : r;
  }

  long long v = 0;
  if (!parse_ll(text, v)) return std::nullopt;
  return Rational(v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace wrp
