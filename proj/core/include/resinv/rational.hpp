#ifndef RESINV_RATIONAL_HPP
#define RESINV_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace resinv {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Rational floor(const Rational& q);
Integer lcm_of_denominators(const Rational& a, const Integer& acc);
Integer binomial(const Rational& n, long k);
Rational factorial(long n);

// The extended value set Q u {inf}; inf is greater than every rational.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(const Rational& v) : value_(v) {}  // NOLINT implicit on purpose
  ExtRational(long v) : value_(v) {}             // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  // Undefined for inf.
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) {
      if (a.inf_ == b.inf_) return std::strong_ordering::equal;
      return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtRational(Rational(a.value_ + b.value_));
  }

 private:
  bool inf_ = false;
  Rational value_ = 0;
};

std::string to_string(const ExtRational& q);
ExtRational parse_ext_rational(std::string_view text);
std::ostream& operator<<(std::ostream& os, const ExtRational& q);

ExtRational min(const ExtRational& a, const ExtRational& b);

}  // namespace resinv

#endif
