#include "resinv/rational.hpp"

#include <cctype>

#include "resinv/errors.hpp"

namespace resinv {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Integer lcm_of_denominators(const Rational& a, const Integer& acc) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), a.get_den_mpz_t());
  return r;
}

Integer binomial(const Rational& n, long k) {
  if (!is_integer(n)) throw InternalError("binomial of a non-integer");
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_num_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

std::string to_string(const ExtRational& q) { return q.is_infinite() ? "inf" : to_string(q.value()); }

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& q) { return os << to_string(q); }

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

}  // namespace resinv
