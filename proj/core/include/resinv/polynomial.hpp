#ifndef RESINV_POLYNOMIAL_HPP
#define RESINV_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "resinv/rational.hpp"

namespace resinv {

// Dense exponent vector; entries are >= 0 and integral except on variables
// that carry an exceptional marking.
using Exponents = std::vector<Rational>;

Rational total_degree(const Exponents& e);
bool is_integral(const Exponents& e);

// Graded lexicographic: lower total degree first, ties broken lexicographically
// with variable 0 most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  // True when some term has a non-integral exponent on `var`.
  bool fractional_in(int var) const;
  bool is_integral() const;
  // Variables occurring with a nonzero exponent.
  std::vector<bool> support() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;
};

// Minimal total degree of a term; inf for the zero polynomial.
ExtRational ord_at_origin(const Polynomial& f);

// Minimal exponent of `var` over the terms; inf for zero.
ExtRational variable_order(const Polynomial& f, int var);

// Sum over terms of binom(E, M) c x^(E-M). Throws when M touches a variable
// on which f has a fractional exponent.
Polynomial hasse_derivative(const Polynomial& f, const std::vector<int>& order);

// Order-k Hasse derivative along the direction v: sum over |M| = k of v^M D_M f.
Polynomial directional_hasse(const Polynomial& f, const std::vector<Rational>& direction, int k);

// Replace variable i by images[i]. All images share one ring. A fractional
// exponent is only allowed when the image is a monomial with coefficient 1.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

ExtRational weighted_order(const Polynomial& f, const std::vector<Rational>& weights);

// Terms of (weighted) degree exactly `degree`.
Polynomial homogeneous_part(const Polynomial& f, const Rational& degree,
                            const std::vector<Rational>* weights = nullptr);

// Degree-b part when b is a positive integer, zero otherwise. With weights the
// integrality case split is not applied.
Polynomial initial_form(const Polynomial& f, const Rational& b,
                        const std::vector<Rational>* weights = nullptr);

// Terms of total degree < k.
Polynomial truncate_below(const Polynomial& f, const Rational& k);

// f / x^e when every term is divisible, otherwise nullopt.
std::optional<Polynomial> divide_by_monomial(const Polynomial& f, const Exponents& e);

// Expansion f = sum_B f_B * z^B in the listed variables; the keys are the
// exponent vectors B (integral), the values have zero exponent on those variables.
std::map<std::vector<long>, Polynomial> expand_in(const Polynomial& f, const std::vector<int>& vars);

// Same polynomial viewed in a ring with `nvars` variables; extra variables are
// appended, dropped ones must not occur.
Polynomial resize_ring(const Polynomial& f, int nvars);

}  // namespace resinv

#endif
