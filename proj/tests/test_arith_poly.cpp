#include <gtest/gtest.h>

#include "helpers.hpp"
#include "resinv/errors.hpp"

using namespace th;

namespace {

const VariableTable xy = ring({"x", "y"});
const VariableTable xyzt = ring({"x", "y", "z", "t"});

long choose(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Rational, ParsesReducedFormAndRejectsGarbage) {
  EXPECT_EQ(to_string(Q("6/4")), "3/2");
  EXPECT_EQ(to_string(Q("-4/2")), "-2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_EQ(to_string(ExtRational::infinity()), "inf");
  EXPECT_LT(ExtRational(Q("1000000")), ExtRational::infinity());
}

TEST(OrdAtOrigin, LowestDegreeTerm) {
  EXPECT_EQ(ord_at_origin(P("x^2 + y^3", xy)), ExtRational(2));
  EXPECT_TRUE(ord_at_origin(Polynomial(2)).is_infinite());
  EXPECT_EQ(ord_at_origin(P("t^2 + x*y*z", xyzt)), ExtRational(2));
}

TEST(HasseDerivative, BinomialWeights) {
  EXPECT_EQ(hasse_derivative(P("y^2", xy), {0, 1}), P("2*y", xy));
  EXPECT_EQ(hasse_derivative(P("y^2", xy), {0, 2}), P("1", xy));
  EXPECT_EQ(hasse_derivative(P("x^3*y", xy), {2, 0}), P("3*x*y", xy));
  EXPECT_TRUE(hasse_derivative(P("y^2", xy), {0, 3}).is_zero());
}

TEST(HasseDerivative, RejectsFractionalVariable) {
  VariableTable r = ring({"x", "y"}, {"x"});
  Polynomial f = P("x^(1/2)*y", r);
  EXPECT_THROW(hasse_derivative(f, {1, 0}), PreconditionError);
  EXPECT_EQ(hasse_derivative(f, {0, 1}), P("x^(1/2)", r));
}

TEST(Substitute, HandExpansions) {
  VariableTable r = ring({"x", "y", "w"});
  Polynomial f = P("y^2 - x^3", r);
  // y -> x*w, x -> x
  EXPECT_EQ(substitute(f, {P("x", r), P("x*w", r), P("w", r)}), P("x^2*(w^2 - x)", r));
  EXPECT_EQ(substitute(f, {P("x", r), P("y", r), P("w", r)}), f);

  Polynomial g = P("t^2 + x*y*z", xyzt);
  auto images = std::vector<Polynomial>{P("x", xyzt), P("x*y", xyzt), P("x*z", xyzt), P("x*t", xyzt)};
  EXPECT_EQ(substitute(g, images), P("x^2*(t^2 + x*y*z)", xyzt));
}

TEST(WeightedOrder, Examples) {
  Polynomial f = P("y^2 - x^3", xy);
  EXPECT_EQ(weighted_order(f, {Q("2/3"), Q("1")}), ExtRational(2));
  EXPECT_EQ(weighted_order(f, {Q("1"), Q("1")}), ord_at_origin(f));
  EXPECT_TRUE(weighted_order(Polynomial(2), {Q("1"), Q("1")}).is_infinite());
}

TEST(InitialForm, IntegralAndWeightedCases) {
  Polynomial f = P("y^2 - x^3", xy);
  EXPECT_EQ(initial_form(f, Q("2")), P("y^2", xy));
  std::vector<Rational> w{Q("2/3"), Q("1")};
  EXPECT_EQ(initial_form(f, Q("2"), &w), f);
  EXPECT_TRUE(initial_form(f, Q("3/2")).is_zero());
}

TEST(PolyText, RoundTripAndDiagnostics) {
  VariableTable r = ring({"x", "y"}, {"x"});
  Polynomial f = P("3/2*x^2*y - x^(5/2) + (x + y)^2", r);
  EXPECT_EQ(P(format_polynomial(f, r.names), r), f);
  EXPECT_EQ(format_polynomial(P("y^2 - x^3", xy), xy.names), "-x^3 + y^2");
  EXPECT_THROW(P("y^(1/2)", r), ParseError);
  EXPECT_THROW(P("x + q", r), ParseError);
  try {
    P("x + * y", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
}

// Property checks over seeded random polynomials.

TEST(ArithPolyProperties, OrderIsAdditiveOnProducts) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 3, 4, 0, 4), g = random_poly(rng, 3, 4, 0, 4);
    EXPECT_EQ(ord_at_origin(f * g), ord_at_origin(f) + ord_at_origin(g));
  }
}

TEST(ArithPolyProperties, HasseCompositionMultinomialIdentity) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 3, 5, 0, 6);
    std::vector<int> m(3), m2(3), sum(3);
    long factor = 1;
    for (int k = 0; k < 3; ++k) {
      m[k] = uniform(rng, 0, 2);
      m2[k] = uniform(rng, 0, 2);
      sum[k] = m[k] + m2[k];
      factor *= choose(sum[k], m[k]);
    }
    EXPECT_EQ(hasse_derivative(hasse_derivative(f, m), m2), Rational(factor) * hasse_derivative(f, sum));
  }
}

TEST(ArithPolyProperties, InvertibleLinearChangePreservesOrder) {
  Rng rng(13);
  const int n = 3;
  for (int i = 0; i < 100; ++i) {
    Polynomial f = random_poly(rng, n, 4, 1, 4);
    // Unitriangular change x_i -> x_i + sum_{j>i} a_ij x_j is invertible.
    std::vector<Polynomial> images;
    for (int a = 0; a < n; ++a) {
      Polynomial img = Polynomial::variable(n, a);
      for (int b = a + 1; b < n; ++b) img += Rational(uniform(rng, -2, 2)) * Polynomial::variable(n, b);
      images.push_back(img);
    }
    EXPECT_EQ(ord_at_origin(substitute(f, images)), ord_at_origin(f));
  }
}

TEST(ArithPolyProperties, InitialFormAtOrderIsNonzero) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 3, 4, 1, 5);
    Rational o = ord_at_origin(f).value();
    EXPECT_FALSE(initial_form(f, o).is_zero());
  }
}

TEST(ArithPolyProperties, UnitWeightsGiveOrdinaryOrder) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 4, 4, 0, 5);
    EXPECT_EQ(weighted_order(f, std::vector<Rational>(4, Rational(1))), ord_at_origin(f));
  }
}
