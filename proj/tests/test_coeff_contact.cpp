#include <gtest/gtest.h>

#include "helpers.hpp"
#include "resinv/errors.hpp"

using namespace th;

namespace {

const VariableTable xy = ring({"x", "y"});
const VariableTable xyzt = ring({"x", "y", "z", "t"});

// The linear part of f as a coefficient vector.
std::vector<Rational> linear_part(const Polynomial& f) {
  std::vector<Rational> v(f.nvars(), 0);
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == 1)
      for (int i = 0; i < f.nvars(); ++i)
        if (e[i] == 1) v[i] = c;
  return v;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return std::any_of(a.begin(), a.end(), [](const Rational& q) { return q != 0; });
}

Frame contact_frame(int n, int var) {
  Frame f;
  for (int i = 0; i < n; ++i) {
    f.names.push_back("v" + std::to_string(i));
    (i == var ? f.y : f.u).push_back(i);
  }
  return f;
}

}  // namespace

TEST(CoefficientPair, Examples) {
  Pair a = coefficient_pair(make_pair(P("y^2 - x^3", xy), 2), {1});
  EXPECT_EQ(a, make_pair(P("-x^3", xy), 2));
  Pair b = coefficient_pair(make_pair(P("t^2 + x*y*z", xyzt), 2), {3});
  EXPECT_EQ(b, make_pair(P("x*y*z", xyzt), 2));
  Pair c = coefficient_pair(intersect(make_pair(P("z^3 - x^2*y^2", xyzt), 3), make_pair(P("t", xyzt), 1)), {2, 3});
  EXPECT_EQ(c, make_pair(P("-x^2*y^2", xyzt), 3));
}

TEST(CoefficientPair, RationalPowersOfTheExpansionVariable) {
  VariableTable r = ring({"x", "y"}, {"x"});
  Pair e = intersect(make_pair(P("x^(1/3)", r), Q("1/3")), make_pair(P("x^(1/2)*y^2 + y^3", r), 2));
  // |B| = 1/3 reaches the weight; |B| = 1/2 leaves weight 3/2; B = 0 keeps y^3.
  EXPECT_EQ(coefficient_pair(e, {0}), intersect(make_pair(P("y^3", r), 2), make_pair(P("y^2", r), Q("3/2"))));
}

TEST(FindMaximalContact, Examples) {
  MaximalContact a = find_maximal_contact(make_pair(P("y^2 - x^3", xy), 2));
  EXPECT_EQ(a.var, 1);
  EXPECT_TRUE(proportional(linear_part(a.z), {0, 1}));
  MaximalContact b = find_maximal_contact(make_pair(P("t^2 + x*y*z", xyzt), 2));
  EXPECT_TRUE(proportional(linear_part(b.z), {0, 0, 0, 1}));
  MaximalContact c = find_maximal_contact(make_pair(P("(y + x)^2 - x^3", xy), 2));
  EXPECT_TRUE(proportional(linear_part(c.z), {1, 1}));
  EXPECT_THROW(find_maximal_contact(make_pair(P("x^3", xy), 2)), PreconditionError);
}

TEST(FindMaximalContact, HypersurfaceBecomesACoordinate) {
  Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    Pair e = random_singular_pair(rng, 3, 2, 3, 4);
    MaximalContact mc;
    try {
      mc = find_maximal_contact(e);
    } catch (const PreconditionError&) {
      continue;  // no component of order equal to its weight
    }
    Polynomial z = substitute(mc.z, mc.change);
    Polynomial var = Polynomial::variable(3, mc.var);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z.terms().begin()->first, var.terms().begin()->first);
  }
}

TEST(PrepareVertices, Examples) {
  Frame f = make_frame(xy.names, {"x"}, {"y"});
  Preparation a = prepare_vertices(make_pair(P("(y + x^2)^2", xy), 2), f);
  EXPECT_TRUE(a.prepared);
  EXPECT_TRUE(a.polyhedron.empty());
  ASSERT_EQ(a.steps.size(), 1u);
  EXPECT_EQ(a.steps[0].coefficient, Q("-1"));

  Preparation b = prepare_vertices(make_pair(P("y^2 - x^3", xy), 2), f);
  EXPECT_TRUE(b.prepared);
  EXPECT_EQ(b.polyhedron.vertices, (std::vector<Point>{{Q("3/2")}}));
  EXPECT_TRUE(b.steps.empty());
  EXPECT_EQ(b.frame, f);
  EXPECT_EQ(b.pair, make_pair(P("y^2 - x^3", xy), 2));

  EXPECT_THROW(prepare_vertices(make_pair(P("y^2 + x^2", xy), 2), f), PreconditionError);
}

TEST(DeltaInvariant, Examples) {
  EquivalentPairs ex = equivalent_pairs(3);
  EXPECT_EQ(delta_invariant(ex.first, ex.frame), ExtRational(Q("4/3")));
  EXPECT_EQ(delta_invariant(ex.second, ex.frame), ExtRational(Q("4/3")));
  Frame f = make_frame(xyzt.names, {"x", "y", "z"}, {"t"});
  EXPECT_EQ(delta_invariant(make_pair(P("t^2 + x*y*z", xyzt), 2), f), ExtRational(Q("3/2")));
}

TEST(DiagnoseDelta, ReportsTheDegenerateValue) {
  Frame f = make_frame(xy.names, {"x", "y"}, {});
  DeltaDiagnostic d = diagnose_delta(make_pair(P("y^2 - x^3", xy), 2), f);
  EXPECT_FALSE(d.spans_directrix);
  EXPECT_TRUE(d.forced_one);
  EXPECT_EQ(d.raw_delta, ExtRational(1));
}

TEST(CoeffContactProperties, PreparationShrinksAndKeepsDelta) {
  Rng rng(52);
  int prepared_cases = 0;
  for (int i = 0; i < 120; ++i) {
    // y-shifted hypersurfaces (y + h(x))^b + g(x) exercise the translations.
    int b = uniform(rng, 2, 3);
    Polynomial h = random_poly(rng, 3, 2, 2, 3);
    Polynomial g = random_poly(rng, 3, 2, b + 1, b + 3);
    // Keep everything in x0, x1 and use x2 as the y-variable.
    std::vector<Polynomial> squash{Polynomial::variable(3, 0), Polynomial::variable(3, 1), Polynomial(3)};
    h = substitute(h, squash);
    g = substitute(g, squash);
    if (h.is_zero()) continue;
    Polynomial f = (Polynomial::variable(3, 2) + h).pow(b) + g;
    Pair e = make_pair(f, b);
    Frame fr = make_frame({"a", "c", "w"}, {"a", "c"}, {"w"});
    Preparation p = prepare_vertices(e, fr, 8);
    OrthantPolyhedron before = polyhedron_of_pair(e, fr);
    EXPECT_TRUE(is_subset(p.polyhedron, before));
    EXPECT_GE(delta(p.polyhedron), delta(before));
    EXPECT_EQ(delta_invariant(e, fr, 8), delta(p.polyhedron));
    // A vanishing g leaves a pure power of the translated variable.
    if (g.is_zero() && p.prepared) EXPECT_TRUE(p.polyhedron.empty());
    if (p.prepared) ++prepared_cases;
    // delta lies in (1/b!) Z and exceeds 1.
    ExtRational d = delta(before);
    if (!d.is_infinite()) {
      EXPECT_TRUE(is_integer(d.value() * factorial(b)));
      EXPECT_GT(d, ExtRational(1));
    }
  }
  EXPECT_GT(prepared_cases, 0);
}

TEST(CoeffContactProperties, ContactDeltaIsCoordinateIndependent) {
  Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    Pair e = random_singular_pair(rng, 3, 1, 3, 4);
    std::vector<Polynomial> images;
    for (int a = 0; a < 3; ++a) {
      Polynomial img = Polynomial::variable(3, a);
      for (int c = a + 1; c < 3; ++c) img += Rational(uniform(rng, -1, 1)) * Polynomial::variable(3, c);
      images.push_back(img);
    }
    Pair moved{3, {}};
    for (const auto& comp : e.components) {
      Component d{{}, comp.weight};
      for (const auto& g : comp.gens) d.gens.push_back(substitute(g, images));
      moved.components.push_back(d);
    }
    MaximalContact a, b;
    try {
      a = find_maximal_contact(e);
      b = find_maximal_contact(moved);
    } catch (const PreconditionError&) {
      continue;
    }
    EXPECT_EQ(delta(polyhedron_of_pair(a.pair, contact_frame(3, a.var))),
              delta(polyhedron_of_pair(b.pair, contact_frame(3, b.var))));
  }
}
