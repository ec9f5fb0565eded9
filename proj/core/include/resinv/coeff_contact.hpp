#ifndef RESINV_COEFF_CONTACT_HPP
#define RESINV_COEFF_CONTACT_HPP

#include <optional>
#include <vector>

#include "resinv/frame.hpp"
#include "resinv/pair.hpp"
#include "resinv/polyhedron.hpp"

namespace resinv {

// For each component (f, b) and each |B| < b the coefficient f_B of z^B,
// grouped into one component of weight b - |B| per source component and |B|.
// The result stays in the same ring with zero exponent on z.
Pair coefficient_pair(const Pair& e, const std::vector<int>& z);

struct ContactOptions {
  // Variables that may only be used as a maximal-contact coordinate verbatim
  // (exceptional divisors): never moved by a coordinate change.
  std::vector<bool> frozen;
  // Variables of the current ambient space; others are left alone.
  std::vector<bool> active;
  // Components to try first, in this order; the rest follow in pair order.
  std::vector<int> preferred_components;
  int max_height = 4;
};

struct MaximalContact {
  // The input pair rewritten so that V(x_var) is the maximal-contact hypersurface.
  Pair pair;
  int var = -1;
  // The derivative defining the hypersurface, in the input coordinates.
  Polynomial z;
  // Old variable i equals change[i] evaluated at the new coordinates.
  std::vector<Polynomial> change;
  std::vector<Rational> direction;
  int component = -1;
  int generator = -1;
};

// Throws "no maximal contact witness" when no component has a generator of
// order equal to its weight, and "maximal contact hypersurface is not a
// polynomial graph" when every witness direction leaves the derivative
// nonlinear in the pivot variable.
MaximalContact find_maximal_contact(const Pair& e, const ContactOptions& opts);
MaximalContact find_maximal_contact(const Pair& e);

struct Preparation {
  Pair pair;
  Frame frame;
  OrthantPolyhedron polyhedron;
  bool prepared = false;
  int iterations = 0;
  // One entry per applied translation: (y variable, u-exponent, coefficient).
  struct Step {
    int var;
    Exponents shift;
    Rational coefficient;
  };
  std::vector<Step> steps;
};

// Throws "y does not span directrix" unless the initial forms of frame.y
// give the directrix.
Preparation prepare_vertices(const Pair& e, const Frame& frame, int max_iters = 32);

// delta of the prepared polyhedron after checking the directrix condition.
// It bounds delta(Delta(E, u, y)) from above and does not depend on y.
ExtRational delta_invariant(const Pair& e, const Frame& frame, int max_iters = 32);

struct DeltaDiagnostic {
  bool spans_directrix = false;
  ExtRational raw_delta;
  // Directrix not spanned by y and the polyhedron reports the degenerate value 1.
  bool forced_one = false;
};
DeltaDiagnostic diagnose_delta(const Pair& e, const Frame& frame);

}  // namespace resinv

#endif
