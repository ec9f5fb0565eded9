#ifndef RESINV_CONE_DIRECTRIX_HPP
#define RESINV_CONE_DIRECTRIX_HPP

#include <vector>

#include "resinv/linalg.hpp"
#include "resinv/pair.hpp"

namespace resinv {

// Ideal generated by homogeneous forms with integral exponents.
struct HomIdeal {
  int nvars = 0;
  std::vector<Polynomial> gens;

  bool is_zero() const;
};

// Degree-b forms of generators of order b, over components with integral b.
HomIdeal initial_ideal(const Pair& e);

// All exponent vectors of total degree d in n variables, grlex ascending.
std::vector<Exponents> monomials_of_degree(int nvars, int d);

// Reduced basis of the degree-d part of the ideal.
std::vector<Polynomial> graded_piece(const HomIdeal& ideal, int d);

struct DirectrixBasis {
  int nvars = 0;
  // Linear forms in reduced echelon form.
  std::vector<Polynomial> forms;
  // Rows: coefficient vectors of `forms`.
  Matrix form_matrix;
  // Rows: basis of the translation directions v with D_v I contained in I.
  Matrix invariant_directions;

  int dimension() const { return static_cast<int>(forms.size()); }
};

// Throws "directrix undefined" on the zero ideal.
DirectrixBasis directrix(const HomIdeal& ideal);

// True when span{Y_j : j in coords} equals the directrix.
bool spans_directrix(const DirectrixBasis& dir, const std::vector<int>& coords);

// dim K[x]/(J + M^k) for k = 1..k_max. Throws "point not on X" when a
// generator has a constant term.
std::vector<long> hilbert_samuel_truncated(const std::vector<Polynomial>& gens, int nvars, int k_max);

}  // namespace resinv

#endif
