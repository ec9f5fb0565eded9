#ifndef RESINV_TESTS_HELPERS_HPP
#define RESINV_TESTS_HELPERS_HPP

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "resinv/coeff_contact.hpp"
#include "resinv/cone_directrix.hpp"
#include "resinv/polyhedron.hpp"
#include "resinv/history.hpp"
#include "resinv/invariant.hpp"
#include "resinv/poly_text.hpp"
#include "resinv/problem.hpp"

namespace th {

using namespace resinv;
using Rng = std::mt19937_64;

inline Rational Q(const char* s) { return parse_rational(s); }
// num/den in lowest terms; gmp arithmetic assumes canonical operands.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Ring with the given names; variables listed in `fractional` may carry
// rational exponents.
VariableTable ring(const std::vector<std::string>& names, const std::vector<std::string>& fractional = {});
Polynomial P(const std::string& text, const VariableTable& vars);

std::string data_dir();
// Every problem file of the checked-in corpus, sorted by name.
std::vector<std::filesystem::path> corpus_files();
Problem load(const std::string& name);

// Random polynomial with `nterms` attempted terms of total degree in
// [min_deg, max_deg] and small nonzero integer coefficients.
Polynomial random_poly(Rng& rng, int nvars, int nterms, int min_deg, int max_deg, int coeff = 3);
Polynomial random_homogeneous(Rng& rng, int nvars, int deg, int nterms, int coeff = 3);
// Random pair with 1..max_comps components, integral weights in [1, max_weight]
// and generators of order at least the weight.
Pair random_singular_pair(Rng& rng, int nvars, int max_comps, int max_weight, int max_deg);

int uniform(Rng& rng, int lo, int hi);

}  // namespace th

#endif

namespace th {

// Seeded homogeneous ideals in 2..4 variables with 1..3 generators of degree
// <= 4; about half are built from a few random linear forms so that the
// directrix is a proper subspace.
std::vector<HomIdeal> directrix_corpus(unsigned seed, int count);

}  // namespace th

namespace th {

// Two equivalent pairs in x, y, z, t whose polyhedra for u = (x, y) differ:
// (z^d - x^(d-1) y^(d-1), d) intersected with (t, 1), respectively with
// (t^(d-1) - x^(d-2) y^(d-1), d-1).
struct EquivalentPairs {
  Pair first, second;
  Frame frame;
};
EquivalentPairs equivalent_pairs(int d);

}  // namespace th

namespace th {

PairWithHistory with_frame(const Pair& e, const Frame& f);

// A pair in 3..4 variables together with a coordinate center that contains
// every y-variable and is permissible by construction, and a chart variable
// from the u-part of the center.
struct BlowupCase {
  PairWithHistory h;
  std::vector<int> center;
  int chart = -1;
};
BlowupCase random_permissible_blowup(Rng& rng);

}  // namespace th
