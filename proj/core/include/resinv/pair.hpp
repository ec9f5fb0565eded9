#ifndef RESINV_PAIR_HPP
#define RESINV_PAIR_HPP

#include <vector>

#include "resinv/polynomial.hpp"

namespace resinv {

// One factor (J, b) of an intersection: J given by generators, b > 0.
struct Component {
  std::vector<Polynomial> gens;
  Rational weight;

  friend bool operator==(const Component&, const Component&) = default;
};

// Finite intersection of components, all living in one ring.
struct Pair {
  int nvars = 0;
  std::vector<Component> components;

  // Throws PreconditionError when a component has no nonzero generator, a
  // non-positive weight, or a generator from another ring.
  void validate() const;

  friend bool operator==(const Pair&, const Pair&) = default;
};

Pair make_pair(const Polynomial& f, const Rational& weight);
Pair intersect(const Pair& a, const Pair& b);

// ord of the ideal: min over generators.
ExtRational ideal_order(const std::vector<Polynomial>& gens);

// ord(J)/b if ord(J) >= b, else 0; minimum over components. inf for a pair
// without components.
ExtRational pair_order(const Pair& e);

bool is_singular_at_origin(const Pair& e);

// (J1^(m/b1) + J2^(m/b2) + ..., m). Every weight must be an integer dividing m.
Pair merge_to_single(const Pair& e, long m);

// (J^a, a b) for a single-component pair.
Pair power_rewrite(const Pair& e, long a);

// All a-fold products of the generators (multisets, deterministic order).
std::vector<Polynomial> generator_power(const std::vector<Polynomial>& gens, long a);

// E intersected with (x^M D_M J, b - |M|) for every component with b > |M|.
Pair apply_log_diff(const Pair& e, const std::vector<int>& order);

}  // namespace resinv

#endif
