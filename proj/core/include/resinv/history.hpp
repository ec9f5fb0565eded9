#ifndef RESINV_HISTORY_HPP
#define RESINV_HISTORY_HPP

#include <string>
#include <vector>

#include "resinv/frame.hpp"
#include "resinv/pair.hpp"
#include "resinv/polyhedron.hpp"

namespace resinv {

struct ExceptionalEntry {
  int id = 0;
  // Frame variable whose zero set is the divisor, or -1 when the divisor
  // does not pass through the point.
  int var = -1;
  // Assigned multiplicity; 0 whenever var == -1.
  Rational assigned = 0;
  // coordinate_min of the current polyhedron on var, re-derived after every
  // frame change (0 when var is absent, in y, or the polyhedron is empty).
  Rational rederived = 0;
  int birth_year = 0;

  bool present() const { return var >= 0; }
  friend bool operator==(const ExceptionalEntry&, const ExceptionalEntry&) = default;
};

struct ExceptionalData {
  std::vector<ExceptionalEntry> entries;

  // Throws unless marked variables are distinct and absent entries carry 0.
  void validate(int nvars) const;
  std::vector<bool> marked(int nvars) const;
  const ExceptionalEntry* find_var(int var) const;
  int next_id() const;

  friend bool operator==(const ExceptionalData&, const ExceptionalData&) = default;
};

struct PairWithHistory {
  Pair pair;
  Frame frame;
  ExceptionalData exceptional;
  int year = 0;

  void validate() const;
};

// min over vertices of the sum of the center's u-coordinates. The center
// must contain every y-variable. inf on the empty polyhedron.
ExtRational delta_center(const Pair& e, const Frame& frame, const std::vector<int>& center);

// Empty string when the coordinate center V(center) is permissible, else the
// failing criterion. Throws "only coordinate centers supported" when the
// index list is not a set of frame variables.
std::string permissibility_failure(const PairWithHistory& h, const std::vector<int>& center);
bool is_permissible(const PairWithHistory& h, const std::vector<int>& center);

// Substitute v -> chart*v for the other center variables, divide every
// component by chart^b and mark the chart variable as a new divisor.
PairWithHistory blowup_chart(const PairWithHistory& h, const std::vector<int>& center, int chart);

struct ScriptStep {
  std::vector<int> center;
  int chart = -1;
};

struct Trace {
  // years[i] is the state at the point of year i; consecutive points are
  // chart origins.
  std::vector<PairWithHistory> years;
  std::vector<ScriptStep> steps;
};

// Throws PreconditionError naming the failing year and criterion.
Trace run_lsb(const PairWithHistory& h, const std::vector<ScriptStep>& script);

// delta_invariant(E, frame) minus the assigned numbers of present divisors.
ExtRational exceptional_nu(const Pair& e, const Frame& frame, const ExceptionalData& ex, int max_iters = 32);

// Recompute `rederived` for every entry from the current polyhedron.
void rederive_assigned(PairWithHistory& h);

}  // namespace resinv

#endif
