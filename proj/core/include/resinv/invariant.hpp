#ifndef RESINV_INVARIANT_HPP
#define RESINV_INVARIANT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resinv/history.hpp"
#include "resinv/pair.hpp"

namespace resinv {

struct InvariantEntry {
  ExtRational nu;
  int s = 0;
  friend bool operator==(const InvariantEntry&, const InvariantEntry&) = default;
};

// (nu1, s1; nu2, s2; ...; terminal). nu1 is a truncated Hilbert-Samuel sequence.
struct InvariantVector {
  std::vector<long> hs;
  int cutoff = 12;
  int s1 = 0;
  std::vector<InvariantEntry> entries;
  // Set to 0 (monomial case) or inf; nothing follows it.
  std::optional<ExtRational> terminal;
  // For a terminal inf: the consumed maximal-contact coordinates.
  std::vector<std::string> center;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

struct InvariantOptions {
  int hs_cutoff = 12;
  int max_prep_iters = 32;
  // Assert the polyhedral identities for mu and mu_H at every step.
  bool cross_check = true;
};

// Per divisor partition of one step.
struct SPart {
  int i_r = 0;
  std::vector<int> old_ids;        // E^r
  std::vector<int> remaining_ids;  // script-E_r
  int s() const { return static_cast<int>(old_ids.size()); }
};

struct Companion {
  Pair pair;
  Polynomial monomial;                // D
  std::map<int, ExtRational> mu_div;  // divisor id -> mu_H
};

// Multiplicities mu_H over the listed divisors (id -> variable).
std::map<int, ExtRational> divisor_orders(const Pair& h, const std::map<int, int>& divisors);

// h = D^b g for every (h, b); returns the intersection of (g, b nu), with
// (D, 1 - nu) added when nu < 1. Throws "terminal case, no companion pair"
// for nu in {0, inf}.
Companion companion_pair(const Pair& h, const std::map<int, int>& divisors, const ExtRational& nu);
Companion companion_pair(const Pair& h, const ExceptionalData& ex, const ExtRational& nu);

struct StepRecord {
  SPart part;
  Pair f;            // F_r after the maximal-contact coordinate change
  int contact_var = -1;
  bool forced = false;
  Pair h;            // coefficient pair (empty when forced)
  ExtRational mu;
  std::map<int, ExtRational> mu_div;
  ExtRational nu;
};

struct InvariantRun {
  InvariantVector vector;
  std::vector<StepRecord> steps;
  // The year's pair expressed in the coordinates after all changes made by
  // the maximal-contact choices.
  Pair transformed;
  std::vector<int> consumed;
  // The final pair: (D, 1) in the monomial case.
  Pair last;
};

InvariantRun compute_invariant_run(const Trace& trace, const InvariantOptions& opts = {}, bool fast = false);

InvariantVector compute_invariant(const Trace& trace, const InvariantOptions& opts = {});
InvariantVector compute_invariant(const PairWithHistory& h, const InvariantOptions& opts = {});
InvariantVector fast_path_invariant(const Trace& trace, const InvariantOptions& opts = {});
InvariantVector fast_path_invariant(const PairWithHistory& h, const InvariantOptions& opts = {});

// The s-partitions of the last year of the trace.
std::vector<SPart> s_partition(const Trace& trace, const InvariantOptions& opts = {});

enum class Comparison { Less, Equal, Greater, IncomparableAtCutoff };
Comparison compare_invariants(const InvariantVector& a, const InvariantVector& b);
std::string to_string(Comparison c);

}  // namespace resinv

#endif
