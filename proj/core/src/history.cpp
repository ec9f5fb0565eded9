#include "resinv/history.hpp"

#include <algorithm>

#include "resinv/coeff_contact.hpp"
#include "resinv/errors.hpp"

namespace resinv {

void ExceptionalData::validate(int nvars) const {
  std::vector<bool> used(nvars, false);
  for (const auto& e : entries) {
    if (e.var >= nvars) throw PreconditionError("exceptional marking out of range");
    if (e.assigned < 0) throw PreconditionError("assigned number must be nonnegative");
    if (!e.present()) {
      if (e.assigned != 0) throw PreconditionError("absent divisor must carry assigned number 0");
      continue;
    }
    if (used[e.var]) throw PreconditionError("two divisors marked on one variable");
    used[e.var] = true;
  }
}

std::vector<bool> ExceptionalData::marked(int nvars) const {
  std::vector<bool> m(nvars, false);
  for (const auto& e : entries)
    if (e.present()) m[e.var] = true;
  return m;
}

const ExceptionalEntry* ExceptionalData::find_var(int var) const {
  for (const auto& e : entries)
    if (e.var == var) return &e;
  return nullptr;
}

int ExceptionalData::next_id() const {
  int id = 1;
  for (const auto& e : entries) id = std::max(id, e.id + 1);
  return id;
}

void PairWithHistory::validate() const {
  frame.validate();
  if (frame.nvars() != pair.nvars) throw PreconditionError("frame does not match the pair's ring");
  pair.validate();
  exceptional.validate(pair.nvars);
  std::vector<bool> marked = exceptional.marked(pair.nvars);
  for (const auto& c : pair.components)
    for (const auto& g : c.gens)
      for (int i = 0; i < pair.nvars; ++i)
        if (!marked[i] && g.fractional_in(i))
          throw PreconditionError("fractional exponent on non-exceptional variable '" + frame.names[i] + "'");
}

namespace {

void check_center(const Frame& frame, const std::vector<int>& center) {
  if (center.empty()) throw PreconditionError("only coordinate centers supported");
  std::vector<int> sorted = center;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("only coordinate centers supported");
  for (int v : center)
    if (v < 0 || v >= frame.nvars()) throw PreconditionError("only coordinate centers supported");
}

}  // namespace

ExtRational delta_center(const Pair& e, const Frame& frame, const std::vector<int>& center) {
  check_center(frame, center);
  for (int j : frame.y)
    if (std::find(center.begin(), center.end(), j) == center.end())
      throw PreconditionError("center must contain every y-variable");
  std::vector<Rational> weights(frame.u.size(), 0);
  for (std::size_t i = 0; i < frame.u.size(); ++i)
    if (std::find(center.begin(), center.end(), frame.u[i]) != center.end()) weights[i] = 1;
  return linear_min(polyhedron_of_pair(e, frame), weights);
}

std::string permissibility_failure(const PairWithHistory& h, const std::vector<int>& center) {
  check_center(h.frame, center);
  for (std::size_t ci = 0; ci < h.pair.components.size(); ++ci) {
    const auto& c = h.pair.components[ci];
    for (const auto& g : c.gens)
      for (const auto& [e, coeff] : g.terms()) {
        Rational along = 0;
        for (int v : center) along += e[v];
        if (along < c.weight)
          return "component " + std::to_string(ci + 1) + " has order " + to_string(along) +
                 " < " + to_string(c.weight) + " along the center";
      }
  }
  // Coordinate hyperplanes and a coordinate center always cross normally once
  // the markings are distinct frame variables.
  h.exceptional.validate(h.pair.nvars);
  return {};
}

bool is_permissible(const PairWithHistory& h, const std::vector<int>& center) {
  return permissibility_failure(h, center).empty();
}

void rederive_assigned(PairWithHistory& h) {
  OrthantPolyhedron p = polyhedron_of_pair(h.pair, h.frame);
  for (auto& e : h.exceptional.entries) {
    int pos = e.present() ? h.frame.u_position(e.var) : -1;
    e.rederived = (pos < 0 || p.empty()) ? Rational(0) : coordinate_min(p, pos);
  }
}

PairWithHistory blowup_chart(const PairWithHistory& h, const std::vector<int>& center, int chart) {
  std::string why = permissibility_failure(h, center);
  if (!why.empty()) throw PreconditionError("center not permissible: " + why);
  if (std::find(center.begin(), center.end(), chart) == center.end())
    throw PreconditionError("chart variable must lie in the center");
  const int n = h.pair.nvars;
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(n, i);
    if (i != chart && std::find(center.begin(), center.end(), i) != center.end())
      x = x * Polynomial::variable(n, chart);
    images.push_back(std::move(x));
  }
  PairWithHistory out;
  out.year = h.year + 1;
  out.pair.nvars = n;
  for (const auto& c : h.pair.components) {
    Component d{{}, c.weight};
    Exponents ex(n, 0);
    ex[chart] = c.weight;
    for (const auto& g : c.gens) {
      auto q = divide_by_monomial(substitute(g, images), ex);
      if (!q) throw InternalError("inexact exceptional division");
      d.gens.push_back(std::move(*q));
    }
    out.pair.components.push_back(std::move(d));
  }
  out.frame = move_to_u(h.frame, chart);
  out.exceptional = h.exceptional;
  for (auto& e : out.exceptional.entries)
    if (e.var == chart) {
      e.var = -1;
      e.assigned = 0;
    }
  ExceptionalEntry fresh;
  fresh.id = h.exceptional.next_id();
  fresh.var = chart;
  fresh.birth_year = out.year;
  out.exceptional.entries.push_back(fresh);
  rederive_assigned(out);
  out.exceptional.entries.back().assigned = out.exceptional.entries.back().rederived;
  return out;
}

Trace run_lsb(const PairWithHistory& h, const std::vector<ScriptStep>& script) {
  h.validate();
  Trace t;
  t.years.push_back(h);
  rederive_assigned(t.years.back());
  for (std::size_t i = 0; i < script.size(); ++i) {
    const PairWithHistory& cur = t.years.back();
    std::string why = permissibility_failure(cur, script[i].center);
    if (!why.empty())
      throw PreconditionError("year " + std::to_string(cur.year) + ": center not permissible: " + why);
    t.years.push_back(blowup_chart(cur, script[i].center, script[i].chart));
    t.steps.push_back(script[i]);
  }
  return t;
}

ExtRational exceptional_nu(const Pair& e, const Frame& frame, const ExceptionalData& ex, int max_iters) {
  ExtRational d = delta_invariant(e, frame, max_iters);
  if (d.is_infinite()) return d;
  Rational r = d.value();
  for (const auto& entry : ex.entries)
    if (entry.present()) r -= entry.assigned;
  return ExtRational(r);
}

}  // namespace resinv
