#include "resinv/pair.hpp"

#include <functional>

#include "resinv/errors.hpp"

namespace resinv {

void Pair::validate() const {
  for (const auto& c : components) {
    if (c.weight <= 0) throw PreconditionError("component weight must be positive");
    bool nonzero = false;
    for (const auto& g : c.gens) {
      if (g.nvars() != nvars) throw PreconditionError("generator lives in a different ring");
      nonzero = nonzero || !g.is_zero();
    }
    if (!nonzero) throw PreconditionError("component without a nonzero generator");
  }
}

Pair make_pair(const Polynomial& f, const Rational& weight) {
  Pair p;
  p.nvars = f.nvars();
  p.components.push_back({{f}, weight});
  return p;
}

Pair intersect(const Pair& a, const Pair& b) {
  if (a.nvars != b.nvars) throw InternalError("intersecting pairs from different rings");
  Pair r = a;
  r.components.insert(r.components.end(), b.components.begin(), b.components.end());
  return r;
}

ExtRational ideal_order(const std::vector<Polynomial>& gens) {
  ExtRational best = ExtRational::infinity();
  for (const auto& g : gens) best = min(best, ord_at_origin(g));
  return best;
}

ExtRational pair_order(const Pair& e) {
  ExtRational best = ExtRational::infinity();
  for (const auto& c : e.components) {
    ExtRational o = ideal_order(c.gens);
    ExtRational v;
    if (o.is_infinite())
      v = o;
    else if (o.value() >= c.weight)
      v = ExtRational(Rational(o.value() / c.weight));
    else
      v = ExtRational(0);
    best = min(best, v);
  }
  return best;
}

bool is_singular_at_origin(const Pair& e) {
  for (const auto& c : e.components)
    if (ideal_order(c.gens) < ExtRational(c.weight)) return false;
  return true;
}

std::vector<Polynomial> generator_power(const std::vector<Polynomial>& gens, long a) {
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  const int n = gens.front().nvars();
  std::function<void(std::size_t, long, const Polynomial&)> rec = [&](std::size_t start, long left,
                                                                      const Polynomial& acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) rec(i, left - 1, acc * gens[i]);
  };
  rec(0, a, Polynomial::constant(n, 1));
  return out;
}

Pair merge_to_single(const Pair& e, long m) {
  if (m <= 0) throw PreconditionError("merge weight must be positive");
  Component merged{{}, Rational(m)};
  for (const auto& c : e.components) {
    Rational q = Rational(m) / c.weight;
    if (!is_integer(c.weight) || !is_integer(q)) throw PreconditionError("weight does not divide m");
    for (auto& g : generator_power(c.gens, q.get_num().get_si())) merged.gens.push_back(std::move(g));
  }
  Pair r;
  r.nvars = e.nvars;
  r.components.push_back(std::move(merged));
  return r;
}

Pair power_rewrite(const Pair& e, long a) {
  if (e.components.size() != 1) throw PreconditionError("power rewrite needs a single component");
  if (a <= 0) throw PreconditionError("power must be positive");
  const auto& c = e.components.front();
  Pair r;
  r.nvars = e.nvars;
  r.components.push_back({generator_power(c.gens, a), c.weight * a});
  return r;
}

Pair apply_log_diff(const Pair& e, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != e.nvars) throw InternalError("derivative order length mismatch");
  long m = 0;
  Exponents mono(e.nvars, 0);
  for (int i = 0; i < e.nvars; ++i) {
    m += order[i];
    mono[i] = order[i];
  }
  if (m == 0) return e;
  Pair r = e;
  for (const auto& c : e.components) {
    if (c.weight <= m) continue;
    Component d{{}, c.weight - m};
    for (const auto& g : c.gens) {
      Polynomial h = hasse_derivative(g, order) * Polynomial::monomial(mono);
      if (!h.is_zero()) d.gens.push_back(std::move(h));
    }
    if (!d.gens.empty()) r.components.push_back(std::move(d));
  }
  return r;
}

}  // namespace resinv
