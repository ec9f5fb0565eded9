#include "resinv/invariant.hpp"

#include <algorithm>

#include "resinv/coeff_contact.hpp"
#include "resinv/cone_directrix.hpp"
#include "resinv/errors.hpp"
#include "resinv/polyhedron.hpp"

namespace resinv {

std::map<int, ExtRational> divisor_orders(const Pair& h, const std::map<int, int>& divisors) {
  std::map<int, ExtRational> out;
  for (const auto& [id, var] : divisors) {
    ExtRational best = ExtRational::infinity();
    for (const auto& c : h.components) {
      ExtRational o = ExtRational::infinity();
      for (const auto& g : c.gens) o = min(o, variable_order(g, var));
      if (!o.is_infinite()) best = min(best, ExtRational(Rational(o.value() / c.weight)));
    }
    out[id] = best;
  }
  return out;
}

Companion companion_pair(const Pair& h, const std::map<int, int>& divisors, const ExtRational& nu) {
  if (nu.is_infinite() || nu == ExtRational(0)) throw PreconditionError("terminal case, no companion pair");
  Companion out;
  out.mu_div = divisor_orders(h, divisors);
  const int n = h.nvars;
  Exponents d(n, 0);
  for (const auto& [id, var] : divisors) {
    const ExtRational& m = out.mu_div[id];
    if (m.is_infinite()) throw InternalError("divisor order undefined for a nonempty coefficient pair");
    d[var] = m.value();
  }
  out.monomial = Polynomial::monomial(d);
  out.pair.nvars = n;
  for (const auto& c : h.components) {
    Exponents power = d;
    for (auto& x : power) x *= c.weight;
    Component g{{}, c.weight * nu.value()};
    for (const auto& gen : c.gens) {
      auto q = divide_by_monomial(gen, power);
      if (!q) throw InternalError("coefficient pair not divisible by the exceptional monomial");
      g.gens.push_back(std::move(*q));
    }
    out.pair.components.push_back(std::move(g));
  }
  if (nu.value() < 1) out.pair.components.push_back({{out.monomial}, Rational(1 - nu.value())});
  return out;
}

Companion companion_pair(const Pair& h, const ExceptionalData& ex, const ExtRational& nu) {
  std::map<int, int> divisors;
  for (const auto& e : ex.entries)
    if (e.present()) divisors[e.id] = e.var;
  return companion_pair(h, divisors, nu);
}

namespace {

Pair substitute_pair(const Pair& e, const std::vector<Polynomial>& images) {
  Pair r;
  r.nvars = e.nvars;
  for (const auto& c : e.components) {
    Component d{{}, c.weight};
    for (const auto& g : c.gens) d.gens.push_back(substitute(g, images));
    r.components.push_back(std::move(d));
  }
  return r;
}

// The component is (x_v, 1) for an exceptional variable v still in the ambient space.
bool is_exceptional_component(const Component& c, const std::vector<bool>& frozen, const std::vector<bool>& active) {
  if (c.weight != 1 || c.gens.size() != 1 || c.gens.front().size() != 1) return false;
  const auto& [e, coeff] = *c.gens.front().terms().begin();
  if (coeff != 1) return false;
  int var = -1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] != 1 || var >= 0) return false;
    var = static_cast<int>(i);
  }
  return var >= 0 && frozen[var] && active[var];
}

// Does `other` agree with the running prefix (hs, s1, nu2, s2, ..., nu_r)?
bool prefix_matches(const InvariantVector& other, const InvariantVector& cur, const std::optional<ExtRational>& nu_r,
                    int r) {
  if (other.hs != cur.hs || other.cutoff != cur.cutoff) return false;
  if (r == 1) return true;
  if (other.s1 != cur.s1) return false;
  const std::size_t known = static_cast<std::size_t>(r - 2);  // complete (nu, s) entries
  if (other.entries.size() < known + 1) return false;
  for (std::size_t i = 0; i < known; ++i)
    if (!(other.entries[i] == cur.entries[i])) return false;
  return other.entries[known].nu == *nu_r;
}

InvariantRun run_year(const Trace& trace, std::size_t k, const std::vector<InvariantVector>& earlier,
                      const InvariantOptions& opts, bool fast) {
  const PairWithHistory& w = trace.years[k];
  const Pair& e = w.pair;
  const int n = e.nvars;
  if (!is_singular_at_origin(e) || e.components.empty()) throw PreconditionError("point not in Sing");

  InvariantRun run;
  std::vector<Polynomial> all;
  for (const auto& c : e.components) all.insert(all.end(), c.gens.begin(), c.gens.end());
  run.vector.hs = hilbert_samuel_truncated(all, n, opts.hs_cutoff);
  run.vector.cutoff = opts.hs_cutoff;

  std::map<int, int> var_of, birth;
  std::vector<int> remaining;
  for (const auto& x : w.exceptional.entries)
    if (x.present()) {
      var_of[x.id] = x.var;
      birth[x.id] = x.birth_year;
      remaining.push_back(x.id);
    }
  std::vector<bool> frozen = w.exceptional.marked(n);
  std::vector<bool> active(n, true);
  Pair g = e;
  run.transformed = e;
  std::vector<int> deferred;
  std::optional<ExtRational> pending_nu;

  for (int r = 1; r <= n + 1; ++r) {
    StepRecord rec;
    // i_r is reported as an absolute year so it compares with birth years.
    rec.part.i_r = w.year;
    for (std::size_t m = 0; m < k; ++m)
      if (prefix_matches(earlier[m], run.vector, pending_nu, r)) {
        rec.part.i_r = trace.years[m].year;
        break;
      }
    for (int id : remaining)
      (birth[id] <= rec.part.i_r ? rec.part.old_ids : rec.part.remaining_ids).push_back(id);
    if (r == 1)
      run.vector.s1 = rec.part.s();
    else
      run.vector.entries.push_back({*pending_nu, rec.part.s()});
    remaining = rec.part.remaining_ids;

    Pair f = g;
    for (int id : rec.part.old_ids) f.components.push_back({{Polynomial::variable(n, var_of[id])}, Rational(1)});
    std::vector<int> e_comps;
    for (int ci = 0; ci < static_cast<int>(f.components.size()); ++ci)
      if (is_exceptional_component(f.components[ci], frozen, active)) e_comps.push_back(ci);

    ContactOptions co;
    co.frozen = frozen;
    co.active = active;
    if (fast) co.preferred_components = e_comps;
    MaximalContact mc = find_maximal_contact(f, co);
    const int p = mc.var;
    run.transformed = substitute_pair(run.transformed, mc.change);
    run.consumed.push_back(p);
    active[p] = false;
    rec.f = mc.pair;
    rec.contact_var = p;

    const bool chose_e = std::find(e_comps.begin(), e_comps.end(), mc.component) != e_comps.end();
    std::map<int, int> divisors;
    for (int id : remaining) divisors[id] = var_of[id];

    if (fast && chose_e && e_comps.size() >= 2) {
      // Another (x_H, 1) survives: nu = mu = 1 and D = 1 without expanding.
      rec.forced = true;
      rec.mu = ExtRational(1);
      for (const auto& [id, var] : divisors) rec.mu_div[id] = ExtRational(0);
      rec.nu = ExtRational(1);
      Pair next;
      next.nvars = n;
      for (int ci = 0; ci < static_cast<int>(mc.pair.components.size()); ++ci)
        if (ci != mc.component) next.components.push_back(mc.pair.components[ci]);
      deferred.push_back(p);
      g = std::move(next);
      pending_nu = rec.nu;
      run.steps.push_back(std::move(rec));
      continue;
    }

    std::vector<int> z = deferred;
    z.push_back(p);
    deferred.clear();
    Pair h = coefficient_pair(mc.pair, z);
    ExtRational mu = ExtRational::infinity();
    for (const auto& c : h.components) {
      ExtRational o = ideal_order(c.gens);
      if (!o.is_infinite()) mu = min(mu, ExtRational(Rational(o.value() / c.weight)));
    }
    std::map<int, ExtRational> mu_div = divisor_orders(h, divisors);
    ExtRational nu = mu;
    if (!mu.is_infinite())
      for (const auto& [id, m] : mu_div) nu = ExtRational(Rational(nu.value() - m.value()));

    if (opts.cross_check) {
      Frame frame;
      for (int i = 0; i < n; ++i) frame.names.push_back("v" + std::to_string(i));
      for (int i = 0; i < n; ++i) (std::find(z.begin(), z.end(), i) == z.end() ? frame.u : frame.y).push_back(i);
      OrthantPolyhedron poly = polyhedron_of_pair(mc.pair, frame);
      if (delta(poly) != mu) throw InternalError("mu differs from delta of the polyhedron");
      if (!poly.empty())
        for (const auto& [id, m] : mu_div)
          if (ExtRational(coordinate_min(poly, frame.u_position(divisors[id]))) != m)
            throw InternalError("mu_H differs from the coordinate minimum");
    }

    rec.h = h;
    rec.mu = mu;
    rec.mu_div = mu_div;
    rec.nu = nu;
    run.steps.push_back(rec);

    if (nu.is_infinite()) {
      run.vector.terminal = nu;
      for (int v : run.consumed) run.vector.center.push_back(w.frame.names[v]);
      std::sort(run.vector.center.begin(), run.vector.center.end());
      run.last = h;
      return run;
    }
    if (nu == ExtRational(0)) {
      run.vector.terminal = nu;
      Exponents d(n, 0);
      for (const auto& [id, m] : mu_div) d[divisors[id]] = m.value();
      run.last = make_pair(Polynomial::monomial(d), 1);
      return run;
    }
    g = companion_pair(h, divisors, nu).pair;
    pending_nu = nu;
  }
  throw InternalError("invariant pipeline did not terminate");
}

}  // namespace

InvariantRun compute_invariant_run(const Trace& trace, const InvariantOptions& opts, bool fast) {
  if (trace.years.empty()) throw PreconditionError("empty trace");
  std::vector<InvariantVector> earlier;
  for (std::size_t k = 0; k + 1 < trace.years.size(); ++k)
    earlier.push_back(run_year(trace, k, earlier, opts, fast).vector);
  return run_year(trace, trace.years.size() - 1, earlier, opts, fast);
}

InvariantVector compute_invariant(const Trace& trace, const InvariantOptions& opts) {
  return compute_invariant_run(trace, opts, false).vector;
}

InvariantVector compute_invariant(const PairWithHistory& h, const InvariantOptions& opts) {
  Trace t;
  t.years.push_back(h);
  return compute_invariant(t, opts);
}

InvariantVector fast_path_invariant(const Trace& trace, const InvariantOptions& opts) {
  return compute_invariant_run(trace, opts, true).vector;
}

InvariantVector fast_path_invariant(const PairWithHistory& h, const InvariantOptions& opts) {
  Trace t;
  t.years.push_back(h);
  return fast_path_invariant(t, opts);
}

std::vector<SPart> s_partition(const Trace& trace, const InvariantOptions& opts) {
  std::vector<SPart> out;
  for (const auto& s : compute_invariant_run(trace, opts, false).steps) out.push_back(s.part);
  return out;
}

namespace {

template <class T>
Comparison cmp3(const T& a, const T& b) {
  if (a < b) return Comparison::Less;
  if (b < a) return Comparison::Greater;
  return Comparison::Equal;
}

}  // namespace

Comparison compare_invariants(const InvariantVector& a, const InvariantVector& b) {
  const std::size_t common = std::min(a.hs.size(), b.hs.size());
  for (std::size_t i = 0; i < common; ++i)
    if (a.hs[i] != b.hs[i]) return cmp3(a.hs[i], b.hs[i]);
  if (a.hs.size() != b.hs.size()) return Comparison::IncomparableAtCutoff;
  if (a.s1 != b.s1) return cmp3(a.s1, b.s1);
  // Remaining tokens: nu, s, nu, s, ..., terminal nu.
  const std::size_t len = std::max(a.entries.size(), b.entries.size()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    auto nu_at = [i](const InvariantVector& v) -> std::optional<ExtRational> {
      if (i < v.entries.size()) return v.entries[i].nu;
      if (i == v.entries.size()) return v.terminal;
      return std::nullopt;
    };
    auto x = nu_at(a), y = nu_at(b);
    if (!x || !y) {
      if (x.has_value() != y.has_value()) return x ? Comparison::Greater : Comparison::Less;
      return Comparison::Equal;
    }
    if (*x != *y) return cmp3(*x, *y);
    bool ax = i < a.entries.size(), bx = i < b.entries.size();
    if (ax && bx) {
      if (a.entries[i].s != b.entries[i].s) return cmp3(a.entries[i].s, b.entries[i].s);
    } else if (ax != bx) {
      return ax ? Comparison::Greater : Comparison::Less;
    } else {
      return Comparison::Equal;
    }
  }
  return Comparison::Equal;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    case Comparison::IncomparableAtCutoff: return "incomparable-at-cutoff";
  }
  return "?";
}

}  // namespace resinv
