#include "resinv/coeff_contact.hpp"

#include <algorithm>
#include <map>

#include "resinv/cone_directrix.hpp"
#include "resinv/errors.hpp"
#include "resinv/linalg.hpp"

namespace resinv {

Pair coefficient_pair(const Pair& e, const std::vector<int>& z) {
  Pair out;
  out.nvars = e.nvars;
  for (const auto& c : e.components) {
    // |B| may be rational when z is an exceptional variable carrying a
    // fractional power; the grouping is the same as for integral B.
    std::map<Rational, std::map<Exponents, Polynomial>> by_degree;
    for (const auto& g : c.gens)
      for (const auto& [ex, coeff] : g.terms()) {
        Exponents key, rest = ex;
        Rational deg = 0;
        for (int v : z) {
          key.push_back(ex[v]);
          deg += ex[v];
          rest[v] = 0;
        }
        if (deg >= c.weight) continue;
        auto& bucket = by_degree[deg];
        auto it = bucket.try_emplace(key, Polynomial(e.nvars)).first;
        it->second.add_term(rest, coeff);
      }
    for (auto& [deg, bucket] : by_degree) {
      Component comp{{}, c.weight - deg};
      for (auto& [key, coeff] : bucket)
        if (!coeff.is_zero()) comp.gens.push_back(std::move(coeff));
      if (!comp.gens.empty()) out.components.push_back(std::move(comp));
    }
  }
  return out;
}

namespace {

std::vector<Polynomial> identity_images(int n) {
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) out.push_back(Polynomial::variable(n, i));
  return out;
}

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

std::vector<Polynomial> compose(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner) {
  std::vector<Polynomial> out;
  for (const auto& p : outer) out.push_back(substitute(p, inner));
  return out;
}

// Directions of a given height: pivot entry 1, other movable entries bounded
// by the height with at least one attaining it. Height 0 means unit vectors.
std::vector<std::pair<int, std::vector<Rational>>> directions_of_height(int n, int h, const ContactOptions& o) {
  std::vector<std::pair<int, std::vector<Rational>>> out;
  for (int p = 0; p < n; ++p) {
    if (!o.active[p]) continue;
    if (h == 0) {
      std::vector<Rational> v(n, 0);
      v[p] = 1;
      out.emplace_back(p, v);
      continue;
    }
    if (o.frozen[p]) continue;
    std::vector<int> movable;
    for (int i = 0; i < n; ++i)
      if (i != p && o.active[i] && !o.frozen[i]) movable.push_back(i);
    if (movable.empty()) continue;
    // Odometer over values ordered 0, 1, -1, 2, -2, ...
    std::vector<long> values{0};
    for (long k = 1; k <= h; ++k) {
      values.push_back(k);
      values.push_back(-k);
    }
    std::vector<std::size_t> digit(movable.size(), 0);
    bool more = true;
    while (more) {
      long top = 0;
      for (auto d : digit) top = std::max(top, std::labs(values[d]));
      if (top == h) {
        std::vector<Rational> v(n, 0);
        v[p] = 1;
        for (std::size_t k = 0; k < movable.size(); ++k) v[movable[k]] = values[digit[k]];
        out.emplace_back(p, v);
      }
      more = false;
      for (std::size_t k = movable.size(); k-- > 0;) {
        if (++digit[k] < values.size()) {
          more = true;
          break;
        }
        digit[k] = 0;
      }
    }
  }
  return out;
}

Integer exponent_denominators(const Polynomial& f, const Rational& weight) {
  Integer acc = weight.get_den();
  for (const auto& [e, c] : f.terms())
    for (const auto& x : e) acc = lcm_of_denominators(x, acc);
  return acc;
}

std::optional<MaximalContact> try_witness(const Pair& e, int ci, int gi, int p, const std::vector<Rational>& v,
                                          const ContactOptions& o) {
  const int n = e.nvars;
  std::vector<Polynomial> change1 = identity_images(n);
  for (int i = 0; i < n; ++i)
    if (i != p && v[i] != 0) change1[i] = change1[i] + Polynomial::variable(n, p) * v[i];
  Pair e1 = substitute_pair(e, change1);
  const Component& comp = e1.components[ci];
  const Polynomial& f = comp.gens[gi];
  Integer a = exponent_denominators(f, comp.weight);
  Polynomial big = f.pow(static_cast<unsigned>(a.get_ui()));
  Rational bb = comp.weight * Rational(a);
  if (!is_integer(bb) || big.fractional_in(p)) return std::nullopt;
  long b = bb.get_num().get_si();
  std::vector<int> order(n, 0);
  order[p] = static_cast<int>(b - 1);
  Polynomial z0 = hasse_derivative(big, order);
  Exponents xp(n, 0);
  xp[p] = 1;
  Rational c = z0.coefficient(xp);
  if (c == 0) return std::nullopt;
  Polynomial rest = z0 - Polynomial::monomial(xp, c);
  if (rest.support()[p]) return std::nullopt;
  if (o.frozen[p] && !rest.is_zero()) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (rest.support()[i] && !o.active[i]) return std::nullopt;
  std::vector<Polynomial> change2 = identity_images(n);
  change2[p] = (Polynomial::variable(n, p) - rest) * (1 / c);
  MaximalContact mc;
  mc.pair = substitute_pair(e1, change2);
  mc.var = p;
  mc.z = directional_hasse(e.components[ci].gens[gi].pow(static_cast<unsigned>(a.get_ui())), v,
                           static_cast<int>(b - 1));
  mc.change = compose(change1, change2);
  mc.direction = v;
  mc.component = ci;
  mc.generator = gi;
  return mc;
}

}  // namespace

MaximalContact find_maximal_contact(const Pair& e, const ContactOptions& opts) {
  const int n = e.nvars;
  ContactOptions o = opts;
  if (o.frozen.empty()) o.frozen.assign(n, false);
  if (o.active.empty()) o.active.assign(n, true);
  std::vector<int> order;
  for (int ci : o.preferred_components)
    if (ci >= 0 && ci < static_cast<int>(e.components.size())) order.push_back(ci);
  for (int ci = 0; ci < static_cast<int>(e.components.size()); ++ci)
    if (std::find(order.begin(), order.end(), ci) == order.end()) order.push_back(ci);
  bool witnessed = false;
  for (int ci : order) {
    const auto& comp = e.components[ci];
    for (int gi = 0; gi < static_cast<int>(comp.gens.size()); ++gi) {
      if (ord_at_origin(comp.gens[gi]) != ExtRational(comp.weight)) continue;
      witnessed = true;
      for (int h = 0; h <= o.max_height; ++h)
        for (const auto& [p, v] : directions_of_height(n, h, o))
          if (auto mc = try_witness(e, ci, gi, p, v, o)) return *mc;
    }
  }
  // With a witness present the hypersurface exists but is only a formal graph
  // over the other coordinates; solving it would need power series.
  if (witnessed) throw PreconditionError("maximal contact hypersurface is not a polynomial graph");
  throw PreconditionError("no maximal contact witness");
}

MaximalContact find_maximal_contact(const Pair& e) { return find_maximal_contact(e, ContactOptions{}); }

namespace {

void check_directrix(const Pair& e, const Frame& frame) {
  DirectrixBasis dir = directrix(initial_ideal(e));
  if (!spans_directrix(dir, frame.y)) throw PreconditionError("y does not span directrix");
}

// Translation y -> y - lambda u^v removing vertex v, if one exists.
std::optional<std::pair<Pair, std::vector<Preparation::Step>>> solve_vertex(const Pair& e, const Frame& frame,
                                                                            const Point& v,
                                                                            const OrthantPolyhedron& before) {
  const int n = e.nvars;
  for (const auto& x : v)
    if (!is_integer(x)) return std::nullopt;
  const int r = static_cast<int>(frame.y.size());
  if (r == 0) return std::nullopt;
  Exponents shift(n, 0);
  for (std::size_t i = 0; i < frame.u.size(); ++i) shift[frame.u[i]] = v[i];

  struct Local {
    Polynomial full;  // vertex polynomial in y with u set to 1
    Polynomial top;   // pure-y part of degree b
    long b;
  };
  std::vector<Local> locals;
  for (const auto& c : e.components) {
    const bool integral = is_integer(c.weight);
    for (const auto& g : c.gens) {
      Local loc{Polynomial(n), Polynomial(n), integral ? c.weight.get_num().get_si() : 0};
      for (const auto& [ex, coeff] : g.terms()) {
        Rational by = 0;
        for (int j : frame.y) by += ex[j];
        Exponents yonly(n, 0);
        for (int j : frame.y) yonly[j] = ex[j];
        bool u_free = true;
        for (int i : frame.u) u_free = u_free && ex[i] == 0;
        if (by < c.weight) {
          bool hits = true;
          for (std::size_t i = 0; i < frame.u.size() && hits; ++i)
            hits = ex[frame.u[i]] == v[i] * (c.weight - by);
          if (!hits) continue;
          if (!integral) return std::nullopt;
          loc.full.add_term(yonly, coeff);
        } else if (integral && by == c.weight && u_free) {
          loc.full.add_term(yonly, coeff);
          loc.top.add_term(yonly, coeff);
        }
      }
      if (integral) locals.push_back(std::move(loc));
    }
  }
  for (const auto& loc : locals)
    for (int j : frame.y)
      if (loc.full.fractional_in(j) || loc.top.fractional_in(j)) return std::nullopt;

  // Degree b-1 parts give linear equations for lambda.
  std::map<Exponents, int, GrlexLess> rows_of;
  Matrix sys;
  for (const auto& loc : locals) {
    if (loc.b < 1) continue;
    Polynomial lower = homogeneous_part(loc.full, loc.b - 1);
    std::vector<Polynomial> partials;
    for (int j : frame.y) {
      std::vector<int> ord(n, 0);
      ord[j] = 1;
      partials.push_back(hasse_derivative(loc.top, ord));
    }
    std::map<Exponents, Vector, GrlexLess> eqs;
    auto row_for = [&](const Exponents& m) -> Vector& {
      return eqs.try_emplace(m, Vector(r + 1, 0)).first->second;
    };
    for (int k = 0; k < r; ++k)
      for (const auto& [m, c] : partials[k].terms()) row_for(m)[k] += c;
    for (const auto& [m, c] : lower.terms()) row_for(m)[r] += c;
    for (auto& [m, row] : eqs) sys.push_back(std::move(row));
  }
  if (sys.empty()) return std::nullopt;
  std::vector<int> piv = rref(sys, r + 1);
  std::vector<Rational> lambda(r, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == r) return std::nullopt;  // inconsistent
    lambda[piv[i]] = sys[i][r];
  }
  if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q == 0; })) return std::nullopt;

  std::vector<Polynomial> shifted = identity_images(n);
  for (int k = 0; k < r; ++k) shifted[frame.y[k]] = shifted[frame.y[k]] + Polynomial::constant(n, lambda[k]);
  for (const auto& loc : locals)
    if (substitute(loc.top, shifted) != loc.full) return std::nullopt;

  std::vector<Polynomial> translation = identity_images(n);
  std::vector<Preparation::Step> steps;
  for (int k = 0; k < r; ++k) {
    if (lambda[k] == 0) continue;
    translation[frame.y[k]] = translation[frame.y[k]] - Polynomial::monomial(shift, lambda[k]);
    steps.push_back({frame.y[k], shift, -lambda[k]});
  }
  Pair after = substitute_pair(e, translation);
  OrthantPolyhedron p2 = polyhedron_of_pair(after, frame);
  if (std::find(p2.vertices.begin(), p2.vertices.end(), v) != p2.vertices.end()) return std::nullopt;
  if (!is_subset(p2, before)) return std::nullopt;
  return std::make_pair(std::move(after), std::move(steps));
}

}  // namespace

Preparation prepare_vertices(const Pair& e, const Frame& frame, int max_iters) {
  frame.validate();
  check_directrix(e, frame);
  Preparation prep;
  prep.pair = e;
  prep.frame = frame;
  prep.polyhedron = polyhedron_of_pair(e, frame);
  for (;;) {
    std::optional<std::pair<Pair, std::vector<Preparation::Step>>> found;
    for (const auto& v : prep.polyhedron.vertices)
      if ((found = solve_vertex(prep.pair, frame, v, prep.polyhedron))) break;
    if (!found) {
      prep.prepared = true;
      break;
    }
    if (prep.iterations == max_iters) {
      prep.prepared = false;
      break;
    }
    prep.pair = std::move(found->first);
    prep.steps.insert(prep.steps.end(), found->second.begin(), found->second.end());
    OrthantPolyhedron next = polyhedron_of_pair(prep.pair, frame);
    if (!is_subset(next, prep.polyhedron)) throw InternalError("preparation enlarged the polyhedron");
    prep.polyhedron = std::move(next);
    ++prep.iterations;
  }
  return prep;
}

ExtRational delta_invariant(const Pair& e, const Frame& frame, int max_iters) {
  frame.validate();
  check_directrix(e, frame);
  ExtRational before = delta(polyhedron_of_pair(e, frame));
  Preparation prep = prepare_vertices(e, frame, max_iters);
  ExtRational after = delta(prep.polyhedron);
  // Solving vertices only shrinks the polyhedron.
  if (after < before) throw InternalError("vertex preparation lowered delta");
  return after;
}

DeltaDiagnostic diagnose_delta(const Pair& e, const Frame& frame) {
  DeltaDiagnostic d;
  d.spans_directrix = spans_directrix(directrix(initial_ideal(e)), frame.y);
  d.raw_delta = delta(polyhedron_of_pair(e, frame));
  d.forced_one = !d.spans_directrix && d.raw_delta == ExtRational(1);
  return d;
}

}  // namespace resinv
