#include "resinv/polyhedron.hpp"

#include <algorithm>

#include "resinv/errors.hpp"
#include "resinv/linalg.hpp"

namespace resinv {

namespace {

// Phase one of the simplex method with Bland's rule on
//   sum_j l_j q_j + s = p,  sum_j l_j + a = 1,  l, s, a >= 0
// minimising the single artificial a. Slacks start in the basis since p >= 0.
bool lp_feasible(const std::vector<Point>& gens, const Point& p) {
  const int e = static_cast<int>(p.size());
  const int m = static_cast<int>(gens.size());
  const int cols = m + e + 1;  // lambdas, slacks, artificial
  const int rhs = cols;
  std::vector<Vector> t(e + 2, Vector(cols + 1, 0));
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = gens[j][i];
    t[i][m + i] = 1;
    t[i][rhs] = p[i];
  }
  for (int j = 0; j < m; ++j) t[e][j] = 1;
  t[e][m + e] = 1;
  t[e][rhs] = 1;
  // Objective row holds reduced costs; minimising a with a basic in row e.
  Vector& z = t[e + 1];
  for (int j = 0; j < cols; ++j) z[j] = (j == m + e) ? Rational(0) : Rational(-t[e][j]);
  z[rhs] = Rational(-t[e][rhs]);
  std::vector<int> basis(e + 1);
  for (int i = 0; i < e; ++i) basis[i] = m + i;
  basis[e] = m + e;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i <= e; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw InternalError("unbounded phase-one problem");
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i < e + 2; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // z[rhs] is minus the optimal artificial value.
  return z[rhs] == 0;
}

bool dominates(const Point& q, const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (q[i] > p[i]) return false;
  return true;
}

}  // namespace

bool in_hull_plus_orthant(const std::vector<Point>& gens, const Point& p) {
  if (gens.empty()) return false;
  for (const auto& q : gens)
    if (dominates(q, p)) return true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational lo = gens.front()[i];
    for (const auto& q : gens) lo = std::min(lo, q[i]);
    if (p[i] < lo) return false;
  }
  return lp_feasible(gens, p);
}

std::vector<Point> minimize_vertices(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<bool> removed(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i && !removed[j]) others.push_back(points[j]);
    if (in_hull_plus_orthant(others, points[i])) removed[i] = true;
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!removed[i]) out.push_back(points[i]);
  return out;
}

OrthantPolyhedron make_polyhedron(int dim, std::vector<Point> points) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw InternalError("point dimension mismatch");
    for (const auto& c : p)
      if (c < 0) throw PreconditionError("polyhedron point outside the orthant");
  }
  return {dim, minimize_vertices(std::move(points))};
}

OrthantPolyhedron polyhedron_of_pair(const Pair& e, const Frame& frame) {
  frame.validate();
  if (frame.nvars() != e.nvars) throw PreconditionError("frame does not cover the pair's variables");
  std::vector<Point> pts;
  for (const auto& c : e.components)
    for (const auto& g : c.gens)
      for (const auto& [ex, coeff] : g.terms()) {
        Rational by = 0;
        for (int j : frame.y) by += ex[j];
        if (by >= c.weight) continue;
        Rational denom = c.weight - by;
        Point p;
        p.reserve(frame.u.size());
        for (int i : frame.u) p.push_back(ex[i] / denom);
        pts.push_back(std::move(p));
      }
  return make_polyhedron(static_cast<int>(frame.u.size()), std::move(pts));
}

OrthantPolyhedron newton_polyhedron(const Pair& e, const Frame& frame) {
  frame.validate();
  if (frame.nvars() != e.nvars) throw PreconditionError("frame does not cover the pair's variables");
  std::vector<Point> pts;
  for (const auto& c : e.components)
    for (const auto& g : c.gens)
      for (const auto& [ex, coeff] : g.terms()) {
        Point p;
        for (int i : frame.u) p.push_back(ex[i]);
        for (int j : frame.y) p.push_back(ex[j]);
        pts.push_back(std::move(p));
      }
  return make_polyhedron(frame.nvars(), std::move(pts));
}

ExtRational linear_min(const OrthantPolyhedron& p, const std::vector<Rational>& weights) {
  ExtRational best = ExtRational::infinity();
  for (const auto& v : p.vertices) {
    Rational s = 0;
    for (int i = 0; i < p.dim; ++i) s += weights.at(i) * v[i];
    best = min(best, ExtRational(s));
  }
  return best;
}

ExtRational delta(const OrthantPolyhedron& p) { return linear_min(p, std::vector<Rational>(p.dim, 1)); }

Rational coordinate_min(const OrthantPolyhedron& p, int i) {
  if (p.empty()) throw PreconditionError("d_i undefined");
  if (i < 0 || i >= p.dim) throw PreconditionError("coordinate index out of range");
  Rational best = p.vertices.front()[i];
  for (const auto& v : p.vertices) best = std::min(best, v[i]);
  return best;
}

Rational nu_subset(const OrthantPolyhedron& p, const std::vector<int>& indices) {
  if (p.empty()) throw PreconditionError("d_i undefined");
  Rational r = delta(p).value();
  for (int i : indices) r -= coordinate_min(p, i);
  return r;
}

bool contains(const OrthantPolyhedron& p, const Point& q) { return in_hull_plus_orthant(p.vertices, q); }

bool is_subset(const OrthantPolyhedron& a, const OrthantPolyhedron& b) {
  for (const auto& v : a.vertices)
    if (!contains(b, v)) return false;
  return true;
}

OrthantPolyhedron transform_polyhedron(const OrthantPolyhedron& p, const PolyhedronStep& step) {
  if (const auto* t = std::get_if<Translate>(&step)) {
    if (static_cast<int>(t->shift.size()) != p.dim) throw PreconditionError("translation dimension mismatch");
    std::vector<Point> pts;
    for (const auto& v : p.vertices) {
      Point q(p.dim);
      for (int i = 0; i < p.dim; ++i) {
        q[i] = v[i] - t->shift[i];
        if (q[i] < 0) throw PreconditionError("not dominated");
      }
      pts.push_back(std::move(q));
    }
    return make_polyhedron(p.dim, std::move(pts));
  }
  if (const auto* s = std::get_if<Scale>(&step)) {
    if (s->factor <= 0) throw PreconditionError("scale factor must be positive");
    std::vector<Point> pts = p.vertices;
    for (auto& v : pts)
      for (auto& c : v) c *= s->factor;
    return make_polyhedron(p.dim, std::move(pts));
  }
  const auto& add = std::get<AddPoints>(step);
  std::vector<Point> pts = p.vertices;
  pts.insert(pts.end(), add.points.begin(), add.points.end());
  return make_polyhedron(p.dim, std::move(pts));
}

}  // namespace resinv
