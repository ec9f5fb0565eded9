#ifndef RESINV_POLYHEDRON_HPP
#define RESINV_POLYHEDRON_HPP

#include <variant>
#include <vector>

#include "resinv/frame.hpp"
#include "resinv/pair.hpp"

namespace resinv {

using Point = std::vector<Rational>;

// conv(vertices) + R^dim_{>=0}, kept as its minimal generating set sorted
// lexicographically. No vertices means the empty polyhedron.
struct OrthantPolyhedron {
  int dim = 0;
  std::vector<Point> vertices;

  bool empty() const { return vertices.empty(); }
  friend bool operator==(const OrthantPolyhedron&, const OrthantPolyhedron&) = default;
};

// Exact LP feasibility: is p in conv(gens) + orthant?
bool in_hull_plus_orthant(const std::vector<Point>& gens, const Point& p);

std::vector<Point> minimize_vertices(std::vector<Point> points);
OrthantPolyhedron make_polyhedron(int dim, std::vector<Point> points);

// Points A/(b - |B|) over all terms u^A y^B with |B| < b, in the order of frame.u.
OrthantPolyhedron polyhedron_of_pair(const Pair& e, const Frame& frame);

// Exponent points (A, B) of all generators, u-coordinates first.
OrthantPolyhedron newton_polyhedron(const Pair& e, const Frame& frame);

// Min of a nonnegative linear functional; inf on the empty polyhedron.
ExtRational linear_min(const OrthantPolyhedron& p, const std::vector<Rational>& weights);

ExtRational delta(const OrthantPolyhedron& p);
// Throws "d_i undefined" on the empty polyhedron.
Rational coordinate_min(const OrthantPolyhedron& p, int i);
Rational nu_subset(const OrthantPolyhedron& p, const std::vector<int>& indices);

bool contains(const OrthantPolyhedron& p, const Point& q);
bool is_subset(const OrthantPolyhedron& a, const OrthantPolyhedron& b);

struct Translate {
  Point shift;
};
struct Scale {
  Rational factor;
};
struct AddPoints {
  std::vector<Point> points;
};
using PolyhedronStep = std::variant<Translate, Scale, AddPoints>;

OrthantPolyhedron transform_polyhedron(const OrthantPolyhedron& p, const PolyhedronStep& step);

}  // namespace resinv

#endif
