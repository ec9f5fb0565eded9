#include "resinv/cone_directrix.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "resinv/errors.hpp"

namespace resinv {

bool HomIdeal::is_zero() const {
  for (const auto& g : gens)
    if (!g.is_zero()) return false;
  return true;
}

HomIdeal initial_ideal(const Pair& e) {
  HomIdeal out{e.nvars, {}};
  for (const auto& c : e.components) {
    if (!is_integer(c.weight)) continue;
    for (const auto& g : c.gens) {
      if (ord_at_origin(g) != ExtRational(c.weight)) continue;
      Polynomial in = initial_form(g, c.weight);
      if (!in.is_zero()) out.gens.push_back(std::move(in));
    }
  }
  return out;
}

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

namespace {

int homogeneous_degree(const Polynomial& g) {
  if (!g.is_integral()) throw PreconditionError("directrix undefined on fractional exponents");
  Rational d = ord_at_origin(g).value();
  for (const auto& [e, c] : g.terms())
    if (total_degree(e) != d) throw PreconditionError("initial ideal generator is not homogeneous");
  return static_cast<int>(d.get_num().get_si());
}

struct Coordinates {
  std::vector<Exponents> monomials;
  std::map<Exponents, int, GrlexLess> index;

  Coordinates(int nvars, int d) : monomials(monomials_of_degree(nvars, d)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], static_cast<int>(i));
  }

  Vector vec(const Polynomial& f) const {
    Vector v(monomials.size(), 0);
    for (const auto& [e, c] : f.terms()) v.at(index.at(e)) = c;
    return v;
  }

  Polynomial poly(const Vector& v, int nvars) const {
    Polynomial f(nvars);
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(monomials[i], v[i]);
    return f;
  }
};

Matrix graded_rows(const HomIdeal& ideal, int d, const Coordinates& coords) {
  Matrix rows;
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    int k = homogeneous_degree(g);
    for (const auto& m : monomials_of_degree(ideal.nvars, d - k))
      rows.push_back(coords.vec(g * Polynomial::monomial(m)));
  }
  rref(rows, static_cast<int>(coords.monomials.size()));
  return rows;
}

}  // namespace

std::vector<Polynomial> graded_piece(const HomIdeal& ideal, int d) {
  Coordinates coords(ideal.nvars, d);
  std::vector<Polynomial> out;
  for (const auto& row : graded_rows(ideal, d, coords)) out.push_back(coords.poly(row, ideal.nvars));
  return out;
}

DirectrixBasis directrix(const HomIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("directrix undefined");
  const int n = ideal.nvars;
  // Start from all directions and cut down generator by generator.
  Matrix directions;
  for (int i = 0; i < n; ++i) {
    Vector v(n, 0);
    v[i] = 1;
    directions.push_back(std::move(v));
  }
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    int k = homogeneous_degree(g);
    Coordinates coords(n, k - 1);
    Matrix piece = graded_rows(ideal, k - 1, coords);
    const int unknowns = n + static_cast<int>(piece.size());
    Matrix sys(coords.monomials.size(), Vector(unknowns, 0));
    for (int i = 0; i < n; ++i) {
      std::vector<int> order(n, 0);
      order[i] = 1;
      Vector col = coords.vec(hasse_derivative(g, order));
      for (std::size_t r = 0; r < col.size(); ++r) sys[r][i] = col[r];
    }
    for (std::size_t j = 0; j < piece.size(); ++j)
      for (std::size_t r = 0; r < piece[j].size(); ++r) sys[r][n + j] = -piece[j][r];
    Matrix allowed;
    for (auto& sol : nullspace(sys, unknowns)) {
      sol.resize(n);
      allowed.push_back(std::move(sol));
    }
    rref(allowed, n);
    directions = intersect_row_spaces(directions, allowed, n);
    if (directions.empty()) break;
  }
  DirectrixBasis out;
  out.nvars = n;
  out.invariant_directions = directions;
  Matrix forms = directions.empty() ? Matrix{} : nullspace(directions, n);
  if (directions.empty())
    for (int i = 0; i < n; ++i) {
      Vector v(n, 0);
      v[i] = 1;
      forms.push_back(std::move(v));
    }
  rref(forms, n);
  out.form_matrix = forms;
  for (const auto& row : forms) {
    Polynomial f(n);
    for (int i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = 1;
      f.add_term(e, row[i]);
    }
    out.forms.push_back(std::move(f));
  }
  return out;
}

bool spans_directrix(const DirectrixBasis& dir, const std::vector<int>& coords) {
  Matrix span;
  for (int c : coords) {
    Vector v(dir.nvars, 0);
    v.at(c) = 1;
    span.push_back(std::move(v));
  }
  rref(span, dir.nvars);
  Matrix forms = dir.form_matrix;
  rref(forms, dir.nvars);
  return span == forms;
}

std::vector<long> hilbert_samuel_truncated(const std::vector<Polynomial>& gens, int nvars, int k_max) {
  if (k_max < 1) throw PreconditionError("hilbert-samuel cutoff must be at least 1");
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw InternalError("generator ring mismatch");
    if (!g.is_integral()) throw PreconditionError("hilbert-samuel function needs integral exponents");
    if (g.coefficient(Exponents(nvars, 0)) != 0) throw PreconditionError("point not on X");
  }
  // Monomials of degree < k_max, indexed in grlex order.
  std::map<Exponents, int, GrlexLess> index;
  std::vector<long> count_below(k_max + 1, 0);
  for (int d = 0; d < k_max; ++d) {
    for (const auto& m : monomials_of_degree(nvars, d)) index.emplace(m, static_cast<int>(index.size()));
    count_below[d + 1] = static_cast<long>(index.size());
  }
  std::vector<long> out;
  for (int k = 1; k <= k_max; ++k) {
    // Sparse elimination keyed by the lowest monomial of each row.
    std::map<int, std::map<int, Rational>> pivots;
    for (const auto& g : gens) {
      ExtRational o = ord_at_origin(g);
      if (o.is_infinite() || o.value() >= k) continue;
      long max_mult = k - 1 - o.value().get_num().get_si();
      for (int dm = 0; dm <= max_mult; ++dm)
        for (const auto& m : monomials_of_degree(nvars, dm)) {
          std::map<int, Rational> row;
          for (const auto& [e, c] : g.terms()) {
            Exponents s = e;
            for (int i = 0; i < nvars; ++i) s[i] += m[i];
            if (total_degree(s) < k) row[index.at(s)] += c;
          }
          while (!row.empty()) {
            auto lead = row.begin();
            if (lead->second == 0) {
              row.erase(lead);
              continue;
            }
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
              Rational inv = 1 / lead->second;
              for (auto& [col, v] : row) v *= inv;
              pivots.emplace(lead->first, std::move(row));
              break;
            }
            Rational f = lead->second;
            for (const auto& [col, v] : p->second) {
              Rational& t = row[col];
              t -= f * v;
              if (t == 0) row.erase(col);
            }
          }
        }
    }
    out.push_back(count_below[k] - static_cast<long>(pivots.size()));
  }
  return out;
}

}  // namespace resinv
