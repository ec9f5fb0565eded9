#include "helpers.hpp"

#include <algorithm>

namespace th {

VariableTable ring(const std::vector<std::string>& names, const std::vector<std::string>& fractional) {
  VariableTable t;
  t.names = names;
  for (const auto& n : names)
    t.fractional_ok.push_back(std::find(fractional.begin(), fractional.end(), n) != fractional.end());
  return t;
}

Polynomial P(const std::string& text, const VariableTable& vars) { return parse_polynomial(text, vars); }

std::string data_dir() { return RESINV_TEST_DATA; }

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir()))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

Problem load(const std::string& name) { return load_problem(data_dir() + "/" + name); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

Exponents random_exponents(Rng& rng, int nvars, int deg) {
  Exponents e(nvars, 0);
  for (int k = 0; k < deg; ++k) e[uniform(rng, 0, nvars - 1)] += 1;
  return e;
}

Rational random_coeff(Rng& rng, int bound) {
  int c = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? Rational(c) : Rational(-c);
}

}  // namespace

Polynomial random_poly(Rng& rng, int nvars, int nterms, int min_deg, int max_deg, int coeff) {
  Polynomial f(nvars);
  while (f.is_zero())
    for (int t = 0; t < nterms; ++t)
      f.add_term(random_exponents(rng, nvars, uniform(rng, min_deg, max_deg)), random_coeff(rng, coeff));
  return f;
}

Polynomial random_homogeneous(Rng& rng, int nvars, int deg, int nterms, int coeff) {
  return random_poly(rng, nvars, nterms, deg, deg, coeff);
}

Pair random_singular_pair(Rng& rng, int nvars, int max_comps, int max_weight, int max_deg) {
  Pair e;
  e.nvars = nvars;
  int comps = uniform(rng, 1, max_comps);
  for (int c = 0; c < comps; ++c) {
    int b = uniform(rng, 1, max_weight);
    Component comp{{}, Rational(b)};
    int gens = uniform(rng, 1, 2);
    for (int g = 0; g < gens; ++g)
      comp.gens.push_back(random_poly(rng, nvars, uniform(rng, 1, 4), b, std::max(b, max_deg)));
    e.components.push_back(std::move(comp));
  }
  return e;
}

}  // namespace th

namespace th {

std::vector<HomIdeal> directrix_corpus(unsigned seed, int count) {
  Rng rng(seed);
  std::vector<HomIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    int n = uniform(rng, 2, 4);
    HomIdeal ideal{n, {}};
    int ngens = uniform(rng, 1, 3);
    bool through_forms = uniform(rng, 0, 1) == 1;
    int r = uniform(rng, 1, n);
    std::vector<Polynomial> forms;
    for (int k = 0; k < r; ++k) {
      Polynomial l(n);
      while (l.is_zero())
        for (int i = 0; i < n; ++i) l += Rational(uniform(rng, -1, 1)) * Polynomial::variable(n, i);
      forms.push_back(l);
    }
    for (int g = 0; g < ngens; ++g) {
      int deg = uniform(rng, 1, 4);
      Polynomial f(n);
      if (through_forms) {
        Polynomial h = random_homogeneous(rng, r, deg, uniform(rng, 1, 3), 2);
        f = substitute(h, forms);
        if (f.is_zero()) f = forms.front().pow(deg);
      } else {
        f = random_homogeneous(rng, n, deg, uniform(rng, 1, 3), 2);
      }
      ideal.gens.push_back(f);
    }
    if (!ideal.is_zero()) out.push_back(ideal);
  }
  return out;
}

}  // namespace th

namespace th {

EquivalentPairs equivalent_pairs(int d) {
  VariableTable r = ring({"x", "y", "z", "t"});
  auto ds = [](int k) { return std::to_string(k); };
  Component common{{P("z^" + ds(d) + " - x^" + ds(d - 1) + "*y^" + ds(d - 1), r)}, Rational(d)};
  EquivalentPairs out;
  out.frame = make_frame(r.names, {"x", "y"}, {"z", "t"});
  out.first = Pair{4, {common, Component{{P("t", r)}, Rational(1)}}};
  out.second = Pair{4, {common, Component{{P("t^" + ds(d - 1) + " - x^" + ds(d - 2) + "*y^" + ds(d - 1), r)},
                                          Rational(d - 1)}}};
  return out;
}

}  // namespace th

namespace th {

PairWithHistory with_frame(const Pair& e, const Frame& f) {
  PairWithHistory h;
  h.pair = e;
  h.frame = f;
  return h;
}

BlowupCase random_permissible_blowup(Rng& rng) {
  const int n = uniform(rng, 3, 4);
  const int ny = uniform(rng, 1, 2);
  std::vector<std::string> names, u_names, y_names;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    (i < n - ny ? u_names : y_names).push_back(names.back());
  }
  BlowupCase bc;
  bc.h.frame = make_frame(names, u_names, y_names);
  std::vector<bool> in_center(n, false);
  for (int i = n - ny; i < n; ++i) in_center[i] = true;
  std::vector<int> center_u;
  while (center_u.empty())
    for (int i = 0; i < n - ny; ++i)
      if (uniform(rng, 0, 1)) {
        in_center[i] = true;
        center_u.push_back(i);
      }
  for (int i = 0; i < n; ++i)
    if (in_center[i]) bc.center.push_back(i);
  bc.chart = center_u[uniform(rng, 0, static_cast<int>(center_u.size()) - 1)];

  static const char* weights[] = {"1", "2", "3", "3/2"};
  Pair e;
  e.nvars = n;
  const int comps = uniform(rng, 1, 2);
  for (int c = 0; c < comps; ++c) {
    Rational b = parse_rational(weights[uniform(rng, 0, 3)]);
    const Integer ceil_b = (b.get_num() + b.get_den() - 1) / b.get_den();
    const long need = ceil_b.get_si();
    Polynomial g(n);
    bool has_point = false;
    while (g.is_zero() || !has_point) {
      Exponents ex(n, 0);
      long k = need + uniform(rng, 0, 2);
      for (long s = 0; s < k; ++s) ex[bc.center[uniform(rng, 0, static_cast<int>(bc.center.size()) - 1)]] += 1;
      for (int i = 0; i < n; ++i)
        if (!in_center[i]) ex[i] += uniform(rng, 0, 2);
      Rational by = 0;
      for (int i = n - ny; i < n; ++i) by += ex[i];
      has_point = has_point || by < b;
      g.add_term(ex, Rational(uniform(rng, 1, 4)));
    }
    e.components.push_back(Component{{g}, b});
  }
  bc.h.pair = e;
  return bc;
}

}  // namespace th
