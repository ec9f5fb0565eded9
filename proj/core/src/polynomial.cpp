#include "resinv/polynomial.hpp"

#include <functional>

#include "resinv/errors.hpp"

namespace resinv {

Rational total_degree(const Exponents& e) {
  Rational s = 0;
  for (const auto& x : e) s += x;
  return s;
}

bool is_integral(const Exponents& e) {
  for (const auto& x : e)
    if (!is_integer(x)) return false;
  return true;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int c = cmp(total_degree(a), total_degree(b));
  if (c != 0) return c < 0;
  // Ties: the vector with the larger leading exponent is the larger monomial.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int d = cmp(a[i], b[i]);
    if (d != 0) return d < 0;
  }
  return a.size() < b.size();
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InternalError("exponent length does not match ring");
  if (c == 0) return;
  for (const auto& x : e)
    if (x < 0) throw PreconditionError("negative exponent");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::fractional_in(int var) const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(e[var])) return true;
  return false;
}

bool Polynomial::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!resinv::is_integral(e)) return false;
  return true;
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) s[i] = true;
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InternalError("ring mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InternalError("ring mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("ring mismatch in multiplication");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  return r *= -1;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

ExtRational ord_at_origin(const Polynomial& f) {
  if (f.is_zero()) return ExtRational::infinity();
  // Grlex keeps the lowest total degree first.
  return ExtRational(total_degree(f.terms().begin()->first));
}

ExtRational variable_order(const Polynomial& f, int var) {
  ExtRational best = ExtRational::infinity();
  for (const auto& [e, c] : f.terms()) best = min(best, ExtRational(e[var]));
  return best;
}

Polynomial hasse_derivative(const Polynomial& f, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != f.nvars()) throw InternalError("derivative order length mismatch");
  for (int i = 0; i < f.nvars(); ++i) {
    if (order[i] < 0) throw PreconditionError("negative derivative order");
    if (order[i] > 0 && f.fractional_in(i)) throw PreconditionError("derivative undefined on fractional variable");
  }
  Polynomial r(f.nvars());
  Exponents e2(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Rational coeff = c;
    bool vanishes = false;
    for (int i = 0; i < f.nvars() && !vanishes; ++i) {
      if (order[i] == 0) {
        e2[i] = e[i];
        continue;
      }
      if (e[i] < order[i]) {
        vanishes = true;
        break;
      }
      coeff *= Rational(binomial(e[i], order[i]));
      e2[i] = e[i] - order[i];
    }
    if (!vanishes) r.add_term(e2, coeff);
  }
  return r;
}

Polynomial directional_hasse(const Polynomial& f, const std::vector<Rational>& direction, int k) {
  const int n = f.nvars();
  Polynomial r(n);
  std::vector<int> m(n, 0);
  // Enumerate all M with |M| = k over the support of the direction.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = left;
      Rational w = 1;
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < m[j]; ++t) w *= direction[j];
      if (w != 0) r += hasse_derivative(f, m) * w;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      if (a > 0 && direction[i] == 0) break;
      m[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n == 0) return k == 0 ? f : r;
  rec(0, k);
  return r;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw InternalError("substitution does not cover all variables");
  const int target = images.empty() ? 0 : images.front().nvars();
  Polynomial r(target);
  // Cache integral powers of images.
  std::vector<std::map<long, Polynomial>> cache(images.size());
  for (const auto& [e, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (int i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (is_integer(e[i])) {
        long k = e[i].get_num().get_si();
        auto it = cache[i].find(k);
        if (it == cache[i].end()) it = cache[i].emplace(k, images[i].pow(static_cast<unsigned>(k))).first;
        t = t * it->second;
      } else {
        const Polynomial& img = images[i];
        if (img.size() != 1 || img.terms().begin()->second != 1)
          throw PreconditionError("fractional exponent under a non-monomial substitution");
        Exponents scaled = img.terms().begin()->first;
        for (auto& x : scaled) x *= e[i];
        t = t * Polynomial::monomial(scaled);
      }
    }
    r += t;
  }
  return r;
}

ExtRational weighted_order(const Polynomial& f, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != f.nvars()) throw InternalError("weights do not cover all variables");
  ExtRational best = ExtRational::infinity();
  for (const auto& [e, c] : f.terms()) {
    Rational s = 0;
    for (int i = 0; i < f.nvars(); ++i) s += weights[i] * e[i];
    best = min(best, ExtRational(s));
  }
  return best;
}

Polynomial homogeneous_part(const Polynomial& f, const Rational& degree, const std::vector<Rational>* weights) {
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Rational s = 0;
    for (int i = 0; i < f.nvars(); ++i) s += (weights ? (*weights)[i] : Rational(1)) * e[i];
    if (s == degree) r.add_term(e, c);
  }
  return r;
}

Polynomial initial_form(const Polynomial& f, const Rational& b, const std::vector<Rational>* weights) {
  if (weights == nullptr && (!is_integer(b) || b <= 0)) return Polynomial(f.nvars());
  return homogeneous_part(f, b, weights);
}

Polynomial truncate_below(const Polynomial& f, const Rational& k) {
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) < k) r.add_term(e, c);
  return r;
}

std::optional<Polynomial> divide_by_monomial(const Polynomial& f, const Exponents& m) {
  Polynomial r(f.nvars());
  Exponents e2(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i) {
      e2[i] = e[i] - m[i];
      if (e2[i] < 0) return std::nullopt;
    }
    r.add_term(e2, c);
  }
  return r;
}

std::map<std::vector<long>, Polynomial> expand_in(const Polynomial& f, const std::vector<int>& vars) {
  std::map<std::vector<long>, Polynomial> out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<long> key;
    Exponents rest = e;
    for (int v : vars) {
      if (!is_integer(e[v])) throw PreconditionError("expansion variable has a fractional exponent");
      key.push_back(e[v].get_num().get_si());
      rest[v] = 0;
    }
    auto it = out.try_emplace(key, Polynomial(f.nvars())).first;
    it->second.add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Polynomial resize_ring(const Polynomial& f, int nvars) {
  Polynomial r(nvars);
  for (const auto& [e, c] : f.terms()) {
    Exponents e2(nvars, 0);
    for (int i = 0; i < f.nvars(); ++i) {
      if (i < nvars)
        e2[i] = e[i];
      else if (e[i] != 0)
        throw InternalError("dropped variable occurs in polynomial");
    }
    r.add_term(e2, c);
  }
  return r;
}

}  // namespace resinv
