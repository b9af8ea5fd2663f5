#include "polynomial.hpp"

#include <stdexcept>

namespace rootcones {

std::size_t UniPoly::degree() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) d = i;
  return d;
}

bool UniPoly::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
  return v;
}

void UniPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  UniPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

UniPoly scale(const Rat& s, const UniPoly& a) {
  UniPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

Rat LaurentSeries::coeff(long k) const {
  if (k > order) throw std::logic_error("LaurentSeries: coefficient beyond truncation");
  long i = k - lead;
  if (i < 0 || i >= static_cast<long>(c.size())) return Rat(0);
  return c[i];
}

LaurentSeries LaurentSeries::zero(long order) {
  LaurentSeries s;
  s.lead = 0;
  s.order = order;
  return s;
}

LaurentSeries LaurentSeries::from_poly(const UniPoly& p, long order) {
  LaurentSeries s;
  s.lead = 0;
  s.order = order;
  s.c.assign(p.c.begin(), p.c.end());
  if (static_cast<long>(s.c.size()) > order + 1) s.c.resize(order + 1);
  return s;
}

LaurentSeries LaurentSeries::exp_series(const Rat& b, const Rat& a, long order) {
  // exp(b t + a t^2) = sum_n (b t + a t^2)^n / n!
  LaurentSeries s = zero(order);
  s.c.assign(order + 1, Rat(0));
  s.c[0] = 1;
  UniPoly base;
  base.c = {Rat(0), b, a};
  UniPoly power = UniPoly::constant(Rat(1));
  Rat fact(1);
  for (long n = 1; n <= order; ++n) {
    power = mul(power, base);
    if (static_cast<long>(power.c.size()) > order + 1) power.c.resize(order + 1);
    fact *= n;
    Rat inv = Rat(1) / fact;
    for (std::size_t i = 0; i < power.c.size(); ++i) s.c[i] += power.c[i] * inv;
  }
  return s;
}

LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries r;
  r.order = std::min(x.order, y.order);
  r.lead = std::min(x.lead, y.lead);
  r.c.assign(static_cast<std::size_t>(r.order - r.lead + 1), Rat(0));
  for (long k = r.lead; k <= r.order; ++k) {
    Rat v(0);
    if (k >= x.lead && k <= x.order) v += x.coeff(k);
    if (k >= y.lead && k <= y.order) v += y.coeff(k);
    r.c[k - r.lead] = v;
  }
  return r;
}

LaurentSeries mul(const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries r;
  r.lead = x.lead + y.lead;
  // exactness: x known through x.order, y through y.order
  r.order = std::min(x.order + y.lead, y.order + x.lead);
  if (r.order < r.lead) {
    r.c.clear();
    return r;
  }
  r.c.assign(static_cast<std::size_t>(r.order - r.lead + 1), Rat(0));
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (sgn(x.c[i]) == 0) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      long k = x.lead + static_cast<long>(i) + y.lead + static_cast<long>(j);
      if (k > r.order) break;
      r.c[k - r.lead] += x.c[i] * y.c[j];
    }
  }
  return r;
}

LaurentSeries divide_by_poly(const LaurentSeries& x, const UniPoly& p) {
  // p = t^k u with u(0) != 0; result = x * t^{-k} * u^{-1}
  std::size_t k = 0;
  while (k < p.c.size() && sgn(p.c[k]) == 0) ++k;
  if (k == p.c.size()) throw std::invalid_argument("divide_by_poly: zero divisor");
  std::vector<Rat> u(p.c.begin() + k, p.c.end());
  LaurentSeries r;
  r.lead = x.lead - static_cast<long>(k);
  r.order = x.order - static_cast<long>(k);
  if (r.order < r.lead) return r;
  std::size_t len = static_cast<std::size_t>(r.order - r.lead + 1);
  r.c.assign(len, Rat(0));
  // power series division: (x.c) / u  termwise
  Rat inv0 = Rat(1) / u[0];
  for (std::size_t i = 0; i < len; ++i) {
    Rat v = i < x.c.size() ? x.c[i] : Rat(0);
    for (std::size_t j = 1; j <= i && j < u.size(); ++j) v -= u[j] * r.c[i - j];
    r.c[i] = v * inv0;
  }
  return r;
}

Poly Poly::constant(std::size_t n_vars, const Rat& v) {
  Poly p(n_vars);
  if (sgn(v) != 0) p.terms_[Key(n_vars, 0)] = v;
  return p;
}

Poly Poly::variable(std::size_t n_vars, std::size_t i) {
  Poly p(n_vars);
  Key k(n_vars, 0);
  k[i] = 1;
  p.terms_[k] = 1;
  return p;
}

Poly Poly::linear(const Vec& coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Key k(coeffs.size(), 0);
    k[i] = 1;
    p.terms_[k] = coeffs[i];
  }
  return p;
}

long Poly::total_degree() const {
  long d = 0;
  for (const auto& [k, v] : terms_) {
    long t = 0;
    for (int e : k) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Poly::add_term(const Key& k, const Rat& v) {
  if (sgn(v) == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = v;
  } else {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat Poly::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::eval(const Vec& x) const {
  Rat total(0);
  for (const auto& [k, v] : terms_) {
    Rat term = v;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (int e = 0; e < k[i]; ++e) term *= x[i];
    total += term;
  }
  return total;
}

UniPoly Poly::restrict_line(const Vec& base, const Vec& dir) const {
  UniPoly out;
  for (const auto& [k, v] : terms_) {
    UniPoly term{{v}};
    for (std::size_t i = 0; i < k.size(); ++i) {
      UniPoly lin{{base[i], dir[i]}};
      for (int e = 0; e < k[i]; ++e) term = mul(term, lin);
    }
    out = add(out, term);
  }
  out.trim();
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [k, v] : b.terms_) r.add_term(k, v);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [k, v] : b.terms_) r.add_term(k, -v);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.n_vars_);
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      Poly::Key k(ka);
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      r.add_term(k, va * vb);
    }
  return r;
}

Poly Poly::scaled(const Rat& s) const {
  Poly r(n_vars_);
  if (sgn(s) == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(n_vars_, Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * (*this);
  return r;
}

RationalFn RationalFn::from_poly(const Poly& p) {
  return {p, Poly::constant(p.n_vars(), Rat(1))};
}

RationalFn RationalFn::constant(std::size_t n_vars, const Rat& v) {
  return {Poly::constant(n_vars, v), Poly::constant(n_vars, Rat(1))};
}

std::optional<Rat> RationalFn::eval(const Vec& x) const {
  Rat d = den.eval(x);
  if (sgn(d) == 0) return std::nullopt;
  return num.eval(x) / d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return {a.num * b.num, a.den * b.den};
}

}  // namespace rootcones
