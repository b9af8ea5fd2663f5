#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace rootcones {

// Dense univariate polynomial (coefficient of t^i at index i).
struct UniPoly {
  std::vector<Rat> c;

  static UniPoly constant(const Rat& v) { return {{v}}; }
  std::size_t degree() const;
  bool is_zero() const;
  Rat eval(const Rat& t) const;
  Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }
  void trim();
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly scale(const Rat& s, const UniPoly& a);

// Truncated Laurent series: sum_{k >= lead} c[k - lead] t^k, exact through
// t^order (inclusive).
struct LaurentSeries {
  long lead = 0;
  long order = -1;  // highest exact power
  std::vector<Rat> c;

  Rat coeff(long k) const;
  static LaurentSeries zero(long order);
  static LaurentSeries from_poly(const UniPoly& p, long order);
  // exp(a t^2 + b t) as a series (used for exponential factors on a line).
  static LaurentSeries exp_series(const Rat& b, const Rat& a, long order);
};

LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries mul(const LaurentSeries& x, const LaurentSeries& y);
// x / p for a nonzero polynomial p: factors t^k out of p and inverts the
// remaining unit.
LaurentSeries divide_by_poly(const LaurentSeries& x, const UniPoly& p);

// Sparse multivariate polynomial over Rat.
class Poly {
 public:
  using Key = std::vector<int>;

  explicit Poly(std::size_t n_vars = 0) : n_vars_(n_vars) {}
  static Poly constant(std::size_t n_vars, const Rat& v);
  static Poly variable(std::size_t n_vars, std::size_t i);
  // sum_i coeffs[i] * x_i
  static Poly linear(const Vec& coeffs);

  std::size_t n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  long total_degree() const;
  const std::map<Key, Rat>& terms() const { return terms_; }

  void add_term(const Key& k, const Rat& v);
  Rat coefficient(const Key& k) const;

  Rat eval(const Vec& x) const;
  // restriction to the line base + t * dir, as a univariate polynomial
  UniPoly restrict_line(const Vec& base, const Vec& dir) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rat& s) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }

 private:
  std::size_t n_vars_;
  std::map<Key, Rat> terms_;
};

// Quotient of polynomials; den must not be identically zero. Kept unreduced;
// equality is decided by cross-multiplied evaluation at random points
// (Schwartz-Zippel style with the degree bound recorded by the caller).
struct RationalFn {
  Poly num;
  Poly den;

  static RationalFn from_poly(const Poly& p);
  static RationalFn constant(std::size_t n_vars, const Rat& v);

  std::optional<Rat> eval(const Vec& x) const;  // nullopt when den(x) = 0
  RationalFn scaled(const Rat& s) const { return {num.scaled(s), den}; }
  long degree_bound() const { return num.total_degree() + den.total_degree(); }
};

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const RationalFn& a, const RationalFn& b);

}  // namespace rootcones
