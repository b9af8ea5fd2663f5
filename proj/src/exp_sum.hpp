#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "sampling.hpp"

namespace rootcones {

using HighFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

// Exact value of the form sum_i c_i exp(q_i) with rational c_i and pairwise
// distinct rational q_i. Equality of such values is equivalent to equality of
// all coefficients (the exponentials are linearly independent over Q).
class ExpValue {
 public:
  ExpValue() = default;
  explicit ExpValue(const Rat& r) { add_term(Rat(0), r); }

  void add_term(const Rat& exponent, const Rat& coeff);
  ExpValue& operator+=(const ExpValue& o);
  ExpValue scaled(const Rat& s) const;

  bool operator==(const ExpValue& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The value when it is a plain rational (single zero exponent); throws
  // otherwise.
  Rat rational_value() const;
  bool is_rational() const;

  const std::map<Rat, Rat>& terms() const { return terms_; }
  HighFloat to_float() const;
  std::string to_string() const;

 private:
  std::map<Rat, Rat> terms_;
};

ExpValue operator+(ExpValue a, const ExpValue& b);
ExpValue operator*(const ExpValue& a, const ExpValue& b);

// Finite sum  sum_i coeff_i(Lambda) * exp(<Lambda, v_i>)  with rational-
// function coefficients; the common value domain of the gamma/(G,M)-family
// computations. Lambda lives in the ambient coordinate space.
class FormalExpSum {
 public:
  struct Term {
    Vec v;
    RationalFn coeff;
  };

  explicit FormalExpSum(std::size_t dim) : dim_(dim) {}
  std::size_t dim() const { return dim_; }

  void add_term(const Vec& v, const RationalFn& c) { terms_.push_back({v, c}); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  FormalExpSum& operator+=(const FormalExpSum& o);
  FormalExpSum scaled(const Rat& s) const;
  friend FormalExpSum operator*(const FormalExpSum& a, const FormalExpSum& b);

  // Canonical merge: group terms by exponent vector (coefficients added).
  FormalExpSum merged() const;

  // Exact evaluation at lambda. Terms whose denominators vanish are handled
  // by the Laurent limit along base + t*dir (dir must keep every denominator
  // nonzero for small t; callers draw dir generically). Negative powers must
  // cancel within each group of equal exponent values; anything left over
  // throws (it would contradict the smoothness being exercised).
  ExpValue eval(const Vec& lambda, const Vec& dir) const;

  // Schwartz-Zippel style equality: exact evaluation at n random off-pole
  // points (plus the Laurent value at 0).
  bool equals(const FormalExpSum& o, Sampler& smp, int n_points = 8) const;

  long max_pole_order() const;

 private:
  std::size_t dim_;
  std::vector<Term> terms_;
};

}  // namespace rootcones
