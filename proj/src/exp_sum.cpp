#include "exp_sum.hpp"

#include <sstream>
#include <stdexcept>

namespace rootcones {

void ExpValue::add_term(const Rat& exponent, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = coeff;
  } else {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ExpValue& ExpValue::operator+=(const ExpValue& o) {
  for (const auto& [q, c] : o.terms_) add_term(q, c);
  return *this;
}

ExpValue ExpValue::scaled(const Rat& s) const {
  ExpValue r;
  if (sgn(s) == 0) return r;
  for (const auto& [q, c] : terms_) r.terms_[q] = c * s;
  return r;
}

Rat ExpValue::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && sgn(terms_.begin()->first) == 0) return terms_.begin()->second;
  throw std::logic_error("ExpValue: not a plain rational: " + to_string());
}

bool ExpValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && sgn(terms_.begin()->first) == 0);
}

HighFloat ExpValue::to_float() const {
  HighFloat total = 0;
  for (const auto& [q, c] : terms_) {
    HighFloat qq(q.get_num().get_str());
    qq /= HighFloat(q.get_den().get_str());
    HighFloat cc(c.get_num().get_str());
    cc /= HighFloat(c.get_den().get_str());
    total += cc * exp(qq);
  }
  return total;
}

std::string ExpValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.get_str() << ")*e^(" << q.get_str() << ")";
    first = false;
  }
  return os.str();
}

ExpValue operator+(ExpValue a, const ExpValue& b) {
  a += b;
  return a;
}

ExpValue operator*(const ExpValue& a, const ExpValue& b) {
  ExpValue r;
  for (const auto& [qa, ca] : a.terms())
    for (const auto& [qb, cb] : b.terms()) r.add_term(qa + qb, ca * cb);
  return r;
}

FormalExpSum& FormalExpSum::operator+=(const FormalExpSum& o) {
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

FormalExpSum FormalExpSum::scaled(const Rat& s) const {
  FormalExpSum r(dim_);
  if (sgn(s) == 0) return r;
  for (const auto& t : terms_) r.add_term(t.v, t.coeff.scaled(s));
  return r;
}

FormalExpSum operator*(const FormalExpSum& a, const FormalExpSum& b) {
  FormalExpSum r(a.dim_);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) r.add_term(add(ta.v, tb.v), ta.coeff * tb.coeff);
  return r;
}

FormalExpSum FormalExpSum::merged() const {
  std::map<Vec, RationalFn> grouped;
  for (const auto& t : terms_) {
    auto it = grouped.find(t.v);
    if (it == grouped.end()) {
      grouped.emplace(t.v, t.coeff);
    } else {
      it->second = it->second + t.coeff;
    }
  }
  FormalExpSum r(dim_);
  for (const auto& [v, c] : grouped) r.add_term(v, c);
  return r;
}

long FormalExpSum::max_pole_order() const {
  long m = 0;
  for (const auto& t : terms_) m = std::max(m, t.coeff.den.total_degree());
  return m;
}

ExpValue FormalExpSum::eval(const Vec& lambda, const Vec& dir) const {
  // Group terms by the value <lambda, v>; expand each group as a Laurent
  // series in t along lambda + t*dir; negative powers must cancel per group
  // (Lindemann-Weierstrass makes cross-group cancellation impossible), and
  // the t^0 coefficients assemble the value.
  long order = max_pole_order() + 1;
  std::map<Rat, LaurentSeries> groups;
  for (const auto& t : terms_) {
    Rat base_exp = dot(lambda, t.v);
    Rat dir_exp = dot(dir, t.v);
    UniPoly num = t.coeff.num.restrict_line(lambda, dir);
    UniPoly den = t.coeff.den.restrict_line(lambda, dir);
    if (den.is_zero())
      throw std::logic_error("FormalExpSum::eval: denominator vanishes along the line");
    LaurentSeries series = divide_by_poly(LaurentSeries::from_poly(num, order), den);
    series = mul(series, LaurentSeries::exp_series(dir_exp, Rat(0), order));
    auto it = groups.find(base_exp);
    if (it == groups.end()) {
      groups.emplace(base_exp, series);
    } else {
      it->second = add(it->second, series);
    }
  }
  ExpValue out;
  for (const auto& [q, s] : groups) {
    for (long k = s.lead; k < 0; ++k)
      if (sgn(s.coeff(k)) != 0)
        throw std::logic_error("FormalExpSum::eval: uncancelled pole at a supposedly "
                               "removable singularity");
    if (s.order < 0) throw std::logic_error("FormalExpSum::eval: truncation too short");
    out.add_term(q, s.coeff(0));
  }
  return out;
}

bool FormalExpSum::equals(const FormalExpSum& o, Sampler& smp, int n_points) const {
  if (dim_ != o.dim_) return false;
  // a generic direction: retried until all denominators survive
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec dir(dim_);
    for (auto& x : dir) x = Rat(smp.next_int(1, 1000), smp.next_int(1, 40));
    try {
      if (!(eval(zero_vec(dim_), dir) == o.eval(zero_vec(dim_), dir))) return false;
      int done = 0;
      while (done < n_points) {
        Vec pt = smp.next_vec(dim_);
        ExpValue a, b;
        try {
          a = eval(pt, dir);
          b = o.eval(pt, dir);
        } catch (const std::logic_error&) {
          continue;  // denominator vanished along this line; redraw the point
        }
        if (!(a == b)) return false;
        ++done;
      }
      return true;
    } catch (const std::logic_error&) {
      continue;  // direction hit a pole at 0; redraw
    }
  }
  throw std::runtime_error("FormalExpSum::equals: could not find a generic direction");
}

}  // namespace rootcones
