#include "rational.hpp"

namespace rootcones {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

int sign(const Rat& q) {
  return sgn(q);
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

Rat rat_sqrt_exact(const Rat& q) {
  auto r = rat_sqrt(q);
  if (!r) throw std::logic_error("rat_sqrt_exact: not a rational square: " + q.get_str());
  return *r;
}

double to_double(const Rat& q) {
  return q.get_d();
}

}  // namespace rootcones
