#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rootcones {

// Exact rational scalar. mpq_class keeps fractions reduced with a positive
// denominator, which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// "p" or "p/q", canonical form.
std::string rat_to_string(const Rat& q);

int sign(const Rat& q);

// Exact square root; nullopt when q is not a square of a rational.
std::optional<Rat> rat_sqrt(const Rat& q);

// Like rat_sqrt but throws std::logic_error when q is not a perfect square.
Rat rat_sqrt_exact(const Rat& q);

double to_double(const Rat& q);

}  // namespace rootcones
