#pragma once

#include <cstdint>
#include <string>

#include "linalg.hpp"

namespace rootcones {

// Deterministic cross-platform PRNG (splitmix64). Coordinates are sampled as
// p/q with p uniform in [-N, N] and q uniform in [1, N]; this is the
// documented sampling distribution of every verifier.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long bound = 20) : state_(seed), bound_(bound) {}

  std::uint64_t next_u64();
  // Uniform in [0, n-1] by rejection; n >= 1.
  std::uint64_t next_below(std::uint64_t n);
  long next_int(long lo, long hi);  // inclusive
  Rat next_rat();                   // p/q per the documented distribution
  Rat next_nonzero_rat();
  Vec next_vec(std::size_t dim);
  long bound() const { return bound_; }

  // Derives an independent sub-stream, keyed by a label; used to give each
  // identity its own deterministic stream regardless of execution order.
  static std::uint64_t derive_seed(std::uint64_t base, const std::string& label);

 private:
  std::uint64_t state_;
  long bound_;
};

}  // namespace rootcones
