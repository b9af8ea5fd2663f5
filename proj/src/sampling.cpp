#include "sampling.hpp"

namespace rootcones {

std::uint64_t Sampler::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Sampler::next_below(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

long Sampler::next_int(long lo, long hi) {
  return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat Sampler::next_rat() {
  long p = next_int(-bound_, bound_);
  long q = next_int(1, bound_);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat Sampler::next_nonzero_rat() {
  while (true) {
    Rat r = next_rat();
    if (sgn(r) != 0) return r;
  }
}

Vec Sampler::next_vec(std::size_t dim) {
  Vec v(dim);
  for (auto& x : v) x = next_rat();
  return v;
}

std::uint64_t Sampler::derive_seed(std::uint64_t base, const std::string& label) {
  std::uint64_t h = base ^ 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;  // FNV-1a step
  }
  // one splitmix scramble so nearby labels decorrelate
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

}  // namespace rootcones
