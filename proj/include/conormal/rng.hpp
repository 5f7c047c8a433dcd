// rng.hpp -- deterministic pseudo random numbers.
//
// Randomised choices (slice coefficients, chart normalisations, probe
// points) must reproduce bit-for-bit across platforms and standard library
// implementations, so we do not touch <random>'s distributions.  The
// generator is the splitmix64 finaliser iterated over a counter; it is
// plenty for picking small generic rationals.

#ifndef CONORMAL_RNG_HPP
#define CONORMAL_RNG_HPP

#include <cstdint>

namespace conormal {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi] (inclusive).  The slight modulo bias is
  // irrelevant for genericity purposes and keeps the stream stable.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // Small nonzero integer, handy as a "generic" coefficient.
  std::int64_t nonzero(std::int64_t bound) {
    for (;;) {
      std::int64_t v = range(-bound, bound);
      if (v != 0) return v;
    }
  }

  std::uint64_t seed() const { return seed_; }

  // Independent child stream, used when one logical task (e.g. one slice
  // pattern) must not disturb the draws of another.
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull));
  }

private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

} // namespace conormal

#endif
