#pragma once

#include <cstdint>
#include <vector>

namespace rsld {

// Deterministic 64-bit generator (xoshiro256** seeded via splitmix64).
// All randomized operations in the library take an explicit seed so that
// runs are reproducible; distribution helpers avoid std::uniform_int_distribution
// on purpose, since its output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n), n >= 1.  Rejection sampling keeps it unbiased.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  bool coin() { return (next() >> 63) != 0; }

  // Independent child generator; used to decorrelate parallel work items.
  Rng spawn(uint64_t stream) const {
    Rng child(*this);
    child.s_[0] ^= 0x9e3779b97f4a7c15ULL * (stream + 1);
    child.s_[3] ^= 0xd1b54a32d192ed03ULL * (stream + 1);
    child.next();
    child.next();
    return child;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace rsld
