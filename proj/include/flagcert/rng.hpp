#pragma once

// Seeded generator with a platform-independent bounded mapping.
// Engine: std::mt19937_64 (its output sequence is fixed by the C++ standard).
// uniform(lo, hi): rejection sampling on the raw 64-bit output, then lo + (x mod span).

#include <cstdint>
#include <random>
#include <stdexcept>

namespace flagcert {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  int64_t uniform(int64_t lo, int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(engine_());
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
  }

  uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flagcert
