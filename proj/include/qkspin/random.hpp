#pragma once

#include "qkspin/scalar.hpp"

#include <cstdint>
#include <random>

namespace qkspin {

// Seeded source of small exact values. Raw mt19937_64 words reduced with %,
// so sequences are identical on every standard library.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t word() { return eng_(); }
  // uniform-ish integer in [lo, hi]
  long integer(long lo, long hi) { return lo + long(eng_() % uint64_t(hi - lo + 1)); }
  Rational rational(long bound = 3) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  // a + b sqrt2 + c i + d i sqrt2 with small integer parts
  Scalar scalar(long bound = 2) {
    return Scalar(Rational(integer(-bound, bound)), Rational(integer(-bound, bound)),
                  Rational(integer(-bound, bound)), Rational(integer(-bound, bound)));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace qkspin
