#pragma once

#include <cstdint>
#include <random>

#include "ffh/core/ratfunc.hpp"

namespace ffh {

// Seeded generator for test inputs and quasi-check samples. Uses only the
// raw mt19937_64 stream so sequences agree across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  long nonzero(long range) {
    long v = integer(1, range);
    return integer(0, 1) ? v : -v;
  }
  Rational rational(long range) { return make_rational(integer(-range, range), integer(1, range)); }
  QPoly qpoly(int degree, long range) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = integer(-range, range);
    if (degree >= 0) c[degree] = nonzero(range);
    return QPoly(c);
  }
  // Numerator and denominator degrees uniform in [0, max_degree].
  RatFunc ratfunc(int max_degree, long range) {
    QPoly num = qpoly(static_cast<int>(integer(0, max_degree)), range);
    QPoly den = qpoly(static_cast<int>(integer(0, max_degree)), range);
    return RatFunc(num, den);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ffh
