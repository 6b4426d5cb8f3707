#ifndef POLYHARM_TEST_UTIL_HPP
#define POLYHARM_TEST_UTIL_HPP

#include <cstdint>

#include "polyharm/polynomial.hpp"

// Deterministic RNG for reproducible property tests; fixed algorithm so the
// same seeds fail the same way on every platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline polyharm::Rational random_rational(SplitMix64& rng, long max_num = 9, long max_den = 4) {
  return polyharm::Rational(rng.range(-max_num, max_num), rng.range(1, max_den));
}

inline polyharm::Polynomial<polyharm::Rational> random_poly(SplitMix64& rng, int max_degree,
                                                            int terms) {
  polyharm::Polynomial<polyharm::Rational> p;
  for (int t = 0; t < terms; ++t) {
    polyharm::Monomial m;
    int budget = max_degree;
    for (int i = 0; i < 3; ++i) {
      m.e[i] = static_cast<int>(rng.range(0, budget));
      budget -= m.e[i];
    }
    p.add_term(m, random_rational(rng));
  }
  return p;
}

#endif
