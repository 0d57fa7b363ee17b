#ifndef MONOKIT_RNG_HPP
#define MONOKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "monokit/scalar.hpp"

namespace monokit {

// Seeded generator for the randomized suites; a given seed fully determines
// every draw.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed = 0) : eng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }

  // Rational with numerator in [-num_range, num_range] and denominator in
  // [1, den_range].
  Rational rational(long long num_range = 64, long long den_range = 16) {
    return Rational(integer(-num_range, num_range), integer(1, den_range));
  }

  std::vector<Rational> rational_vector(int dim, long long num_range = 64,
                                        long long den_range = 16) {
    std::vector<Rational> v(dim);
    for (auto& x : v) x = rational(num_range, den_range);
    return v;
  }

  std::vector<double> double_vector(int dim, double lo, double hi) {
    std::vector<double> v(dim);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  // Magnitude bounded away from zero; used where finite differences would
  // lose accuracy near coordinate hyperplanes.
  std::vector<double> double_vector_bounded_away(int dim, double lo_mag, double hi_mag) {
    std::vector<double> v(dim);
    for (auto& x : v) x = (integer(0, 1) ? 1.0 : -1.0) * uniform(lo_mag, hi_mag);
    return v;
  }
};

}  // namespace monokit

#endif
