#pragma once

#include <cstdint>
#include <random>

#include "braidrep/laurent.hpp"

namespace braidrep {

/// BRAIDREP_SEED from the environment, 0 when unset or unparsable.
std::uint64_t env_seed();

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = env_seed()) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }

  long uniform(long lo, long hi);
  /// num/den with |num| <= num_bound, 1 <= den <= den_bound.
  Rational rational(long num_bound = 9, long den_bound = 5);
  Rational nonzero_rational(long num_bound = 9, long den_bound = 5);
  /// Up to max_terms terms, exponents in [-exp_bound, exp_bound].
  LaurentPoly laurent(int max_terms = 3, int exp_bound = 3, long coeff_bound = 5);
  LaurentPoly nonzero_laurent(int max_terms = 3, int exp_bound = 3, long coeff_bound = 5);

 private:
  std::mt19937_64 rng_;
};

}  // namespace braidrep
