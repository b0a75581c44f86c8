#include "braidrep/sampling.hpp"

#include <cstdlib>
#include <string>

namespace braidrep {

std::uint64_t env_seed() {
  const char* s = std::getenv("BRAIDREP_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return 0;
  }
}

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational(long num_bound, long den_bound) {
  Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational(long num_bound, long den_bound) {
  for (;;) {
    Rational q = rational(num_bound, den_bound);
    if (sgn(q) != 0) return q;
  }
}

LaurentPoly Sampler::laurent(int max_terms, int exp_bound, long coeff_bound) {
  LaurentPoly f;
  const long terms = uniform(0, max_terms);
  for (long k = 0; k < terms; ++k)
    f += LaurentPoly::monomial(Integer(uniform(-coeff_bound, coeff_bound)), uniform(-exp_bound, exp_bound));
  return f;
}

LaurentPoly Sampler::nonzero_laurent(int max_terms, int exp_bound, long coeff_bound) {
  for (;;) {
    LaurentPoly f = laurent(max_terms, exp_bound, coeff_bound);
    if (!f.is_zero()) return f;
  }
}

}  // namespace braidrep
