#pragma once

#include <doctest.h>

#include <map>
#include <vector>

#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/sampling.hpp"

namespace braidrep::test {

// Dense coefficient vector with a fixed offset, used as an oracle that shares
// no code with the sparse map representation.
struct Dense {
  long offset = 0;
  std::vector<Integer> c;
};

inline Dense to_dense(const LaurentPoly& f) {
  Dense d;
  if (f.is_zero()) return d;
  d.offset = static_cast<long>(f.min_exponent());
  d.c.assign(static_cast<std::size_t>(f.max_exponent() - f.min_exponent() + 1), Integer(0));
  for (const auto& [e, k] : f.terms()) d.c[static_cast<std::size_t>(e - f.min_exponent())] = k;
  return d;
}

inline LaurentPoly from_dense(const Dense& d) {
  LaurentPoly f;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] != 0) f += LaurentPoly::monomial(d.c[i], d.offset + static_cast<long>(i));
  return f;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r;
  if (a.c.empty() || b.c.empty()) return r;
  r.offset = a.offset + b.offset;
  r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

inline Matrix<Rational> random_matrix(Sampler& rng, std::size_t rows, std::size_t cols, long bound = 4) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(bound, 3);
  return m;
}

// Cofactor expansion; exponential, only for small matrices.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace braidrep::test
