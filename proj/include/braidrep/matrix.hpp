#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/entry_traits.hpp"
#include "braidrep/errors.hpp"

namespace braidrep {

/// Dense row-major matrix over one exact entry domain (LaurentPoly,
/// RationalFunction, Rational or the solver's MultiPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeMismatch("ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& data() const noexcept { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!entry_is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("elementwise op on different shapes");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (entry_is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!entry_is_zero(b(k, j))) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace detail {

template <class T>
T exact_div(const T& a, const T& b) {
  auto q = entry_traits<T>::try_div(a, b);
  if (!q) throw std::logic_error("inexact division inside fraction-free elimination");
  return *q;
}

// Bareiss fraction-free elimination on a copy of m. Returns the rank and,
// when m is square, the determinant (zero if rank deficient). Every
// division is exact in any integral domain.
template <class T>
std::pair<std::size_t, T> bareiss(Matrix<T> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  T prev(1);
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && entry_is_zero(m(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(piv, c), m(rank, c));
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m(r, c) = exact_div(T(m(rank, col) * m(r, c) - m(r, col) * m(rank, c)), prev);
      m(r, col) = T(0);
    }
    prev = m(rank, col);
    ++rank;
  }
  T det(0);
  if (rows == cols && rank == rows) det = sign < 0 ? T(-prev) : prev;
  return {rank, det};
}

}  // namespace detail

template <class T>
T mat_det(const Matrix<T>& a) {
  if (!a.is_square()) throw NotSquare("determinant of a non-square matrix");
  if (a.rows() == 0) return T(1);
  return detail::bareiss(a).second;
}

template <class T>
std::size_t mat_rank(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return detail::bareiss(a).first;
}

/// Column-vector basis of a subspace of F^dim.
template <class F>
struct Subspace {
  std::size_t ambient = 0;
  std::vector<std::vector<F>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }

  Matrix<F> as_columns() const {
    Matrix<F> m(ambient, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < ambient; ++i) m(i, j) = basis[j][i];
    return m;
  }

  bool contains(const std::vector<F>& v) const {
    Matrix<F> m(ambient, basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < ambient; ++i) m(i, j) = basis[j][i];
    for (std::size_t i = 0; i < ambient; ++i) m(i, basis.size()) = v[i];
    return mat_rank(m) == basis.size();
  }
};

template <class F>
std::vector<F> mat_apply(const Matrix<F>& a, const std::vector<F>& v) {
  if (a.cols() != v.size()) throw ShapeMismatch("matrix-vector size mismatch");
  std::vector<F> out(a.rows(), F(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  static_assert(entry_traits<F>::is_field, "rref needs field entries");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && entry_is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || entry_is_zero(m(r, col))) continue;
      const F k = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= k * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
Subspace<F> mat_nullspace(const Matrix<F>& a) {
  Matrix<F> m = a;
  const auto pivots = rref_in_place(m);
  Subspace<F> ns;
  ns.ambient = a.cols();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t freecol = 0; freecol < a.cols(); ++freecol) {
    if (is_pivot[freecol]) continue;
    std::vector<F> v(a.cols(), F(0));
    v[freecol] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, freecol);
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

/// Inverse over a field (Gauss-Jordan) or over Z[t^{+-1}] (adjugate divided
/// by a unit determinant).
template <class T>
Matrix<T> mat_inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw NotSquare("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if constexpr (entry_traits<T>::is_field) {
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
      aug(i, n + i) = T(1);
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw NotInvertible("determinant is 0");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  } else {
    const T det = mat_det(a);
    if (entry_is_zero(det)) throw NotInvertible("determinant is 0");
    const auto det_inv = det.unit_inverse();
    if (!det_inv) throw NotUnitDeterminant("determinant " + entry_str(det) + " is not a unit");
    Matrix<T> inv(n, n);
    if (n == 1) {
      inv(0, 0) = *det_inv;
      return inv;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == i) continue;
            minor(mr, mc++) = a(r, c);
          }
          ++mr;
        }
        T cof = mat_det(minor);
        if ((i + j) % 2) cof = -cof;
        inv(i, j) = cof * *det_inv;
      }
    return inv;
  }
}

/// I_{i-1} (+) block (+) I_{n-i-k+1}: the local embedding of a k x k block at
/// strand position i (1-based). For the 2x2 blocks used here this is
/// I_{i-1} (+) block (+) I_{n-i-1}; the F-representation's 3x3 block sits in
/// dimension n+1, so the ambient size is passed explicitly.
template <class T>
Matrix<T> block_embed(const Matrix<T>& block, std::size_t i, std::size_t dim) {
  if (!block.is_square()) throw NotSquare("block must be square");
  const std::size_t k = block.rows();
  if (i < 1 || i + k - 1 > dim)
    throw IndexOutOfRange("block position " + std::to_string(i) + " does not fit in dimension " + std::to_string(dim));
  Matrix<T> m = Matrix<T>::identity(dim);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(i - 1 + r, i - 1 + c) = block(r, c);
  return m;
}

template <class T>
std::vector<T> vectorize(const Matrix<T>& m) {
  return m.data();
}

template <class T>
std::string matrix_str(const Matrix<T>& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : m.data()) {
    cells.push_back(entry_str(x));
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& s = cells[r * m.cols() + c];
      out += std::string(width - s.size(), ' ') + s + (c + 1 < m.cols() ? "  " : " ");
    }
    out += "]\n";
  }
  return out;
}

}  // namespace braidrep
