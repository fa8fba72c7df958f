#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moplab {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

// Division-free determinant by row expansion with memoized column-subset minors
// (n * 2^n multiplications); zero entries are skipped.
template <class F>
F determinant(const Matrix<F>& m) {
  const size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (n == 0) return F(1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");
  const uint32_t full = (1u << n) - 1;
  std::vector<F> minor(static_cast<size_t>(full) + 1, F(0));
  std::vector<bool> known(static_cast<size_t>(full) + 1, false);
  minor[0] = F(1);
  known[0] = true;
  // process masks in order of popcount
  std::vector<std::vector<uint32_t>> by_count(n + 1);
  for (uint32_t mask = 1; mask <= full; ++mask) by_count[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  for (size_t k = 1; k <= n; ++k) {
    size_t row = n - k;
    for (uint32_t mask : by_count[k]) {
      F acc(0);
      int pos = 0;
      for (size_t c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const F& entry = m(row, c);
        uint32_t rest = mask & ~(1u << c);
        if (!entry.is_zero() && !minor[rest].is_zero()) {
          F t = entry * minor[rest];
          acc = (pos % 2 == 0) ? acc + t : acc - t;
        }
        ++pos;
      }
      minor[mask] = std::move(acc);
    }
  }
  return minor[full];
}

struct NonInvertibleDiagonal : std::domain_error {
  using std::domain_error::domain_error;
};

// Inverse of a lower-triangular matrix by forward substitution.
template <class F>
Matrix<F> lower_triangular_inverse(const Matrix<F>& L) {
  const size_t n = L.rows();
  Matrix<F> inv(n, n);
  std::vector<F> dinv;
  for (size_t i = 0; i < n; ++i) {
    if (L(i, i).is_zero()) throw NonInvertibleDiagonal("zero diagonal entry in triangular matrix");
    dinv.push_back(F(1) / L(i, i));
  }
  for (size_t j = 0; j < n; ++j) {
    inv(j, j) = dinv[j];
    for (size_t i = j + 1; i < n; ++i) {
      F acc(0);
      for (size_t k = j; k < i; ++k)
        if (!L(i, k).is_zero() && !inv(k, j).is_zero()) acc = acc + L(i, k) * inv(k, j);
      inv(i, j) = -(acc * dinv[i]);
    }
  }
  return inv;
}

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

// Gauss-Jordan inverse over a field (first nonzero pivot).
template <class F>
Matrix<F> inverse(Matrix<F> a) {
  const size_t n = a.rows();
  Matrix<F> inv(n, n);
  for (size_t i = 0; i < n; ++i) inv(i, i) = F(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw SingularMatrix("inverse: singular matrix");
    if (p != c)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    F piv = F(1) / a(c, c);
    for (size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * piv;
      inv(c, j) = inv(c, j) * piv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      F f = a(r, c);
      for (size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) = a(r, j) - f * a(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace moplab
