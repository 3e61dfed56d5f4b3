#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qsl2/scalar.hpp"

namespace qsl2 {

template <class S>
struct FieldTraits {
  static S zero() { return S(); }
  static S one() { return S(1); }
  static bool is_zero(const S& x) { return x.is_zero(); }
  // used only to choose pivots; exact fields need no size preference
  static double pivot_size(const S&) { return 1.0; }
};

template <>
struct FieldTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return std::abs(x) < 1e-11; }
  static double pivot_size(const Complex& x) { return std::abs(x); }
};

/// Dense matrix over a field S, row-major. Column-action convention:
/// M(a,b) is the coefficient of e_a in Z*e_b.
template <class S>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, FieldTraits<S>::zero()) {}
  explicit Mat(int n) : Mat(n, n) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldTraits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int size() const { return rows_; } // square matrices

  S& operator()(int i, int j) { return e_[i * cols_ + j]; }
  const S& operator()(int i, int j) const { return e_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] == o.e_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!FieldTraits<S>::is_zero(x)) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (FieldTraits<S>::is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Mat scaled(const S& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative matrix power");
    Mat r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  S trace() const {
    S s = FieldTraits<S>::zero();
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  /// Gauss-Jordan inverse; throws on singular input.
  Mat inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    Mat a = *this;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        if (FieldTraits<S>::is_zero(a(r, col))) continue;
        const double sz = FieldTraits<S>::pivot_size(a(r, col));
        if (piv < 0 || sz > best) {
          piv = r;
          best = sz;
        }
      }
      if (piv < 0) throw std::domain_error("singular matrix");
      a.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      const S d = a(col, col);
      for (int j = 0; j < n; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || FieldTraits<S>::is_zero(a(r, col))) continue;
        const S f = a(r, col);
        for (int j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  /// Row-reduce in place, returning the rank and recording pivot columns.
  int rref(std::vector<int>* pivot_cols = nullptr) {
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
      int piv = -1;
      double best = 0.0;
      for (int r = lead; r < rows_; ++r) {
        if (FieldTraits<S>::is_zero((*this)(r, col))) continue;
        const double sz = FieldTraits<S>::pivot_size((*this)(r, col));
        if (piv < 0 || sz > best) {
          piv = r;
          best = sz;
        }
      }
      if (piv < 0) continue;
      swap_rows(piv, lead);
      const S d = (*this)(lead, col);
      for (int j = 0; j < cols_; ++j) (*this)(lead, j) /= d;
      for (int r = 0; r < rows_; ++r) {
        if (r == lead || FieldTraits<S>::is_zero((*this)(r, col))) continue;
        const S f = (*this)(r, col);
        for (int j = 0; j < cols_; ++j) (*this)(r, j) -= f * (*this)(lead, j);
      }
      if (pivot_cols) pivot_cols->push_back(col);
      ++lead;
    }
    return lead;
  }

  /// Basis of the right nullspace.
  std::vector<std::vector<S>> nullspace() const {
    Mat a = *this;
    std::vector<int> pivots;
    a.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<S> v(cols_, FieldTraits<S>::zero());
      v[free] = FieldTraits<S>::one();
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> e_;

  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
};

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (FieldTraits<S>::is_zero(a(i, j))) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

using Matrix = Mat<Scalar>;
using CMatrix = Mat<Complex>;

} // namespace qsl2
