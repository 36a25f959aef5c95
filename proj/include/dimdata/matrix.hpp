#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimdata/rational.hpp"

namespace dimdata {

namespace detail {
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline bool field_is_zero(const GaussRat& x) { return x.is_zero(); }
}  // namespace detail

/// Dense matrix over an exact field (Rat or GaussRat).
template <class F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, F(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const F& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const F& x : data_)
      if (!detail::field_is_zero(x)) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const F& a = at(i, k);
        if (detail::field_is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const F& b = o.at(k, j);
          if (!detail::field_is_zero(b)) p.at(i, j) += a * b;
        }
      }
    return p;
  }

  std::vector<F> operator*(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<F> out(rows_, F(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!detail::field_is_zero(at(i, j))) out[i] += at(i, j) * v[j];
    return out;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat s = *this;
    for (size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
    return s;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat s = *this;
    for (size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
    return s;
  }

  Mat scaled(const F& c) const {
    Mat s = *this;
    for (F& x : s.data_) x *= c;
    return s;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// In-place row reduction to reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!detail::field_is_zero(at(i, c))) { p = i; break; }
      if (p < 0) continue;
      swap_rows(p, r);
      F inv = F(1) / at(r, c);
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || detail::field_is_zero(at(i, c))) continue;
        F f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<F>> kernel_basis() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<F> v(cols_, F(0));
      v[c] = F(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  F det() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Mat m = *this;
    F d(1);
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i)
        if (!detail::field_is_zero(m.at(i, c))) { p = i; break; }
      if (p < 0) return F(0);
      if (p != c) { m.swap_rows(p, c); d = -d; }
      d *= m.at(c, c);
      F inv = F(1) / m.at(c, c);
      for (int i = c + 1; i < rows_; ++i) {
        if (detail::field_is_zero(m.at(i, c))) continue;
        F f = m.at(i, c) * inv;
        for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return d;
  }

  Mat inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = F(1);
    }
    if (static_cast<int>(aug.rref().size()) != cols_) throw std::domain_error("matrix is singular");
    Mat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<F> data_;
};

/// Row-major sparse matrix over the rationals; used where dense storage
/// would be wasteful (adjoint operators of high-rank algebras).
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> row;  // (col, value), columns ascending

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

  void add(int i, int j, Rat v) {
    if (v == 0) return;
    row[i].emplace_back(j, std::move(v));
  }

  void sort_rows();
  size_t nnz() const {
    size_t n = 0;
    for (const auto& r : row) n += r.size();
    return n;
  }
  Mat<Rat> to_dense() const {
    Mat<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (const auto& [j, v] : row[i]) m.at(i, j) += v;
    return m;
  }
};

/// Incremental exact Gaussian elimination for large sparse homogeneous
/// systems. Rows are fed one at a time; only the rank is retained.
class SparseEliminator {
 public:
  explicit SparseEliminator(int num_cols) : num_cols_(num_cols) {}

  /// Reduces the row against current pivots and absorbs it if independent.
  void add_row(std::vector<std::pair<int, Rat>> terms);

  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  int num_cols() const { return num_cols_; }
  int nullity() const { return num_cols_ - rank(); }

 private:
  int num_cols_;
  std::unordered_map<int, int> pivot_of_col_;               // leading col -> index into pivot_rows_
  std::vector<std::vector<std::pair<int, Rat>>> pivot_rows_;  // normalized, leading coeff 1
};

}  // namespace dimdata
