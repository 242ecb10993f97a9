#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <vector>

#include "signet/errors.hpp"
#include "signet/rational.hpp"

namespace signet {

/// Dense matrix over exact rationals. Used wherever a verdict must not depend
/// on floating-point rank decisions: Laplacians of rational-weight graphs,
/// controllability matrices, Kalman ranks and determinants.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static RatMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    RatMat m(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (long long v : row) m(i, j++) = Rational(BigInt(v));
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw ValidationError("rational matrix product: dimension mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a.numerator() == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  RatMat operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("rational matrix difference: dimension mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  RatMat transpose() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v.numerator() != 0) return false;
    return true;
  }

  /// Exact rank by Gaussian elimination over the rationals.
  int rank() const {
    RatMat work = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int pivot = -1;
      for (int r = rank; r < rows_; ++r)
        if (work(r, col).numerator() != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != rank)
        for (int j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(rank, j));
      for (int r = rank + 1; r < rows_; ++r) {
        if (work(r, col).numerator() == 0) continue;
        Rational f = work(r, col) / work(rank, col);
        for (int j = col; j < cols_; ++j) work(r, j) -= f * work(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  /// Exact determinant (square matrices only).
  Rational determinant() const {
    if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
    RatMat work = *this;
    Rational det(1);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int r = col; r < rows_; ++r)
        if (work(r, col).numerator() != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Rational(0);
      if (pivot != col) {
        for (int j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(col, j));
        det = -det;
      }
      det *= work(col, col);
      for (int r = col + 1; r < rows_; ++r) {
        if (work(r, col).numerator() == 0) continue;
        Rational f = work(r, col) / work(col, col);
        for (int j = col; j < cols_; ++j) work(r, j) -= f * work(col, j);
      }
    }
    return det;
  }

  Eigen::MatrixXd to_double() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = signet::to_double((*this)(i, j));
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// [B, AB, ..., A^{n-1}B] in exact arithmetic.
inline RatMat kalman_matrix(const RatMat& a, const RatMat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw ValidationError("controllability matrix: dimension mismatch");
  const int n = a.rows(), q = b.cols();
  RatMat result(n, n * q);
  RatMat block = b;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < q; ++j) result(i, k * q + j) = block(i, j);
    if (k + 1 < n) block = a * block;
  }
  return result;
}

}  // namespace signet
