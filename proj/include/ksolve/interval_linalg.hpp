#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ksolve/interval.hpp"
#include "ksolve/real_linalg.hpp"

namespace ksolve {

// Vectors and matrices store lo/hi endpoint lanes separately (matrices
// row-major) so rows feed the batched kernels directly.
class IntervalVector {
 public:
  IntervalVector() = default;
  explicit IntervalVector(std::size_t n) : lo_(n, 0.0), hi_(n, 0.0) {}
  IntervalVector(std::initializer_list<KInterval> entries);

  std::size_t size() const { return lo_.size(); }

  KInterval operator[](std::size_t i) const { return {lo_[i], hi_[i]}; }
  KInterval at(std::size_t i) const;
  void set(std::size_t i, const KInterval& v);

  const double* lo_data() const { return lo_.data(); }
  const double* hi_data() const { return hi_.data(); }

  friend bool operator==(const IntervalVector& a, const IntervalVector& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  std::vector<double> lo_, hi_;
};

class IntervalMatrix {
 public:
  IntervalMatrix() = default;
  IntervalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), lo_(rows * cols, 0.0), hi_(rows * cols, 0.0) {}
  IntervalMatrix(std::initializer_list<std::initializer_list<KInterval>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  KInterval at(std::size_t i, std::size_t j) const {
    return {lo_[i * cols_ + j], hi_[i * cols_ + j]};
  }
  void set(std::size_t i, std::size_t j, const KInterval& v);

  const double* row_lo(std::size_t i) const { return lo_.data() + i * cols_; }
  const double* row_hi(std::size_t i) const { return hi_.data() + i * cols_; }

  friend bool operator==(const IntervalMatrix& a, const IntervalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.lo_ == b.lo_ &&
           a.hi_ == b.hi_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> lo_, hi_;
};

// Row sums accumulate left to right in index order; every code path that
// forms a matrix-vector product goes through this one routine.
IntervalVector mat_vec(const IntervalMatrix& a, const IntervalVector& x);

IntervalVector vec_ominus(const IntervalVector& u, const IntervalVector& v);
IntervalVector vec_dual(const IntervalVector& u);
IntervalMatrix mat_dual(const IntervalMatrix& a);

RealMatrix mag_matrix(const IntervalMatrix& a);
RealMatrix mid_matrix(const IntervalMatrix& a);
RealVector mid_vec(const IntervalVector& b);
RealVector rad_vec(const IntervalVector& b);

RealVector Dist(const IntervalVector& u, const IntervalVector& v);
double residual(const IntervalMatrix& a, const IntervalVector& x,
                const IntervalVector& b);

IntervalMatrix point_matrix(const RealMatrix& m);
IntervalMatrix permute_rows(const IntervalMatrix& a,
                            const std::vector<std::size_t>& perm);
IntervalVector permute(const IntervalVector& v,
                       const std::vector<std::size_t>& perm);

}  // namespace ksolve
