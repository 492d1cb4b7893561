#pragma once

#include <cstddef>
#include <vector>

#include "ksolve/errors.hpp"

namespace ksolve {

using RealVector = std::vector<double>;

class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RealMatrix& a, const RealMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealVector operator*(const RealMatrix& a, const RealVector& v);

// Matrix-vector product with compensated (Neumaier) row sums. Fixed-point
// iterations multiply by rows whose absolute mass is far larger than the
// result, and the plain product's rounding then floors the attainable
// residual; compensation keeps that floor near machine precision.
RealVector compensated_mul(const RealMatrix& a, const RealVector& v);

RealMatrix elementwise_abs(const RealMatrix& a);
double inf_norm(const RealVector& v);

// Combined L\U factors with scaled partial pivoting. A pivot below
// tol * (row scale) marks the matrix singular; solves then refuse to run.
struct LUFactors {
  RealMatrix lu;
  std::vector<std::size_t> perm;
  bool singular = false;
};

LUFactors lu_factor(const RealMatrix& a, double tol = 1e-12);
RealVector lu_solve(const LUFactors& f, const RealVector& b);
RealVector lu_solve(const RealMatrix& a, const RealVector& b, double tol = 1e-12);
RealMatrix inverse(const RealMatrix& a, double tol = 1e-12);

std::size_t numerical_rank(const RealMatrix& a, double tol = 1e-12);

struct SpectralRadiusEstimate {
  double value = 0.0;
  bool converged = false;
};

// Power iteration from the all-ones vector with infinity-norm ratios. A
// vanishing iterate reports zero; a non-converged run reports the largest
// ratio seen with converged = false.
SpectralRadiusEstimate spectral_radius(const RealMatrix& m, double tol = 1e-12,
                                       std::size_t max_iter = 10000);

}  // namespace ksolve
