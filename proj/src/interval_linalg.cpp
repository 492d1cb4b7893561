#include "ksolve/interval_linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ksolve/kernels.hpp"

namespace ksolve {

IntervalVector::IntervalVector(std::initializer_list<KInterval> entries) {
  lo_.reserve(entries.size());
  hi_.reserve(entries.size());
  for (const KInterval& v : entries) {
    lo_.push_back(v.lo());
    hi_.push_back(v.hi());
  }
}

KInterval IntervalVector::at(std::size_t i) const {
  if (i >= size()) throw ShapeError("IntervalVector: index out of range");
  return (*this)[i];
}

void IntervalVector::set(std::size_t i, const KInterval& v) {
  if (i >= size()) throw ShapeError("IntervalVector: index out of range");
  lo_[i] = v.lo();
  hi_[i] = v.hi();
}

IntervalMatrix::IntervalMatrix(
    std::initializer_list<std::initializer_list<KInterval>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  lo_.reserve(rows_ * cols_);
  hi_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw ShapeError("IntervalMatrix: ragged initializer");
    }
    for (const KInterval& v : row) {
      lo_.push_back(v.lo());
      hi_.push_back(v.hi());
    }
  }
}

void IntervalMatrix::set(std::size_t i, std::size_t j, const KInterval& v) {
  if (i >= rows_ || j >= cols_) {
    throw ShapeError("IntervalMatrix: index out of range");
  }
  lo_[i * cols_ + j] = v.lo();
  hi_[i * cols_ + j] = v.hi();
}

IntervalVector mat_vec(const IntervalMatrix& a, const IntervalVector& x) {
  if (a.cols() != x.size()) throw ShapeError("mat_vec: shape mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  IntervalVector out(m);
  std::vector<double> plo(n), phi(n);
  for (std::size_t i = 0; i < m; ++i) {
    kernels::mul_batch(a.row_lo(i), a.row_hi(i), x.lo_data(), x.hi_data(),
                       plo.data(), phi.data(), n);
    double slo = 0.0, shi = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      slo += plo[j];
      shi += phi[j];
    }
    out.set(i, KInterval(slo, shi));
  }
  return out;
}

IntervalVector vec_ominus(const IntervalVector& u, const IntervalVector& v) {
  if (u.size() != v.size()) throw ShapeError("vec_ominus: shape mismatch");
  const std::size_t n = u.size();
  IntervalVector out(n);
  std::vector<double> rlo(n), rhi(n);
  kernels::ominus_batch(u.lo_data(), u.hi_data(), v.lo_data(), v.hi_data(),
                        rlo.data(), rhi.data(), n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, KInterval(rlo[i], rhi[i]));
  return out;
}

IntervalVector vec_dual(const IntervalVector& u) {
  IntervalVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.set(i, dual(u[i]));
  return out;
}

IntervalMatrix mat_dual(const IntervalMatrix& a) {
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, dual(a.at(i, j)));
  return out;
}

RealMatrix mag_matrix(const IntervalMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mag(a.at(i, j));
  return out;
}

RealMatrix mid_matrix(const IntervalMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mid(a.at(i, j));
  return out;
}

RealVector mid_vec(const IntervalVector& b) {
  RealVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mid(b[i]);
  return out;
}

RealVector rad_vec(const IntervalVector& b) {
  RealVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = rad(b[i]);
  return out;
}

RealVector Dist(const IntervalVector& u, const IntervalVector& v) {
  if (u.size() != v.size()) throw ShapeError("Dist: shape mismatch");
  RealVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = dist(u[i], v[i]);
  return out;
}

double residual(const IntervalMatrix& a, const IntervalVector& x,
                const IntervalVector& b) {
  if (a.rows() != b.size()) throw ShapeError("residual: shape mismatch");
  const IntervalVector ax = mat_vec(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) r = std::max(r, dist(ax[i], b[i]));
  return r;
}

IntervalMatrix point_matrix(const RealMatrix& m) {
  IntervalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i, j, KInterval(m(i, j), m(i, j)));
  return out;
}

IntervalMatrix permute_rows(const IntervalMatrix& a,
                            const std::vector<std::size_t>& perm) {
  if (perm.size() != a.rows()) throw ShapeError("permute_rows: shape mismatch");
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.set(i, j, a.at(perm[i], j));
  return out;
}

IntervalVector permute(const IntervalVector& v,
                       const std::vector<std::size_t>& perm) {
  if (perm.size() != v.size()) throw ShapeError("permute: shape mismatch");
  IntervalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[perm[i]]);
  return out;
}

}  // namespace ksolve
