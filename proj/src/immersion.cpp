#include "ksolve/immersion.hpp"

#include <algorithm>
#include <cmath>

namespace ksolve {

RealVector sti(const IntervalVector& x) {
  const std::size_t n = x.size();
  RealVector y(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = -x[i].lo();
    y[n + i] = x[i].hi();
  }
  return y;
}

IntervalVector sti_inv(const RealVector& y) {
  if (y.size() % 2 != 0) throw ShapeError("sti_inv: odd length");
  const std::size_t n = y.size() / 2;
  IntervalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, KInterval(-y[i], y[n + i]));
  return x;
}

ExtendedMultiplier extended_multiplier(const RealMatrix& q) {
  if (q.rows() != q.cols()) {
    throw ShapeError("extended_multiplier: matrix must be square");
  }
  const std::size_t n = q.rows();
  ExtendedMultiplier ext{RealMatrix(2 * n, 2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RealParts p = real_parts(q(i, j));
      ext.matrix(i, j) = p.pos;
      ext.matrix(i, n + j) = p.neg;
      ext.matrix(n + i, j) = p.neg;
      ext.matrix(n + i, n + j) = p.pos;
    }
  }
  return ext;
}

AbsoluteRegularity is_absolutely_regular(const RealMatrix& q, double tol) {
  if (q.rows() != q.cols()) {
    throw ShapeError("is_absolutely_regular: matrix must be square");
  }
  AbsoluteRegularity r;
  r.matrix_nonsingular = !lu_factor(q, tol).singular;
  r.magnitude_nonsingular = !lu_factor(elementwise_abs(q), tol).singular;
  r.regular = r.matrix_nonsingular && r.magnitude_nonsingular;
  return r;
}

IntervalVector solve_point_system(const RealMatrix& a, const IntervalVector& b) {
  if (a.rows() != b.size()) {
    throw ShapeError("solve_point_system: shape mismatch");
  }
  const AbsoluteRegularity reg = is_absolutely_regular(a);
  if (!reg.regular) {
    throw SingularMatrixError(
        "solve_point_system: matrix is not absolutely regular");
  }
  const ExtendedMultiplier ext = extended_multiplier(a);
  return sti_inv(lu_solve(ext.matrix, sti(b)));
}

IntervalVector markov_solve(const RealMatrix& a, const IntervalVector& b) {
  if (a.rows() != b.size()) throw ShapeError("markov_solve: shape mismatch");
  const AbsoluteRegularity reg = is_absolutely_regular(a);
  if (!reg.regular) {
    throw SingularMatrixError("markov_solve: matrix is not absolutely regular");
  }
  const RealVector m = lu_solve(a, mid_vec(b));
  const RealVector r = lu_solve(elementwise_abs(a), rad_vec(b));
  IntervalVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    x.set(i, KInterval(m[i] - r[i], m[i] + r[i]));
  }
  return x;
}

RealVector zeta(const RealVector& x, const RealVector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw ShapeError("zeta: arguments must be sti images of equal length");
  }
  const std::size_t n = x.size() / 2;
  RealVector z(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::max(std::abs(x[i] - y[i]), std::abs(x[n + i] - y[n + i]));
    z[i] = d;
    z[n + i] = d;
  }
  return z;
}

}  // namespace ksolve
