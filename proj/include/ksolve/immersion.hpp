#pragma once

#include "ksolve/interval_linalg.hpp"
#include "ksolve/real_linalg.hpp"

namespace ksolve {

// sti maps an interval n-vector to the real 2n-vector
// (-lo_1, ..., -lo_n, hi_1, ..., hi_n); sti_inv maps back.
RealVector sti(const IntervalVector& x);
IntervalVector sti_inv(const RealVector& y);

// Nonnegative 2n x 2n block matrix (Q+ Q- / Q- Q+) acting on sti images the
// way Q acts on interval vectors.
struct ExtendedMultiplier {
  RealMatrix matrix;
};

ExtendedMultiplier extended_multiplier(const RealMatrix& q);

struct AbsoluteRegularity {
  bool regular = false;
  bool matrix_nonsingular = false;
  bool magnitude_nonsingular = false;
};

// Q is absolutely regular when Q and |Q| are both nonsingular; equivalently
// the extended multiplier of Q is nonsingular.
AbsoluteRegularity is_absolutely_regular(const RealMatrix& q, double tol = 1e-12);

// Exact formal solution of a point system A x = b through the immersion.
IntervalVector solve_point_system(const RealMatrix& a, const IntervalVector& b);

// Equivalent midpoint/radius form: A mid(x) = mid(b), |A| rad(x) = rad(b).
IntervalVector markov_solve(const RealMatrix& a, const IntervalVector& b);

// Componentwise distance of two sti images, indexed like interval vectors:
// zeta_i = zeta_{i+n} = max(|x_i - y_i|, |x_{i+n} - y_{i+n}|).
RealVector zeta(const RealVector& x, const RealVector& y);

}  // namespace ksolve
