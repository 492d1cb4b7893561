#include "ksolve/newton.hpp"

#include <cmath>

namespace ksolve {

RealVector induced_phi(const IntervalMatrix& a, const IntervalVector& b,
                       const RealVector& y) {
  if (a.rows() != a.cols() || a.rows() != b.size() || y.size() != 2 * b.size()) {
    throw ShapeError("induced_phi: shape mismatch");
  }
  return sti(vec_ominus(mat_vec(a, sti_inv(y)), b));
}

RealMatrix subgradient(const IntervalMatrix& a, const RealVector& y) {
  if (a.rows() != a.cols() || y.size() != 2 * a.rows()) {
    throw ShapeError("subgradient: shape mismatch");
  }
  const std::size_t n = a.rows();
  RealMatrix d(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xlo = -y[j];
    const double xhi = y[n + j];
    const RealParts xl = real_parts(xlo);
    const RealParts xh = real_parts(xhi);
    for (std::size_t i = 0; i < n; ++i) {
      const KInterval aij = a.at(i, j);
      double dl_dxlo, dl_dxhi, dh_dxlo, dh_dxhi;
      if (aij.lo() == aij.hi()) {
        // Point entry: the product is linear in x and the derivative block
        // is exactly the extended multiplier of the scalar.
        const RealParts q = real_parts(aij.lo());
        dl_dxlo = q.pos;
        dl_dxhi = -q.neg;
        dh_dxlo = -q.neg;
        dh_dxhi = q.pos;
      } else {
        const RealParts al = real_parts(aij.lo());
        const RealParts ah = real_parts(aij.hi());
        const bool lo_first = al.pos * xl.pos >= ah.neg * xh.neg;
        const bool lo_second = ah.pos * xl.neg >= al.neg * xh.pos;
        const bool hi_first = ah.pos * xh.pos >= al.neg * xl.neg;
        const bool hi_second = al.pos * xh.neg >= ah.neg * xl.pos;
        dl_dxlo = (lo_first ? al.pos * (xlo > 0.0 ? 1.0 : 0.0) : 0.0) +
                  (lo_second ? ah.pos * (xlo < 0.0 ? 1.0 : 0.0) : 0.0);
        dl_dxhi = (lo_first ? 0.0 : -ah.neg * (xhi < 0.0 ? 1.0 : 0.0)) -
                  (lo_second ? 0.0 : al.neg * (xhi > 0.0 ? 1.0 : 0.0));
        dh_dxhi = (hi_first ? ah.pos * (xhi > 0.0 ? 1.0 : 0.0) : 0.0) +
                  (hi_second ? al.pos * (xhi < 0.0 ? 1.0 : 0.0) : 0.0);
        dh_dxlo = (hi_first ? 0.0 : -al.neg * (xlo < 0.0 ? 1.0 : 0.0)) -
                  (hi_second ? 0.0 : ah.neg * (xlo > 0.0 ? 1.0 : 0.0));
      }
      d(i, j) += dl_dxlo;
      d(i, n + j) += -dl_dxhi;
      d(n + i, j) += -dh_dxlo;
      d(n + i, n + j) += dh_dxhi;
    }
  }
  return d;
}

std::pair<IntervalVector, SolveReport> newton_solve(const IntervalMatrix& a,
                                                    const IntervalVector& b,
                                                    const NewtonOptions& opts) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw ShapeError("newton_solve: shape mismatch");
  }
  if (!(opts.tau > 0.0) || opts.tau > 1.0) {
    throw Error("newton_solve: tau must lie in (0, 1]");
  }

  const ExtendedMultiplier mid_ext = extended_multiplier(mid_matrix(a));
  const LUFactors start = lu_factor(mid_ext.matrix);
  if (start.singular) {
    throw StartFailureError(
        "newton_solve: extended midpoint matrix is singular");
  }
  RealVector y = lu_solve(start, sti(b));

  SolveReport report;
  RealVector phi = induced_phi(a, b, y);
  report.residual = inf_norm(phi);

  for (std::size_t k = 1; k <= opts.max_iter; ++k) {
    const RealMatrix d = subgradient(a, y);
    const LUFactors f = lu_factor(d);
    if (f.singular) {
      report.status = SolveStatus::SingularStep;
      return {sti_inv(y), report};
    }
    const RealVector step = lu_solve(f, phi);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= opts.tau * step[i];

    phi = induced_phi(a, b, y);
    report.iterations = k;
    report.residual = inf_norm(phi);
    report.history.push_back(report.residual);
    if (report.residual <= opts.tol) {
      report.status = SolveStatus::Converged;
      return {sti_inv(y), report};
    }
  }
  report.status = SolveStatus::MaxIterations;
  return {sti_inv(y), report};
}

}  // namespace ksolve
