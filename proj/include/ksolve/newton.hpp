#pragma once

#include <cstddef>
#include <utility>

#include "ksolve/immersion.hpp"
#include "ksolve/interval_linalg.hpp"
#include "ksolve/report.hpp"

namespace ksolve {

struct NewtonOptions {
  double tau = 1.0;
  double tol = 1e-12;
  std::size_t max_iter = 100;
};

// Phi(y) = sti(A sti_inv(y) - b), the real 2n-dimensional image of the
// defect. Its infinity norm equals the residual of sti_inv(y).
RealVector induced_phi(const IntervalMatrix& a, const IntervalVector& b,
                       const RealVector& y);

// One subgradient of Phi at y. On the kink set the branch with the first
// listed maximizer is taken, except that point entries of A contribute their
// exact linear block.
RealMatrix subgradient(const IntervalMatrix& a, const RealVector& y);

std::pair<IntervalVector, SolveReport> newton_solve(
    const IntervalMatrix& a, const IntervalVector& b,
    const NewtonOptions& opts = {});

}  // namespace ksolve
