#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ksolve/immersion.hpp"
#include "ksolve/interval_linalg.hpp"
#include "ksolve/report.hpp"

namespace ksolve {

// A = G + H with a point matrix G whose extended multiplier is invertible.
// dual_mask marks entries whose argument is dualized when H is applied.
struct PointSplitting {
  RealMatrix G;
  IntervalMatrix H;
  std::vector<std::uint8_t> dual_mask;
  RealMatrix Gext_inv;

  bool dualized(std::size_t i, std::size_t j) const {
    return dual_mask[i * G.cols() + j] != 0;
  }
};

PointSplitting arm_split_simple(const IntervalMatrix& a);
PointSplitting arm_split_markov(const IntervalMatrix& a);

// Row i of the result is sum_j H_ij * x_j, with x_j dualized where the mask
// says so.
IntervalVector apply_H(const PointSplitting& split, const IntervalVector& x);

struct ArmCriterion {
  double rho = 0.0;
  bool satisfied = false;
};

ArmCriterion arm_convergence_criterion(const PointSplitting& split);

std::pair<IntervalVector, SolveReport> arm_iterate(
    const IntervalMatrix& a, const IntervalVector& b,
    const PointSplitting& split,
    const std::optional<IntervalVector>& x0 = std::nullopt, double tol = 1e-10,
    std::size_t max_iter = 500);

// Row-permuted decomposition A = G + H with G the upper triangle including
// the diagonal and H the strict lower triangle.
struct TriangularSplitting {
  std::vector<std::size_t> perm;
  IntervalMatrix G;
  IntervalMatrix H;
};

TriangularSplitting trn_split(const IntervalMatrix& a);

std::pair<IntervalVector, SolveReport> trn_iterate(
    const IntervalMatrix& a, const IntervalVector& b,
    const TriangularSplitting& split,
    const std::optional<IntervalVector>& x0 = std::nullopt, double tol = 1e-10,
    std::size_t max_iter = 500);

struct TrnCriterion {
  double rho_Q = 0.0;
  RealVector s;
  bool diag_dominant = false;
  bool satisfied = false;
};

// Evaluated on the already-permuted matrix.
TrnCriterion trn_convergence_criterion(const IntervalMatrix& a_permuted);

// Componentwise bound ((I-Q)^-1 - sum_{j<k} Q^j) d01 on the distance between
// iterate k and the fixed point, valid when rho(Q) < 1.
RealVector trn_error_bound(const RealMatrix& q, const RealVector& d01,
                           std::size_t k);

}  // namespace ksolve
