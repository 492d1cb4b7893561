#include "ksolve/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ksolve/kernels.hpp"

namespace ksolve {

namespace {

constexpr double kIterateCap = 1e12;
constexpr double kGrowthFactor = 10.0;
constexpr int kGrowthWindow = 50;
constexpr double kRetryStep = 1e-3;
constexpr int kMaxRetries = 10;

void require_square(const IntervalMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw ShapeError(std::string(who) + ": matrix must be square");
  }
}

// Deterministic per-entry weights in (0, 1], distinct across entries. A
// uniform rescaling of G cannot leave the singular set, so retries perturb
// each entry by a different factor.
double entry_weight(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t m = n * n;
  return static_cast<double>((i * n + j) % m + 1) / static_cast<double>(m);
}

// direction -1 shrinks entries toward zero, +1 pushes them away from it;
// zero entries stay zero either way.
RealMatrix perturbed_candidate(const RealMatrix& g0, int attempt,
                               double direction) {
  const std::size_t n = g0.rows();
  const double delta = kRetryStep * std::ldexp(1.0, attempt - 1);
  RealMatrix g = g0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) *= 1.0 + direction * delta * entry_weight(i, j, n);
    }
  }
  return g;
}

PointSplitting finish_point_splitting(const IntervalMatrix& a,
                                      const RealMatrix& g0, bool markov) {
  const std::size_t n = a.rows();
  const double direction = markov ? 1.0 : -1.0;
  RealMatrix g = g0;
  for (int attempt = 0; ; ++attempt) {
    const ExtendedMultiplier ext = extended_multiplier(g);
    if (!lu_factor(ext.matrix).singular) {
      PointSplitting s;
      s.G = g;
      s.H = IntervalMatrix(n, n);
      s.dual_mask.assign(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const KInterval aij = a.at(i, j);
          const double gij = g(i, j);
          s.H.set(i, j, KInterval(aij.lo() - gij, aij.hi() - gij));
          if (markov && gij != 0.0) s.dual_mask[i * n + j] = 1;
        }
      }
      s.Gext_inv = inverse(ext.matrix);
      return s;
    }
    if (attempt == kMaxRetries) {
      throw SplittingError(
          "point summand is not absolutely regular after retries");
    }
    g = perturbed_candidate(g0, attempt + 1, direction);
  }
}

struct Divergence {
  double res_min = std::numeric_limits<double>::infinity();
  int growth = 0;

  bool update(double res) {
    if (res < res_min) res_min = res;
    if (res > kGrowthFactor * res_min) {
      if (++growth >= kGrowthWindow) return true;
    } else {
      growth = 0;
    }
    return false;
  }
};

}  // namespace

PointSplitting arm_split_simple(const IntervalMatrix& a) {
  require_square(a, "arm_split_simple");
  RealMatrix g0(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      g0(i, j) = floor_point(a.at(i, j));
  return finish_point_splitting(a, g0, false);
}

PointSplitting arm_split_markov(const IntervalMatrix& a) {
  require_square(a, "arm_split_markov");
  RealMatrix g0(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      g0(i, j) = ceil_point(a.at(i, j));
  return finish_point_splitting(a, g0, true);
}

IntervalVector apply_H(const PointSplitting& split, const IntervalVector& x) {
  const std::size_t n = x.size();
  if (split.H.rows() != n || split.H.cols() != n) {
    throw ShapeError("apply_H: shape mismatch");
  }
  IntervalVector out(n);
  std::vector<double> xlo(n), xhi(n), plo(n), phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const KInterval xj = x[j];
      if (split.dualized(i, j)) {
        xlo[j] = xj.hi();
        xhi[j] = xj.lo();
      } else {
        xlo[j] = xj.lo();
        xhi[j] = xj.hi();
      }
    }
    kernels::mul_batch(split.H.row_lo(i), split.H.row_hi(i), xlo.data(),
                       xhi.data(), plo.data(), phi.data(), n);
    double slo = 0.0, shi = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      slo += plo[j];
      shi += phi[j];
    }
    out.set(i, KInterval(slo, shi));
  }
  return out;
}

ArmCriterion arm_convergence_criterion(const PointSplitting& split) {
  const RealMatrix m =
      elementwise_abs(split.Gext_inv) *
      extended_multiplier(mag_matrix(split.H)).matrix;
  const SpectralRadiusEstimate r = spectral_radius(m);
  return {r.value, r.converged && r.value < 1.0};
}

std::pair<IntervalVector, SolveReport> arm_iterate(
    const IntervalMatrix& a, const IntervalVector& b,
    const PointSplitting& split, const std::optional<IntervalVector>& x0,
    double tol, std::size_t max_iter) {
  require_square(a, "arm_iterate");
  const std::size_t n = a.rows();
  if (b.size() != n || split.H.rows() != n) {
    throw ShapeError("arm_iterate: shape mismatch");
  }

  SolveReport report;
  const ArmCriterion crit = arm_convergence_criterion(split);
  report.rho_estimate = crit.rho;

  RealVector y = x0 ? sti(*x0) : compensated_mul(split.Gext_inv, sti(b));
  IntervalVector x = sti_inv(y);
  Divergence div;

  for (std::size_t k = 1; k <= max_iter; ++k) {
    const IntervalVector hx = apply_H(split, x);
    const RealVector y_next =
        compensated_mul(split.Gext_inv, sti(vec_ominus(b, hx)));
    const double step = inf_norm(zeta(y_next, y));
    const IntervalVector x_next = sti_inv(y_next);
    const double res = residual(a, x_next, b);

    report.iterations = k;
    report.residual = res;
    report.history.push_back(res);
    y = y_next;
    x = x_next;

    if (step <= tol && res <= tol) {
      report.status = SolveStatus::Converged;
      return {x, report};
    }
    if (inf_norm(y) > kIterateCap || div.update(res)) {
      report.status = SolveStatus::Diverged;
      return {x, report};
    }
  }
  report.status = crit.satisfied ? SolveStatus::MaxIterations
                                 : SolveStatus::CriterionNotMet;
  return {x, report};
}

TriangularSplitting trn_split(const IntervalMatrix& a) {
  require_square(a, "trn_split");
  const std::size_t n = a.rows();
  TriangularSplitting s;
  s.perm.resize(n);
  std::vector<bool> row_used(n, false);
  std::vector<bool> col_done(n, false);
  // Assign the largest available pivot first. Any off-diagonal entry of a
  // diagonally dominant matrix has smaller mignitude than its own row's
  // diagonal, so this order keeps the natural diagonal (identity
  // permutation) on dominant systems; a column-by-column scan does not.
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best_row = n;
    std::size_t best_col = n;
    double best_mig = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (col_done[c]) continue;
        const double m = mig(a.at(r, c));
        if (m > best_mig) {
          best_mig = m;
          best_row = r;
          best_col = c;
        }
      }
    }
    if (best_row == n) {
      throw NoValidDiagonalError(
          "trn_split: the remaining rows give every open column a diagonal "
          "with zero mignitude");
    }
    s.perm[best_col] = best_row;
    row_used[best_row] = true;
    col_done[best_col] = true;
  }
  const IntervalMatrix ap = permute_rows(a, s.perm);
  s.G = IntervalMatrix(n, n);
  s.H = IntervalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        s.G.set(i, j, ap.at(i, j));
      } else {
        s.H.set(i, j, ap.at(i, j));
      }
    }
  }
  return s;
}

std::pair<IntervalVector, SolveReport> trn_iterate(
    const IntervalMatrix& a, const IntervalVector& b,
    const TriangularSplitting& split, const std::optional<IntervalVector>& x0,
    double tol, std::size_t max_iter) {
  require_square(a, "trn_iterate");
  const std::size_t n = a.rows();
  if (b.size() != n || split.perm.size() != n) {
    throw ShapeError("trn_iterate: shape mismatch");
  }

  SolveReport report;
  const TrnCriterion crit = trn_convergence_criterion(permute_rows(a, split.perm));
  report.rho_estimate = crit.rho_Q;

  const IntervalVector bp = permute(b, split.perm);
  IntervalVector x(n);
  if (x0) {
    x = *x0;
  } else {
    for (std::size_t i = 0; i < n; ++i) x.set(i, oslash(bp[i], split.G.at(i, i)));
  }
  Divergence div;

  for (std::size_t k = 1; k <= max_iter; ++k) {
    IntervalVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
      KInterval acc = bp[i];
      for (std::size_t j = 0; j < i; ++j) {
        acc = ominus(acc, mul(split.H.at(i, j), x[j]));
      }
      p.set(i, acc);
    }
    IntervalVector xt(n);
    for (std::size_t ir = n; ir-- > 0;) {
      KInterval acc = p[ir];
      for (std::size_t j = ir + 1; j < n; ++j) {
        acc = ominus(acc, mul(split.G.at(ir, j), xt[j]));
      }
      xt.set(ir, oslash(acc, split.G.at(ir, ir)));
    }
    const double q = inf_norm(Dist(x, xt));
    x = xt;
    const double res = residual(a, x, b);

    report.iterations = k;
    report.residual = res;
    report.history.push_back(res);

    if (q < tol && res <= tol) {
      report.status = SolveStatus::Converged;
      return {x, report};
    }
    double xn = 0.0;
    for (std::size_t i = 0; i < n; ++i) xn = std::max(xn, mag(x[i]));
    if (xn > kIterateCap || div.update(res)) {
      report.status = SolveStatus::Diverged;
      return {x, report};
    }
  }
  report.status = crit.satisfied ? SolveStatus::MaxIterations
                                 : SolveStatus::CriterionNotMet;
  return {x, report};
}

TrnCriterion trn_convergence_criterion(const IntervalMatrix& a_permuted) {
  require_square(a_permuted, "trn_convergence_criterion");
  const std::size_t n = a_permuted.rows();
  RealVector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = mig(a_permuted.at(i, i));
    if (m == 0.0) {
      throw NoValidDiagonalError(
          "trn_convergence_criterion: diagonal entry " + std::to_string(i + 1) +
          " has zero mignitude");
    }
    d[i] = 1.0 / m;
  }

  RealMatrix dl(n, n), dr(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) dl(i, j) = d[i] * mag(a_permuted.at(i, j));
      if (j > i) dr(i, j) = d[i] * mag(a_permuted.at(i, j));
    }
  }
  const RealMatrix q = inverse(RealMatrix::identity(n) - dl) * dr;
  const SpectralRadiusEstimate rho = spectral_radius(q);

  TrnCriterion crit;
  crit.rho_Q = rho.value;
  crit.s.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < i; ++j) acc += mag(a_permuted.at(i, j)) * crit.s[j];
    for (std::size_t j = i + 1; j < n; ++j) acc += mag(a_permuted.at(i, j));
    crit.s[i] = acc * d[i];
  }
  crit.diag_dominant = true;
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += mag(a_permuted.at(i, j));
    }
    if (!(1.0 / d[i] > off)) crit.diag_dominant = false;
  }
  crit.satisfied = rho.converged && rho.value < 1.0;
  return crit;
}

RealVector trn_error_bound(const RealMatrix& q, const RealVector& d01,
                           std::size_t k) {
  if (q.rows() != q.cols() || q.rows() != d01.size()) {
    throw ShapeError("trn_error_bound: shape mismatch");
  }
  const SpectralRadiusEstimate rho = spectral_radius(q);
  if (!rho.converged || rho.value >= 1.0) {
    throw BoundUnavailableError(
        "trn_error_bound: spectral radius is not below one");
  }
  const std::size_t n = q.rows();
  const RealMatrix full = inverse(RealMatrix::identity(n) - q);
  RealMatrix partial(n, n);
  RealMatrix qpow = RealMatrix::identity(n);
  for (std::size_t j = 0; j < k; ++j) {
    partial = partial + qpow;
    qpow = qpow * q;
  }
  return (full - partial) * d01;
}

}  // namespace ksolve
