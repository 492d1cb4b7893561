#include "ksolve/real_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ksolve {

namespace {

void require_square(const RealMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw ShapeError(std::string(who) + ": matrix must be square");
  }
}

void require_same_shape(const RealMatrix& a, const RealMatrix& b,
                        const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(who) + ": shape mismatch");
  }
}

}  // namespace

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  require_same_shape(a, b, "operator+");
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  require_same_shape(a, b, "operator-");
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("operator*: shape mismatch");
  RealMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RealVector operator*(const RealMatrix& a, const RealVector& v) {
  if (a.cols() != v.size()) throw ShapeError("operator*: shape mismatch");
  RealVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

RealVector compensated_mul(const RealMatrix& a, const RealVector& v) {
  if (a.cols() != v.size()) throw ShapeError("compensated_mul: shape mismatch");
  RealVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    double c = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double term = a(i, j) * v[j];
      const double t = s + term;
      if (std::abs(s) >= std::abs(term)) {
        c += (s - t) + term;
      } else {
        c += (term - t) + s;
      }
      s = t;
    }
    out[i] = s + c;
  }
  return out;
}

RealMatrix elementwise_abs(const RealMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::abs(a(i, j));
  return out;
}

double inf_norm(const RealVector& v) {
  double n = 0.0;
  for (double x : v) n = std::max(n, std::abs(x));
  return n;
}

LUFactors lu_factor(const RealMatrix& a, double tol) {
  require_square(a, "lu_factor");
  const std::size_t n = a.rows();
  LUFactors f;
  f.lu = a;
  f.perm.resize(n);
  std::vector<double> scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    f.perm[i] = i;
    for (std::size_t j = 0; j < n; ++j)
      scale[i] = std::max(scale[i], std::abs(a(i, j)));
    if (scale[i] == 0.0) {
      f.singular = true;
      return f;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(f.lu(k, k)) / scale[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(f.lu(i, k)) / scale[i];
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (std::abs(f.lu(p, k)) < tol * scale[p]) {
      f.singular = true;
      return f;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(f.lu(k, j), f.lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
      std::swap(scale[k], scale[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

RealVector lu_solve(const LUFactors& f, const RealVector& b) {
  if (f.singular) throw SingularMatrixError("lu_solve: matrix is singular");
  const std::size_t n = f.perm.size();
  if (b.size() != n) throw ShapeError("lu_solve: shape mismatch");
  RealVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ir = n; ir-- > 0;) {
    double s = x[ir];
    for (std::size_t j = ir + 1; j < n; ++j) s -= f.lu(ir, j) * x[j];
    x[ir] = s / f.lu(ir, ir);
  }
  return x;
}

RealVector lu_solve(const RealMatrix& a, const RealVector& b, double tol) {
  return lu_solve(lu_factor(a, tol), b);
}

RealMatrix inverse(const RealMatrix& a, double tol) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  const LUFactors f = lu_factor(a, tol);
  if (f.singular) throw SingularMatrixError("inverse: matrix is singular");
  RealMatrix out(n, n);
  RealVector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const RealVector col = lu_solve(f, e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
  }
  return out;
}

std::size_t numerical_rank(const RealMatrix& a, double tol) {
  RealMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  double scale = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      scale = std::max(scale, std::abs(m(i, j)));
  if (scale == 0.0) return 0;

  const std::size_t steps = std::min(rows, cols);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k, pj = k;
    double best = 0.0;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const double v = std::abs(m(i, j));
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best < tol * scale) break;
    if (pi != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(pi, j));
    if (pj != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, k), m(i, pj));
    ++rank;
    for (std::size_t i = k + 1; i < rows; ++i) {
      const double f = m(i, k) / m(k, k);
      m(i, k) = 0.0;
      for (std::size_t j = k + 1; j < cols; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return rank;
}

SpectralRadiusEstimate spectral_radius(const RealMatrix& m, double tol,
                                       std::size_t max_iter) {
  require_square(m, "spectral_radius");
  const std::size_t n = m.rows();
  if (n == 0) return {0.0, true};

  RealVector v(n, 1.0);
  double prev = -1.0;
  double best = 0.0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    RealVector w = m * v;
    for (double x : w) {
      if (!std::isfinite(x)) {
        throw OverflowError("spectral_radius: iterate is not finite");
      }
    }
    const double ratio = inf_norm(w);
    if (ratio == 0.0) return {0.0, true};
    best = std::max(best, ratio);
    for (double& x : w) x /= ratio;
    v = std::move(w);
    if (prev >= 0.0 && std::abs(ratio - prev) < tol) return {ratio, true};
    prev = ratio;
  }
  return {best, false};
}

}  // namespace ksolve
