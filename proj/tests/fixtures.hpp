#pragma once

// Shared fixture systems, sampling helpers, and tolerances for the test
// suites. The *_text builders are the source of truth for the files under
// data/; a test asserts the shipped files match them byte for byte.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ksolve/interval_linalg.hpp"
#include "ksolve/newton.hpp"
#include "ksolve/problem_io.hpp"

namespace fixtures {

// Renders t/10 exactly: 18 -> "1.8", 360 -> "36", -11 -> "-1.1".
inline std::string tenths(long t) {
  std::string s;
  if (t < 0) {
    s += '-';
    t = -t;
  }
  s += std::to_string(t / 10);
  if (t % 10 != 0) {
    s += '.';
    s += static_cast<char>('0' + t % 10);
  }
  return s;
}

inline std::string tenths_interval(long lo, long hi) {
  return "[" + tenths(lo) + "," + tenths(hi) + "]";
}

inline std::string barth_nuding_text() {
  return "# Barth-Nuding 2x2 system\n"
         "n 2\n"
         "matrix\n"
         "[2,4] [-2,1]\n"
         "[-1,2] [2,4]\n"
         "rhs\n"
         "[-2,2] [-2,2]\n";
}

inline std::string tridiag40_text() {
  std::string out = "# tridiagonal 40x40 system\nn 40\nmatrix\n";
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      if (j != 0) out += ' ';
      if (i == j) {
        out += tenths_interval(18, 22);
      } else if (j == i - 1 || j == i + 1) {
        out += tenths_interval(-11, -9);
      } else {
        out += "[0,0]";
      }
    }
    out += '\n';
  }
  out += "rhs\n";
  for (long i = 1; i <= 40; ++i) {
    if (i > 1) out += ' ';
    out += tenths_interval(9 * i, 11 * i);
  }
  out += '\n';
  return out;
}

inline std::string neumaier40_text() {
  std::string out = "# Neumaier 40x40 system\nn 40\nmatrix\n";
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      if (j != 0) out += ' ';
      out += (i == j) ? "[40,40]" : "[0,2]";
    }
    out += '\n';
  }
  out += "rhs\n";
  for (int i = 0; i < 40; ++i) {
    if (i != 0) out += ' ';
    out += "[10,20]";
  }
  out += '\n';
  return out;
}

inline std::string dense7x7_text() {
  return "# dense 7x7 system\n"
         "n 7\n"
         "matrix\n"
         "[4,6] [-9,0] [0,12] [2,3] [5,9] [-23,-9] [15,23]\n"
         "[0,1] [6,10] [-1,1] [-1,3] [-5,1] [1,15] [-3,-1]\n"
         "[0,3] [-20,-9] [12,77] [-6,30] [0,3] [-18,1] [0,1]\n"
         "[-4,1] [-1,1] [-3,1] [3,5] [5,9] [1,2] [1,4]\n"
         "[0,3] [0,6] [0,20] [-1,5] [8,14] [-6,1] [10,17]\n"
         "[-7,-2] [1,2] [7,14] [-3,1] [0,2] [3,5] [-2,1]\n"
         "[-1,5] [-3,2] [0,8] [1,11] [-5,10] [2,7] [6,82]\n"
         "rhs\n"
         "[-10,95] [35,14] [-6,2] [30,7] [4,95] [-6,46] [-2,65]\n";
}

inline ksolve::ProblemFile barth_nuding() {
  return ksolve::parse_problem(barth_nuding_text());
}
inline ksolve::ProblemFile tridiag40() {
  return ksolve::parse_problem(tridiag40_text());
}
inline ksolve::ProblemFile neumaier40() {
  return ksolve::parse_problem(neumaier40_text());
}
inline ksolve::ProblemFile dense7x7() {
  return ksolve::parse_problem(dense7x7_text());
}

inline ksolve::IntervalVector barth_nuding_solution() {
  return {{-1.0 / 3.0, 1.0 / 3.0}, {-1.0 / 3.0, 1.0 / 3.0}};
}

inline ksolve::IntervalVector neumaier40_solution() {
  ksolve::IntervalVector x(40);
  for (std::size_t i = 0; i < 40; ++i) x.set(i, {0.25, 10.0 / 59.0});
  return x;
}

// True when got matches want to k significant decimal digits:
// |got - want| <= 0.5 * 10^(floor(log10 |want|) - k + 1). Requires want != 0.
inline bool digits_ok(double got, double want, int k) {
  double lead = std::floor(std::log10(std::fabs(want)));
  double tol = 0.5 * std::pow(10.0, lead - k + 1);
  return std::fabs(got - want) <= tol;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ksolve::KInterval random_interval(std::mt19937_64& rng,
                                         double span = 10.0) {
  return {uniform(rng, -span, span), uniform(rng, -span, span)};
}

// Integer endpoints in [-span, span]; products and sums of a few of these
// are exact in double precision, which the algebraic-identity tests rely on.
inline ksolve::KInterval random_int_interval(std::mt19937_64& rng,
                                             int span = 9) {
  std::uniform_int_distribution<int> d(-span, span);
  return {static_cast<double>(d(rng)), static_cast<double>(d(rng))};
}

// A random interval contained in a: raising lo and lowering hi preserves
// containment whether the result is proper or improper.
inline ksolve::KInterval shrink(std::mt19937_64& rng, const ksolve::KInterval& a,
                                double amount = 2.0) {
  return {a.lo() + uniform(rng, 0.0, amount),
          a.hi() - uniform(rng, 0.0, amount)};
}

inline ksolve::IntervalVector random_vector(std::mt19937_64& rng,
                                            std::size_t n,
                                            double span = 10.0) {
  ksolve::IntervalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, random_interval(rng, span));
  return v;
}

inline ksolve::IntervalMatrix random_matrix(std::mt19937_64& rng,
                                            std::size_t n,
                                            double span = 10.0) {
  ksolve::IntervalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_interval(rng, span));
  return m;
}

// Strictly diagonally dominant interval matrix: every diagonal entry has
// mignitude >= 3 and the off-diagonal magnitudes in each row sum to 0.8
// times that mignitude. Entries mix proper and improper orientation and all
// off-diagonal entries are nonzero.
inline ksolve::IntervalMatrix random_diag_dominant(std::mt19937_64& rng,
                                                   std::size_t n,
                                                   double budget = 0.8) {
  ksolve::IntervalMatrix m(n, n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    double inner = uniform(rng, 3.0, 6.0);
    double outer = inner + uniform(rng, 0.0, 1.0);
    double sign = coin(rng) ? 1.0 : -1.0;
    ksolve::KInterval d = coin(rng)
                              ? ksolve::KInterval(sign * inner, sign * outer)
                              : ksolve::KInterval(sign * outer, sign * inner);
    m.set(i, i, d);

    if (n == 1) continue;
    std::vector<double> raw(n, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      raw[j] = uniform(rng, 0.1, 1.0);
      total += raw[j];
    }
    double row_budget = budget * inner;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double magnitude = row_budget * raw[j] / total;
      double e1 = (coin(rng) ? 1.0 : -1.0) * magnitude;
      double e2 = uniform(rng, -magnitude, magnitude);
      ksolve::KInterval off = coin(rng) ? ksolve::KInterval(e1, e2)
                                        : ksolve::KInterval(e2, e1);
      m.set(i, j, off);
    }
  }
  return m;
}

// True when y is safely inside one linearity region of the defect: every
// maximizer pair in every product is separated and no immersed coordinate
// sits near a sign change.
inline bool smooth_point(const ksolve::IntervalMatrix& a,
                         const ksolve::RealVector& y, double margin = 1e-4) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) {
    const double xlo = -y[j];
    const double xhi = y[n + j];
    if (std::fabs(xlo) <= margin || std::fabs(xhi) <= margin) return false;
    const ksolve::RealParts xl = ksolve::real_parts(xlo);
    const ksolve::RealParts xh = ksolve::real_parts(xhi);
    const bool lo_pos = xlo > 0.0;
    const bool hi_pos = xhi > 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ksolve::KInterval aij = a.at(i, j);
      if (aij.lo() == aij.hi()) continue;  // exactly linear block
      const ksolve::RealParts al = ksolve::real_parts(aij.lo());
      const ksolve::RealParts ah = ksolve::real_parts(aij.hi());
      // A max pair only kinks where its products nearly tie while at least
      // one of them still varies with x; ties between locally constant
      // products (both slopes zero) stay smooth.
      const auto kinked = [margin](double pa, double sa, double pb,
                                   double sb) {
        return std::fabs(pa - pb) <= margin && (sa != 0.0 || sb != 0.0);
      };
      if (kinked(al.pos * xl.pos, lo_pos ? al.pos : 0.0,  //
                 ah.neg * xh.neg, hi_pos ? 0.0 : ah.neg))
        return false;
      if (kinked(ah.pos * xl.neg, lo_pos ? 0.0 : ah.pos,  //
                 al.neg * xh.pos, hi_pos ? al.neg : 0.0))
        return false;
      if (kinked(ah.pos * xh.pos, hi_pos ? ah.pos : 0.0,  //
                 al.neg * xl.neg, lo_pos ? 0.0 : al.neg))
        return false;
      if (kinked(al.pos * xh.neg, hi_pos ? 0.0 : al.pos,  //
                 ah.neg * xl.pos, lo_pos ? ah.neg : 0.0))
        return false;
    }
  }
  return true;
}

inline ksolve::RealMatrix fd_jacobian(const ksolve::IntervalMatrix& a,
                                      const ksolve::IntervalVector& b,
                                      const ksolve::RealVector& y, double h) {
  const std::size_t m = y.size();
  ksolve::RealMatrix out(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    ksolve::RealVector yp = y, ym = y;
    yp[k] += h;
    ym[k] -= h;
    const ksolve::RealVector fp = ksolve::induced_phi(a, b, yp);
    const ksolve::RealVector fm = ksolve::induced_phi(a, b, ym);
    for (std::size_t i = 0; i < m; ++i) out(i, k) = (fp[i] - fm[i]) / (2.0 * h);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(KSOLVE_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
