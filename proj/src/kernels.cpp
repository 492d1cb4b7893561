#include "ksolve/kernels.hpp"

namespace ksolve::kernels {

namespace {

double pos_part(double v) { return v > 0.0 ? v : 0.0; }
double neg_part(double v) { return v < 0.0 ? -v : 0.0; }
double max2(double x, double y) { return x < y ? y : x; }

using BatchFn = void (*)(const double*, const double*, const double*,
                         const double*, double*, double*, std::size_t);

}  // namespace

void mul_batch_scalar(const double* alo, const double* ahi, const double* blo,
                      const double* bhi, double* rlo, double* rhi,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double alp = pos_part(alo[i]), aln = neg_part(alo[i]);
    const double ahp = pos_part(ahi[i]), ahn = neg_part(ahi[i]);
    const double blp = pos_part(blo[i]), bln = neg_part(blo[i]);
    const double bhp = pos_part(bhi[i]), bhn = neg_part(bhi[i]);
    rlo[i] = max2(alp * blp, ahn * bhn) - max2(ahp * bln, aln * bhp);
    rhi[i] = max2(ahp * bhp, aln * bln) - max2(alp * bhn, ahn * blp);
  }
}

void ominus_batch_scalar(const double* alo, const double* ahi,
                         const double* blo, const double* bhi, double* rlo,
                         double* rhi, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    rlo[i] = alo[i] - blo[i];
    rhi[i] = ahi[i] - bhi[i];
  }
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const char* active_kernel() { return avx2_supported() ? "avx2" : "scalar"; }

void mul_batch(const double* alo, const double* ahi, const double* blo,
               const double* bhi, double* rlo, double* rhi, std::size_t n) {
  static const BatchFn fn = avx2_supported() ? mul_batch_avx2 : mul_batch_scalar;
  fn(alo, ahi, blo, bhi, rlo, rhi, n);
}

void ominus_batch(const double* alo, const double* ahi, const double* blo,
                  const double* bhi, double* rlo, double* rhi, std::size_t n) {
  static const BatchFn fn =
      avx2_supported() ? ominus_batch_avx2 : ominus_batch_scalar;
  fn(alo, ahi, blo, bhi, rlo, rhi, n);
}

}  // namespace ksolve::kernels
