#include "ksolve/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace ksolve::kernels {

namespace {

// max_pd returns its second operand on equal inputs, which maps -0.0 ties to
// +0.0 exactly like the scalar branch does on the interval lanes we feed in.
__attribute__((target("avx2"))) inline __m256d pos4(__m256d v) {
  return _mm256_max_pd(v, _mm256_setzero_pd());
}

__attribute__((target("avx2"))) inline __m256d neg4(__m256d v) {
  const __m256d z = _mm256_setzero_pd();
  return _mm256_max_pd(_mm256_sub_pd(z, v), z);
}

}  // namespace

__attribute__((target("avx2"))) void mul_batch_avx2(
    const double* alo, const double* ahi, const double* blo, const double* bhi,
    double* rlo, double* rhi, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d al = _mm256_loadu_pd(alo + i);
    const __m256d ah = _mm256_loadu_pd(ahi + i);
    const __m256d bl = _mm256_loadu_pd(blo + i);
    const __m256d bh = _mm256_loadu_pd(bhi + i);
    const __m256d alp = pos4(al), aln = neg4(al);
    const __m256d ahp = pos4(ah), ahn = neg4(ah);
    const __m256d blp = pos4(bl), bln = neg4(bl);
    const __m256d bhp = pos4(bh), bhn = neg4(bh);
    const __m256d lo = _mm256_sub_pd(
        _mm256_max_pd(_mm256_mul_pd(alp, blp), _mm256_mul_pd(ahn, bhn)),
        _mm256_max_pd(_mm256_mul_pd(ahp, bln), _mm256_mul_pd(aln, bhp)));
    const __m256d hi = _mm256_sub_pd(
        _mm256_max_pd(_mm256_mul_pd(ahp, bhp), _mm256_mul_pd(aln, bln)),
        _mm256_max_pd(_mm256_mul_pd(alp, bhn), _mm256_mul_pd(ahn, blp)));
    _mm256_storeu_pd(rlo + i, lo);
    _mm256_storeu_pd(rhi + i, hi);
  }
  if (i < n) {
    mul_batch_scalar(alo + i, ahi + i, blo + i, bhi + i, rlo + i, rhi + i,
                     n - i);
  }
}

__attribute__((target("avx2"))) void ominus_batch_avx2(
    const double* alo, const double* ahi, const double* blo, const double* bhi,
    double* rlo, double* rhi, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(rlo + i, _mm256_sub_pd(_mm256_loadu_pd(alo + i),
                                            _mm256_loadu_pd(blo + i)));
    _mm256_storeu_pd(rhi + i, _mm256_sub_pd(_mm256_loadu_pd(ahi + i),
                                            _mm256_loadu_pd(bhi + i)));
  }
  if (i < n) {
    ominus_batch_scalar(alo + i, ahi + i, blo + i, bhi + i, rlo + i, rhi + i,
                        n - i);
  }
}

}  // namespace ksolve::kernels

#else

namespace ksolve::kernels {

void mul_batch_avx2(const double* alo, const double* ahi, const double* blo,
                    const double* bhi, double* rlo, double* rhi,
                    std::size_t n) {
  mul_batch_scalar(alo, ahi, blo, bhi, rlo, rhi, n);
}

void ominus_batch_avx2(const double* alo, const double* ahi, const double* blo,
                       const double* bhi, double* rlo, double* rhi,
                       std::size_t n) {
  ominus_batch_scalar(alo, ahi, blo, bhi, rlo, rhi, n);
}

}  // namespace ksolve::kernels

#endif
