#pragma once

#include <cstddef>

namespace ksolve::kernels {

// Batched elementwise operations on interval arrays stored as separate lo/hi
// lanes. mul_batch and ominus_batch dispatch once, at first call, to the
// widest variant the CPU supports; every variant computes the same IEEE
// operations in the same order, so the output lanes are bit-identical across
// them. That property is load-bearing (solvers compare iterates bitwise in
// tests) and is what the equivalence tests pin down.

void mul_batch(const double* alo, const double* ahi, const double* blo,
               const double* bhi, double* rlo, double* rhi, std::size_t n);
void ominus_batch(const double* alo, const double* ahi, const double* blo,
                  const double* bhi, double* rlo, double* rhi, std::size_t n);

void mul_batch_scalar(const double* alo, const double* ahi, const double* blo,
                      const double* bhi, double* rlo, double* rhi,
                      std::size_t n);
void ominus_batch_scalar(const double* alo, const double* ahi,
                         const double* blo, const double* bhi, double* rlo,
                         double* rhi, std::size_t n);

// On non-x86 builds these fall through to the scalar variants.
void mul_batch_avx2(const double* alo, const double* ahi, const double* blo,
                    const double* bhi, double* rlo, double* rhi,
                    std::size_t n);
void ominus_batch_avx2(const double* alo, const double* ahi, const double* blo,
                       const double* bhi, double* rlo, double* rhi,
                       std::size_t n);

bool avx2_supported();
const char* active_kernel();

}  // namespace ksolve::kernels
