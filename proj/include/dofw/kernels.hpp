#pragma once

#include <cstddef>

// Dense BLAS-1 style kernels underlying all vector arithmetic.  A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime on CPUs that support it.  Elementwise kernels are bit-identical
// across backends (same per-element operation order, no FMA); reductions
// may differ in the last ulps because the SIMD variant reassociates sums.
//
// Set DOFW_FORCE_SCALAR=1 in the environment (or call set_backend) to pin
// the scalar path.
namespace dofw::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
void set_backend(Backend b);  // throws std::runtime_error if unsupported
bool avx2_supported();
const char* backend_name(Backend b);

double dot(const double* x, const double* y, std::size_t n);
double squared_norm(const double* x, std::size_t n);
double sum(const double* x, std::size_t n);

// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

// y += s * (v - y); the Frank-Wolfe convex-combination update
void lerp_toward(double* y, const double* v, double s, std::size_t n);

// out = a*x + b*y
void weighted_sum2(double* out, double a, const double* x, double b,
                   const double* y, std::size_t n);

// out = a*x + b*y + c*z, evaluated as (a*x + b*y) + c*z per element
void weighted_sum3(double* out, double a, const double* x, double b,
                   const double* y, double c, const double* z, std::size_t n);

// out = min(max(x, lo), hi) elementwise
void clamp(double* out, const double* x, const double* lo, const double* hi,
           std::size_t n);

// x *= a
void scale(double a, double* x, std::size_t n);

}  // namespace dofw::kernels
