// AVX2 kernel variants. Compiled with -mavx2; only dispatched to when the
// CPU reports AVX2 support at runtime. Elementwise kernels mirror the
// scalar per-element operation order exactly (mul/add, never FMA) so both
// backends produce identical bits; reductions use one 4-lane accumulator
// and therefore round differently from a strictly sequential sum.
#if defined(DOFW_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cstddef>

#include "kernels_detail.hpp"

namespace dofw::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  double lanes[4];
  _mm256_storeu_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

double squared_norm_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i),
                              _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void lerp_toward_avx2(double* y, const double* v, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yy = _mm256_loadu_pd(y + i);
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d r = _mm256_add_pd(yy, _mm256_mul_pd(vs, _mm256_sub_pd(vv, yy)));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = y[i] + s * (v[i] - y[i]);
}

void weighted_sum2_avx2(double* out, double a, const double* x, double b,
                        const double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                              _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void weighted_sum3_avx2(double* out, double a, const double* x, double b,
                        const double* y, double c, const double* z,
                        std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                              _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
    r = _mm256_add_pd(r, _mm256_mul_pd(vc, _mm256_loadu_pd(z + i)));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = (a * x[i] + b * y[i]) + c * z[i];
}

void clamp_avx2(double* out, const double* x, const double* lo,
                const double* hi, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_min_pd(
        _mm256_max_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(lo + i)),
        _mm256_loadu_pd(hi + i));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace

const KernelTable avx2_table = {
    dot_avx2,           squared_norm_avx2, sum_avx2,
    axpy_avx2,          lerp_toward_avx2,  weighted_sum2_avx2,
    weighted_sum3_avx2, clamp_avx2,        scale_avx2,
};

}  // namespace dofw::kernels::detail

#endif  // DOFW_HAVE_AVX2
