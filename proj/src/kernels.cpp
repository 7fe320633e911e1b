#include "dofw/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace dofw::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += x[i] * y[i];
  return r;
}

double squared_norm_scalar(const double* x, std::size_t n) {
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += x[i] * x[i];
  return r;
}

double sum_scalar(const double* x, std::size_t n) {
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r += x[i];
  return r;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void lerp_toward_scalar(double* y, const double* v, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + s * (v[i] - y[i]);
}

void weighted_sum2_scalar(double* out, double a, const double* x, double b,
                          const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void weighted_sum3_scalar(double* out, double a, const double* x, double b,
                          const double* y, double c, const double* z,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (a * x[i] + b * y[i]) + c * z[i];
}

void clamp_scalar(double* out, const double* x, const double* lo,
                  const double* hi, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

const detail::KernelTable* resolve_default() {
#if defined(DOFW_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") &&
      std::getenv("DOFW_FORCE_SCALAR") == nullptr) {
    return &detail::avx2_table;
  }
#endif
  return &detail::scalar_table;
}

std::atomic<const detail::KernelTable*> g_table{nullptr};

const detail::KernelTable& table() {
  const detail::KernelTable* t = g_table.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = resolve_default();
    g_table.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    dot_scalar,           squared_norm_scalar, sum_scalar,
    axpy_scalar,          lerp_toward_scalar,  weighted_sum2_scalar,
    weighted_sum3_scalar, clamp_scalar,        scale_scalar,
};
}  // namespace detail

bool avx2_supported() {
#if defined(DOFW_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() {
#if defined(DOFW_HAVE_AVX2)
  if (&table() == &detail::avx2_table) return Backend::avx2;
#endif
  (void)table();
  return Backend::scalar;
}

void set_backend(Backend b) {
  switch (b) {
    case Backend::scalar:
      g_table.store(&detail::scalar_table, std::memory_order_release);
      return;
    case Backend::avx2:
#if defined(DOFW_HAVE_AVX2)
      if (avx2_supported()) {
        g_table.store(&detail::avx2_table, std::memory_order_release);
        return;
      }
#endif
      throw std::runtime_error("AVX2 backend is not available on this CPU");
  }
  throw std::runtime_error("unknown kernel backend");
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

double dot(const double* x, const double* y, std::size_t n) {
  return table().dot(x, y, n);
}
double squared_norm(const double* x, std::size_t n) {
  return table().squared_norm(x, n);
}
double sum(const double* x, std::size_t n) { return table().sum(x, n); }
void axpy(double a, const double* x, double* y, std::size_t n) {
  table().axpy(a, x, y, n);
}
void lerp_toward(double* y, const double* v, double s, std::size_t n) {
  table().lerp_toward(y, v, s, n);
}
void weighted_sum2(double* out, double a, const double* x, double b,
                   const double* y, std::size_t n) {
  table().weighted_sum2(out, a, x, b, y, n);
}
void weighted_sum3(double* out, double a, const double* x, double b,
                   const double* y, double c, const double* z, std::size_t n) {
  table().weighted_sum3(out, a, x, b, y, c, z, n);
}
void clamp(double* out, const double* x, const double* lo, const double* hi,
           std::size_t n) {
  table().clamp(out, x, lo, hi, n);
}
void scale(double a, double* x, std::size_t n) { table().scale(a, x, n); }

}  // namespace dofw::kernels
