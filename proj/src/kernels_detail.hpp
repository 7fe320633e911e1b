#pragma once

#include <cstddef>

// Internal: one function-pointer table per backend.
namespace dofw::kernels::detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*squared_norm)(const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*lerp_toward)(double*, const double*, double, std::size_t);
  void (*weighted_sum2)(double*, double, const double*, double, const double*,
                        std::size_t);
  void (*weighted_sum3)(double*, double, const double*, double, const double*,
                        double, const double*, std::size_t);
  void (*clamp)(double*, const double*, const double*, const double*,
                std::size_t);
  void (*scale)(double, double*, std::size_t);
};

extern const KernelTable scalar_table;
#if defined(DOFW_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif

}  // namespace dofw::kernels::detail
