#include "nonsplit/kernels.hpp"

#include <array>

#include <omp.h>

namespace nonsplit {

double memory_sum_serial(const double* sigma, const double* p, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += sigma[i] * p[n - i];
  return s;
}

double memory_sum_parallel(const double* sigma, const double* p, std::size_t n) {
  constexpr std::size_t block = 2048;
  constexpr std::size_t max_blocks = 1024;
  if (n < 4 * block) return memory_sum_serial(sigma, p, n);
  std::size_t nb = (n - 1 + block - 1) / block;
  std::size_t width = block;
  if (nb > max_blocks) {
    nb = max_blocks;
    width = (n - 1 + nb - 1) / nb;
  }
  std::array<double, max_blocks> partial{};
  const long nbl = static_cast<long>(nb);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < nbl; ++b) {
    std::size_t lo = 1 + static_cast<std::size_t>(b) * width;
    std::size_t hi = lo + width < n ? lo + width : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += sigma[i] * p[n - i];
    partial[b] = s;
  }
  double s = 0.0;
  for (std::size_t b = 0; b < nb; ++b) s += partial[b];
  return s;
}

}  // namespace nonsplit
