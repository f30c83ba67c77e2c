#pragma once

#include <cstddef>

namespace nonsplit {

// sum_{i=1}^{n-1} sigma[i] * p[n - i], the history term of the convolution step.
double memory_sum_serial(const double* sigma, const double* p, std::size_t n);

// Same sum split into fixed blocks; block partials are combined in order, so the
// result does not depend on the thread count.
double memory_sum_parallel(const double* sigma, const double* p, std::size_t n);

}  // namespace nonsplit
