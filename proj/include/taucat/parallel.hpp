#pragma once

// Tiny OpenMP shim: parallel_for with a serial twin so every parallel kernel
// can be cross-checked against a reference run.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace taucat {

template <typename F>
void serial_for(std::ptrdiff_t n, F&& fn) {
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

template <typename F>
void parallel_for(std::ptrdiff_t n, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#endif
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace taucat
