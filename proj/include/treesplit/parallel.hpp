#pragma once

#include <cstddef>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace treesplit {

// Check grids are embarrassingly parallel: every oracle is pure and results
// are aggregated in index order, so serial and parallel runs are
// byte-identical. Serial is kept as the reference path for testing.
enum class Exec { Serial, Parallel };

template <typename F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
#if defined(_OPENMP)
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace treesplit
