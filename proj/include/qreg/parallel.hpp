#pragma once

#include <cstddef>

namespace qreg {

/// Execution policy for the data-parallel kernels (grid scans, sample and
/// probe loops).  Serial is the reference path; tests assert both produce
/// identical results and the bench target compares their speed.
enum class Exec { serial, parallel };

/// Runs fn(0..n-1).  Every index writes only its own slot, so the parallel
/// path is deterministic; reductions are done sequentially by the caller.
template <class Fn>
void for_index(Exec exec, std::size_t n, Fn&& fn) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

} // namespace qreg
