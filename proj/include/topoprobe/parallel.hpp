#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topoprobe {

// Number of OpenMP threads a kernel should use. `requested <= 0` means
// "whatever the runtime offers".
inline int resolve_workers(int requested) {
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace topoprobe
