#include <cstddef>

#include "solitonlab/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slab {

namespace {
Exec g_policy = Exec::parallel;
std::size_t g_grain = 2048;
}  // namespace

Exec exec_policy() { return g_policy; }
void set_exec_policy(Exec e) { g_policy = e; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::size_t parallel_grain() { return g_grain; }
void set_parallel_grain(std::size_t g) { g_grain = g; }

}  // namespace slab
