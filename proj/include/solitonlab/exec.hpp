#pragma once

namespace slab {

// Execution policy for the data-parallel kernels. The parallel path uses
// OpenMP with static schedules so results are reproducible for a fixed
// thread count. Loops below `parallel_grain()` elements run serially even
// under Exec::parallel; at radial resolutions of a few hundred nodes the
// fork/join overhead exceeds the loop body.
enum class Exec { serial, parallel };

Exec exec_policy();
void set_exec_policy(Exec e);

int max_threads();
std::size_t parallel_grain();
void set_parallel_grain(std::size_t g);

}  // namespace slab
