#include "solitonlab/kernels.hpp"

namespace slab::kern {

namespace {
inline bool go_parallel(std::size_t n) {
  return exec_policy() == Exec::parallel && n >= parallel_grain() &&
         max_threads() > 1;
}
}  // namespace

double sum(std::span<const double> x) {
  return go_parallel(x.size()) ? par::sum(x) : ref::sum(x);
}

double dot(std::span<const double> x, std::span<const double> y) {
  return go_parallel(x.size()) ? par::dot(x, y) : ref::dot(x, y);
}

double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y) {
  return go_parallel(x.size()) ? par::dot3(w, x, y) : ref::dot3(w, x, y);
}

double max_abs(std::span<const double> x) {
  return go_parallel(x.size()) ? par::max_abs(x) : ref::max_abs(x);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  go_parallel(x.size()) ? par::axpy(a, x, y) : ref::axpy(a, x, y);
}

void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z) {
  go_parallel(y.size()) ? par::combine(y, a, x, b, z)
                        : ref::combine(y, a, x, b, z);
}

void scale(std::span<double> x, double a) {
  go_parallel(x.size()) ? par::scale(x, a) : ref::scale(x, a);
}

void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y) {
  go_parallel(static_cast<std::size_t>(n))
      ? par::band_matvec(n, kl, ku, ab, x, y)
      : ref::band_matvec(n, kl, ku, ab, x, y);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f) {
  // Coarse-grain loop: each iteration is assumed heavy, so go parallel for
  // any n > 1 when the policy allows it.
  if (exec_policy() == Exec::parallel && n > 1 && max_threads() > 1) {
    par::for_each_index(n, f);
  } else {
    ref::for_each_index(n, f);
  }
}

}  // namespace slab::kern
