#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "solitonlab/kernels.hpp"

// Static schedules throughout: summation order is then fixed for a given
// thread count, which keeps run records reproducible.

namespace slab::kern::par {

double sum(std::span<const double> x) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::int64_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::int64_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::int64_t i = 0; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

double max_abs(std::span<const double> x) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z) {
  const std::int64_t n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] = a * x[i] + b * z[i];
}

void scale(std::span<double> x, double a) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) x[i] *= a;
}

void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y) {
  const int ld = kl + ku + 1;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const int j0 = std::max(0, i - kl);
    const int j1 = std::min(n - 1, i + ku);
    double s = 0.0;
    for (int j = j0; j <= j1; ++j) s += ab[(ku + i - j) + ld * j] * x[j];
    y[i] = s;
  }
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::int64_t m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) f(static_cast<std::size_t>(i));
}

}  // namespace slab::kern::par
