#include <algorithm>
#include <cmath>
#include <cstddef>

#include "solitonlab/kernels.hpp"

namespace slab::kern::ref {

double sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * y[i];
  return s;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = a * x[i] + b * z[i];
}

void scale(std::span<double> x, double a) {
  for (double& v : x) v *= a;
}

void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y) {
  const int ld = kl + ku + 1;
  for (int i = 0; i < n; ++i) {
    const int j0 = std::max(0, i - kl);
    const int j1 = std::min(n - 1, i + ku);
    double s = 0.0;
    for (int j = j0; j <= j1; ++j) s += ab[(ku + i - j) + ld * j] * x[j];
    y[i] = s;
  }
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace slab::kern::ref
