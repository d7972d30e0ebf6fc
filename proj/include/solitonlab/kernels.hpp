#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "solitonlab/exec.hpp"

namespace slab::kern {

// Hot inner loops, each with a serial reference implementation and an
// OpenMP one. Dispatch picks the parallel path only when the policy is
// Exec::parallel and the trip count is above parallel_grain(); the
// test suite cross-checks both paths, the bench tool compares them.

namespace ref {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
double max_abs(std::span<const double> x);
void axpy(double a, std::span<const double> x, std::span<double> y);
void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z);
void scale(std::span<double> x, double a);
// y = A x for band storage ab[(ku + i - j) + ld*j], ld = kl+ku+1
void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f);
}  // namespace ref

namespace par {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
double max_abs(std::span<const double> x);
void axpy(double a, std::span<const double> x, std::span<double> y);
void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z);
void scale(std::span<double> x, double a);
void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f);
}  // namespace par

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double dot3(std::span<const double> w, std::span<const double> x,
            std::span<const double> y);
double max_abs(std::span<const double> x);
void axpy(double a, std::span<const double> x, std::span<double> y);
void combine(std::span<double> y, double a, std::span<const double> x,
             double b, std::span<const double> z);
void scale(std::span<double> x, double a);
void band_matvec(int n, int kl, int ku, const double* ab,
                 std::span<const double> x, std::span<double> y);
// Coarse-grain parallel loop; f(i) must be independent across i.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace slab::kern
