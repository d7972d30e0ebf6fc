#pragma once

#include <span>
#include <vector>

#include "solitonlab/band.hpp"

namespace slab {

// Smooth rotation-invariant data on a closed warped sphere extends across
// each pole as an even or odd function of the signed geodesic distance.
// Pole regularity is encoded by that parity, not by boundary conditions.
enum class Parity { even, odd };

// Radial grid 0 = r_0 < r_1 < ... < r_M = L. Field vectors live on the
// interior nodes r_1..r_{M-1}; pole values follow from parity.
struct RadialGrid {
  std::vector<double> r;

  int node_count() const { return static_cast<int>(r.size()); }
  int segments() const { return node_count() - 1; }  // M
  int interior() const { return node_count() - 2; }
  double length() const { return r.back(); }
  double min_spacing() const;
  double max_spacing() const;

  bool same_nodes(const RadialGrid& other, double tol = 0.0) const;
};

RadialGrid make_uniform_grid(double length, int segments);
// Validates monotonicity, r_0 = 0, and the quasi-uniformity bound
// max spacing / min spacing <= 10.
RadialGrid make_grid(std::vector<double> nodes);

// Finite-difference weights for the m-th derivative at z from arbitrary
// nodes x (Fornberg's recurrence).
std::vector<double> fornberg_weights(double z, std::span<const double> x, int m);

// Interior-to-interior derivative operators, 5-point stencils (4th order
// first derivative). Near each pole the stencil folds across it with the
// sign of the field's parity there; node 0 and node M never appear.
struct DerivOps {
  BandMatrix d1_even, d1_odd, d2_even, d2_odd;

  const BandMatrix& d1(Parity p) const {
    return p == Parity::even ? d1_even : d1_odd;
  }
  const BandMatrix& d2(Parity p) const {
    return p == Parity::even ? d2_even : d2_odd;
  }
};

DerivOps build_deriv_ops(const RadialGrid& g);

// Composite quadrature weights on all nodes: each interval integrates the
// local cubic through its four surrounding nodes (order 4, positive
// weights on quasi-uniform grids).
std::vector<double> quad_weights_full(const RadialGrid& g);

// s_i = integral of F from r_0 to r_i, same per-interval cubic rule.
// F given on all nodes.
std::vector<double> cumulative_integral(const RadialGrid& g,
                                        std::span<const double> F);

// Value of an even field at a pole from the three nearest interior
// samples, fitted as a quadratic in r^2.
double pole_value_even(const RadialGrid& g, std::span<const double> u_interior,
                       bool left_pole);

// 6-point local Lagrange interpolation of (x_src, y_src) at x_tgt points.
std::vector<double> interpolate_values(std::span<const double> x_src,
                                       std::span<const double> y_src,
                                       std::span<const double> x_tgt);

}  // namespace slab
