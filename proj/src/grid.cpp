#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solitonlab/grid.hpp"

namespace slab {

double RadialGrid::min_spacing() const {
  double m = r[1] - r[0];
  for (std::size_t i = 1; i + 1 < r.size(); ++i)
    m = std::min(m, r[i + 1] - r[i]);
  return m;
}

double RadialGrid::max_spacing() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    m = std::max(m, r[i + 1] - r[i]);
  return m;
}

bool RadialGrid::same_nodes(const RadialGrid& other, double tol) const {
  if (r.size() != other.r.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (std::abs(r[i] - other.r[i]) > tol) return false;
  return true;
}

RadialGrid make_uniform_grid(double length, int segments) {
  if (length <= 0.0) throw std::invalid_argument("grid: length must be positive");
  if (segments < 8) throw std::invalid_argument("grid: too few segments");
  RadialGrid g;
  g.r.resize(segments + 1);
  for (int i = 0; i <= segments; ++i) g.r[i] = length * i / segments;
  g.r[0] = 0.0;
  g.r[segments] = length;
  return g;
}

RadialGrid make_grid(std::vector<double> nodes) {
  if (nodes.size() < 9) throw std::invalid_argument("grid: too few nodes");
  if (nodes.front() != 0.0) throw std::invalid_argument("grid: r_0 must be 0");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i + 1] > nodes[i]))
      throw std::invalid_argument("grid: nodes must be strictly increasing");
  RadialGrid g;
  g.r = std::move(nodes);
  if (g.max_spacing() > 10.0 * g.min_spacing())
    throw std::invalid_argument("grid: spacing ratio exceeds quasi-uniform bound");
  return g;
}

std::vector<double> fornberg_weights(double z, std::span<const double> x, int m) {
  const int nd = static_cast<int>(x.size());
  // c[k + (m+1)*j]: weight of node j for derivative order k.
  std::vector<double> c(static_cast<std::size_t>(m + 1) * nd, 0.0);
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0] = 1.0;
  for (int i = 1; i < nd; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[k + (m + 1) * i] =
              c1 * (k * c[(k - 1) + (m + 1) * (i - 1)] -
                    c5 * c[k + (m + 1) * (i - 1)]) / c2;
        c[(m + 1) * i] = -c1 * c5 * c[(m + 1) * (i - 1)] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[k + (m + 1) * j] =
            (c4 * c[k + (m + 1) * j] - k * c[(k - 1) + (m + 1) * j]) / c3;
      c[(m + 1) * j] = c4 * c[(m + 1) * j] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nd);
  for (int j = 0; j < nd; ++j) w[j] = c[m + (m + 1) * j];
  return w;
}

namespace {

struct ExtNode {
  double pos;
  int col;      // interior DOF column
  bool mirror;  // folded across a pole
};

// Interior nodes extended by three mirrored ghosts at each pole. Node 0
// and node M are never sampled; parity supplies the fold sign.
std::vector<ExtNode> extended_nodes(const RadialGrid& g) {
  const int M = g.segments();
  const double L = g.length();
  std::vector<ExtNode> ext;
  ext.reserve(g.interior() + 6);
  for (int j = 3; j >= 1; --j) ext.push_back({-g.r[j], j - 1, true});
  for (int i = 1; i <= M - 1; ++i) ext.push_back({g.r[i], i - 1, false});
  for (int j = 1; j <= 3; ++j)
    ext.push_back({2.0 * L - g.r[M - j], M - j - 1, true});
  return ext;
}

BandMatrix build_deriv(const RadialGrid& g, int order, Parity parity) {
  const int ni = g.interior();
  if (ni < 7) throw std::invalid_argument("grid: too few interior nodes");
  const auto ext = extended_nodes(g);
  const double sgn = parity == Parity::even ? 1.0 : -1.0;
  constexpr int kWidth = 5;
  BandMatrix D(ni, 2, 2);
  std::vector<double> pos(kWidth);
  for (int k = 0; k < ni; ++k) {
    const int t0 = k + 3 - kWidth / 2;  // window centred on this DOF
    for (int t = 0; t < kWidth; ++t) pos[t] = ext[t0 + t].pos;
    const auto w = fornberg_weights(g.r[k + 1], pos, order);
    for (int t = 0; t < kWidth; ++t) {
      const auto& en = ext[t0 + t];
      D.at(k, en.col) += en.mirror ? sgn * w[t] : w[t];
    }
  }
  return D;
}

}  // namespace

DerivOps build_deriv_ops(const RadialGrid& g) {
  DerivOps ops;
  ops.d1_even = build_deriv(g, 1, Parity::even);
  ops.d1_odd = build_deriv(g, 1, Parity::odd);
  ops.d2_even = build_deriv(g, 2, Parity::even);
  ops.d2_odd = build_deriv(g, 2, Parity::odd);
  return ops;
}

namespace {

// Weights of the cubic through nodes idx[0..3] integrated over [a, b],
// via 3-point Gauss-Legendre (exact for cubics).
void interval_cubic_weights(const double* xn, double a, double b, double* w) {
  static const double gx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  for (int j = 0; j < 4; ++j) w[j] = 0.0;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int q = 0; q < 3; ++q) {
    const double x = mid + half * gx[q];
    for (int j = 0; j < 4; ++j) {
      double l = 1.0;
      for (int t = 0; t < 4; ++t)
        if (t != j) l *= (x - xn[t]) / (xn[j] - xn[t]);
      w[j] += gw[q] * half * l;
    }
  }
}

}  // namespace

std::vector<double> quad_weights_full(const RadialGrid& g) {
  const int M = g.segments();
  std::vector<double> w(M + 1, 0.0);
  double iw[4];
  for (int i = 0; i < M; ++i) {
    const int j0 = std::clamp(i - 1, 0, M - 3);
    interval_cubic_weights(g.r.data() + j0, g.r[i], g.r[i + 1], iw);
    for (int t = 0; t < 4; ++t) w[j0 + t] += iw[t];
  }
  return w;
}

std::vector<double> cumulative_integral(const RadialGrid& g,
                                        std::span<const double> F) {
  const int M = g.segments();
  if (static_cast<int>(F.size()) != M + 1)
    throw std::invalid_argument("cumulative_integral: size mismatch");
  std::vector<double> s(M + 1, 0.0);
  double iw[4];
  for (int i = 0; i < M; ++i) {
    const int j0 = std::clamp(i - 1, 0, M - 3);
    interval_cubic_weights(g.r.data() + j0, g.r[i], g.r[i + 1], iw);
    double ds = 0.0;
    for (int t = 0; t < 4; ++t) ds += iw[t] * F[j0 + t];
    s[i + 1] = s[i] + ds;
  }
  return s;
}

double pole_value_even(const RadialGrid& g, std::span<const double> u,
                       bool left_pole) {
  const int ni = g.interior();
  const int M = g.segments();
  double t[3], v[3];
  for (int k = 0; k < 3; ++k) {
    if (left_pole) {
      const double d = g.r[k + 1];
      t[k] = d * d;
      v[k] = u[k];
    } else {
      const double d = g.length() - g.r[M - 1 - k];
      t[k] = d * d;
      v[k] = u[ni - 1 - k];
    }
  }
  double out = 0.0;
  for (int k = 0; k < 3; ++k) {
    double l = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != k) l *= t[j] / (t[j] - t[k]);
    out += v[k] * l;
  }
  return out;
}

std::vector<double> interpolate_values(std::span<const double> x_src,
                                       std::span<const double> y_src,
                                       std::span<const double> x_tgt) {
  const int n = static_cast<int>(x_src.size());
  if (n < 6) throw std::invalid_argument("interpolate: need >= 6 source nodes");
  std::vector<double> out(x_tgt.size());
  for (std::size_t q = 0; q < x_tgt.size(); ++q) {
    const double x = x_tgt[q];
    int hi = static_cast<int>(
        std::lower_bound(x_src.begin(), x_src.end(), x) - x_src.begin());
    int j0 = std::clamp(hi - 3, 0, n - 6);
    double acc = 0.0;
    for (int j = j0; j < j0 + 6; ++j) {
      double l = 1.0;
      for (int t = j0; t < j0 + 6; ++t)
        if (t != j) l *= (x - x_src[t]) / (x_src[j] - x_src[t]);
      acc += y_src[j] * l;
    }
    out[q] = acc;
  }
  return out;
}

}  // namespace slab
