#include <algorithm>
#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "solitonlab/band.hpp"
#include "solitonlab/kernels.hpp"

namespace slab {

void BandMatrix::add(int i, int j, double v) {
  if (!in_band(i, j)) throw std::out_of_range("BandMatrix::add outside band");
  at(i, j) += v;
}

void BandMatrix::matvec(std::span<const double> x, std::span<double> y) const {
  kern::band_matvec(n, kl, ku, ab.data(), x, y);
}

std::vector<double> BandMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(n));
  matvec(x, y);
  return y;
}

Dense BandMatrix::to_dense() const {
  Dense D(n, n);
  for (int j = 0; j < n; ++j) {
    const int i0 = std::max(0, j - ku), i1 = std::min(n - 1, j + kl);
    for (int i = i0; i <= i1; ++i) D(i, j) = get(i, j);
  }
  return D;
}

BandMatrix band_AtWA(const BandMatrix& A, std::span<const double> w) {
  const int bw = A.kl + A.ku;
  BandMatrix C(A.n, bw, bw);
  // C_ij = sum_k A_ki w_k A_kj ; k ranges over rows touching both columns.
  for (int j = 0; j < A.n; ++j) {
    for (int i = std::max(0, j - bw); i <= std::min(A.n - 1, j + bw); ++i) {
      const int k0 = std::max({0, i - A.ku, j - A.ku});
      const int k1 = std::min({A.n - 1, i + A.kl, j + A.kl});
      double s = 0.0;
      for (int k = k0; k <= k1; ++k) s += A.get(k, i) * w[k] * A.get(k, j);
      if (s != 0.0) C.at(i, j) = s;
    }
  }
  return C;
}

BandMatrix band_add(double alpha, const BandMatrix& A, double beta,
                    const BandMatrix& B) {
  if (A.n != B.n) throw std::invalid_argument("band_add: size mismatch");
  BandMatrix C(A.n, std::max(A.kl, B.kl), std::max(A.ku, B.ku));
  for (int j = 0; j < C.n; ++j) {
    const int i0 = std::max(0, j - C.ku), i1 = std::min(C.n - 1, j + C.kl);
    for (int i = i0; i <= i1; ++i) {
      const double v = alpha * A.get(i, j) + beta * B.get(i, j);
      if (v != 0.0) C.at(i, j) = v;
    }
  }
  return C;
}

void band_add_diag(BandMatrix& A, std::span<const double> d) {
  for (int i = 0; i < A.n; ++i) A.at(i, i) += d[i];
}

void band_add_diag(BandMatrix& A, double d) {
  for (int i = 0; i < A.n; ++i) A.at(i, i) += d;
}

BandLU::BandLU(const BandMatrix& A) : n_(A.n), kl_(A.kl), ku_(A.ku) {
  const int ldab = 2 * kl_ + ku_ + 1;
  afb_.assign(static_cast<std::size_t>(ldab) * n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
    for (int i = i0; i <= i1; ++i)
      afb_[(kl_ + ku_ + i - j) + static_cast<std::size_t>(ldab) * j] = A.get(i, j);
  }
  ipiv_.assign(static_cast<std::size_t>(n_), 0);
  const lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n_, n_, kl_, ku_,
                                         afb_.data(), ldab, ipiv_.data());
  if (info != 0)
    throw std::runtime_error("BandLU: dgbtrf failed, info=" + std::to_string(info));
}

std::vector<double> BandLU::solve(std::vector<double> rhs) const {
  if (static_cast<int>(rhs.size()) != n_)
    throw std::invalid_argument("BandLU::solve: size mismatch");
  const int ldab = 2 * kl_ + ku_ + 1;
  const lapack_int info =
      LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, 1, afb_.data(), ldab,
                     ipiv_.data(), rhs.data(), n_);
  if (info != 0)
    throw std::runtime_error("BandLU: dgbtrs failed, info=" + std::to_string(info));
  return rhs;
}

}  // namespace slab
