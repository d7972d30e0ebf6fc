#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "solitonlab/kernels.hpp"
#include "solitonlab/lapack.hpp"

namespace slab {

Dense matmul(const Dense& A, const Dense& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul: shape mismatch");
  Dense C(A.rows, B.cols);
  kern::for_each_index(static_cast<std::size_t>(B.cols), [&](std::size_t j) {
    for (int k = 0; k < A.cols; ++k) {
      const double bkj = B(k, static_cast<int>(j));
      if (bkj == 0.0) continue;
      const double* acol = A.a.data() + static_cast<std::size_t>(k) * A.rows;
      double* ccol = C.a.data() + j * A.rows;
      for (int i = 0; i < A.rows; ++i) ccol[i] += acol[i] * bkj;
    }
  });
  return C;
}

Dense transpose(const Dense& A) {
  Dense T(A.cols, A.rows);
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < A.rows; ++i) T(j, i) = A(i, j);
  return T;
}

std::vector<double> matvec(const Dense& A, std::span<const double> x) {
  if (static_cast<int>(x.size()) != A.cols)
    throw std::invalid_argument("matvec: shape mismatch");
  std::vector<double> y(A.rows, 0.0);
  for (int j = 0; j < A.cols; ++j) {
    const double xj = x[j];
    const double* acol = A.a.data() + static_cast<std::size_t>(j) * A.rows;
    for (int i = 0; i < A.rows; ++i) y[i] += acol[i] * xj;
  }
  return y;
}

SymEig sym_eig(Dense A) {
  if (A.rows != A.cols) throw std::invalid_argument("sym_eig: not square");
  SymEig out;
  out.eigenvalues.assign(A.rows, 0.0);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', A.rows, A.a.data(), A.rows,
                     out.eigenvalues.data());
  if (info != 0)
    throw std::runtime_error("sym_eig: dsyevd failed, info=" + std::to_string(info));
  out.eigenvectors = std::move(A);
  return out;
}

std::vector<double> solve_dense(Dense A, std::vector<double> b) {
  if (A.rows != A.cols || A.rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_dense: shape mismatch");
  std::vector<lapack_int> ipiv(A.rows);
  const lapack_int info =
      LAPACKE_dgesv(LAPACK_COL_MAJOR, A.rows, 1, A.a.data(), A.rows,
                    ipiv.data(), b.data(), A.rows);
  if (info != 0)
    throw std::runtime_error("solve_dense: dgesv failed, info=" + std::to_string(info));
  return b;
}

Dense qr_complement(const Dense& K, double rank_tol) {
  const int m = K.rows, k = K.cols;
  if (k >= m) throw std::invalid_argument("qr_complement: k >= m");
  Dense Q(m, m);
  std::copy(K.a.begin(), K.a.end(), Q.a.begin());
  std::vector<double> tau(static_cast<std::size_t>(k));
  lapack_int info = LAPACKE_dgeqrf(LAPACK_COL_MAJOR, m, k, Q.a.data(), m, tau.data());
  if (info != 0) throw std::runtime_error("qr_complement: dgeqrf failed");
  double rmax = 0.0;
  for (int j = 0; j < k; ++j) rmax = std::max(rmax, std::abs(Q(j, j)));
  for (int j = 0; j < k; ++j) {
    if (std::abs(Q(j, j)) < rank_tol * rmax)
      throw std::runtime_error("qr_complement: rank-deficient constraint span");
  }
  info = LAPACKE_dorgqr(LAPACK_COL_MAJOR, m, m, k, Q.a.data(), m, tau.data());
  if (info != 0) throw std::runtime_error("qr_complement: dorgqr failed");
  Dense B(m, m - k);
  std::copy(Q.a.begin() + static_cast<std::size_t>(k) * m, Q.a.end(), B.a.begin());
  return B;
}

}  // namespace slab
