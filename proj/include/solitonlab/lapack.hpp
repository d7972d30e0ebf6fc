#pragma once

#include <span>
#include <vector>

namespace slab {

// Column-major dense matrix, the layout LAPACK wants.
struct Dense {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Dense() = default;
  Dense(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(j) * rows + i]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(j) * rows + i]; }
  std::span<double> col(int j) { return {a.data() + static_cast<std::size_t>(j) * rows, static_cast<std::size_t>(rows)}; }
  std::span<const double> col(int j) const { return {a.data() + static_cast<std::size_t>(j) * rows, static_cast<std::size_t>(rows)}; }
};

Dense matmul(const Dense& A, const Dense& B);
Dense transpose(const Dense& A);
std::vector<double> matvec(const Dense& A, std::span<const double> x);

struct SymEig {
  std::vector<double> eigenvalues;  // ascending
  Dense eigenvectors;               // columns
};

// Eigendecomposition of a symmetric matrix (upper triangle used).
SymEig sym_eig(Dense A);

// Solve A x = b by dense LU; A is overwritten.
std::vector<double> solve_dense(Dense A, std::vector<double> b);

// Orthonormal basis of the orthogonal complement of range(K), K full rank
// m x k with k < m, via the trailing columns of a full QR factor.
// Throws if K is numerically rank-deficient.
Dense qr_complement(const Dense& K, double rank_tol = 1e-10);

}  // namespace slab
