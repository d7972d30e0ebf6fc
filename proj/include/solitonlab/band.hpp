#pragma once

#include <span>
#include <vector>

#include "solitonlab/lapack.hpp"

namespace slab {

// General band matrix in LAPACK band layout ab[(ku + i - j) + ld*j].
struct BandMatrix {
  int n = 0;
  int kl = 0;
  int ku = 0;
  std::vector<double> ab;

  BandMatrix() = default;
  BandMatrix(int n_, int kl_, int ku_)
      : n(n_), kl(kl_), ku(ku_),
        ab(static_cast<std::size_t>(kl_ + ku_ + 1) * n_, 0.0) {}

  int ld() const { return kl + ku + 1; }
  bool in_band(int i, int j) const { return j - i <= ku && i - j <= kl; }
  double& at(int i, int j) { return ab[(ku + i - j) + static_cast<std::size_t>(ld()) * j]; }
  double get(int i, int j) const {
    return in_band(i, j) ? ab[(ku + i - j) + static_cast<std::size_t>(ld()) * j] : 0.0;
  }
  void add(int i, int j, double v);

  void matvec(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;
  Dense to_dense() const;
};

// C = A^T diag(w) A, banded result (kl = ku = A.kl + A.ku).
BandMatrix band_AtWA(const BandMatrix& A, std::span<const double> w);

// C = alpha*A + beta*B with matching n (bands widened as needed).
BandMatrix band_add(double alpha, const BandMatrix& A, double beta,
                    const BandMatrix& B);

// Add d[i] to the diagonal.
void band_add_diag(BandMatrix& A, std::span<const double> d);
void band_add_diag(BandMatrix& A, double d);

// LU factorization of a band matrix (dgbtrf/dgbtrs).
class BandLU {
 public:
  explicit BandLU(const BandMatrix& A);
  std::vector<double> solve(std::vector<double> rhs) const;

 private:
  int n_, kl_, ku_;
  std::vector<double> afb_;
  std::vector<int> ipiv_;
};

}  // namespace slab
