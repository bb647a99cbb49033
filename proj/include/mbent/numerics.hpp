#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mbent {

using Complex = std::complex<double>;

/// Relative tolerance for the Hermiticity check, scaled by the max-norm.
inline constexpr double kHermitianTolerance = 1e-12;
/// Eigenvalues of a density matrix in [-kClampTolerance, 0) are rounding noise.
inline constexpr double kClampTolerance = 1e-10;

/// Dense Hermitian matrix, row-major. The stored entries are exactly Hermitian:
/// construction validates the input and then symmetrizes it.
class HermitianMatrix {
public:
  HermitianMatrix() = default;
  /// Zero matrix.
  explicit HermitianMatrix(std::size_t dim);
  /// Throws NotHermitian if entries deviate from Hermitian by more than
  /// kHermitianTolerance * max-norm, DomainError for a size mismatch.
  HermitianMatrix(std::size_t dim, std::vector<Complex> row_major);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  double max_norm() const;
  Complex trace() const;

private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

struct EigenDecomposition {
  std::size_t dim = 0;
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column-major: eigenvector k occupies [k*dim, (k+1)*dim).
  std::vector<Complex> eigenvectors;

  std::span<const Complex> vector(std::size_t k) const {
    return {eigenvectors.data() + k * dim, dim};
  }
};

struct JacobiOptions {
  /// 0 selects the default cap of 100 * dim^2 sweeps.
  std::size_t max_sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization. Deterministic for identical input;
/// ties in the eigenvalue sort keep the rotation order. Throws NoConvergence.
EigenDecomposition eigh(const HermitianMatrix& a, JacobiOptions options = {});

/// -sum p log_base(p) with 0 log 0 = 0. Entries in [-kClampTolerance, 0) are
/// treated as zero. Throws InvalidDistribution for more negative entries or a
/// total off 1 by more than 1e-9, DomainError for base < 2.
double entropy(std::span<const double> probs, int base);

/// Clamps density-matrix eigenvalues in [-kClampTolerance, 0) to zero.
/// Throws InvalidDistribution for anything below -kClampTolerance.
std::vector<double> clamp_spectrum(std::span<const double> eigenvalues);

}  // namespace mbent
