#include "mbent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mbent/errors.hpp"

namespace mbent {

HermitianMatrix::HermitianMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_)
    throw DomainError("matrix data does not match dimension " + std::to_string(dim_));
  const double scale = max_norm();
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      const Complex a = entries_[r * dim_ + c];
      const Complex b = std::conj(entries_[c * dim_ + r]);
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw NotHermitian("non-finite entry");
      if (std::abs(a - b) > kHermitianTolerance * scale)
        throw NotHermitian("entry (" + std::to_string(r) + "," + std::to_string(c) +
                           ") differs from the conjugate of its transpose");
      const Complex avg = 0.5 * (a + b);
      entries_[r * dim_ + c] = avg;
      entries_[c * dim_ + r] = std::conj(avg);
    }
    entries_[r * dim_ + r] = entries_[r * dim_ + r].real();
  }
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  HermitianMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i * m.dim_ + i] = values[i];
  return m;
}

double HermitianMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

Complex HermitianMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
  return t;
}

namespace {

double off_diagonal_squared(const std::vector<Complex>& a, std::size_t n) {
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
  return off;
}

}  // namespace

EigenDecomposition eigh(const HermitianMatrix& matrix, JacobiOptions options) {
  const std::size_t n = matrix.dim();
  std::vector<Complex> a = matrix.entries();
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frobenius = 0.0;
  for (const auto& e : a) frobenius += std::norm(e);
  frobenius = std::sqrt(frobenius);

  const std::size_t max_sweeps = options.max_sweeps ? options.max_sweeps : 100 * n * n;
  bool converged = false;
  for (std::size_t sweep = 0;; ++sweep) {
    const double off = off_diagonal_squared(a, n);
    if (off == 0.0 || std::sqrt(off) <= 1e-15 * frobenius) {
      converged = true;
      break;
    }
    if (sweep >= max_sweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        // Negligible against both diagonal entries: drop it.
        const double g = 100.0 * mag;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }

        const Complex phase = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex pc = std::conj(phase);

        // A <- A U, V <- V U with U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        for (std::size_t r = 0; r < n; ++r) {
          const Complex arp = a[r * n + p];
          const Complex arq = a[r * n + q];
          a[r * n + p] = c * arp - s * pc * arq;
          a[r * n + q] = s * arp + c * pc * arq;
          const Complex vrp = v[r * n + p];
          const Complex vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * pc * vrq;
          v[r * n + q] = s * vrp + c * pc * vrq;
        }
        // A <- U^dagger A.
        for (std::size_t r = 0; r < n; ++r) {
          const Complex apr = a[p * n + r];
          const Complex aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * phase * aqr;
          a[q * n + r] = s * apr + c * phase * aqr;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
  }
  if (!converged)
    throw NoConvergence("Jacobi sweeps exceeded cap of " + std::to_string(max_sweeps));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });

  EigenDecomposition out;
  out.dim = n;
  out.eigenvalues.reserve(n);
  out.eigenvectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues.push_back(a[src * n + src].real());
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors[k * n + r] = v[r * n + src];
  }
  return out;
}

std::vector<double> clamp_spectrum(std::span<const double> eigenvalues) {
  std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
  for (auto& x : out) {
    if (x < -kClampTolerance)
      throw InvalidDistribution("eigenvalue " + std::to_string(x) + " is negative beyond rounding");
    if (x < 0.0) x = 0.0;
  }
  return out;
}

double entropy(std::span<const double> probs, int base) {
  if (base < 2) throw DomainError("entropy base must be at least 2");
  const std::vector<double> p = clamp_spectrum(probs);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidDistribution("probabilities sum to " + std::to_string(total));
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  // +0.0 turns a -0 result into +0.
  return h / std::log(static_cast<double>(base)) + 0.0;
}

}  // namespace mbent
