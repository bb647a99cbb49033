#include "mbent/sampling.hpp"

#include <cmath>
#include <map>

#include "mbent/errors.hpp"

namespace mbent {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

}  // namespace

std::vector<Complex> random_unitary(std::size_t dim, Rng& rng) {
  // Columns orthonormalized in place, stored column-major then transposed.
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols)
    for (auto& x : col) x = gaussian(rng);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex overlap{};
      for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(cols[j][r]) * cols[k][r];
      for (std::size_t r = 0; r < dim; ++r) cols[k][r] -= overlap * cols[j][r];
    }
    double norm = 0.0;
    for (const auto& x : cols[k]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[k]) x /= norm;
  }
  std::vector<Complex> u(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) u[r * dim + c] = cols[c][r];
  return u;
}

std::vector<Complex> random_block_unitary(const KindSpec& kind, Rng& rng) {
  const std::size_t dim = kind.dim();
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < dim; ++i) blocks[kind.basis[i].occupation].push_back(i);
  std::vector<Complex> u(dim * dim);
  for (const auto& [occ, idx] : blocks) {
    const auto sub = random_unitary(idx.size(), rng);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        u[idx[r] * dim + idx[c]] = sub[r * idx.size() + c];
  }
  return u;
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  std::vector<Complex> a(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    a[r * dim + r] = gaussian(rng).real();
    for (std::size_t c = r + 1; c < dim; ++c) {
      a[r * dim + c] = gaussian(rng);
      a[c * dim + r] = std::conj(a[r * dim + c]);
    }
  }
  return HermitianMatrix(dim, std::move(a));
}

std::vector<CompositeIndex> admissible_indices(const SystemSpec& system) {
  std::vector<CompositeIndex> out;
  CompositeIndex index(system.num_kinds(), 0);
  while (true) {
    if (system.admits(index)) out.push_back(index);
    // Odometer, last kind fastest.
    std::size_t k = system.num_kinds();
    while (k > 0) {
      --k;
      if (++index[k] < system.kind(k).dim()) break;
      index[k] = 0;
      if (k == 0) return out;
    }
  }
}

PureState random_state(std::shared_ptr<const SystemSpec> system, Rng& rng) {
  AmplitudeMap amps;
  for (auto& index : admissible_indices(*system)) amps.emplace(std::move(index), gaussian(rng));
  return normalize(PureState(std::move(system), amps));
}

std::shared_ptr<const SystemSpec> random_system(Rng& rng, std::size_t max_kinds,
                                                std::size_t max_dim, bool fix_total) {
  std::uniform_int_distribution<std::size_t> kinds_dist(2, std::max<std::size_t>(2, max_kinds));
  std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(1, max_dim));
  const std::size_t m = kinds_dist(rng);
  std::vector<KindSpec> kinds;
  int max_total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t p = dim_dist(rng);
    KindSpec kind{"k" + std::to_string(i), {}};
    for (std::size_t v = 0; v < p; ++v) kind.basis.push_back({static_cast<int>(v), 0});
    max_total += static_cast<int>(p) - 1;
    kinds.push_back(std::move(kind));
  }
  std::optional<int> total;
  if (fix_total) total = std::uniform_int_distribution<int>(0, max_total)(rng);
  return std::make_shared<const SystemSpec>(std::move(kinds), total);
}

PureState apply_local_operator(const PureState& state, std::size_t kind,
                               std::span<const Complex> op, ParticleConstraint constraint) {
  const std::size_t p = state.system().kind(kind).dim();
  if (op.size() != p * p) throw DomainError("operator size does not match the local basis");

  std::shared_ptr<const SystemSpec> system = state.system_ptr();
  if (constraint == ParticleConstraint::drop && system->total_particles())
    system = std::make_shared<const SystemSpec>(system->kinds(), std::nullopt);

  AmplitudeMap out;
  for (const auto& [index, amp] : state.amplitudes()) {
    CompositeIndex target = index;
    for (std::size_t a = 0; a < p; ++a) {
      const Complex m = op[a * p + index[kind]];
      if (m == Complex{}) continue;
      target[kind] = a;
      out[target] += m * amp;
    }
  }
  return PureState(system, out);
}

}  // namespace mbent
