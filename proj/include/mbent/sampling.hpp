#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "mbent/fock.hpp"
#include "mbent/numerics.hpp"

namespace mbent {

using Rng = std::mt19937_64;

/// Haar-like random unitary (Gram-Schmidt on a complex Gaussian matrix),
/// row-major.
std::vector<Complex> random_unitary(std::size_t dim, Rng& rng);

/// Random unitary on the kind's local space that only mixes basis states with
/// the same occupation.
std::vector<Complex> random_block_unitary(const KindSpec& kind, Rng& rng);

/// Random Hermitian matrix with Gaussian entries.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Every composite index the system admits, in lexicographic order.
std::vector<CompositeIndex> admissible_indices(const SystemSpec& system);

/// Normalized state with Gaussian amplitudes on every admissible index.
PureState random_state(std::shared_ptr<const SystemSpec> system, Rng& rng);

/// System of 2..max_kinds spinless kinds, each with basis occupations 0..p-1
/// for p in 1..max_dim. When `fix_total` is set the total particle number is
/// drawn from the values that leave at least one admissible index.
std::shared_ptr<const SystemSpec> random_system(Rng& rng, std::size_t max_kinds,
                                                std::size_t max_dim, bool fix_total);

enum class ParticleConstraint { keep, drop };

/// psi'(a', env) = sum_a op[a'][a] psi(a, env) on one kind. With `drop` the
/// result lives on a copy of the system without a total particle number.
/// Throws ConstraintViolation if `keep` is requested but broken.
PureState apply_local_operator(const PureState& state, std::size_t kind,
                               std::span<const Complex> op, ParticleConstraint constraint);

}  // namespace mbent
