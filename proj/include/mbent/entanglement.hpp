#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mbent/fock.hpp"
#include "mbent/numerics.hpp"

namespace mbent {

/// A local entropy at or below this counts as zero in the measure's case split.
inline constexpr double kZeroEntropyThreshold = 1e-9;
/// A subsystem with purity >= 1 - kPurityTolerance is treated as pure.
inline constexpr double kPurityTolerance = 1e-9;
/// Above this many kinds only singleton cuts are examined.
inline constexpr std::size_t kMaxExhaustiveKinds = 12;

enum class Classification { separable, partially_entangled, genuinely_entangled };

std::string_view to_string(Classification c);

/// Basis positions of one kind that share a local particle number.
struct OccupationBlock {
  int occupation = 0;
  std::vector<std::size_t> indices;
};

/// Reduced density matrix of one kind, with its basis grouped by local
/// particle number. For states with a fixed total particle number the matrix
/// has no weight between different groups.
struct ReducedDensity {
  std::size_t kind_index = 0;
  HermitianMatrix matrix;
  std::vector<OccupationBlock> block_layout;

  /// Largest modulus of an entry linking two different occupation blocks.
  double max_off_block() const;
};

/// Partial trace over every kind but `kind_index`. Requires a normalized state
/// (trace 1 within 1e-10); throws DomainError otherwise.
ReducedDensity reduced_density(const PureState& state, std::size_t kind_index);

/// Von Neumann entropy of `rd` with logarithm base `p`. A frozen kind (p = 1)
/// has zero entropy.
double local_entropy(const ReducedDensity& rd, int p);

struct MeasureReport {
  double eta = 0.0;
  std::vector<double> local_entropies;
  std::vector<int> bases;
  Classification classification = Classification::separable;
  /// True when the classification only looked at singleton cuts.
  bool partial_analysis = false;
};

/// Mean of the base-p_i local entropies, or zero when any of them vanishes.
/// Throws SingleKind for a single-kind system, DomainError for an
/// unnormalized state.
MeasureReport eta_measure(const PureState& state);

/// Purity Tr(rho_S^2) of the subsystem made of the kinds in `subset`.
double subsystem_purity(const PureState& state, std::span<const std::size_t> subset);

/// Whether the normalized pure state factorizes across the cut `subset` | rest.
/// Throws InvalidCut for an empty, full, duplicated or out-of-range subset.
bool is_product_across_cut(const PureState& state, std::span<const std::size_t> subset);

/// Separable when every singleton cut factorizes, genuinely entangled when no
/// bipartition does, partially entangled otherwise. With more than
/// kMaxExhaustiveKinds kinds only singleton cuts are tested.
Classification classify(const PureState& state);

/// Sum_i C_i |0..1_i..0> over M spinless kinds with local basis (|0>, |1>) and
/// one particle in total, normalized. Throws DomainError for M < 2 or a
/// length mismatch, ZeroState when every coefficient is zero.
PureState w_state(int M, std::span<const Complex> coeffs);

/// Closed form of the measure for w_state(coeffs.size(), coeffs). The
/// coefficients are normalized first; a vanishing one gives zero.
double w_measure_analytic(std::span<const Complex> coeffs);

/// Maximum of the closed form, reached at |C_i| = 1/sqrt(M).
/// Throws DomainError for M < 2.
double w_measure_max(int M);

}  // namespace mbent
