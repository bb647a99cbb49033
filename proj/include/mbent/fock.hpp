#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mbent {

using Complex = std::complex<double>;

/// Amplitudes with modulus below this are dropped on construction.
inline constexpr double kPruneThreshold = 1e-15;
/// Slack accepted when a state is required to be normalized.
inline constexpr double kNormTolerance = 1e-9;

/// One local basis vector |n, sigma> of a single kind.
struct LocalBasisState {
  int occupation = 0;
  int internal_label = 0;

  friend auto operator<=>(const LocalBasisState&, const LocalBasisState&) = default;
};

/// A kind of particle (a site, a trap orbital, ...) and its enumerated local
/// Fock basis. The basis length is the logarithm base p_i of the local entropy.
struct KindSpec {
  std::string name;
  std::vector<LocalBasisState> basis;

  std::size_t dim() const { return basis.size(); }

  friend bool operator==(const KindSpec&, const KindSpec&) = default;
};

/// Position of one local basis vector per kind.
using CompositeIndex = std::vector<std::size_t>;

class SystemSpec {
public:
  /// Throws ParseError if there are no kinds, a kind has an empty basis, or a
  /// kind repeats an (occupation, label) pair; DomainError for negative values.
  explicit SystemSpec(std::vector<KindSpec> kinds,
                      std::optional<int> total_particles = std::nullopt);

  const std::vector<KindSpec>& kinds() const { return kinds_; }
  const KindSpec& kind(std::size_t i) const { return kinds_.at(i); }
  std::size_t num_kinds() const { return kinds_.size(); }
  std::optional<int> total_particles() const { return total_particles_; }

  /// Sum of the occupations selected by `index`. Index must be in range.
  int particle_count(const CompositeIndex& index) const;
  bool in_range(const CompositeIndex& index) const;
  /// In range and compatible with the total particle number, when fixed.
  bool admits(const CompositeIndex& index) const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

private:
  std::vector<KindSpec> kinds_;
  std::optional<int> total_particles_;
};

using AmplitudeMap = std::map<CompositeIndex, Complex>;

/// Sparse pure state over a SystemSpec. Immutable; not necessarily normalized
/// (see normalize()).
class PureState {
public:
  /// Throws ConstraintViolation when an index is out of range or breaks the
  /// total particle number. Amplitudes below kPruneThreshold are dropped.
  PureState(std::shared_ptr<const SystemSpec> system, const AmplitudeMap& amplitudes);
  PureState(SystemSpec system, const AmplitudeMap& amplitudes);

  const SystemSpec& system() const { return *system_; }
  const std::shared_ptr<const SystemSpec>& system_ptr() const { return system_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  std::size_t num_kinds() const { return system_->num_kinds(); }

  Complex amplitude(const CompositeIndex& index) const;
  double norm_squared() const;
  bool is_normalized(double tol = kNormTolerance) const;

private:
  std::shared_ptr<const SystemSpec> system_;
  AmplitudeMap amplitudes_;
};

/// Rescales to unit norm. Throws ZeroState when every amplitude vanishes.
PureState normalize(const PureState& state);

/// <a|b>. Throws SystemMismatch when the two states live on different systems.
Complex inner_product(const PureState& a, const PureState& b);

/// Boson counts (n_0, ..., n_L) over the trap modes of one (n, L) block.
struct OccupationVector {
  std::vector<int> counts;

  std::size_t num_modes() const { return counts.size(); }
  int total() const;
  int angular_momentum() const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
};

/// Every occupation vector over modes 0..L with sum n and angular momentum L.
///
/// Modes above L cannot be occupied without overshooting L, so they are left
/// out. The order is descending lexicographic on (n_1, ..., n_L), which puts
/// the states with the most s-bosons last.
std::vector<OccupationVector> enumerate_block_basis(int n, int L);

/// Applies a+_i a+_j a_k a_l to |ket>. Returns nothing when the result is zero,
/// otherwise the bosonic prefactor and the resulting occupation vector.
std::optional<std::pair<double, OccupationVector>> apply_two_body(const OccupationVector& ket,
                                                                  int i, int j, int k, int l);

/// <bra| a+_i a+_j a_k a_l |ket> with a|n> = sqrt(n)|n-1>, a+|n> = sqrt(n+1)|n+1>.
double bosonic_two_body_element(const OccupationVector& bra, const OccupationVector& ket,
                                int i, int j, int k, int l);

}  // namespace mbent
