#pragma once

#include <string_view>
#include <vector>

#include "mbent/entanglement.hpp"
#include "mbent/fock.hpp"
#include "mbent/numerics.hpp"

namespace mbent::bec {

/// Trap frequency and contact coupling. g = 0 is allowed but leaves every
/// block degenerate.
struct ModelParams {
  double omega = 1.0;
  double g = 1.0;
};

/// How the logarithm base of each trap mode is chosen.
///  - reachable: number of distinct occupations the mode takes in the block basis
///  - cap: n + 1 for mode 0, floor(L / l) + 1 for mode l >= 1
enum class BaseMode { reachable, cap };

std::string_view to_string(BaseMode mode);
/// Throws DomainError for an unknown name.
BaseMode parse_base_mode(std::string_view name);

using InteractionFn = double (*)(int i, int j, int k, int l);

/// (k+l)! / sqrt(i! j! k! l! 4^(k+l)), evaluated through log-factorials.
double interaction_coefficient(int i, int j, int k, int l);

struct BlockHamiltonian {
  int n = 0;
  int L = 0;
  std::vector<OccupationVector> basis;
  HermitianMatrix matrix;
};

/// omega L on the diagonal plus g sum_{i+j=k+l} V_{ij;kl} a+_i a+_j a_k a_l, the
/// sum running over every ordered quadruple of modes 0..L.
/// Throws EmptyBlock when the (n, L) block has no states.
BlockHamiltonian build_block(int n, int L, const ModelParams& params,
                             InteractionFn interaction = &interaction_coefficient);

/// Ascending eigenvalues of the (n, L) block.
std::vector<double> block_spectrum(int n, int L, const ModelParams& params);

struct YrastPoint {
  int n = 0;
  int L = 0;
  double energy = 0.0;
  /// The lowest level is degenerate within kDegeneracyTolerance.
  bool degenerate = false;
  /// Kinds are trap modes 0..L.
  PureState state;
  double eta = 0.0;
  std::vector<double> entropies;
  std::vector<int> bases;
  std::vector<double> phi;
};

inline constexpr double kDegeneracyTolerance = 1e-9;

/// Lowest state of the (n, L) block with its entanglement measure and
/// occupation probabilities.
///
/// Within a degenerate ground level the state is the normalized projection of
/// the first basis vector that has weight in the level, with its
/// largest-magnitude component (lowest index on ties) made real positive.
/// A single-mode block (L = 0) has eta = 0.
YrastPoint yrast_state(int n, int L, const ModelParams& params,
                       BaseMode base_mode = BaseMode::reachable);

/// <a+_l a_l> / n for l = 0..L.
std::vector<double> occupation_probabilities(const YrastPoint& point);

struct ScanOptions {
  BaseMode base_mode = BaseMode::reachable;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;
  int max_L = 6;
  int max_n = 60;
};

/// One yrast point per n in [n_min, n_max]. Requires 2 <= n_min <= n_max <=
/// max_n and 1 <= L <= max_L; throws DomainError otherwise.
std::vector<YrastPoint> yrast_scan(int L, int n_min, int n_max, const ModelParams& params,
                                   const ScanOptions& options = {});

}  // namespace mbent::bec
