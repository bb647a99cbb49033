#include "mbent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mbent/errors.hpp"

namespace mbent {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::separable:
      return "separable";
    case Classification::partially_entangled:
      return "partially_entangled";
    case Classification::genuinely_entangled:
      return "genuinely_entangled";
  }
  return "unknown";
}

double ReducedDensity::max_off_block() const {
  double worst = 0.0;
  for (std::size_t x = 0; x < block_layout.size(); ++x)
    for (std::size_t y = 0; y < block_layout.size(); ++y) {
      if (x == y) continue;
      for (std::size_t r : block_layout[x].indices)
        for (std::size_t c : block_layout[y].indices) worst = std::max(worst, std::abs(matrix(r, c)));
    }
  return worst;
}

namespace {

CompositeIndex drop_position(const CompositeIndex& index, std::size_t pos) {
  CompositeIndex env;
  env.reserve(index.size() - 1);
  for (std::size_t i = 0; i < index.size(); ++i)
    if (i != pos) env.push_back(index[i]);
  return env;
}

std::vector<OccupationBlock> occupation_blocks(const KindSpec& kind) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < kind.dim(); ++i) groups[kind.basis[i].occupation].push_back(i);
  std::vector<OccupationBlock> out;
  for (auto& [occ, idx] : groups) out.push_back({occ, std::move(idx)});
  return out;
}

void require_normalized(const PureState& state, double tol) {
  if (!state.is_normalized(tol))
    throw DomainError("state must be normalized (norm^2 = " + std::to_string(state.norm_squared()) +
                      ")");
}

}  // namespace

ReducedDensity reduced_density(const PureState& state, std::size_t kind_index) {
  if (kind_index >= state.num_kinds()) throw DomainError("kind index out of range");
  require_normalized(state, 1e-10);

  const KindSpec& kind = state.system().kind(kind_index);
  const std::size_t p = kind.dim();

  std::map<CompositeIndex, std::vector<std::pair<std::size_t, Complex>>> by_env;
  for (const auto& [index, amp] : state.amplitudes())
    by_env[drop_position(index, kind_index)].emplace_back(index[kind_index], amp);

  std::vector<Complex> rho(p * p);
  for (const auto& [env, column] : by_env)
    for (const auto& [a, amp_a] : column)
      for (const auto& [b, amp_b] : column) rho[a * p + b] += amp_a * std::conj(amp_b);

  return {kind_index, HermitianMatrix(p, std::move(rho)), occupation_blocks(kind)};
}

double local_entropy(const ReducedDensity& rd, int p) {
  if (p < 1) throw DomainError("local basis size must be at least 1");
  if (p == 1) return 0.0;
  const auto spectrum = eigh(rd.matrix);
  return entropy(spectrum.eigenvalues, p);
}

MeasureReport eta_measure(const PureState& state) {
  const std::size_t m = state.num_kinds();
  if (m < 2) throw SingleKind("the measure needs at least two kinds");
  require_normalized(state, kNormTolerance);

  MeasureReport report;
  bool all_nonzero = true;
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const int p = static_cast<int>(state.system().kind(i).dim());
    const double s = local_entropy(reduced_density(state, i), p);
    report.local_entropies.push_back(s);
    report.bases.push_back(p);
    sum += s;
    if (s <= kZeroEntropyThreshold) all_nonzero = false;
  }
  report.eta = all_nonzero ? sum / static_cast<double>(m) : 0.0;
  report.classification = classify(state);
  report.partial_analysis = m > kMaxExhaustiveKinds;
  return report;
}

double subsystem_purity(const PureState& state, std::span<const std::size_t> subset) {
  std::vector<bool> in_subset(state.num_kinds(), false);
  for (std::size_t k : subset) in_subset.at(k) = true;

  // Group amplitudes by the environment (complement) configuration.
  std::map<CompositeIndex, std::vector<std::pair<CompositeIndex, Complex>>> by_env;
  for (const auto& [index, amp] : state.amplitudes()) {
    CompositeIndex sub, env;
    for (std::size_t i = 0; i < index.size(); ++i) (in_subset[i] ? sub : env).push_back(index[i]);
    by_env[std::move(env)].emplace_back(std::move(sub), amp);
  }

  std::map<std::pair<CompositeIndex, CompositeIndex>, Complex> rho;
  for (const auto& [env, column] : by_env)
    for (const auto& [a, amp_a] : column)
      for (const auto& [b, amp_b] : column) rho[{a, b}] += amp_a * std::conj(amp_b);

  double purity = 0.0;
  for (const auto& [key, value] : rho) purity += std::norm(value);
  return purity;
}

bool is_product_across_cut(const PureState& state, std::span<const std::size_t> subset) {
  const std::size_t m = state.num_kinds();
  std::set<std::size_t> unique(subset.begin(), subset.end());
  if (subset.empty() || unique.size() != subset.size() || unique.size() >= m ||
      *unique.rbegin() >= m)
    throw InvalidCut("cut must be a proper, non-empty set of distinct kind indices");
  return subsystem_purity(state, subset) >= 1.0 - kPurityTolerance;
}

Classification classify(const PureState& state) {
  const std::size_t m = state.num_kinds();
  if (m < 2) throw SingleKind("classification needs at least two kinds");

  bool all_singletons_product = true;
  bool any_product = false;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t cut[] = {i};
    const bool product = is_product_across_cut(state, cut);
    all_singletons_product = all_singletons_product && product;
    any_product = any_product || product;
  }
  if (all_singletons_product) return Classification::separable;

  if (!any_product && m <= kMaxExhaustiveKinds) {
    // Each bipartition once: subsets of the first m-1 kinds, the last kind
    // always on the other side.
    const std::size_t count = (std::size_t{1} << (m - 1)) - 1;
    std::vector<std::size_t> cut;
    for (std::size_t mask = 1; mask <= count && !any_product; ++mask) {
      cut.clear();
      for (std::size_t i = 0; i + 1 < m; ++i)
        if (mask & (std::size_t{1} << i)) cut.push_back(i);
      if (cut.size() == 1) continue;  // singletons done above
      any_product = is_product_across_cut(state, cut);
    }
  }
  return any_product ? Classification::partially_entangled : Classification::genuinely_entangled;
}

PureState w_state(int M, std::span<const Complex> coeffs) {
  if (M < 2) throw DomainError("W state needs M >= 2");
  if (coeffs.size() != static_cast<std::size_t>(M))
    throw DomainError("expected " + std::to_string(M) + " coefficients");

  std::vector<KindSpec> kinds;
  for (int i = 0; i < M; ++i) kinds.push_back({"k" + std::to_string(i), {{0, 0}, {1, 0}}});
  AmplitudeMap amps;
  for (int i = 0; i < M; ++i) {
    CompositeIndex index(static_cast<std::size_t>(M), 0);
    index[static_cast<std::size_t>(i)] = 1;
    amps.emplace(std::move(index), coeffs[static_cast<std::size_t>(i)]);
  }
  return normalize(PureState(SystemSpec(std::move(kinds), 1), amps));
}

double w_measure_analytic(std::span<const Complex> coeffs) {
  double total = 0.0;
  for (const auto& c : coeffs) total += std::norm(c);
  if (total == 0.0) return 0.0;

  double sum = 0.0;
  for (const auto& c : coeffs) {
    const double w = std::norm(c) / total;
    double h = 0.0;
    if (w > 0.0) h -= w * std::log2(w);
    if (w < 1.0) h -= (1.0 - w) * std::log2(1.0 - w);
    if (h <= kZeroEntropyThreshold) return 0.0;
    sum += h;
  }
  return sum / static_cast<double>(coeffs.size());
}

double w_measure_max(int M) {
  if (M < 2) throw DomainError("maximum defined for M >= 2");
  const double m = M;
  return std::log2(m) - (m - 1.0) / m * std::log2(m - 1.0);
}

}  // namespace mbent
