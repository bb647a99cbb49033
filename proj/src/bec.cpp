#include "mbent/bec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "mbent/errors.hpp"

namespace mbent::bec {

std::string_view to_string(BaseMode mode) {
  return mode == BaseMode::reachable ? "reachable" : "cap";
}

BaseMode parse_base_mode(std::string_view name) {
  if (name == "reachable") return BaseMode::reachable;
  if (name == "cap") return BaseMode::cap;
  throw DomainError("unknown base mode '" + std::string(name) + "'");
}

namespace {

double log_factorial(int n) {
  double sum = 0.0;
  for (int k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
  return sum;
}

}  // namespace

double interaction_coefficient(int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0) throw DomainError("mode indices must be non-negative");
  const double log_v = log_factorial(k + l) -
                       0.5 * (log_factorial(i) + log_factorial(j) + log_factorial(k) +
                              log_factorial(l)) -
                       (k + l) * std::log(2.0);
  return std::exp(log_v);
}

BlockHamiltonian build_block(int n, int L, const ModelParams& params, InteractionFn interaction) {
  auto basis = enumerate_block_basis(n, L);
  if (basis.empty())
    throw EmptyBlock("no states with n = " + std::to_string(n) + ", L = " + std::to_string(L));

  std::map<OccupationVector, std::size_t> position;
  for (std::size_t r = 0; r < basis.size(); ++r) position.emplace(basis[r], r);

  const std::size_t dim = basis.size();
  std::vector<Complex> h(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const int momentum = basis[c].angular_momentum();
    if (momentum != L) throw DomainError("basis state outside its angular-momentum block");
    h[c * dim + c] += params.omega * momentum;

    for (int i = 0; i <= L; ++i)
      for (int j = 0; j <= L; ++j)
        for (int k = 0; k <= L; ++k) {
          const int l = i + j - k;
          if (l < 0 || l > L) continue;
          auto moved = apply_two_body(basis[c], i, j, k, l);
          if (!moved) continue;
          const std::size_t r = position.at(moved->second);
          h[r * dim + c] += params.g * interaction(i, j, k, l) * moved->first;
        }
  }
  return {n, L, std::move(basis), HermitianMatrix(dim, std::move(h))};
}

std::vector<double> block_spectrum(int n, int L, const ModelParams& params) {
  return eigh(build_block(n, L, params).matrix).eigenvalues;
}

namespace {

std::vector<Complex> select_ground_vector(const EigenDecomposition& eig, bool& degenerate) {
  const std::size_t dim = eig.dim;
  std::size_t level = 1;
  while (level < dim && eig.eigenvalues[level] - eig.eigenvalues[0] <= kDegeneracyTolerance)
    ++level;
  degenerate = level > 1;

  std::vector<Complex> out(eig.vector(0).begin(), eig.vector(0).end());
  if (degenerate) {
    // Project basis vectors onto the level; the first with weight wins. This
    // does not depend on which orthonormal basis the solver returned.
    for (std::size_t b = 0; b < dim; ++b) {
      std::vector<Complex> proj(dim);
      for (std::size_t k = 0; k < level; ++k) {
        const auto v = eig.vector(k);
        const Complex overlap = std::conj(v[b]);
        for (std::size_t r = 0; r < dim; ++r) proj[r] += overlap * v[r];
      }
      double norm = 0.0;
      for (const auto& x : proj) norm += std::norm(x);
      norm = std::sqrt(norm);
      if (norm > 1e-6) {
        for (auto& x : proj) x /= norm;
        out = std::move(proj);
        break;
      }
    }
  }

  double largest = 0.0;
  for (const auto& x : out) largest = std::max(largest, std::abs(x));
  for (const auto& x : out) {
    if (std::abs(x) >= largest - 1e-12) {
      const Complex phase = std::conj(x) / std::abs(x);
      for (auto& y : out) y *= phase;
      break;
    }
  }
  return out;
}

std::vector<int> mode_values(const std::vector<OccupationVector>& basis, int n, int L, int mode,
                             BaseMode base_mode) {
  std::vector<int> values;
  if (base_mode == BaseMode::cap) {
    const int cap = mode == 0 ? n : L / mode;
    for (int v = 0; v <= cap; ++v) values.push_back(v);
    return values;
  }
  std::set<int> seen;
  for (const auto& b : basis) seen.insert(b.counts[static_cast<std::size_t>(mode)]);
  return {seen.begin(), seen.end()};
}

}  // namespace

YrastPoint yrast_state(int n, int L, const ModelParams& params, BaseMode base_mode) {
  if (n < 1) throw DomainError("yrast state needs at least one boson");
  const BlockHamiltonian block = build_block(n, L, params);
  const EigenDecomposition eig = eigh(block.matrix);

  bool degenerate = false;
  const std::vector<Complex> ground = select_ground_vector(eig, degenerate);

  const int modes = L + 1;
  std::vector<KindSpec> kinds;
  std::vector<std::map<int, std::size_t>> lookup(static_cast<std::size_t>(modes));
  for (int l = 0; l < modes; ++l) {
    KindSpec kind{"l" + std::to_string(l), {}};
    for (int v : mode_values(block.basis, n, L, l, base_mode)) {
      lookup[static_cast<std::size_t>(l)].emplace(v, kind.basis.size());
      kind.basis.push_back({v, 0});
    }
    kinds.push_back(std::move(kind));
  }

  AmplitudeMap amps;
  for (std::size_t r = 0; r < block.basis.size(); ++r) {
    CompositeIndex index;
    for (int l = 0; l < modes; ++l)
      index.push_back(lookup[static_cast<std::size_t>(l)].at(
          block.basis[r].counts[static_cast<std::size_t>(l)]));
    amps.emplace(std::move(index), ground[r]);
  }
  PureState state = normalize(PureState(SystemSpec(std::move(kinds), n), amps));

  YrastPoint point{n, L, eig.eigenvalues[0] + 0.0, degenerate, std::move(state), 0.0, {}, {}, {}};
  if (modes >= 2) {
    const MeasureReport report = eta_measure(point.state);
    point.eta = report.eta;
    point.entropies = report.local_entropies;
    point.bases = report.bases;
  } else {
    point.entropies = {0.0};
    point.bases = {static_cast<int>(point.state.system().kind(0).dim())};
  }
  point.phi = occupation_probabilities(point);
  return point;
}

std::vector<double> occupation_probabilities(const YrastPoint& point) {
  if (point.n < 1) throw DomainError("occupation probabilities need n >= 1");
  const SystemSpec& system = point.state.system();
  std::vector<double> phi(system.num_kinds(), 0.0);
  for (const auto& [index, amp] : point.state.amplitudes()) {
    const double weight = std::norm(amp);
    for (std::size_t l = 0; l < phi.size(); ++l)
      phi[l] += weight * system.kind(l).basis[index[l]].occupation;
  }
  for (auto& x : phi) x /= point.n;
  return phi;
}

std::vector<YrastPoint> yrast_scan(int L, int n_min, int n_max, const ModelParams& params,
                                   const ScanOptions& options) {
  if (L < 1 || L > options.max_L)
    throw DomainError("L must lie in [1, " + std::to_string(options.max_L) + "]");
  if (n_min < 2 || n_min > n_max || n_max > options.max_n)
    throw DomainError("need 2 <= n_min <= n_max <= " + std::to_string(options.max_n));

  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<std::optional<YrastPoint>> slots(count);
  std::vector<std::exception_ptr> failures(count);

  auto work = [&](std::size_t i) {
    try {
      slots[i] = yrast_state(n_min + static_cast<int>(i), L, params, options.base_mode);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
  }

  std::vector<YrastPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace mbent::bec
