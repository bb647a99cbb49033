#include "mbent/fock.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "mbent/errors.hpp"

namespace mbent {

SystemSpec::SystemSpec(std::vector<KindSpec> kinds, std::optional<int> total_particles)
    : kinds_(std::move(kinds)), total_particles_(total_particles) {
  if (kinds_.empty()) throw ParseError("system needs at least one kind");
  if (total_particles_ && *total_particles_ < 0)
    throw DomainError("total_particles must be non-negative");
  for (const auto& kind : kinds_) {
    if (kind.basis.empty()) throw ParseError("kind '" + kind.name + "' has an empty basis");
    std::set<LocalBasisState> seen;
    for (const auto& b : kind.basis) {
      if (b.occupation < 0 || b.internal_label < 0)
        throw DomainError("kind '" + kind.name + "' has a negative occupation or label");
      if (!seen.insert(b).second)
        throw ParseError("kind '" + kind.name + "' repeats a basis state");
    }
  }
}

int SystemSpec::particle_count(const CompositeIndex& index) const {
  int total = 0;
  for (std::size_t i = 0; i < kinds_.size(); ++i) total += kinds_[i].basis[index[i]].occupation;
  return total;
}

bool SystemSpec::in_range(const CompositeIndex& index) const {
  if (index.size() != kinds_.size()) return false;
  for (std::size_t i = 0; i < kinds_.size(); ++i)
    if (index[i] >= kinds_[i].dim()) return false;
  return true;
}

bool SystemSpec::admits(const CompositeIndex& index) const {
  if (!in_range(index)) return false;
  return !total_particles_ || particle_count(index) == *total_particles_;
}

PureState::PureState(std::shared_ptr<const SystemSpec> system, const AmplitudeMap& amplitudes)
    : system_(std::move(system)) {
  for (const auto& [index, amp] : amplitudes) {
    if (!system_->in_range(index)) throw ConstraintViolation("composite index out of range");
    if (!system_->admits(index))
      throw ConstraintViolation("composite index violates total_particles = " +
                                std::to_string(*system_->total_particles()));
    if (std::abs(amp) >= kPruneThreshold) amplitudes_.emplace(index, amp);
  }
}

PureState::PureState(SystemSpec system, const AmplitudeMap& amplitudes)
    : PureState(std::make_shared<const SystemSpec>(std::move(system)), amplitudes) {}

Complex PureState::amplitude(const CompositeIndex& index) const {
  auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [index, amp] : amplitudes_) sum += std::norm(amp);
  return sum;
}

bool PureState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

PureState normalize(const PureState& state) {
  const double norm = std::sqrt(state.norm_squared());
  if (state.amplitudes().empty() || norm == 0.0) throw ZeroState("all amplitudes vanish");
  AmplitudeMap scaled;
  for (const auto& [index, amp] : state.amplitudes()) scaled.emplace(index, amp / norm);
  return PureState(state.system_ptr(), scaled);
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.system_ptr() != b.system_ptr() && !(a.system() == b.system()))
    throw SystemMismatch("states are defined over different systems");
  Complex sum{};
  // Walk the smaller map, look up in the larger.
  const bool a_small = a.amplitudes().size() <= b.amplitudes().size();
  const auto& small = a_small ? a.amplitudes() : b.amplitudes();
  const auto& large = a_small ? b.amplitudes() : a.amplitudes();
  for (const auto& [index, amp] : small) {
    auto it = large.find(index);
    if (it == large.end()) continue;
    sum += a_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return sum;
}

int OccupationVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int OccupationVector::angular_momentum() const {
  int sum = 0;
  for (std::size_t l = 0; l < counts.size(); ++l) sum += static_cast<int>(l) * counts[l];
  return sum;
}

namespace {

void fill_modes(int mode, int L, int bosons_left, int momentum_left, std::vector<int>& counts,
                std::vector<OccupationVector>& out) {
  if (mode > L) {
    if (momentum_left == 0) {
      counts[0] = bosons_left;
      out.push_back({counts});
    }
    return;
  }
  const int most = std::min(bosons_left, momentum_left / mode);
  for (int k = most; k >= 0; --k) {
    counts[mode] = k;
    fill_modes(mode + 1, L, bosons_left - k, momentum_left - k * mode, counts, out);
  }
  counts[mode] = 0;
}

}  // namespace

std::vector<OccupationVector> enumerate_block_basis(int n, int L) {
  if (n < 0 || L < 0) throw DomainError("block requires n >= 0 and L >= 0");
  std::vector<OccupationVector> out;
  std::vector<int> counts(static_cast<std::size_t>(L) + 1, 0);
  if (L == 0) {
    out.push_back({{n}});
    return out;
  }
  fill_modes(1, L, n, L, counts, out);
  return out;
}

std::optional<std::pair<double, OccupationVector>> apply_two_body(const OccupationVector& ket,
                                                                  int i, int j, int k, int l) {
  const int modes = static_cast<int>(ket.num_modes());
  for (int m : {i, j, k, l})
    if (m < 0 || m >= modes) throw DomainError("mode index out of range");

  OccupationVector out = ket;
  double coef = 1.0;
  // Rightmost operator acts first.
  for (int m : {l, k}) {
    auto& c = out.counts[static_cast<std::size_t>(m)];
    if (c == 0) return std::nullopt;
    coef *= std::sqrt(static_cast<double>(c));
    --c;
  }
  for (int m : {j, i}) {
    auto& c = out.counts[static_cast<std::size_t>(m)];
    ++c;
    coef *= std::sqrt(static_cast<double>(c));
  }
  return std::pair{coef, std::move(out)};
}

double bosonic_two_body_element(const OccupationVector& bra, const OccupationVector& ket, int i,
                                int j, int k, int l) {
  auto result = apply_two_body(ket, i, j, k, l);
  if (!result || result->second != bra) return 0.0;
  return result->first;
}

}  // namespace mbent
