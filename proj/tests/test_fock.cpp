#include <doctest.h>

#include <cmath>

#include "dense_oracle.hpp"
#include "mbent/errors.hpp"
#include "mbent/fock.hpp"
#include "mbent/sampling.hpp"

using namespace mbent;

namespace {

SystemSpec two_qubit_kinds(std::optional<int> total = 1) {
  return SystemSpec({{"A", {{0, 0}, {1, 0}}}, {"B", {{0, 0}, {1, 0}}}}, total);
}

std::vector<std::vector<int>> counts_of(const std::vector<OccupationVector>& basis) {
  std::vector<std::vector<int>> out;
  for (const auto& b : basis) out.push_back(b.counts);
  return out;
}

}  // namespace

TEST_CASE("normalize rescales and keeps ratios") {
  auto sys = std::make_shared<const SystemSpec>(two_qubit_kinds());

  auto equal = normalize(PureState(sys, {{{1, 0}, 2.0}, {{0, 1}, 2.0}}));
  CHECK(equal.amplitude({1, 0}).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(equal.amplitude({0, 1}).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  auto single = normalize(PureState(sys, {{{1, 0}, 1.0}}));
  CHECK(single.amplitude({1, 0}) == Complex(1.0, 0.0));

  auto pythagorean = normalize(PureState(sys, {{{1, 0}, 3.0}, {{0, 1}, 4.0}}));
  CHECK(std::abs(pythagorean.amplitude({1, 0}) - 0.6) < 1e-15);
  CHECK(std::abs(pythagorean.amplitude({0, 1}) - 0.8) < 1e-15);
}

TEST_CASE("normalize rejects the zero state") {
  auto sys = std::make_shared<const SystemSpec>(two_qubit_kinds());
  CHECK_THROWS_AS(normalize(PureState(sys, {})), ZeroState);
  // Amplitudes below the pruning threshold vanish on construction.
  CHECK_THROWS_AS(normalize(PureState(sys, {{{1, 0}, 1e-16}})), ZeroState);
}

TEST_CASE("normalize is idempotent on random states") {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    auto sys = random_system(rng, 4, 4, t % 2 == 0);
    AmplitudeMap amps;
    std::normal_distribution<double> g(0.0, 3.0);
    for (auto& idx : admissible_indices(*sys)) amps.emplace(idx, Complex(g(rng), g(rng)));
    auto once = normalize(PureState(sys, amps));
    auto twice = normalize(once);
    CHECK(once.is_normalized(1e-12));
    for (const auto& [idx, amp] : once.amplitudes()) CHECK(std::abs(twice.amplitude(idx) - amp) <= 1e-15);
  }
}

TEST_CASE("pure state construction validates indices") {
  auto sys = std::make_shared<const SystemSpec>(two_qubit_kinds());
  CHECK_THROWS_AS(PureState(sys, {{{1, 1}, 1.0}}), ConstraintViolation);
  CHECK_THROWS_AS(PureState(sys, {{{2, 0}, 1.0}}), ConstraintViolation);
  CHECK_THROWS_AS(PureState(sys, {{{1}, 1.0}}), ConstraintViolation);
  // Without a fixed total, |11> is fine.
  CHECK_NOTHROW(PureState(two_qubit_kinds(std::nullopt), {{{1, 1}, 1.0}}));
}

TEST_CASE("system spec invariants") {
  CHECK_THROWS_AS(SystemSpec({}), ParseError);
  CHECK_THROWS_AS(SystemSpec(std::vector<KindSpec>{KindSpec{"A", {}}}), ParseError);
  CHECK_THROWS_AS(SystemSpec({{"A", {{0, 0}, {0, 0}}}}), ParseError);
  CHECK_THROWS_AS(SystemSpec({{"A", {{-1, 0}}}}), DomainError);
  CHECK_NOTHROW(SystemSpec({{"A", {{1, 0}, {1, 1}, {0, 0}}}}));
}

TEST_CASE("inner product") {
  auto sys = std::make_shared<const SystemSpec>(two_qubit_kinds());
  PureState ten(sys, {{{1, 0}, 1.0}});
  PureState one(sys, {{{0, 1}, 1.0}});
  auto bell = normalize(PureState(sys, {{{1, 0}, 1.0}, {{0, 1}, 1.0}}));

  CHECK(inner_product(ten, one) == Complex{});
  CHECK(std::abs(inner_product(bell, bell) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(bell, ten) - 1.0 / std::sqrt(2.0)) < 1e-15);

  // Equal specs held in different objects are compatible.
  PureState other(two_qubit_kinds(), {{{1, 0}, 1.0}});
  CHECK(inner_product(other, ten) == Complex(1.0, 0.0));

  PureState unconstrained(two_qubit_kinds(std::nullopt), {{{1, 0}, 1.0}});
  CHECK_THROWS_AS(inner_product(ten, unconstrained), SystemMismatch);

  Rng rng(102);
  auto rsys = random_system(rng, 3, 4, false);
  for (int t = 0; t < 100; ++t) {
    auto a = random_state(rsys, rng);
    auto b = random_state(rsys, rng);
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-14);
  }
}

TEST_CASE("block basis golden values") {
  CHECK(counts_of(enumerate_block_basis(1, 0)) == std::vector<std::vector<int>>{{1}});
  CHECK(counts_of(enumerate_block_basis(2, 2)) == std::vector<std::vector<int>>{{0, 2, 0}, {1, 0, 1}});
  CHECK(counts_of(enumerate_block_basis(3, 3)) ==
        std::vector<std::vector<int>>{{0, 3, 0, 0}, {1, 1, 1, 0}, {2, 0, 0, 1}});
  CHECK(enumerate_block_basis(0, 3).empty());
  CHECK(counts_of(enumerate_block_basis(0, 0)) == std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_AS(enumerate_block_basis(-1, 2), DomainError);
}

TEST_CASE("block basis matches the brute-force box scan") {
  for (int n = 0; n <= 7; ++n)
    for (int L = 0; L <= 7; ++L) {
      CAPTURE(n);
      CAPTURE(L);
      const auto basis = enumerate_block_basis(n, L);
      CHECK(counts_of(basis) == oracle::block_basis(n, L));
      for (const auto& b : basis) {
        CHECK(b.total() == n);
        CHECK(b.angular_momentum() == L);
      }
    }
}

TEST_CASE("block size is the partition count once n >= L") {
  for (int L = 0; L <= 10; ++L)
    for (int n = L; n <= L + 3; ++n) CHECK(static_cast<long>(enumerate_block_basis(n, L).size()) == oracle::partition_count(L));
  CHECK(enumerate_block_basis(6, 6).size() == 11);
}

TEST_CASE("two-body elements") {
  CHECK(bosonic_two_body_element({{2}}, {{2}}, 0, 0, 0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(bosonic_two_body_element({{1, 0, 1}}, {{0, 2, 0}}, 1, 1, 0, 2) == 0.0);
  CHECK(bosonic_two_body_element({{0, 2, 0}}, {{1, 0, 1}}, 1, 1, 2, 0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bosonic_two_body_element({{2}}, {{2}}, 0, 0, 0, 1), DomainError);
}

TEST_CASE("two-body elements agree with explicit ladder matrices") {
  for (int n = 0; n <= 4; ++n)
    for (int L = 0; L <= 3; ++L) {
      const auto basis = enumerate_block_basis(n, L);
      for (const auto& x : basis)
        for (const auto& y : basis)
          for (int i = 0; i <= L; ++i)
            for (int j = 0; j <= L; ++j)
              for (int k = 0; k <= L; ++k)
                for (int l = 0; l <= L; ++l)
                  CHECK(bosonic_two_body_element(x, y, i, j, k, l) ==
                        doctest::Approx(oracle::two_body_element(x.counts, y.counts, i, j, k, l)).epsilon(1e-14));
    }
}

TEST_CASE("two-body elements are real symmetric") {
  for (int n = 0; n <= 6; ++n)
    for (int L = 0; L <= 6; ++L) {
      const auto basis = enumerate_block_basis(n, L);
      for (const auto& x : basis)
        for (const auto& y : basis)
          for (int i = 0; i <= L; ++i)
            for (int j = 0; j <= L; ++j)
              for (int k = 0; k <= L; ++k)
                for (int l = 0; l <= L; ++l) {
                  const double forward = bosonic_two_body_element(x, y, i, j, k, l);
                  const double backward = bosonic_two_body_element(y, x, l, k, j, i);
                  if (std::abs(forward - backward) > 1e-12) FAIL_CHECK("asymmetric element");
                }
    }
}
