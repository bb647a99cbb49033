#include <doctest.h>

#include <cmath>
#include <numeric>

#include "dense_oracle.hpp"
#include "mbent/bec.hpp"
#include "mbent/errors.hpp"

using namespace mbent;
using namespace mbent::bec;

TEST_CASE("interaction coefficient examples") {
  CHECK(interaction_coefficient(0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(interaction_coefficient(1, 1, 0, 2) - 0.35355339059327373) < 1e-15);
  CHECK(interaction_coefficient(1, 1, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(interaction_coefficient(0, 2, 1, 1) == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(interaction_coefficient(-1, 1, 0, 0), DomainError);
}

TEST_CASE("interaction coefficient symmetries") {
  for (int s = 0; s <= 10; ++s)
    for (int i = 0; i <= s; ++i)
      for (int k = 0; k <= s; ++k) {
        const int j = s - i;
        const int l = s - k;
        const double v = interaction_coefficient(i, j, k, l);
        CHECK(v == doctest::Approx(interaction_coefficient(j, i, k, l)).epsilon(1e-14));
        CHECK(v == doctest::Approx(interaction_coefficient(i, j, l, k)).epsilon(1e-14));
        CHECK(v == doctest::Approx(interaction_coefficient(k, l, i, j)).epsilon(1e-14));
      }
}

TEST_CASE("block hamiltonian examples") {
  const auto h22 = build_block(2, 2, {});
  REQUIRE(h22.matrix.dim() == 2);
  CHECK(h22.matrix(0, 0).real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(h22.matrix(0, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h22.matrix(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

  const auto h33 = build_block(3, 3, {});
  const double expected[3][3] = {{6.0, std::sqrt(3.0), 0.0},
                                 {std::sqrt(3.0), 7.5, std::sqrt(1.5)},
                                 {0.0, std::sqrt(1.5), 6.0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(std::abs(h33.matrix(r, c) - expected[r][c]) < 1e-13);

  CHECK(block_spectrum(1, 1, {}) == std::vector<double>{1.0});
  CHECK(block_spectrum(2, 0, {1.0, 1.0})[0] == doctest::Approx(2.0));
  CHECK(block_spectrum(2, 0, {1.0, 0.5})[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(build_block(0, 2, {}), EmptyBlock);
  CHECK_THROWS_AS(build_block(2, -1, {}), DomainError);
}

TEST_CASE("block spectra") {
  const auto s33 = block_spectrum(3, 3, {});
  CHECK(s33[0] == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(s33[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(s33[2] == doctest::Approx(9.0).epsilon(1e-12));

  const std::vector<double> s66{18.0, 20.52785691, 21.0, 23.08875333, 24.0, 26.13338976, 26.25, 27.0, 27.0, 30.0, 36.0};
  const auto got = block_spectrum(6, 6, {});
  REQUIRE(got.size() == s66.size());
  for (std::size_t k = 0; k < got.size(); ++k) CHECK(std::abs(got[k] - s66[k]) < 1e-7);
}

TEST_CASE("block hamiltonian agrees with explicit ladder operators") {
  for (int n = 1; n <= 5; ++n)
    for (int L = 0; L <= 5; ++L) {
      CAPTURE(n);
      CAPTURE(L);
      const ModelParams params{1.3, -0.7};
      const auto h = build_block(n, L, params);
      const auto ref = oracle::block_hamiltonian(n, L, params.omega, params.g);
      REQUIRE(ref.size() == h.matrix.dim());
      for (std::size_t r = 0; r < ref.size(); ++r)
        for (std::size_t c = 0; c < ref.size(); ++c) CHECK(std::abs(h.matrix(r, c) - ref[r][c]) < 1e-12);
    }
}

TEST_CASE("yrast line for L <= n") {
  for (int n = 2; n <= 8; ++n)
    for (int L = 0; L <= n; ++L) {
      // L = 1 is the centre-of-mass excitation of the L = 0 state.
      const double expected = L + (L == 1 ? n * (n - 1) : n * (n - 1) - n * L / 2.0);
      CHECK(yrast_state(n, L, {}).energy == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("yrast examples") {
  const auto p22 = yrast_state(2, 2, {});
  CHECK(p22.energy == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p22.eta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(p22.degenerate);
  const auto phi22 = occupation_probabilities(p22);
  CHECK(phi22[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(phi22[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(phi22[2] == doctest::Approx(0.25).epsilon(1e-12));

  const auto p33 = yrast_state(3, 3, {});
  CHECK(std::abs(p33.eta - 0.9034418887121903) < 1e-12);
  CHECK(p33.bases == std::vector<int>{3, 3, 2, 2});
  const std::vector<double> phi33{7.0 / 27, 15.0 / 27, 3.0 / 27, 2.0 / 27};
  for (std::size_t l = 0; l < 4; ++l) CHECK(std::abs(p33.phi[l] - phi33[l]) < 1e-12);

  const auto p30 = yrast_state(3, 0, {});
  CHECK(p30.eta == 0.0);
  CHECK(p30.energy == doctest::Approx(6.0));
  CHECK(p30.phi == std::vector<double>{1.0});

  CHECK(to_string(BaseMode::cap) == "cap");
  CHECK(parse_base_mode("reachable") == BaseMode::reachable);
  CHECK_THROWS_AS(parse_base_mode("max"), DomainError);
  CHECK(yrast_state(3, 3, {}, BaseMode::cap).bases == std::vector<int>{4, 4, 2, 2});
  CHECK_THROWS_AS(yrast_state(0, 2, {}), DomainError);
}

TEST_CASE("degenerate yrast levels are canonicalized") {
  for (int L = 4; L <= 6; ++L) {
    const auto p = yrast_state(2, L, {});
    CHECK(p.degenerate);
    const auto again = yrast_state(2, L, {});
    CHECK(p.eta == again.eta);
    CHECK(p.phi == again.phi);
  }
  CHECK_FALSE(yrast_state(3, 4, {}).degenerate);

  for (int L = 4; L <= 6; ++L)
    for (int n = 2; n <= 3; ++n) {
      const auto p = yrast_state(n, L, {});
      const auto ref = oracle::yrast(n, L, 1.0, 1.0);
      CHECK(p.degenerate == ref.degenerate);
      CHECK(std::abs(p.eta - ref.eta) < 1e-10);
      for (std::size_t l = 0; l < p.phi.size(); ++l) CHECK(std::abs(p.phi[l] - ref.phi[l]) < 1e-10);
    }
}

TEST_CASE("yrast quantities agree with the dense reference") {
  for (int L = 1; L <= 4; ++L)
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      CAPTURE(L);
      const auto p = yrast_state(n, L, {});
      const auto ref = oracle::yrast(n, L, 1.0, 1.0);
      CHECK(p.energy == doctest::Approx(ref.energy).epsilon(1e-10));
      CHECK(p.degenerate == ref.degenerate);
      CHECK(std::abs(p.eta - ref.eta) < 1e-10);
      REQUIRE(ref.entropies.size() == p.entropies.size());
      for (std::size_t l = 0; l < p.entropies.size(); ++l) CHECK(std::abs(p.entropies[l] - ref.entropies[l]) < 1e-10);
      for (std::size_t l = 0; l < p.phi.size(); ++l) CHECK(std::abs(p.phi[l] - ref.phi[l]) < 1e-10);
    }
}

TEST_CASE("reduced densities of yrast states are diagonal") {
  for (int L = 1; L <= 5; ++L)
    for (int n = 2; n <= 8; ++n) {
      const auto p = yrast_state(n, L, {});
      for (std::size_t l = 0; l < p.state.num_kinds(); ++l) {
        const auto rd = reduced_density(p.state, l);
        double off = 0.0;
        for (std::size_t r = 0; r < rd.matrix.dim(); ++r)
          for (std::size_t c = 0; c < rd.matrix.dim(); ++c)
            if (r != c) off = std::max(off, std::abs(rd.matrix(r, c)));
        CHECK(off <= 1e-12);
      }
      const auto phi = occupation_probabilities(p);
      CHECK(std::accumulate(phi.begin(), phi.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t l = 0; l < phi.size(); ++l) CHECK(std::abs(phi[l] - p.phi[l]) < 1e-12);
    }
}

TEST_CASE("omega shifts energies without touching the state") {
  for (int L = 1; L <= 4; ++L)
    for (int n = 2; n <= 6; ++n) {
      const auto a = yrast_state(n, L, {1.0, 1.0});
      const auto b = yrast_state(n, L, {2.5, 1.0});
      CHECK(b.energy - a.energy == doctest::Approx(1.5 * L).epsilon(1e-10));
      CHECK(std::abs(a.eta - b.eta) < 1e-12);
      CHECK(std::abs(std::abs(inner_product(a.state, b.state)) - 1.0) < 1e-10);
    }
}

TEST_CASE("ground energy is non-decreasing in a repulsive coupling") {
  for (int L = 1; L <= 4; ++L)
    for (int n = 2; n <= 6; ++n) {
      double prev = -1e300;
      for (double g = 0.0; g <= 2.0; g += 0.25) {
        const double e = block_spectrum(n, L, {1.0, g})[0];
        CHECK(e >= prev - 1e-12);
        prev = e;
      }
    }
}

TEST_CASE("scan") {
  const auto serial = yrast_scan(3, 2, 9, {});
  const auto threaded = yrast_scan(3, 2, 9, {}, {BaseMode::reachable, 3});
  REQUIRE(serial.size() == 8);
  REQUIRE(threaded.size() == 8);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == static_cast<int>(i) + 2);
    CHECK(serial[i].eta == threaded[i].eta);
    CHECK(serial[i].energy == threaded[i].energy);
    CHECK(serial[i].phi == threaded[i].phi);
  }
  CHECK_THROWS_AS(yrast_scan(3, 1, 5, {}), DomainError);
  CHECK_THROWS_AS(yrast_scan(3, 6, 5, {}), DomainError);
  CHECK_THROWS_AS(yrast_scan(0, 2, 5, {}), DomainError);
  CHECK_THROWS_AS(yrast_scan(7, 2, 5, {}), DomainError);
  CHECK_THROWS_AS(yrast_scan(3, 2, 61, {}), DomainError);
}
