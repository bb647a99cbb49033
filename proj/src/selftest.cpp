#include "mbent/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "mbent/entanglement.hpp"
#include "mbent/qstate.hpp"
#include "mbent/report.hpp"
#include "mbent/sampling.hpp"

namespace mbent {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// p(L) by the classic coin-change recurrence.
long partition_count(int L) {
  std::vector<long> ways(static_cast<std::size_t>(L) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= L; ++part)
    for (int s = part; s <= L; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(L)];
}

PureState two_kind(const AmplitudeMap& amps, std::optional<int> total = 1) {
  std::vector<KindSpec> kinds{{"A", {{0, 0}, {1, 0}}}, {"B", {{0, 0}, {1, 0}}}};
  return normalize(PureState(SystemSpec(kinds, total), amps));
}

PureState three_kind(const AmplitudeMap& amps, std::optional<int> total) {
  std::vector<KindSpec> kinds{
      {"A", {{0, 0}, {1, 0}}}, {"B", {{0, 0}, {1, 0}}}, {"C", {{0, 0}, {1, 0}}}};
  return normalize(PureState(SystemSpec(kinds, total), amps));
}

bool residual_ok(const HermitianMatrix& a, const EigenDecomposition& eig) {
  const std::size_t n = a.dim();
  const double scale = std::max(1.0, a.max_norm());
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = eig.vector(k);
    double res = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      Complex av{};
      for (std::size_t c = 0; c < n; ++c) av += a(r, c) * v[c];
      res += std::norm(av - eig.eigenvalues[k] * v[r]);
    }
    if (std::sqrt(res) > 1e-10 * scale) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = eig.vector(j);
      Complex dot{};
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(w[r]) * v[r];
      if (std::abs(dot - (j == k ? 1.0 : 0.0)) > 1e-10) return false;
    }
  }
  return true;
}

std::vector<Check> build_checks(const SelfTestConfig& config) {
  const auto V = config.interaction;
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<bool()> run) {
    checks.push_back({std::move(name), std::move(run)});
  };

  // fock-core
  add("block basis (2,2) golden", [] {
    auto b = enumerate_block_basis(2, 2);
    return b == std::vector<OccupationVector>{{{0, 2, 0}}, {{1, 0, 1}}};
  });
  add("block basis (3,3) golden", [] {
    auto b = enumerate_block_basis(3, 3);
    return b == std::vector<OccupationVector>{{{0, 3, 0, 0}}, {{1, 1, 1, 0}}, {{2, 0, 0, 1}}};
  });
  add("block basis constraint sums", [] {
    for (int n = 0; n <= 8; ++n)
      for (int L = 0; L <= 8; ++L)
        for (const auto& b : enumerate_block_basis(n, L))
          if (b.total() != n || b.angular_momentum() != L) return false;
    return true;
  });
  add("block size equals partition count", [] {
    for (int L = 0; L <= 10; ++L)
      if (static_cast<long>(enumerate_block_basis(L + 1, L).size()) != partition_count(L)) return false;
    return enumerate_block_basis(6, 6).size() == 11;
  });
  add("two-body element <2|a0+a0+a0a0|2>", [] {
    return near(bosonic_two_body_element({{2}}, {{2}}, 0, 0, 0, 0), 2.0, 1e-15);
  });
  add("two-body element sqrt(2) example", [] {
    return near(bosonic_two_body_element({{0, 2, 0}}, {{1, 0, 1}}, 1, 1, 2, 0), std::sqrt(2.0),
                1e-15) &&
           bosonic_two_body_element({{1, 0, 1}}, {{0, 2, 0}}, 1, 1, 0, 2) == 0.0;
  });
  add("two-body element real symmetry", [] {
    for (int n = 0; n <= 4; ++n)
      for (int L = 0; L <= 4; ++L) {
        const auto basis = enumerate_block_basis(n, L);
        for (const auto& x : basis)
          for (const auto& y : basis)
            for (int i = 0; i <= L; ++i)
              for (int j = 0; j <= L; ++j)
                for (int k = 0; k <= L; ++k)
                  for (int l = 0; l <= L; ++l)
                    if (!near(bosonic_two_body_element(x, y, i, j, k, l),
                              bosonic_two_body_element(y, x, l, k, j, i), 1e-12))
                      return false;
      }
    return true;
  });
  add("normalize (3,4) -> (0.6,0.8)", [] {
    std::vector<KindSpec> kinds{{"A", {{0, 0}, {1, 0}}}, {"B", {{0, 0}, {1, 0}}}};
    auto s = normalize(PureState(SystemSpec(kinds, 1), {{{1, 0}, 3.0}, {{0, 1}, 4.0}}));
    return near(s.amplitude({1, 0}).real(), 0.6, 1e-15) && near(s.amplitude({0, 1}).real(), 0.8, 1e-15);
  });
  add("normalize idempotent", [] {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      auto s = random_state(random_system(rng, 4, 4, false), rng);
      auto twice = normalize(s);
      for (const auto& [idx, amp] : s.amplitudes())
        if (std::abs(twice.amplitude(idx) - amp) > 1e-15) return false;
    }
    return true;
  });
  add("inner product conjugate symmetry", [] {
    Rng rng(12);
    auto sys = random_system(rng, 3, 3, false);
    for (int t = 0; t < 50; ++t) {
      auto a = random_state(sys, rng);
      auto b = random_state(sys, rng);
      if (std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) > 1e-14) return false;
      if (!near(inner_product(a, a).real(), 1.0, 1e-12)) return false;
    }
    return true;
  });

  // numerics
  add("eigh Pauli-X", [] {
    auto e = eigh(HermitianMatrix(2, {0.0, 1.0, 1.0, 0.0}));
    return near(e.eigenvalues[0], -1.0, 1e-14) && near(e.eigenvalues[1], 1.0, 1e-14);
  });
  add("eigh [[2,1],[1,2]]", [] {
    auto e = eigh(HermitianMatrix(2, {2.0, 1.0, 1.0, 2.0}));
    return near(e.eigenvalues[0], 1.0, 1e-14) && near(e.eigenvalues[1], 3.0, 1e-14);
  });
  add("eigh residual and orthonormality", [] {
    Rng rng(13);
    for (std::size_t dim = 1; dim <= 12; ++dim)
      for (int t = 0; t < 5; ++t) {
        auto a = random_hermitian(dim, rng);
        if (!residual_ok(a, eigh(a))) return false;
      }
    return true;
  });
  add("eigh eigenvalue sum equals trace", [] {
    Rng rng(14);
    for (std::size_t dim = 1; dim <= 12; ++dim) {
      auto a = random_hermitian(dim, rng);
      auto e = eigh(a);
      const double sum = std::accumulate(e.eigenvalues.begin(), e.eigenvalues.end(), 0.0);
      if (!near(sum, a.trace().real(), 1e-10 * dim * std::max(1.0, a.max_norm()))) return false;
    }
    return true;
  });
  add("entropy (1/3,2/3) base 2", [] {
    const double p[] = {1.0 / 3.0, 2.0 / 3.0};
    return near(entropy(p, 2), 0.9182958340544896, 1e-12);
  });
  add("entropy uniform is maximal", [] {
    Rng rng(15);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int base = 2; base <= 6; ++base) {
      std::vector<double> flat(static_cast<std::size_t>(base), 1.0 / base);
      if (!near(entropy(flat, base), 1.0, 1e-12)) return false;
      for (int t = 0; t < 100; ++t) {
        std::vector<double> p(static_cast<std::size_t>(base));
        for (auto& x : p) x = u(rng);
        const double total = std::accumulate(p.begin(), p.end(), 0.0);
        for (auto& x : p) x /= total;
        const double h = entropy(p, base);
        std::vector<double> q(p.rbegin(), p.rend());
        if (h > 1.0 + 1e-12 || h < 0.0 || !near(h, entropy(q, base), 1e-12)) return false;
      }
    }
    return true;
  });

  // entanglement
  add("Bell-like state eta = 1", [] {
    return near(eta_measure(two_kind({{{1, 0}, 1.0}, {{0, 1}, 1.0}})).eta, 1.0, 1e-12);
  });
  add("W state eta = 0.918296", [] {
    const Complex c[] = {1.0, 1.0, 1.0};
    return near(eta_measure(w_state(3, c)).eta, 0.918296, 1e-6);
  });
  add("product state eta = 0 and separable", [] {
    auto r = eta_measure(three_kind({{{1, 1, 0}, 1.0}}, std::nullopt));
    return r.eta == 0.0 && r.classification == Classification::separable;
  });
  add("Bell x |1> partially entangled", [] {
    auto s = three_kind({{{1, 0, 1}, 1.0}, {{0, 1, 1}, 1.0}}, 2);
    const std::size_t c0[] = {0}, c2[] = {2};
    return classify(s) == Classification::partially_entangled && is_product_across_cut(s, c2) &&
           !is_product_across_cut(s, c0);
  });
  add("GHZ-like state genuinely entangled", [] {
    auto s = three_kind({{{0, 0, 0}, 1.0}, {{1, 1, 1}, 1.0}}, std::nullopt);
    return classify(s) == Classification::genuinely_entangled;
  });
  add("w_measure_max values", [] {
    return near(w_measure_max(2), 1.0, 1e-15) && near(w_measure_max(3), 0.918296, 1e-6) &&
           near(w_measure_max(4), 0.8112781244591329, 1e-12);
  });
  add("closed form matches measure on W states", [] {
    Rng rng(16);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
      const int M = 2 + t % 5;
      std::vector<Complex> c(static_cast<std::size_t>(M));
      for (auto& x : c) x = {g(rng), g(rng)};
      const double analytic = w_measure_analytic(c);
      if (!near(analytic, eta_measure(w_state(M, c)).eta, 1e-10)) return false;
      if (analytic > w_measure_max(M) + 1e-12) return false;
    }
    return true;
  });
  add("local unitary invariance", [] {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
      auto s = random_state(random_system(rng, 3, 3, true), rng);
      const std::size_t kind = static_cast<std::size_t>(t) % s.num_kinds();
      const double before = eta_measure(s).eta;
      auto blockwise = apply_local_operator(s, kind, random_block_unitary(s.system().kind(kind), rng),
                                            ParticleConstraint::keep);
      auto full = apply_local_operator(
          s, kind, random_unitary(s.system().kind(kind).dim(), rng), ParticleConstraint::drop);
      if (!near(eta_measure(blockwise).eta, before, 1e-10) || !near(eta_measure(full).eta, before, 1e-10))
        return false;
    }
    return true;
  });
  add("kind permutation invariance", [] {
    Rng rng(18);
    for (int t = 0; t < 30; ++t) {
      auto s = random_state(random_system(rng, 4, 3, false), rng);
      const std::size_t m = s.num_kinds();
      std::vector<KindSpec> reversed(s.system().kinds().rbegin(), s.system().kinds().rend());
      AmplitudeMap amps;
      for (const auto& [idx, amp] : s.amplitudes()) amps.emplace(CompositeIndex(idx.rbegin(), idx.rend()), amp);
      auto r = PureState(SystemSpec(reversed, s.system().total_particles()), amps);
      auto a = eta_measure(s), b = eta_measure(r);
      if (!near(a.eta, b.eta, 1e-12)) return false;
      for (std::size_t i = 0; i < m; ++i)
        if (!near(a.local_entropies[i], b.local_entropies[m - 1 - i], 1e-12)) return false;
    }
    return true;
  });
  add("reduced density block structure", [] {
    Rng rng(19);
    for (int t = 0; t < 50; ++t) {
      auto s = random_state(random_system(rng, 4, 4, true), rng);
      for (std::size_t k = 0; k < s.num_kinds(); ++k)
        if (reduced_density(s, k).max_off_block() > 1e-12) return false;
    }
    return true;
  });
  add("eta within [0,1]", [] {
    Rng rng(20);
    for (int t = 0; t < 100; ++t) {
      const double eta = eta_measure(random_state(random_system(rng, 4, 4, t % 2 == 0), rng)).eta;
      if (eta < 0.0 || eta > 1.0 + 1e-12) return false;
    }
    return true;
  });

  // bec-yrast; the shell symmetry comes first so a broken V is named by it.
  add("V-shell symmetry", [V] {
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; i + j <= 12; ++j)
        for (int k = 0; k <= i + j; ++k) {
          const int l = i + j - k;
          const double v = V(i, j, k, l);
          const double tol = 1e-12 * std::max(1.0, std::abs(v));
          if (!near(v, V(k, l, i, j), tol) || !near(v, V(j, i, k, l), tol) ||
              !near(v, V(i, j, l, k), tol))
            return false;
        }
    return true;
  });
  add("V golden values", [V] {
    return near(V(0, 0, 0, 0), 1.0, 1e-15) && near(V(0, 1, 0, 1), 0.5, 1e-15) &&
           near(V(1, 1, 0, 2), 2.0 / std::sqrt(32.0), 1e-15);
  });
  add("block Hamiltonian symmetric with kinetic omega L", [V] {
    for (int n = 1; n <= 6; ++n)
      for (int L = 0; L <= 6; ++L) {
        const auto with = bec::build_block(n, L, {1.0, 1.0}, V);
        const auto without = bec::build_block(n, L, {0.0, 1.0}, V);
        for (std::size_t r = 0; r < with.basis.size(); ++r)
          for (std::size_t c = 0; c < with.basis.size(); ++c) {
            const Complex diff = with.matrix(r, c) - without.matrix(r, c);
            if (std::abs(diff - (r == c ? static_cast<double>(L) : 0.0)) > 1e-12) return false;
          }
      }
    return true;
  });
  add("spectrum shift with omega", [V] {
    for (int n = 1; n <= 6; ++n)
      for (int L = 0; L <= 6; ++L) {
        const auto a = eigh(bec::build_block(n, L, {1.0, 1.0}, V).matrix).eigenvalues;
        const auto b = eigh(bec::build_block(n, L, {0.0, 1.0}, V).matrix).eigenvalues;
        for (std::size_t k = 0; k < a.size(); ++k)
          if (!near(a[k] - b[k], L, 1e-10)) return false;
      }
    return true;
  });
  add("spectrum (n=2, L=0) = 2g", [V] {
    const auto e = eigh(bec::build_block(2, 0, {1.0, 1.5}, V).matrix).eigenvalues;
    return e.size() == 1 && near(e[0], 3.0, 1e-12);
  });
  add("yrast (2,2) occupations", [] {
    const auto p = bec::yrast_state(2, 2, {});
    return near(p.phi[0], 0.25, 1e-12) && near(p.phi[1], 0.5, 1e-12) && near(p.phi[2], 0.25, 1e-12) &&
           near(p.eta, 1.0, 1e-12) && near(p.energy, 2.0, 1e-12);
  });
  add("yrast occupation sum rules", [] {
    for (int L = 1; L <= 6; ++L)
      for (int n = 1; n <= 10; ++n) {
        const auto p = bec::yrast_state(n, L, {});
        const double total = std::accumulate(p.phi.begin(), p.phi.end(), 0.0);
        double momentum = 0.0;
        for (std::size_t l = 0; l < p.phi.size(); ++l) momentum += l * p.phi[l] * n;
        if (!near(total, 1.0, 1e-10) || !near(momentum, L, 1e-8)) return false;
      }
    return true;
  });
  add("yrast reduced densities diagonal", [] {
    for (int L = 1; L <= 6; ++L)
      for (int n = 1; n <= 10; ++n) {
        const auto p = bec::yrast_state(n, L, {});
        for (std::size_t k = 0; k < p.state.num_kinds(); ++k) {
          const auto rd = reduced_density(p.state, k);
          for (std::size_t r = 0; r < rd.matrix.dim(); ++r)
            for (std::size_t c = 0; c < rd.matrix.dim(); ++c)
              if (r != c && std::abs(rd.matrix(r, c)) > 1e-12) return false;
        }
      }
    return true;
  });
  add("QSTATE round trip", [] {
    const Complex c[] = {1.0, Complex(0.0, 2.0), -0.5};
    const auto s = w_state(3, c);
    const auto back = encode_state_from_file(write_qstate(s));
    return !back.renormalized && back.state.system() == s.system() &&
           std::abs(inner_product(back.state, s) - 1.0) < 1e-12;
  });
  add("scan independent of thread count", [] {
    bec::ScanOptions one, many;
    many.threads = 4;
    std::ostringstream a, b;
    write_yrast_csv(a, bec::yrast_scan(4, 2, 12, {}, one));
    write_yrast_csv(b, bec::yrast_scan(4, 2, 12, {}, many));
    return a.str() == b.str();
  });
  return checks;
}

}  // namespace

SelfTestSummary run_selftest(std::ostream& log, const SelfTestConfig& config) {
  SelfTestSummary summary;
  for (const auto& check : build_checks(config)) {
    ++summary.checks;
    bool ok = false;
    std::string detail;
    try {
      ok = check.run();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    log << (ok ? "PASS " : "FAIL ") << check.name << detail << '\n';
    if (ok)
      ++summary.passed;
    else if (summary.first_failure.empty())
      summary.first_failure = check.name;
  }
  log << "checks=" << summary.checks << " passed=" << summary.passed << '\n';
  return summary;
}

}  // namespace mbent
