#include "doctest.h"
#include "fockent/error.hpp"
#include "fockent/oracle.hpp"
#include "fockent/spectrum.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace fockent;

namespace {

Rational frac(long p, long q) { return {BigInt(p), BigInt(q)}; }

Rational hypergeometric(unsigned n_h, unsigned n_v, unsigned m, unsigned k) {
  return {binomial(n_v, k) * binomial(n_h, m - k), binomial(n_h + n_v, m)};
}

std::vector<double> nonzero_sorted(std::vector<double> v, double tol = 1e-12) {
  std::erase_if(v, [&](double x) { return std::abs(x) <= tol; });
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Q diag(lambda) Q^+ with Q from Gram-Schmidt on a random complex matrix.
ComplexMatrix with_spectrum(const std::vector<double>& lambda, bool real, std::mt19937_64& rng) {
  const std::size_t n = lambda.size();
  std::normal_distribution<double> normal;
  std::vector<std::vector<Complex>> q(n, std::vector<Complex>(n));
  for (auto& col : q)
    for (auto& z : col) z = {normal(rng), real ? 0.0 : normal(rng)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex dot{};
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(q[i][k]) * q[j][k];
      for (std::size_t k = 0; k < n; ++k) q[j][k] -= dot * q[i][k];
    }
    double norm = 0.0;
    for (const auto& z : q[j]) norm += std::norm(z);
    for (auto& z : q[j]) z /= std::sqrt(norm);
  }
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex sum{};
      for (std::size_t i = 0; i < n; ++i) sum += q[i][r] * lambda[i] * std::conj(q[i][c]);
      a(r, c) = sum;
    }
  return a;
}

double balanced_K(unsigned n) {
  return schmidt_K_exact(analytic_fock_eigenvalues({n / 2, n / 2}, n / 2)).to_double();
}

}  // namespace

TEST_CASE("analytic Fock eigenvalues worked examples") {
  const auto a = analytic_fock_eigenvalues({2, 2}, 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0].lambda == frac(1, 6));
  CHECK(a[1].lambda == frac(2, 3));
  CHECK(a[2].lambda == frac(1, 6));

  const auto b = analytic_fock_eigenvalues({4, 4}, 4);
  const std::vector<Rational> expected{frac(1, 70), frac(8, 35), frac(18, 35), frac(8, 35), frac(1, 70)};
  REQUIRE(b.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(b[i].lambda == expected[i]);

  for (unsigned h = 0; h <= 9; ++h)
    for (unsigned v = 0; v <= 9; ++v) {
      if (h + v == 0) continue;
      const auto pure = analytic_fock_eigenvalues({h, v}, h + v);
      REQUIRE(pure.size() == 1);
      CHECK(pure[0].k == v);
      CHECK(pure[0].lambda == Rational(1));
    }

  CHECK_THROWS_AS(analytic_fock_eigenvalues({2, 2}, 5), ValidationError);
  CHECK_THROWS_AS(analytic_fock_eigenvalues({2, 2}, 0), ValidationError);
}

TEST_CASE("analytic eigenvalues are hypergeometric probabilities") {
  const auto check_all = [](unsigned n, unsigned m_step) {
    for (unsigned v = 0; v <= n; ++v)
      for (unsigned m = 1; m <= n; m += m_step)
        for (const auto& e : analytic_fock_eigenvalues({n - v, v}, m))
          CHECK(e.lambda == hypergeometric(n - v, v, m, e.k));
  };
  for (unsigned n = 1; n <= 24; ++n) check_all(n, 1);
  for (unsigned n : {37u, 50u, 60u}) check_all(n, 7);
}

TEST_CASE("analytic spectra are normalized, symmetric and correctly sized") {
  for (unsigned n = 1; n <= 200; n += 9)
    for (unsigned v = 0; v <= n; v += 1 + n / 6) {
      const unsigned h = n - v;
      for (unsigned m : {1u, std::max(1u, n / 4), std::max(1u, n / 2), n}) {
        const auto spectrum = analytic_fock_eigenvalues({h, v}, m);
        Rational sum;
        for (const auto& e : spectrum) sum += e.lambda;
        CHECK(sum == Rational(1));
        CHECK(spectrum.size() == std::min(v, m) - (m > h ? m - h : 0) + 1);

        const auto swapped = analytic_fock_eigenvalues({v, h}, m);
        REQUIRE(swapped.size() == spectrum.size());
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
          CHECK(swapped[i].k == m - spectrum[spectrum.size() - 1 - i].k);
          CHECK(swapped[i].lambda == spectrum[spectrum.size() - 1 - i].lambda);
        }
      }
    }
}

TEST_CASE("Schmidt symmetry between retained sizes m and n - m") {
  for (unsigned n = 2; n <= 30; ++n)
    for (unsigned v = 0; v <= n; ++v)
      for (unsigned m = 1; m < n; ++m) {
        std::vector<Rational> a;
        std::vector<Rational> b;
        for (const auto& e : analytic_fock_eigenvalues({n - v, v}, m)) a.push_back(e.lambda);
        for (const auto& e : analytic_fock_eigenvalues({n - v, v}, n - m)) b.push_back(e.lambda);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }

  std::mt19937_64 rng(31);
  for (unsigned n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto tensor = oracle::wavefunction_tensor(testing::random_state(n, rng));
      for (unsigned m = 1; m < n; ++m) {
        const auto left = nonzero_sorted(jacobi_eigenvalues(oracle::partial_trace(tensor, m)));
        std::vector<unsigned> first;  // trace the first m positions instead
        for (unsigned p = 0; p < m; ++p) first.push_back(p);
        const auto right = nonzero_sorted(jacobi_eigenvalues(oracle::partial_trace(tensor, first)));
        REQUIRE(left.size() == right.size());
        for (std::size_t i = 0; i < left.size(); ++i) CHECK(std::abs(left[i] - right[i]) <= 1e-10);
      }
    }
}

TEST_CASE("Jacobi eigenvalues") {
  ComplexMatrix d(3);
  d(0, 0) = 1.0 / 6;
  d(1, 1) = 2.0 / 3;
  d(2, 2) = 1.0 / 6;
  const auto spec = hermitian_eigenvalues(d);
  REQUIRE(spec.eigenvalues.size() == 3);
  CHECK(spec.eigenvalues[0] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(spec.eigenvalues[1] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(spec.eigenvalues[2] == doctest::Approx(1.0 / 6).epsilon(1e-15));

  ComplexMatrix skew(2);
  skew(0, 1) = 1.0;
  skew(1, 0) = -1.0;
  CHECK_THROWS_AS(jacobi_eigenvalues(skew), ValidationError);
}

TEST_CASE("Jacobi recovers synthetic spectra") {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u, 32u, 64u})
    for (bool real : {true, false}) {
      std::vector<double> lambda(n);
      for (auto& l : lambda) l = uniform(rng);
      if (n > 4) lambda[1] = lambda[2] = lambda[3];  // degenerate cluster
      const auto a = with_spectrum(lambda, real, rng);
      const auto got = jacobi_eigenvalues(a);
      std::sort(lambda.begin(), lambda.end(), std::greater<>());
      REQUIRE(got.size() == n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - lambda[i]) <= 1e-11);
    }
}

TEST_CASE("numerical spectra agree with the analytic formula") {
  const auto numeric = hermitian_eigenvalues(compressed_hermitian(reduced_density(make_fock({2, 2}), 2)));
  const std::vector<double> expected{2.0 / 3, 1.0 / 6, 1.0 / 6};
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(numeric.eigenvalues[i] - expected[i]) <= 1e-12);

  for (unsigned m : {10u, 30u, 50u}) {
    const auto spec = hermitian_eigenvalues(compressed_hermitian(reduced_density(make_fock({60, 60}), m)));
    std::vector<double> analytic;
    for (const auto& e : analytic_fock_eigenvalues({60, 60}, m)) analytic.push_back(e.lambda.to_double());
    std::sort(analytic.begin(), analytic.end(), std::greater<>());
    REQUIRE(spec.eigenvalues.size() == analytic.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
      CHECK(std::abs(spec.eigenvalues[i] - analytic[i]) <= 1e-10);
      sum += spec.eigenvalues[i];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-10);
  }
}

TEST_CASE("generic correlator path reproduces the analytic blocks at n = 120") {
  // Bypasses the Fock shortcut: the log-space ladder weights must give the
  // same diagonal as the exact product formula.
  const auto fock = make_fock({60, 60});
  for (unsigned m : {10u, 30u, 50u}) {
    const Rational prefactor(BigInt(1), falling_factorial(120, m));
    const auto scaled = scaled_correlator_entries(fock, m, prefactor.log());
    for (const auto& e : analytic_fock_eigenvalues({60, 60}, m)) {
      const double block = binomial(m, e.k).convert_to<double>() * scaled[e.k * (m + 1) + e.k].real();
      CHECK(block == doctest::Approx(e.lambda.to_double()).epsilon(1e-12));
    }
  }
}

TEST_CASE("K and S") {
  const std::vector<double> eq13{1.0 / 6, 2.0 / 3, 1.0 / 6};
  CHECK(schmidt_K(eq13) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(entropy(eq13) == doctest::Approx(1.2516291673878228).epsilon(1e-15));
  const std::vector<double> pure{1.0};
  CHECK(schmidt_K(pure) == 1.0);
  CHECK(entropy(pure) == 0.0);
  const std::vector<double> with_zero{0.5, 0.5, 0.0};
  CHECK(entropy(with_zero) == doctest::Approx(1.0));

  CHECK(schmidt_K_exact(analytic_fock_eigenvalues({2, 2}, 2)) == Rational(2));
  CHECK(schmidt_K_exact(analytic_fock_eigenvalues({4, 4}, 4)) == frac(490, 181));
}

TEST_CASE("make_spectrum clamps roundoff and rejects real negativity") {
  const auto s = make_spectrum({0.25, 1e-13 - 1e-12, 0.75});
  CHECK(s.eigenvalues == std::vector<double>{0.75, 0.25, 0.0});
  CHECK_THROWS_AS(make_spectrum({1.0 + 1e-7, -1e-7}), NumericalError);
  CHECK_THROWS_AS(make_spectrum({0.5, 0.4}), NumericalError);
}

TEST_CASE("Spectrum invariants on random superpositions") {
  std::mt19937_64 rng(61);
  for (unsigned n = 1; n <= 16; ++n)
    for (unsigned m = 1; m <= n; ++m) {
      const auto spec = reduced_spectrum(testing::random_state(n, rng), m);
      double sum = 0.0;
      std::size_t nonzero = 0;
      for (double l : spec.eigenvalues) {
        CHECK(l >= 0.0);
        sum += l;
        if (l > 0.0) ++nonzero;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-10);
      CHECK(spec.K >= 1.0 - 1e-12);
      CHECK(spec.K <= static_cast<double>(nonzero) + 1e-9);
      CHECK(spec.S >= 0.0);
      CHECK(spec.S <= std::log2(static_cast<double>(nonzero)) + 1e-9);
      CHECK(std::is_sorted(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<>()));
    }
}

TEST_CASE("single-photon K") {
  CHECK(single_photon_K({1, 2}) == frac(9, 5));
  for (unsigned k = 1; k <= 50; ++k) CHECK(single_photon_K({k, k}) == Rational(2));
  for (unsigned n = 1; n <= 50; ++n) CHECK(single_photon_K({n, 0}) == Rational(1));

  for (unsigned n = 1; n <= 30; ++n) {
    Rational best;
    for (unsigned v = 0; v <= n; ++v) {
      const Rational k = single_photon_K({n - v, v});
      CHECK(k == schmidt_K_exact(analytic_fock_eigenvalues({n - v, v}, 1)));
      const double numeric = reduced_spectrum(make_fock({n - v, v}), 1).K;
      CHECK(numeric == doctest::Approx(k.to_double()).epsilon(1e-14));
      if (best < k) best = k;
    }
    CHECK(single_photon_K({n - n / 2, n / 2}) == best);
    CHECK(single_photon_K({n / 2, n - n / 2}) == best);
  }
}

TEST_CASE("concurrence") {
  const std::vector<Complex> fock{1, 0, 0};
  CHECK(concurrence(make_superposition(2, fock).state) == 0.0);

  const std::vector<Complex> noon{1, 0, 1};
  const auto bell = make_superposition(2, noon).state;
  CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reduced_spectrum(bell, 1).K == doctest::Approx(2.0).epsilon(1e-14));

  const double sigma0 = 1.0 / std::sqrt(std::numbers::ln2);
  CHECK(concurrence(gaussian_superposition(2, 1, sigma0)) <= 1e-15);

  CHECK_THROWS_AS(concurrence(make_fock({2, 1})), ValidationError);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto q = testing::random_state(2, rng);
    const double k = reduced_spectrum(q, 1).K;
    CHECK(std::abs(concurrence(q) - std::sqrt(std::max(0.0, 2.0 * (1.0 - 1.0 / k)))) <= 1e-10);
  }
}

TEST_CASE("k_approx") {
  CHECK(k_approx(2) == doctest::Approx(2.0739725173203105).epsilon(1e-12));
  CHECK(k_approx(4) == doctest::Approx(2.734036081122761).epsilon(1e-12));
  CHECK(k_approx(100) == doctest::Approx(12.64264434617413).epsilon(1e-12));
}

TEST_CASE("figure-level properties of basic Fock states") {
  // Balanced states split in half: K(2) = K(4) = 2, growing strictly from there.
  CHECK(balanced_K(2) == 2.0);
  CHECK(balanced_K(4) == 2.0);
  for (unsigned n = 4; n + 2 <= 40; n += 2) CHECK(balanced_K(n + 2) > balanced_K(n));

  for (unsigned n : {6u, 8u, 24u}) {
    unsigned argmax = 0;
    Rational best;
    for (unsigned m = 1; m < n; ++m) {
      const Rational k = schmidt_K_exact(analytic_fock_eigenvalues({n / 2, n / 2}, m));
      if (best < k) {
        best = k;
        argmax = m;
      }
    }
    CHECK(argmax == n / 2);
  }
}

TEST_CASE("sigma scans") {
  const std::vector<double> tiny{1e-3};
  CHECK(sigma_scan(6, 3, 1, tiny)[0].K == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sigma_scan(6, 0, 1, tiny)[0].K == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> at_zero{1.0 / std::sqrt(std::numbers::ln2)};
  CHECK(std::abs(sigma_scan(2, 1, 1, at_zero)[0].K - 1.0) <= 1e-9);

  const std::vector<double> bad_order{0.5, 0.4};
  CHECK_THROWS_AS(sigma_scan(6, 3, 1, bad_order), ValidationError);
  const std::vector<double> nonpositive{0.0, 0.4};
  CHECK_THROWS_AS(sigma_scan(6, 3, 1, nonpositive), ValidationError);

  std::vector<double> grid;
  for (double s = 0.05; s < 4.0; s += 0.05) grid.push_back(s);
  for (const auto& p : sigma_scan(6, 2, 1, grid)) CHECK(p.K >= 1.0 - 1e-10);
}

TEST_CASE("entanglement disappearance for two photons") {
  const double sigma0 = 1.0 / std::sqrt(std::numbers::ln2);
  for (double m0 : {0.0, 1.0}) {
    const auto min = find_min_K_sigma(2, m0, 1, 0.1, 5.0);
    CHECK(std::abs(min.sigma - sigma0) <= 1e-6);
    CHECK(std::abs(min.K - 1.0) <= 1e-9);
    CHECK(min.reached_one);
  }
  const auto six = find_min_K_sigma(6, 3, 1, 0.1, 5.0);
  CHECK(six.K >= 1.0);
  CHECK(six.sigma > 0.1);
  CHECK(six.sigma < 5.0);

  // K rises monotonically on this bracket for m0 = 3: no interior minimum.
  CHECK_THROWS_WITH_AS(find_min_K_sigma(6, 3, 1, 0.1, 0.3), doctest::Contains("scan"),
                       NumericalError);
}
