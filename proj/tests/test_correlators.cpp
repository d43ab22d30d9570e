#include "doctest.h"
#include "fockent/correlators.hpp"
#include "fockent/error.hpp"
#include "fockent/oracle.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace fockent;

namespace {

std::vector<CorrelatorSpec> balanced_specs(unsigned max_total) {
  std::vector<CorrelatorSpec> specs;
  for (unsigned t = 0; t <= max_total; ++t)
    for (unsigned p_v = 0; p_v <= t; ++p_v)
      for (unsigned q_v = 0; q_v <= t; ++q_v) specs.push_back({t - p_v, p_v, t - q_v, q_v});
  return specs;
}

// Independent closed form with exact integer weights and a long-double root.
Complex exact_weight_correlator(const TwoModeSuperposition& s, const CorrelatorSpec& spec) {
  const unsigned n = s.photons();
  Complex sum{};
  for (unsigned n_v = 0; n_v <= n; ++n_v) {
    const unsigned n_h = n - n_v;
    if (spec.q_h > n_h || spec.q_v > n_v) continue;
    const unsigned h_mid = n_h - spec.q_h;
    const unsigned v_mid = n_v - spec.q_v;
    const unsigned bra = v_mid + spec.p_v;
    if (bra > n) continue;
    BigInt w2 = falling_factorial(n_h, spec.q_h) * falling_factorial(n_v, spec.q_v) *
                falling_factorial(h_mid + spec.p_h, spec.p_h) *
                falling_factorial(v_mid + spec.p_v, spec.p_v);
    const auto w = static_cast<double>(std::sqrt(w2.convert_to<long double>()));
    sum += std::conj(s.amplitude(bra)) * s.amplitude(n_v) * w;
  }
  return sum;
}

}  // namespace

TEST_CASE("correlator worked examples") {
  CHECK(correlator(make_fock({2, 2}), {1, 0, 1, 0}) == Complex(2.0));
  CHECK(correlator(make_fock({1, 2}), {1, 0, 0, 1}) == Complex(0.0));

  const std::vector<Complex> raw{Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.4, -0.6)};
  const auto qutrit = make_superposition(2, raw).state;
  const Complex expected = 2.0 * std::conj(qutrit.amplitude(0)) * qutrit.amplitude(2);
  CHECK(std::abs(correlator(qutrit, {2, 0, 0, 2}) - expected) <= 1e-15);
}

TEST_CASE("correlator_table worked examples") {
  const auto table = correlator_table(make_fock({2, 2}), 2);
  const double expected[3][3] = {{2, 0, 0}, {0, 4, 0}, {0, 0, 2}};
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned c = 0; c < 3; ++c) CHECK(table(r, c) == Complex(expected[r][c]));

  const std::vector<Complex> raw{1, 0, 1};
  const auto noon = make_superposition(2, raw).state;
  const auto t1 = correlator_table(noon, 1);
  CHECK(std::abs(t1(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(t1(1, 1) - 1.0) <= 1e-15);
  CHECK(std::abs(t1(0, 1)) == 0.0);
  CHECK(std::abs(t1(1, 0)) == 0.0);

  CHECK_THROWS_AS(correlator_table(noon, 0), ValidationError);
  CHECK_THROWS_AS(correlator_table(noon, 3), ValidationError);
}

TEST_CASE("m = n table is the weighted outer product of the amplitudes") {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 7; ++n) {
    const auto s = testing::random_state(n, rng);
    const auto table = correlator_table(s, n);
    for (unsigned k2 = 0; k2 <= n; ++k2)
      for (unsigned k1 = 0; k1 <= n; ++k1) {
        const double w = std::sqrt((factorial(n - k2) * factorial(k2) * factorial(n - k1) *
                                    factorial(k1)).convert_to<double>());
        CHECK(std::abs(table(k2, k1) - std::conj(s.amplitude(k2)) * s.amplitude(k1) * w) <=
              1e-12 * w);
      }
  }
}

TEST_CASE("selection rule and Hermiticity") {
  std::mt19937_64 rng(3);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = testing::random_state(n, rng);
    for (unsigned p_h = 0; p_h <= n; ++p_h)
      for (unsigned p_v = 0; p_v + p_h <= n; ++p_v)
        for (unsigned q_h = 0; q_h <= n; ++q_h)
          for (unsigned q_v = 0; q_v + q_h <= n; ++q_v) {
            const CorrelatorSpec spec{p_h, p_v, q_h, q_v};
            const Complex value = correlator(s, spec);
            if (!spec.balanced()) CHECK(value == Complex(0.0));
            CHECK(std::abs(value - std::conj(correlator(s, spec.adjoint()))) <= 1e-12);
          }
  }
}

TEST_CASE("basic Fock states only have number-conserving correlators per mode") {
  for (unsigned h = 0; h <= 5; ++h)
    for (unsigned v = 0; v <= 5; ++v) {
      if (h + v == 0) continue;
      const auto s = make_fock({h, v});
      for (const auto& spec : balanced_specs(h + v)) {
        if (correlator(s, spec) != Complex(0.0)) {
          CHECK(spec.p_h == spec.q_h);
          CHECK(spec.p_v == spec.q_v);
        }
      }
    }
}

TEST_CASE("closed form matches ladder-matrix oracle") {
  std::mt19937_64 rng(2024);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto specs = balanced_specs(n);
    for (int trial = 0; trial < 13; ++trial) {
      const auto s = testing::random_state(n, rng);
      for (const auto& spec : specs) {
        CHECK(std::abs(correlator(s, spec) - oracle::ladder_correlator(s, spec)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("log-space weights above n = 30 keep 1e-12 relative accuracy") {
  const auto fock = make_fock({20, 20});
  const double expected = (falling_factorial(20, 10) * falling_factorial(20, 10)).convert_to<double>();
  CHECK(correlator(fock, {10, 10, 10, 10}).real() == doctest::Approx(expected).epsilon(1e-12));

  std::mt19937_64 rng(5);
  for (unsigned n : {31u, 60u, 120u}) {
    const auto s = testing::random_state(n, rng);
    for (const CorrelatorSpec spec : {CorrelatorSpec{n / 2, 3, n / 2 - 1, 4},
                                      CorrelatorSpec{5, n / 3, n / 3, 5},
                                      CorrelatorSpec{n / 2, n / 2, n / 2, n / 2}}) {
      const Complex expect = exact_weight_correlator(s, spec);
      const Complex got = correlator(s, spec);
      CHECK(std::abs(got - expect) <= 1e-12 * std::abs(expect) + 1e-300);
    }
  }
}

TEST_CASE("scaled entries fold the scale into the weights") {
  std::mt19937_64 rng(8);
  const auto s = testing::random_state(120, rng);
  const unsigned m = 50;
  const Rational prefactor(BigInt(1), falling_factorial(120, m));
  const auto scaled = scaled_correlator_entries(s, m, prefactor.log());
  // Diagonal of prefactor * A weighted by C(m,k) sums to one.
  double trace = 0.0;
  for (unsigned k = 0; k <= m; ++k) trace += binomial(m, k).convert_to<double>() * scaled[k * (m + 1) + k].real();
  CHECK(trace == doctest::Approx(1.0).epsilon(1e-11));
}
