#include "fockent/verify.hpp"

#include "fockent/error.hpp"
#include "fockent/oracle.hpp"
#include "fockent/parallel.hpp"
#include "fockent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace fockent {

namespace {

constexpr double kTolerance = 1e-10;
constexpr double kFaultScale = 1.0 + 1e-6;

std::vector<TwoModeSuperposition> test_states(unsigned n, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + n);
  std::normal_distribution<double> normal;
  std::vector<TwoModeSuperposition> states;
  for (unsigned i = 0; i < o.states_per_n; ++i) {
    std::vector<Complex> raw(n + 1);
    for (auto& c : raw) c = {normal(rng), normal(rng)};
    states.push_back(make_superposition(n, raw).state);
  }
  for (unsigned v = 0; v <= n; ++v) states.push_back(make_fock({n - v, v}));
  return states;
}

VerifyCheck correlator_check(unsigned n, const std::vector<TwoModeSuperposition>& states) {
  VerifyCheck check{"correlator_vs_ladder", n, 0, 0.0, kTolerance};
  for (const auto& s : states)
    for (unsigned t = 0; t <= n; ++t)
      for (unsigned p_v = 0; p_v <= t; ++p_v)
        for (unsigned q_v = 0; q_v <= t; ++q_v) {
          const CorrelatorSpec spec{t - p_v, p_v, t - q_v, q_v};
          check.max_error = std::max(
              check.max_error, std::abs(correlator(s, spec) - oracle::ladder_correlator(s, spec)));
        }
  return check;
}

std::vector<VerifyCheck> order_checks(unsigned n, unsigned m,
                                      const std::vector<TwoModeSuperposition>& states,
                                      bool inject_fault) {
  VerifyCheck partial{"full_vs_partial_trace", n, m, 0.0, kTolerance};
  VerifyCheck spectra{"full_vs_compressed_spectrum", n, m, 0.0, kTolerance};
  VerifyCheck trace{"trace_one", n, m, 0.0, kTolerance};
  for (const auto& s : states) {
    const auto rd = reduced_density(s, m);
    auto full = full_matrix(rd).entries;
    if (inject_fault) {
      for (std::size_t r = 0; r < full.order(); ++r)
        for (std::size_t c = 0; c < full.order(); ++c) full(r, c) *= kFaultScale;
    }
    const auto compressed = compressed_hermitian(rd).entries;
    const auto reference = oracle::partial_trace(oracle::wavefunction_tensor(s), m);
    partial.max_error = std::max(partial.max_error, max_abs_diff(full, reference));

    // The compressed matrix carries the m+1 leading eigenvalues; the rest of
    // the full spectrum must vanish.
    const auto full_eig = jacobi_eigenvalues(full);
    const auto comp_eig = jacobi_eigenvalues(compressed);
    for (std::size_t i = 0; i < full_eig.size(); ++i) {
      const double err = i < comp_eig.size() ? std::abs(full_eig[i] - comp_eig[i]) : std::abs(full_eig[i]);
      spectra.max_error = std::max(spectra.max_error, err);
    }
    trace.max_error = std::max({trace.max_error, std::abs(full.trace() - 1.0),
                                std::abs(compressed.trace() - 1.0)});
  }
  return {partial, spectra, trace};
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > oracle::kMaxOraclePhotons) {
    throw ValidationError("verify max-n must lie in 1.." + std::to_string(oracle::kMaxOraclePhotons));
  }
  struct Task {
    unsigned n;
    unsigned m;  // 0: correlator check
  };
  std::vector<Task> tasks;
  for (unsigned n = 1; n <= options.max_n; ++n)
    for (unsigned m = 0; m <= n; ++m) tasks.push_back({n, m});

  const auto results = parallel_map(tasks.size(), options.jobs, [&](std::size_t i) {
    const auto [n, m] = tasks[i];
    const auto states = test_states(n, options);
    if (m == 0) return std::vector<VerifyCheck>{correlator_check(n, states)};
    return order_checks(n, m, states, options.inject_fault);
  });
  std::vector<VerifyCheck> checks;
  for (const auto& r : results) checks.insert(checks.end(), r.begin(), r.end());
  for (auto& c : checks)
    if (std::isnan(c.max_error)) c.max_error = std::numeric_limits<double>::infinity();
  return checks;
}

Table verification_table(const std::vector<VerifyCheck>& checks) {
  Table table{{"check", "n", "m", "max_error", "tolerance", "passed"}, {}};
  for (const auto& c : checks)
    table.rows.push_back({c.name, static_cast<long long>(c.n), static_cast<long long>(c.m),
                          c.max_error, c.tolerance, c.passed()});
  return table;
}

}  // namespace fockent
