#include "fockent/correlators.hpp"

#include "fockent/error.hpp"

#include <cmath>
#include <string>

namespace fockent {

namespace {

// Ladder weights up to this photon number are formed as exact integers.
constexpr unsigned kExactWeightLimit = 30;
constexpr unsigned kLogTableSize = 4097;

const std::vector<long double>& log_factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kLogTableSize);
    for (unsigned j = 1; j < kLogTableSize; ++j) t[j] = t[j - 1] + std::log(static_cast<long double>(j));
    return t;
  }();
  return table;
}

long double log_factorial(unsigned a) {
  if (a < kLogTableSize) return log_factorial_table()[a];
  return std::lgamma(static_cast<long double>(a) + 1.0L);
}

// Ket |n_h, n_v> is mapped by the operator string to the bra index returned in
// `bra_v`; false when some annihilation power exceeds the occupation.
struct LadderStep {
  unsigned bra_v = 0;
  unsigned h_mid = 0;
  unsigned v_mid = 0;
};

bool ladder_step(unsigned n, unsigned n_v, const CorrelatorSpec& spec, LadderStep& out) {
  const unsigned n_h = n - n_v;
  if (spec.q_h > n_h || spec.q_v > n_v) return false;
  out.h_mid = n_h - spec.q_h;
  out.v_mid = n_v - spec.q_v;
  out.bra_v = out.v_mid + spec.p_v;
  return out.bra_v <= n;
}

// sqrt(ff(n_h,q_h) ff(n_v,q_v) ff(h_mid+p_h,p_h) ff(v_mid+p_v,p_v)) * exp(log_scale)
double ladder_weight(unsigned n, unsigned n_v, const LadderStep& step, const CorrelatorSpec& spec,
                     double log_scale) {
  const unsigned n_h = n - n_v;
  if (n <= kExactWeightLimit) {
    const BigInt product = falling_factorial(n_h, spec.q_h) * falling_factorial(n_v, spec.q_v) *
                           falling_factorial(step.h_mid + spec.p_h, spec.p_h) *
                           falling_factorial(step.v_mid + spec.p_v, spec.p_v);
    return std::sqrt(product.convert_to<double>()) * std::exp(log_scale);
  }
  const long double log_w2 = detail::log_falling_factorial(n_h, spec.q_h) +
                             detail::log_falling_factorial(n_v, spec.q_v) +
                             detail::log_falling_factorial(step.h_mid + spec.p_h, spec.p_h) +
                             detail::log_falling_factorial(step.v_mid + spec.p_v, spec.p_v);
  return static_cast<double>(std::exp(0.5L * log_w2 + static_cast<long double>(log_scale)));
}

Complex scaled_correlator(const TwoModeSuperposition& state, const CorrelatorSpec& spec,
                          double log_scale) {
  if (!spec.balanced()) return {};
  const unsigned n = state.photons();
  const auto c = state.amplitudes();
  Complex sum{};
  for (unsigned n_v = 0; n_v <= n; ++n_v) {
    if (c[n_v] == Complex{}) continue;
    LadderStep step;
    if (!ladder_step(n, n_v, spec, step)) continue;
    if (c[step.bra_v] == Complex{}) continue;
    sum += std::conj(c[step.bra_v]) * c[n_v] * ladder_weight(n, n_v, step, spec, log_scale);
  }
  return sum;
}

void check_order(const TwoModeSuperposition& state, unsigned m) {
  if (m < 1 || m > state.photons()) {
    throw ValidationError("reduction order m = " + std::to_string(m) + " outside 1.." +
                          std::to_string(state.photons()));
  }
}

CorrelatorSpec table_spec(unsigned m, unsigned k2, unsigned k1) {
  return {m - k2, k2, m - k1, k1};
}

}  // namespace

namespace detail {

double log_falling_factorial(unsigned a, unsigned k) {
  return static_cast<double>(log_factorial(a) - log_factorial(a - k));
}

}  // namespace detail

Complex correlator(const TwoModeSuperposition& state, const CorrelatorSpec& spec) {
  return scaled_correlator(state, spec, 0.0);
}

CorrelatorTable::CorrelatorTable(unsigned m, std::vector<Complex> entries)
    : m_(m), entries_(std::move(entries)) {
  if (entries_.size() != dim() * dim()) throw ValidationError("correlator table has wrong size");
}

std::vector<Complex> scaled_correlator_entries(const TwoModeSuperposition& state, unsigned m,
                                               double log_scale) {
  check_order(state, m);
  const std::size_t dim = m + 1;
  std::vector<Complex> entries(dim * dim);
  for (unsigned k2 = 0; k2 <= m; ++k2) {
    for (unsigned k1 = k2; k1 <= m; ++k1) {
      const Complex value = scaled_correlator(state, table_spec(m, k2, k1), log_scale);
      entries[k2 * dim + k1] = value;
      entries[k1 * dim + k2] = std::conj(value);
    }
    // Diagonal correlators are expectation values of positive operators.
    entries[k2 * dim + k2] = entries[k2 * dim + k2].real();
  }
  return entries;
}

CorrelatorTable correlator_table(const TwoModeSuperposition& state, unsigned m) {
  return {m, scaled_correlator_entries(state, m, 0.0)};
}

}  // namespace fockent
