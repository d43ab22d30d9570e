#include "fockent/fock_core.hpp"

#include "fockent/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

namespace fockent {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_photon_count(unsigned n) {
  if (n == 0) throw ValidationError("state has no photons (n = 0)");
  if (n > max_photons()) {
    throw ValidationError("n = " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(max_photons()) + " (set FOCKENT_MAX_N to override)");
  }
}

}  // namespace

unsigned max_photons() {
  const char* env = std::getenv("FOCKENT_MAX_N");
  if (env == nullptr) return kDefaultMaxPhotons;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultMaxPhotons;
  return value;
}

std::vector<Complex> TwoModeSuperposition::amplitudes_by_n_h() const {
  return reverse_index(amplitudes_);
}

bool TwoModeSuperposition::is_basic_fock() const {
  return std::count_if(amplitudes_.begin(), amplitudes_.end(),
                       [](const Complex& c) { return c != Complex{}; }) == 1;
}

ModeOccupation TwoModeSuperposition::fock_occupation() const {
  if (!is_basic_fock()) throw ValidationError("state is not a basic Fock state");
  const auto it = std::find_if(amplitudes_.begin(), amplitudes_.end(),
                               [](const Complex& c) { return c != Complex{}; });
  const auto n_v = static_cast<unsigned>(it - amplitudes_.begin());
  return {n_ - n_v, n_v};
}

double TwoModeSuperposition::norm_squared() const {
  double sum = 0.0;
  for (const auto& c : amplitudes_) sum += std::norm(c);
  return sum;
}

TwoModeSuperposition make_fock(ModeOccupation occ) {
  const unsigned n = occ.total();
  check_photon_count(n);
  std::vector<Complex> amplitudes(n + 1);
  amplitudes[occ.n_v] = 1.0;
  return {n, std::move(amplitudes)};
}

NormalizedState make_superposition(unsigned n, std::span<const Complex> raw) {
  check_photon_count(n);
  if (raw.size() != std::size_t{n} + 1) {
    throw ValidationError("expected " + std::to_string(n + 1) + " amplitudes for n = " +
                          std::to_string(n) + ", got " + std::to_string(raw.size()));
  }
  double norm2 = 0.0;
  for (const auto& c : raw) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ValidationError("non-finite amplitude");
    }
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw ValidationError("null state: all amplitudes are zero");

  const double norm = std::sqrt(norm2);
  std::vector<Complex> amplitudes(raw.begin(), raw.end());
  for (auto& c : amplitudes) c /= norm;
  return {TwoModeSuperposition(n, std::move(amplitudes)), std::abs(norm2 - 1.0) > kNormTolerance};
}

TwoModeSuperposition gaussian_superposition(unsigned n, double m0, double sigma) {
  check_photon_count(n);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("gaussian width sigma must be positive and finite");
  }
  if (!std::isfinite(m0)) throw ValidationError("gaussian centre m0 must be finite");

  std::vector<double> exponents(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    const double d = static_cast<double>(m) - m0;
    exponents[m] = -d * d / (2.0 * sigma * sigma);
  }
  const double peak = *std::max_element(exponents.begin(), exponents.end());

  std::vector<Complex> amplitudes(n + 1);
  double norm2 = 0.0;
  for (unsigned m = 0; m <= n; ++m) {
    const double c = std::exp(exponents[m] - peak);
    amplitudes[m] = c;
    norm2 += c * c;
  }
  const double norm = std::sqrt(norm2);
  for (auto& c : amplitudes) c /= norm;
  return {n, std::move(amplitudes)};
}

std::vector<Complex> reverse_index(std::span<const Complex> amplitudes) {
  return {amplitudes.rbegin(), amplitudes.rend()};
}

}  // namespace fockent
