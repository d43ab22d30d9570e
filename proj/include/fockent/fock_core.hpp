#pragma once

#include "fockent/rational.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fockent {

using Complex = std::complex<double>;

/// Default upper bound on the total photon number. FOCKENT_MAX_N overrides it.
inline constexpr unsigned kDefaultMaxPhotons = 200;

/// Active photon-number cap: FOCKENT_MAX_N when set to a positive integer,
/// kDefaultMaxPhotons otherwise.
unsigned max_photons();

/// Photon counts (n_H, n_V) of a basic two-mode Fock state |n_H, n_V>.
struct ModeOccupation {
  unsigned n_h = 0;
  unsigned n_v = 0;

  unsigned total() const { return n_h + n_v; }
  friend bool operator==(const ModeOccupation&, const ModeOccupation&) = default;
};

struct NormalizedState;
class TwoModeSuperposition;
TwoModeSuperposition make_fock(ModeOccupation occ);
NormalizedState make_superposition(unsigned n, std::span<const Complex> raw);
TwoModeSuperposition gaussian_superposition(unsigned n, double m0, double sigma);

/// Normalized superposition sum_k C_k |(n-k)_H, k_V> of fixed total photon
/// number n. Amplitudes are indexed by n_V.
class TwoModeSuperposition {
 public:
  unsigned photons() const { return n_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& amplitude(unsigned n_v) const { return amplitudes_.at(n_v); }

  // Amplitudes reordered by n_H (index k holds the coefficient of |k_H, (n-k)_V>).
  std::vector<Complex> amplitudes_by_n_h() const;

  // Set when exactly one amplitude is nonzero.
  bool is_basic_fock() const;
  // Occupation of the single nonzero term; throws ValidationError otherwise.
  ModeOccupation fock_occupation() const;

  double norm_squared() const;

 private:
  friend TwoModeSuperposition make_fock(ModeOccupation);
  friend NormalizedState make_superposition(unsigned, std::span<const Complex>);
  friend TwoModeSuperposition gaussian_superposition(unsigned, double, double);

  TwoModeSuperposition(unsigned n, std::vector<Complex> amplitudes)
      : n_(n), amplitudes_(std::move(amplitudes)) {}

  unsigned n_ = 0;
  std::vector<Complex> amplitudes_;
};

struct NormalizedState {
  TwoModeSuperposition state;
  // True when the input norm differed from one by more than 1e-12.
  bool renormalized = false;
};

/// |n_H, n_V>. Rejects n = 0 and n above max_photons().
TwoModeSuperposition make_fock(ModeOccupation occ);

/// raw / ||raw||. `raw` holds n+1 amplitudes indexed by n_V.
NormalizedState make_superposition(unsigned n, std::span<const Complex> raw);

/// Gaussian envelope C_m ~ exp(-(m - m0)^2 / (2 sigma^2)) over m = n_V = 0..n,
/// normalized. Small sigma degenerates to a basic Fock state.
TwoModeSuperposition gaussian_superposition(unsigned n, double m0, double sigma);

/// Reverses an amplitude sequence between n_V and n_H indexing (k <-> n-k).
std::vector<Complex> reverse_index(std::span<const Complex> amplitudes);

}  // namespace fockent
