#pragma once

// Brute-force reference implementations over explicit photon variables.
// Exponential in n; used to cross-check the correlator and density paths.

#include "fockent/correlators.hpp"
#include "fockent/matrix.hpp"

#include <vector>

namespace fockent::oracle {

inline constexpr unsigned kMaxOraclePhotons = 12;

/// Symmetrized amplitude over 2^n bitstrings (bit i set: photon variable i is V).
/// amplitude(b) = C_{popcount(b)} / sqrt(C(n, popcount(b))).
struct WavefunctionTensor {
  unsigned n = 0;
  std::vector<Complex> amplitudes;
};

WavefunctionTensor wavefunction_tensor(const TwoModeSuperposition& state);

/// Sums conj(psi(r, t)) psi(c, t) over the 2^(n-m) assignments t of the traced
/// positions. The row index labels the bra, matching the ordering of
/// correlator matrices. Retained positions keep their relative order: the
/// lowest retained position becomes bit 0 of the reduced index.
ComplexMatrix partial_trace(const WavefunctionTensor& tensor, const std::vector<unsigned>& traced);

/// Traces out positions m..n-1.
ComplexMatrix partial_trace(const WavefunctionTensor& tensor, unsigned keep);

/// Correlator from explicit truncated ladder matrices acting on the two-mode
/// number basis, padded so that no operator string leaves the basis.
Complex ladder_correlator(const TwoModeSuperposition& state, const CorrelatorSpec& spec);

}  // namespace fockent::oracle
