#pragma once

#include "fockent/correlators.hpp"
#include "fockent/matrix.hpp"

#include <optional>
#include <vector>

namespace fockent {

/// Largest order for which the dense 2^m x 2^m matrix may be materialized.
inline constexpr unsigned kMaxFullOrder = 12;

/// Reduced density matrix of an n-photon state over n-m photon variables, kept
/// in popcount-class form: the 2^m x 2^m matrix has entry
/// prefactor * A[popcount(row)][popcount(col)] with prefactor (n-m)!/n!.
struct ReducedDensity {
  unsigned n = 0;
  unsigned m = 0;
  Rational prefactor;
  CorrelatorTable table;
  // prefactor * A[k2][k1], row-major (m+1)^2, computed without forming either
  // factor separately.
  std::vector<Complex> scaled;
  // Exact prefactor * A[k][k] for basic Fock states (whose tables are diagonal).
  std::optional<std::vector<Rational>> exact_diagonal;

  std::size_t dim() const { return m + 1; }
  const Complex& scaled_entry(unsigned k2, unsigned k1) const { return scaled[k2 * dim() + k1]; }
};

/// 2^m x 2^m matrix; row/column bit i set means photon variable i is V.
struct FullMatrix {
  unsigned m = 0;
  ComplexMatrix entries;
};

/// (m+1) x (m+1) matrix B[k2][k1] = sqrt(C(m,k2) C(m,k1)) * prefactor * A[k2][k1],
/// the restriction of the full matrix to the symmetric subspace. It carries
/// every nonzero eigenvalue of the full matrix.
struct CompressedHermitian {
  unsigned m = 0;
  ComplexMatrix entries;
};

/// Requires 1 <= m <= n. Basic Fock states take an exact analytic path.
ReducedDensity reduced_density(const TwoModeSuperposition& state, unsigned m);

/// Requires m <= kMaxFullOrder.
FullMatrix full_matrix(const ReducedDensity& rd);

/// Exact rational entries of the full matrix; only available for basic Fock
/// states. Row-major 2^m x 2^m.
std::optional<std::vector<Rational>> exact_full_matrix(const ReducedDensity& rd);

CompressedHermitian compressed_hermitian(const ReducedDensity& rd);

/// Coherence matrix conj(C_i) C_j of a pure state, indexed by n_V.
CompressedHermitian pure_coherence(const TwoModeSuperposition& state);

/// U rho U^+ with U mixing the two single-V rows of an order-2 matrix into
/// their symmetric and antisymmetric combinations.
ComplexMatrix klyshko_compaction(const FullMatrix& full);

}  // namespace fockent
