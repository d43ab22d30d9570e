#pragma once

#include "fockent/density.hpp"

#include <span>
#include <utility>
#include <vector>

namespace fockent {

/// Descending eigenvalues of a unit-trace density matrix with the Schmidt
/// parameter K = 1 / sum(lambda^2) and entropy S = -sum(lambda log2 lambda).
struct Spectrum {
  std::vector<double> eigenvalues;
  double K = 1.0;
  double S = 0.0;
};

/// Builds a Spectrum: sorts descending, clamps roundoff negatives in
/// (-1e-8, 0) to zero and rejects anything more negative or a sum off by
/// more than 1e-8.
Spectrum make_spectrum(std::vector<double> eigenvalues);

double schmidt_K(std::span<const double> eigenvalues);
double entropy(std::span<const double> eigenvalues);

/// Eigenvalue of the k-th diagonal block (k = number of V photons among the
/// retained m) of a reduced basic Fock state.
struct FockEigenvalue {
  unsigned k = 0;
  Rational lambda;
};

/// Exact spectrum of |n_H, n_V> reduced to m variables, for
/// k in [max(m - n_H, 0), min(n_V, m)]:
///   lambda_k = (n-m)!/n! * C(m,k) * n_H!/(n_H-m+k)! * n_V!/(n_V-k)!
std::vector<FockEigenvalue> analytic_fock_eigenvalues(ModeOccupation occ, unsigned m);

/// 1 / sum(lambda^2) without rounding.
Rational schmidt_K_exact(std::span<const FockEigenvalue> eigenvalues);

/// Descending eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on
/// its real symmetric embedding [[Re, -Im], [Im, Re]]. No clamping or
/// normalization. Throws ValidationError for non-Hermitian input (defect above
/// 1e-10) and NumericalError when 100 sweeps do not bring every off-diagonal
/// magnitude below 1e-13.
std::vector<double> jacobi_eigenvalues(const ComplexMatrix& hermitian);

/// Spectrum of a reduced density in compressed form; checks that the
/// eigenvalue sum matches the trace to 1e-10.
Spectrum hermitian_eigenvalues(const CompressedHermitian& b);
Spectrum hermitian_eigenvalues(const ComplexMatrix& hermitian);

/// Spectrum of `state` reduced to m variables: analytic for basic Fock states,
/// numerical otherwise.
Spectrum reduced_spectrum(const TwoModeSuperposition& state, unsigned m);

/// (n_H + n_V)^2 / (n_H^2 + n_V^2), the Schmidt parameter of the single-photon
/// reduction of |n_H, n_V>.
Rational single_photon_K(ModeOccupation occ);

/// |2 C_1 C_3 - C_2^2| for a two-photon state with C_1 <-> |2_H>, C_2 <->
/// |1_H 1_V>, C_3 <-> |2_V>.
double concurrence(const TwoModeSuperposition& qutrit);

/// 0.62 + n^0.54, the empirical fit to K(n) of balanced states split in half.
double k_approx(unsigned n);

struct SigmaScanPoint {
  double sigma = 0.0;
  double K = 1.0;
};

/// K of the Gaussian superposition (n, m0, sigma) reduced to m variables, for
/// each sigma in a strictly increasing positive grid.
std::vector<SigmaScanPoint> sigma_scan(unsigned n, double m0, unsigned m,
                                       std::span<const double> sigmas);

struct SigmaMinimum {
  double sigma = 0.0;
  double K = 1.0;
  // K at the minimum is within 1e-6 of 1: entanglement disappears there.
  bool reached_one = false;
  // Coarse scan used to bracket the minimum.
  std::vector<SigmaScanPoint> scan;
};

inline constexpr double kSigmaZeroThreshold = 1e-6;

/// Locates the interior minimum of K(sigma) inside [lo, hi]: coarse
/// log-spaced scan, then golden-section refinement to |d sigma| <= 1e-7.
/// Throws NumericalError (carrying the scan table in its message) when no
/// interior local minimum exists.
SigmaMinimum find_min_K_sigma(unsigned n, double m0, unsigned m, double lo, double hi,
                              unsigned coarse_points = 200);

}  // namespace fockent
