#include "fockent/spectrum.hpp"

#include "fockent/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

namespace fockent {

namespace {

constexpr double kClampLimit = 1e-8;
constexpr double kSumTolerance = 1e-8;
constexpr double kTraceTolerance = 1e-10;
constexpr double kSigmaResolution = 1e-7;

}  // namespace

double schmidt_K(std::span<const double> eigenvalues) {
  double purity = 0.0;
  for (double l : eigenvalues) purity += l * l;
  return 1.0 / purity;
}

double entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues)
    if (l > 0.0) s -= l * std::log2(l);
  // Eigenvalues a few ulps above 1 would otherwise give -1e-15.
  return std::max(s, 0.0);
}

Spectrum make_spectrum(std::vector<double> eigenvalues) {
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  double sum = 0.0;
  for (double& l : eigenvalues) {
    if (l < -kClampLimit) {
      std::ostringstream msg;
      msg << "eigenvalue " << l << " is negative beyond roundoff";
      throw NumericalError(msg.str());
    }
    l = std::max(l, 0.0);
    sum += l;
  }
  if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
    std::ostringstream msg;
    msg << "eigenvalues sum to " << sum << " instead of 1";
    throw NumericalError(msg.str());
  }
  Spectrum spectrum;
  spectrum.K = schmidt_K(eigenvalues);
  spectrum.S = entropy(eigenvalues);
  spectrum.eigenvalues = std::move(eigenvalues);
  return spectrum;
}

std::vector<FockEigenvalue> analytic_fock_eigenvalues(ModeOccupation occ, unsigned m) {
  const unsigned n = occ.total();
  if (n == 0 || m < 1 || m > n) {
    throw ValidationError("reduction order m = " + std::to_string(m) + " outside 1.." +
                          std::to_string(n));
  }
  const BigInt denominator = falling_factorial(n, m);  // n!/(n-m)!
  const unsigned k_min = m > occ.n_h ? m - occ.n_h : 0;
  const unsigned k_max = std::min(occ.n_v, m);
  std::vector<FockEigenvalue> result;
  result.reserve(k_max - k_min + 1);
  for (unsigned k = k_min; k <= k_max; ++k) {
    const BigInt numerator =
        binomial(m, k) * falling_factorial(occ.n_h, m - k) * falling_factorial(occ.n_v, k);
    result.push_back({k, Rational(numerator, denominator)});
  }
  return result;
}

Rational schmidt_K_exact(std::span<const FockEigenvalue> eigenvalues) {
  Rational purity;
  for (const auto& e : eigenvalues) purity += e.lambda * e.lambda;
  return Rational(1) / purity;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& hermitian) {
  auto eigenvalues = jacobi_eigenvalues(hermitian);
  double sum = 0.0;
  for (double l : eigenvalues) sum += l;
  const double trace = hermitian.trace().real();
  if (!(std::abs(sum - trace) <= kTraceTolerance)) {
    std::ostringstream msg;
    msg << "eigenvalue sum " << sum << " departs from trace " << trace;
    throw NumericalError(msg.str());
  }
  return make_spectrum(std::move(eigenvalues));
}

Spectrum hermitian_eigenvalues(const CompressedHermitian& b) { return hermitian_eigenvalues(b.entries); }

Spectrum reduced_spectrum(const TwoModeSuperposition& state, unsigned m) {
  if (state.is_basic_fock()) {
    std::vector<double> eigenvalues;
    for (const auto& e : analytic_fock_eigenvalues(state.fock_occupation(), m))
      eigenvalues.push_back(e.lambda.to_double());
    return make_spectrum(std::move(eigenvalues));
  }
  return hermitian_eigenvalues(compressed_hermitian(reduced_density(state, m)));
}

Rational single_photon_K(ModeOccupation occ) {
  if (occ.total() == 0) throw ValidationError("state has no photons (n = 0)");
  const BigInt n = occ.total();
  const BigInt h = occ.n_h;
  const BigInt v = occ.n_v;
  return {n * n, h * h + v * v};
}

double concurrence(const TwoModeSuperposition& qutrit) {
  if (qutrit.photons() != 2) {
    throw ValidationError("concurrence is defined for two-photon states, got n = " +
                          std::to_string(qutrit.photons()));
  }
  const auto c = qutrit.amplitudes();
  return std::abs(2.0 * c[0] * c[2] - c[1] * c[1]);
}

double k_approx(unsigned n) { return 0.62 + std::pow(static_cast<double>(n), 0.54); }

std::vector<SigmaScanPoint> sigma_scan(unsigned n, double m0, unsigned m,
                                       std::span<const double> sigmas) {
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!(sigmas[i] > 0.0)) throw ValidationError("sigma grid must be strictly positive");
    if (i > 0 && !(sigmas[i] > sigmas[i - 1])) {
      throw ValidationError("sigma grid must be strictly increasing");
    }
  }
  std::vector<SigmaScanPoint> points;
  points.reserve(sigmas.size());
  for (double sigma : sigmas) {
    points.push_back({sigma, reduced_spectrum(gaussian_superposition(n, m0, sigma), m).K});
  }
  return points;
}

SigmaMinimum find_min_K_sigma(unsigned n, double m0, unsigned m, double lo, double hi,
                              unsigned coarse_points) {
  if (!(lo > 0.0) || !(hi > lo)) throw ValidationError("sigma bracket must satisfy 0 < lo < hi");
  if (coarse_points < 3) throw ValidationError("coarse scan needs at least 3 points");

  std::vector<double> grid(coarse_points);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (coarse_points - 1);
  for (unsigned i = 0; i < coarse_points; ++i) grid[i] = std::exp(log_lo + step * i);
  grid.front() = lo;
  grid.back() = hi;

  SigmaMinimum result;
  result.scan = sigma_scan(n, m0, m, grid);
  const auto& scan = result.scan;

  // Interior local minima; the left drop must exceed roundoff so that flat
  // K = 1 plateaus (Fock-like limits) do not register.
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < scan.size(); ++i) {
    if (scan[i].K < scan[i - 1].K - 1e-12 && scan[i].K <= scan[i + 1].K) {
      if (best == 0 || scan[i].K < scan[best].K) best = i;
    }
  }
  if (best == 0) {
    std::ostringstream msg;
    msg << "no interior minimum of K(sigma) in [" << lo << ", " << hi << "]; scan:";
    msg.precision(17);
    for (const auto& p : scan) msg << ' ' << p.sigma << ':' << p.K;
    throw NumericalError(msg.str());
  }

  const auto k_at = [&](double sigma) {
    return reduced_spectrum(gaussian_superposition(n, m0, sigma), m).K;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = scan[best - 1].sigma;
  double b = scan[best + 1].sigma;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = k_at(x1);
  double f2 = k_at(x2);
  while (b - a > kSigmaResolution) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = k_at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = k_at(x2);
    }
  }
  result.sigma = 0.5 * (a + b);
  result.K = k_at(result.sigma);
  if (f1 < result.K) { result.sigma = x1; result.K = f1; }
  if (f2 < result.K) { result.sigma = x2; result.K = f2; }
  result.reached_one = result.K <= 1.0 + kSigmaZeroThreshold;
  return result;
}

}  // namespace fockent
