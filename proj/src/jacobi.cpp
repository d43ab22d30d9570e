#include "fockent/error.hpp"
#include "fockent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace fockent {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalThreshold = 1e-13;
constexpr int kMaxSweeps = 100;

// Dense real symmetric matrix, row-major, diagonalized in place.
class SymmetricJacobi {
 public:
  explicit SymmetricJacobi(std::size_t order) : n_(order), a_(order * order) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  std::vector<double> solve() {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::abs(v));
    const double threshold = kOffDiagonalThreshold * std::max(1.0, scale);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (max_off_diagonal() < threshold) return diagonal();
      for (std::size_t p = 0; p + 1 < n_; ++p)
        for (std::size_t q = p + 1; q < n_; ++q)
          if (std::abs(at(p, q)) >= threshold) rotate(p, q);
    }
    const double residual = max_off_diagonal();
    if (residual < threshold) return diagonal();
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge in " << kMaxSweeps
        << " sweeps; max off-diagonal residual " << residual;
    throw NumericalError(msg.str());
  }

 private:
  double max_off_diagonal() const {
    double off = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = r + 1; c < n_; ++c) off = std::max(off, std::abs(a_[r * n_ + c]));
    return off;
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = a_[i * n_ + i];
    return d;
  }

  // Zeroes a(p, q) with a plane rotation applied from both sides.
  void rotate(std::size_t p, std::size_t q) {
    const double apq = at(p, q);
    if (apq == 0.0) return;
    const double app = at(p, p);
    const double aqq = at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
      t = 0.5 / theta;
    } else {
      t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n_; ++k) {
      if (k == p || k == q) continue;
      const double akp = at(k, p);
      const double akq = at(k, q);
      const double new_kp = c * akp - s * akq;
      const double new_kq = s * akp + c * akq;
      at(k, p) = at(p, k) = new_kp;
      at(k, q) = at(q, k) = new_kq;
    }
    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = at(q, p) = 0.0;
  }

  std::size_t n_;
  std::vector<double> a_;
};

}  // namespace

std::vector<double> jacobi_eigenvalues(const ComplexMatrix& hermitian) {
  const std::size_t n = hermitian.order();
  if (n == 0) return {};
  const double defect = hermitian.hermiticity_defect();
  if (!(defect <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |a_ij - conj(a_ji)| = " << defect;
    throw ValidationError(msg.str());
  }

  bool real = true;
  for (const auto& z : hermitian.data())
    if (z.imag() != 0.0) real = false;

  std::vector<double> eigenvalues;
  if (real) {
    SymmetricJacobi jacobi(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        jacobi.at(r, c) = 0.5 * (hermitian(r, c).real() + hermitian(c, r).real());
    eigenvalues = jacobi.solve();
  } else {
    // [[Re, -Im], [Im, Re]] carries every eigenvalue of the Hermitian matrix twice.
    SymmetricJacobi jacobi(2 * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const auto z = 0.5 * (hermitian(r, c) + std::conj(hermitian(c, r)));
        jacobi.at(r, c) = z.real();
        jacobi.at(r + n, c + n) = z.real();
        jacobi.at(r, c + n) = -z.imag();
        jacobi.at(r + n, c) = z.imag();
      }
    auto doubled = jacobi.solve();
    std::sort(doubled.begin(), doubled.end(), std::greater<>());
    eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  return eigenvalues;
}

}  // namespace fockent
