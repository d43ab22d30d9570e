#include "fockent/matrix.hpp"

#include "fockent/error.hpp"

#include <algorithm>
#include <cmath>

namespace fockent {

ComplexMatrix::ComplexMatrix(std::size_t order, std::vector<std::complex<double>> data)
    : order_(order), data_(std::move(data)) {
  if (data_.size() != order_ * order_) throw ValidationError("matrix data does not match its order");
}

ComplexMatrix ComplexMatrix::identity(std::size_t order) {
  ComplexMatrix result(order);
  for (std::size_t i = 0; i < order; ++i) result(i, i) = 1.0;
  return result;
}

std::complex<double> ComplexMatrix::trace() const {
  std::complex<double> sum{};
  for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix result(order_);
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t c = 0; c < order_; ++c) result(c, r) = std::conj((*this)(r, c));
  return result;
}

double ComplexMatrix::hermiticity_defect() const {
  double defect = 0.0;
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t c = r; c < order_; ++c)
      defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return defect;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw ValidationError("matrix orders differ");
  const std::size_t n = a.order();
  ComplexMatrix result(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const auto ark = a(r, k);
      if (ark == std::complex<double>{}) continue;
      for (std::size_t c = 0; c < n; ++c) result(r, c) += ark * b(k, c);
    }
  return result;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw ValidationError("matrix orders differ");
  ComplexMatrix result = a;
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = 0; c < a.order(); ++c) result(r, c) -= b(r, c);
  return result;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw ValidationError("matrix orders differ");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    diff = std::max(diff, std::abs(a.data()[i] - b.data()[i]));
  return diff;
}

}  // namespace fockent
