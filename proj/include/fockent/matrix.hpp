#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fockent {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t order) : order_(order), data_(order * order) {}
  ComplexMatrix(std::size_t order, std::vector<std::complex<double>> data);

  static ComplexMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * order_ + c];
  }
  const std::vector<std::complex<double>>& data() const { return data_; }

  std::complex<double> trace() const;
  ComplexMatrix adjoint() const;
  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t order_ = 0;
  std::vector<std::complex<double>> data_;
};

// max_ij |a_ij - b_ij|; orders must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace fockent
