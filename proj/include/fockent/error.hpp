#pragma once

#include <stdexcept>
#include <string>

namespace fockent {

// Bad input: out-of-range photon numbers, malformed amplitudes, wrong matrix order.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// The numerics failed: eigensolver did not converge, traces drifted, large
// negative eigenvalues, no minimum inside a bracket.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fockent
