#pragma once

#include "fockent/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fockent {

inline constexpr unsigned kDefaultVerifyMaxN = 8;

struct VerifyOptions {
  unsigned max_n = kDefaultVerifyMaxN;
  unsigned states_per_n = 5;
  std::uint64_t seed = 20190101;
  // Scales the production full matrix by (1 + 1e-6) before comparison; a
  // negative control that must make the suite fail.
  bool inject_fault = false;
  unsigned jobs = 1;
};

struct VerifyCheck {
  std::string name;
  unsigned n = 0;
  unsigned m = 0;  // 0 when the check spans all orders
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

/// Production-versus-oracle equivalence for every n <= max_n (hard cap 12):
/// closed-form versus ladder-matrix correlators, full matrix versus explicit
/// partial trace, full versus compressed nonzero spectra, and unit traces.
std::vector<VerifyCheck> run_verification(const VerifyOptions& options);

Table verification_table(const std::vector<VerifyCheck>& checks);

}  // namespace fockent
