#pragma once

#include "fockent/fock_core.hpp"

#include <vector>

namespace fockent {

/// Normally ordered operator string (a_H^+)^{p_h} (a_V^+)^{p_v} a_H^{q_h} a_V^{q_v}.
struct CorrelatorSpec {
  unsigned p_h = 0;
  unsigned p_v = 0;
  unsigned q_h = 0;
  unsigned q_v = 0;

  bool balanced() const { return p_h + p_v == q_h + q_v; }
  // The Hermitian-conjugate operator string.
  CorrelatorSpec adjoint() const { return {q_h, q_v, p_h, p_v}; }
};

/// <psi| (a_H^+)^{p_h} (a_V^+)^{p_v} a_H^{q_h} a_V^{q_v} |psi>.
///
/// Exactly zero for unbalanced specs, since the state has a fixed total photon
/// number. Ladder weights are products of four falling factorials; they are
/// evaluated exactly up to n = 30 and in log space above.
Complex correlator(const TwoModeSuperposition& state, const CorrelatorSpec& spec);

/// (m+1) x (m+1) table A[k2][k1] = <(a_H^+)^{m-k2} (a_V^+)^{k2} a_H^{m-k1} a_V^{k1}>.
///
/// Raw correlators grow like n!/(n-m)!, so entries overflow to infinity for
/// very large orders; ReducedDensity carries separately scaled entries.
class CorrelatorTable {
 public:
  CorrelatorTable(unsigned m, std::vector<Complex> entries);

  unsigned order() const { return m_; }
  std::size_t dim() const { return m_ + 1; }
  const Complex& operator()(unsigned k2, unsigned k1) const { return entries_[k2 * dim() + k1]; }

 private:
  unsigned m_;
  std::vector<Complex> entries_;
};

/// Fills the table from `correlator`, computing k2 <= k1 and mirroring.
/// Requires 1 <= m <= n.
CorrelatorTable correlator_table(const TwoModeSuperposition& state, unsigned m);

/// Table entries multiplied by exp(log_scale) with the scale folded into the
/// ladder weights before exponentiation, so that prefactors such as
/// (n-m)!/n! never have to be representable on their own.
std::vector<Complex> scaled_correlator_entries(const TwoModeSuperposition& state, unsigned m,
                                               double log_scale);

namespace detail {

// ln(a!/(a-k)!) from a long-double cumulative log-factorial table.
double log_falling_factorial(unsigned a, unsigned k);

}  // namespace detail

}  // namespace fockent
