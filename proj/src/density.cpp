#include "fockent/density.hpp"

#include "fockent/error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace fockent {

namespace {

ReducedDensity fock_reduced_density(const TwoModeSuperposition& state, unsigned m,
                                    Rational prefactor) {
  const auto [n_h, n_v] = state.fock_occupation();
  const unsigned n = state.photons();
  const std::size_t dim = m + 1;
  std::vector<Complex> raw(dim * dim);
  std::vector<Complex> scaled(dim * dim);
  std::vector<Rational> exact(dim);
  for (unsigned k = 0; k <= m; ++k) {
    // <(a_H^+ )^{m-k} (a_V^+)^k a_H^{m-k} a_V^k> = ff(n_H, m-k) ff(n_V, k)
    if (k > n_v || m - k > n_h) continue;
    const BigInt value = falling_factorial(n_h, m - k) * falling_factorial(n_v, k);
    exact[k] = Rational(value) * prefactor;
    raw[k * dim + k] = value.convert_to<double>();
    scaled[k * dim + k] = exact[k].to_double();
  }
  return {n, m, std::move(prefactor), CorrelatorTable(m, std::move(raw)), std::move(scaled),
          std::move(exact)};
}

double binomial_double(unsigned n, unsigned k) { return binomial(n, k).convert_to<double>(); }

}  // namespace

ReducedDensity reduced_density(const TwoModeSuperposition& state, unsigned m) {
  const unsigned n = state.photons();
  if (m < 1 || m > n) {
    throw ValidationError("reduction order m = " + std::to_string(m) + " outside 1.." +
                          std::to_string(n));
  }
  Rational prefactor(BigInt(1), falling_factorial(n, m));
  if (state.is_basic_fock()) return fock_reduced_density(state, m, std::move(prefactor));

  auto scaled = scaled_correlator_entries(state, m, prefactor.log());
  return {n, m, std::move(prefactor), correlator_table(state, m), std::move(scaled), std::nullopt};
}

FullMatrix full_matrix(const ReducedDensity& rd) {
  if (rd.m > kMaxFullOrder) {
    throw ValidationError("full 2^m matrix limited to m <= " + std::to_string(kMaxFullOrder) +
                          " (got m = " + std::to_string(rd.m) + "); use the compressed form");
  }
  const std::size_t size = std::size_t{1} << rd.m;
  ComplexMatrix entries(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      entries(r, c) = rd.scaled_entry(std::popcount(r), std::popcount(c));
  return {rd.m, std::move(entries)};
}

std::optional<std::vector<Rational>> exact_full_matrix(const ReducedDensity& rd) {
  if (!rd.exact_diagonal) return std::nullopt;
  if (rd.m > kMaxFullOrder) {
    throw ValidationError("full 2^m matrix limited to m <= " + std::to_string(kMaxFullOrder));
  }
  const std::size_t size = std::size_t{1} << rd.m;
  std::vector<Rational> entries(size * size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      if (std::popcount(r) == std::popcount(c)) entries[r * size + c] = (*rd.exact_diagonal)[std::popcount(r)];
  return entries;
}

CompressedHermitian compressed_hermitian(const ReducedDensity& rd) {
  const std::size_t dim = rd.dim();
  std::vector<double> root_binomial(dim);
  for (unsigned k = 0; k <= rd.m; ++k) root_binomial[k] = std::sqrt(binomial_double(rd.m, k));
  ComplexMatrix entries(dim);
  for (unsigned k2 = 0; k2 <= rd.m; ++k2)
    for (unsigned k1 = 0; k1 <= rd.m; ++k1)
      entries(k2, k1) = root_binomial[k2] * root_binomial[k1] * rd.scaled_entry(k2, k1);
  return {rd.m, std::move(entries)};
}

CompressedHermitian pure_coherence(const TwoModeSuperposition& state) {
  const auto c = state.amplitudes();
  ComplexMatrix entries(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) entries(i, j) = std::conj(c[i]) * c[j];
  return {state.photons(), std::move(entries)};
}

ComplexMatrix klyshko_compaction(const FullMatrix& full) {
  if (full.m != 2 || full.entries.order() != 4) {
    throw ValidationError("Klyshko compaction needs an order-2 (4x4) matrix, got m = " +
                          std::to_string(full.m));
  }
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(4);
  u(0, 0) = 1.0;
  u(1, 1) = h;
  u(1, 2) = h;
  u(2, 1) = h;
  u(2, 2) = -h;
  u(3, 3) = 1.0;
  return u * full.entries * u.adjoint();
}

}  // namespace fockent
