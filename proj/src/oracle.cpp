#include "fockent/oracle.hpp"

#include "fockent/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace fockent::oracle {

namespace {

void check_size(unsigned n) {
  if (n > kMaxOraclePhotons) {
    throw ValidationError("oracle limited to n <= " + std::to_string(kMaxOraclePhotons) +
                          ", got n = " + std::to_string(n));
  }
}

// Dense single-mode matrix, row-major.
using ModeMatrix = std::vector<double>;

ModeMatrix annihilation(std::size_t dim) {
  ModeMatrix a(dim * dim);
  for (std::size_t k = 1; k < dim; ++k) a[(k - 1) * dim + k] = std::sqrt(static_cast<double>(k));
  return a;
}

ModeMatrix transpose(const ModeMatrix& m, std::size_t dim) {
  ModeMatrix t(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) t[c * dim + r] = m[r * dim + c];
  return t;
}

// Two-mode vector indexed [h * dim + v]; applies op (x) 1 or 1 (x) op.
std::vector<Complex> apply(const ModeMatrix& op, std::size_t dim, bool on_h,
                           const std::vector<Complex>& vec) {
  std::vector<Complex> out(vec.size());
  for (std::size_t h = 0; h < dim; ++h)
    for (std::size_t v = 0; v < dim; ++v) {
      Complex sum{};
      for (std::size_t k = 0; k < dim; ++k) {
        const double w = on_h ? op[h * dim + k] : op[v * dim + k];
        if (w != 0.0) sum += w * (on_h ? vec[k * dim + v] : vec[h * dim + k]);
      }
      out[h * dim + v] = sum;
    }
  return out;
}

}  // namespace

WavefunctionTensor wavefunction_tensor(const TwoModeSuperposition& state) {
  const unsigned n = state.photons();
  check_size(n);
  std::vector<double> inv_root_binomial(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    inv_root_binomial[k] = 1.0 / std::sqrt(binomial(n, k).convert_to<double>());

  WavefunctionTensor tensor{n, std::vector<Complex>(std::size_t{1} << n)};
  for (std::size_t b = 0; b < tensor.amplitudes.size(); ++b) {
    const auto k = static_cast<unsigned>(std::popcount(b));
    tensor.amplitudes[b] = state.amplitude(k) * inv_root_binomial[k];
  }
  return tensor;
}

ComplexMatrix partial_trace(const WavefunctionTensor& tensor, const std::vector<unsigned>& traced) {
  const unsigned n = tensor.n;
  std::vector<bool> is_traced(n, false);
  for (unsigned pos : traced) {
    if (pos >= n) throw ValidationError("traced position " + std::to_string(pos) + " out of range");
    if (is_traced[pos]) throw ValidationError("traced position " + std::to_string(pos) + " repeated");
    is_traced[pos] = true;
  }
  if (traced.size() >= n) throw ValidationError("partial trace must keep at least one variable");

  std::vector<unsigned> kept;
  std::vector<unsigned> gone;
  for (unsigned pos = 0; pos < n; ++pos) (is_traced[pos] ? gone : kept).push_back(pos);

  const auto scatter = [](const std::vector<unsigned>& positions) {
    std::vector<std::size_t> table(std::size_t{1} << positions.size());
    for (std::size_t x = 0; x < table.size(); ++x)
      for (std::size_t i = 0; i < positions.size(); ++i)
        if ((x >> i) & 1U) table[x] |= std::size_t{1} << positions[i];
    return table;
  };
  const auto kept_bits = scatter(kept);
  const auto gone_bits = scatter(gone);

  ComplexMatrix rho(kept_bits.size());
  for (std::size_t r = 0; r < kept_bits.size(); ++r)
    for (std::size_t c = 0; c < kept_bits.size(); ++c) {
      Complex sum{};
      for (std::size_t t : gone_bits)
        sum += std::conj(tensor.amplitudes[kept_bits[r] | t]) * tensor.amplitudes[kept_bits[c] | t];
      rho(r, c) = sum;
    }
  return rho;
}

ComplexMatrix partial_trace(const WavefunctionTensor& tensor, unsigned keep) {
  if (keep < 1 || keep > tensor.n) throw ValidationError("keep must lie in 1..n");
  std::vector<unsigned> traced;
  for (unsigned pos = keep; pos < tensor.n; ++pos) traced.push_back(pos);
  return partial_trace(tensor, traced);
}

Complex ladder_correlator(const TwoModeSuperposition& state, const CorrelatorSpec& spec) {
  const unsigned n = state.photons();
  check_size(n);
  // Annihilators act first, so occupations never exceed n + (creation power).
  const std::size_t dim = n + std::max(spec.p_h, spec.p_v) + 1;
  const ModeMatrix a = annihilation(dim);
  const ModeMatrix a_dag = transpose(a, dim);

  std::vector<Complex> psi(dim * dim);
  for (unsigned n_v = 0; n_v <= n; ++n_v) psi[(n - n_v) * dim + n_v] = state.amplitude(n_v);

  auto vec = psi;
  for (unsigned i = 0; i < spec.q_v; ++i) vec = apply(a, dim, false, vec);
  for (unsigned i = 0; i < spec.q_h; ++i) vec = apply(a, dim, true, vec);
  for (unsigned i = 0; i < spec.p_v; ++i) vec = apply(a_dag, dim, false, vec);
  for (unsigned i = 0; i < spec.p_h; ++i) vec = apply(a_dag, dim, true, vec);

  Complex result{};
  for (std::size_t i = 0; i < psi.size(); ++i) result += std::conj(psi[i]) * vec[i];
  return result;
}

}  // namespace fockent::oracle
