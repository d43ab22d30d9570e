#pragma once

#include "fockent/table.hpp"

#include <optional>
#include <vector>

namespace fockent {

/// Parameter overrides for the figure tables. Unset fields take the
/// per-figure defaults:
///   1, 2: balanced |n/2, n/2>, m = n/2, even n in [2, 30]
///   3:    m = 1, n in [2, 10], every n_V
///   4:    balanced states, n in {6, 8, 24}, m = 1..n-1
///   5:    |60, 60>, m in {50, 30, 10}
///   6:    Gaussian superpositions, n = 6, m0 in {3, 2, 1, 0}, m = 1,
///         sigma = 0.05, 0.10, ..., 4.00
struct FigureOptions {
  std::optional<unsigned> n;      // single n (figs 3, 4, 6)
  std::optional<unsigned> n_min;  // figs 1-3
  std::optional<unsigned> n_max;  // figs 1-3
  std::vector<unsigned> m;        // fig 5 orders, fig 6 order (first entry)
  std::optional<unsigned> n_h;    // fig 5
  std::optional<unsigned> n_v;    // fig 5
  std::vector<double> m0;         // fig 6
  double sigma_min = 0.05;
  double sigma_max = 4.0;
  unsigned sigma_steps = 80;
  unsigned jobs = 1;
};

/// Data behind figure `index` (1..6). Columns:
///   1: n, K, K_appr, residual (K - K_appr)
///   2: n, S
///   3: n, n_V, K
///   4: n, m, m_over_n, K
///   5: m, k_rank, lambda (descending within each m, k_rank from 0)
///   6: m0, sigma, K
Table figure_table(int index, const FigureOptions& options);

/// Structural checks on a figure table: column names, monotone grids, K >= 1
/// and lambda in [0, 1]. Returns an empty string when the table passes.
std::string check_figure_schema(int index, const Table& table);

}  // namespace fockent
