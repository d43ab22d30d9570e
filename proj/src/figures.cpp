#include "fockent/figures.hpp"

#include "fockent/error.hpp"
#include "fockent/parallel.hpp"
#include "fockent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace fockent {

namespace {

struct FockMeasures {
  double K = 1.0;
  double S = 0.0;
};

FockMeasures fock_measures(ModeOccupation occ, unsigned m) {
  const auto eigenvalues = analytic_fock_eigenvalues(occ, m);
  std::vector<double> lambda;
  for (const auto& e : eigenvalues) lambda.push_back(e.lambda.to_double());
  return {schmidt_K_exact(eigenvalues).to_double(), entropy(lambda)};
}

void check_n(unsigned n) {
  if (n == 0 || n > max_photons()) {
    throw ValidationError("n = " + std::to_string(n) + " outside 1.." + std::to_string(max_photons()));
  }
}

std::vector<unsigned> even_range(const FigureOptions& o) {
  const unsigned lo = o.n_min.value_or(2);
  const unsigned hi = o.n_max.value_or(30);
  check_n(std::max(lo, 1U));
  check_n(hi);
  if (hi < lo) throw ValidationError("n-max must not be below n-min");
  std::vector<unsigned> ns;
  for (unsigned n = lo + (lo % 2); n <= hi; n += 2)
    if (n >= 2) ns.push_back(n);
  if (ns.empty()) throw ValidationError("no even n in the requested range");
  return ns;
}

Table figure_balanced(const FigureOptions& o, bool entropy_only) {
  const auto ns = even_range(o);
  const auto measures = parallel_map(ns.size(), o.jobs, [&](std::size_t i) {
    return fock_measures({ns[i] / 2, ns[i] / 2}, ns[i] / 2);
  });
  Table table;
  table.columns = entropy_only ? std::vector<std::string>{"n", "S"}
                               : std::vector<std::string>{"n", "K", "K_appr", "residual"};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto n = static_cast<long long>(ns[i]);
    if (entropy_only) {
      table.rows.push_back({n, measures[i].S});
    } else {
      const double approx = k_approx(ns[i]);
      table.rows.push_back({n, measures[i].K, approx, measures[i].K - approx});
    }
  }
  return table;
}

Table figure_imbalance(const FigureOptions& o) {
  std::vector<unsigned> ns;
  if (o.n) {
    check_n(*o.n);
    ns.push_back(*o.n);
  } else {
    const unsigned lo = std::max(1U, o.n_min.value_or(2));
    const unsigned hi = o.n_max.value_or(10);
    check_n(hi);
    if (hi < lo) throw ValidationError("n-max must not be below n-min");
    for (unsigned n = lo; n <= hi; ++n) ns.push_back(n);
  }
  Table table{{"n", "n_V", "K"}, {}};
  for (unsigned n : ns)
    for (unsigned v = 0; v <= n; ++v)
      table.rows.push_back({static_cast<long long>(n), static_cast<long long>(v),
                            single_photon_K({n - v, v}).to_double()});
  return table;
}

Table figure_split(const FigureOptions& o) {
  std::vector<unsigned> ns{6, 8, 24};
  if (o.n) {
    check_n(*o.n);
    if (*o.n < 2) throw ValidationError("figure 4 needs n >= 2");
    ns = {*o.n};
  }
  Table table{{"n", "m", "m_over_n", "K"}, {}};
  for (unsigned n : ns) {
    const ModeOccupation occ{n - n / 2, n / 2};
    const auto measures = parallel_map(n - 1, o.jobs, [&](std::size_t i) {
      return fock_measures(occ, static_cast<unsigned>(i) + 1);
    });
    for (unsigned m = 1; m < n; ++m)
      table.rows.push_back({static_cast<long long>(n), static_cast<long long>(m),
                            static_cast<double>(m) / n, measures[m - 1].K});
  }
  return table;
}

Table figure_eigenvalues(const FigureOptions& o) {
  const ModeOccupation occ{o.n_h.value_or(60), o.n_v.value_or(60)};
  check_n(occ.total());
  const std::vector<unsigned> ms = o.m.empty() ? std::vector<unsigned>{50, 30, 10} : o.m;
  for (unsigned m : ms)
    if (m < 1 || m > occ.total()) throw ValidationError("m = " + std::to_string(m) + " outside 1..n");

  const auto spectra = parallel_map(ms.size(), o.jobs, [&](std::size_t i) {
    std::vector<double> lambda;
    for (const auto& e : analytic_fock_eigenvalues(occ, ms[i])) lambda.push_back(e.lambda.to_double());
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return lambda;
  });
  Table table{{"m", "k_rank", "lambda"}, {}};
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t rank = 0; rank < spectra[i].size(); ++rank)
      table.rows.push_back({static_cast<long long>(ms[i]), static_cast<long long>(rank), spectra[i][rank]});
  return table;
}

Table figure_sigma(const FigureOptions& o) {
  const unsigned n = o.n.value_or(6);
  check_n(n);
  const unsigned m = o.m.empty() ? 1 : o.m.front();
  if (m < 1 || m > n) throw ValidationError("m = " + std::to_string(m) + " outside 1..n");
  const std::vector<double> m0s = o.m0.empty() ? std::vector<double>{3, 2, 1, 0} : o.m0;
  if (!(o.sigma_min > 0.0) || !(o.sigma_max > o.sigma_min) || o.sigma_steps < 2) {
    throw ValidationError("sigma grid needs 0 < sigma-min < sigma-max and at least 2 steps");
  }
  std::vector<double> sigmas(o.sigma_steps);
  for (unsigned i = 0; i < o.sigma_steps; ++i)
    sigmas[i] = o.sigma_min + (o.sigma_max - o.sigma_min) * i / (o.sigma_steps - 1);

  const std::size_t points = m0s.size() * sigmas.size();
  const auto ks = parallel_map(points, o.jobs, [&](std::size_t i) {
    const double sigma = sigmas[i % sigmas.size()];
    const std::span<const double> one(&sigma, 1);
    return sigma_scan(n, m0s[i / sigmas.size()], m, one).front().K;
  });
  Table table{{"m0", "sigma", "K"}, {}};
  for (std::size_t i = 0; i < points; ++i)
    table.rows.push_back({m0s[i / sigmas.size()], sigmas[i % sigmas.size()], ks[i]});
  return table;
}

double number(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) return static_cast<double>(*i);
  return std::nan("");
}

}  // namespace

Table figure_table(int index, const FigureOptions& options) {
  switch (index) {
    case 1: return figure_balanced(options, false);
    case 2: return figure_balanced(options, true);
    case 3: return figure_imbalance(options);
    case 4: return figure_split(options);
    case 5: return figure_eigenvalues(options);
    case 6: return figure_sigma(options);
    default: throw ValidationError("figure index must be 1..6, got " + std::to_string(index));
  }
}

std::string check_figure_schema(int index, const Table& table) {
  static const std::vector<std::vector<std::string>> kColumns{
      {"n", "K", "K_appr", "residual"}, {"n", "S"},           {"n", "n_V", "K"},
      {"n", "m", "m_over_n", "K"},      {"m", "k_rank", "lambda"}, {"m0", "sigma", "K"}};
  if (index < 1 || index > 6) return "unknown figure index";
  if (table.columns != kColumns[index - 1]) return "unexpected column names";
  if (table.rows.empty()) return "no rows";

  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(
        std::find(table.columns.begin(), table.columns.end(), name) - table.columns.begin());
  };
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.columns.size()) return "row " + std::to_string(r) + " has wrong width";
    for (const auto& cell : row)
      if (!std::isfinite(number(cell))) return "row " + std::to_string(r) + " has a non-numeric cell";
    if (index != 2 && index != 5 && number(row[col("K")]) < 1.0 - 1e-10) {
      return "K below 1 in row " + std::to_string(r);
    }
    if (index == 2 && number(row[col("S")]) < 0.0) return "negative entropy in row " + std::to_string(r);
    if (index == 5) {
      const double l = number(row[col("lambda")]);
      if (l < 0.0 || l > 1.0) return "lambda outside [0, 1] in row " + std::to_string(r);
    }
    if (r == 0) continue;
    const auto& prev = table.rows[r - 1];
    // Grid monotonicity within each curve.
    switch (index) {
      case 1:
      case 2:
        if (!(number(row[0]) > number(prev[0]))) return "n grid not increasing";
        break;
      case 3:
      case 4:
        if (number(row[0]) == number(prev[0]) && !(number(row[1]) > number(prev[1])))
          return "grid not increasing within n = " + format_double(number(row[0]));
        break;
      case 5:
        if (number(row[0]) == number(prev[0]) &&
            (!(number(row[1]) > number(prev[1])) || number(row[2]) > number(prev[2])))
          return "eigenvalues not descending within m = " + format_double(number(row[0]));
        break;
      case 6:
        if (number(row[0]) == number(prev[0]) && !(number(row[1]) > number(prev[1])))
          return "sigma grid not increasing within m0 = " + format_double(number(row[0]));
        break;
    }
  }
  return {};
}

}  // namespace fockent
