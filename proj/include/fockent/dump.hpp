#pragma once

#include "fockent/density.hpp"
#include "fockent/table.hpp"

#include "json.hpp"

namespace fockent {

/// {n, m, prefactor: "p/q", order, form, entries: [[re, im], ...]} with
/// entries row-major.
nlohmann::json dump_full(const ReducedDensity& rd, const FullMatrix& full);
nlohmann::json dump_compressed(const ReducedDensity& rd, const CompressedHermitian& b);

/// Rows (form, row, col, re, im) for CSV output.
void append_matrix_rows(Table& table, const std::string& form, const ComplexMatrix& matrix);

}  // namespace fockent
