#include "fockent/dump.hpp"

namespace fockent {

namespace {

nlohmann::json dump(const ReducedDensity& rd, const char* form, const ComplexMatrix& matrix) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : matrix.data()) entries.push_back({z.real(), z.imag()});
  return {{"n", rd.n},
          {"m", rd.m},
          {"prefactor", rd.prefactor.to_string()},
          {"order", matrix.order()},
          {"form", form},
          {"entries", std::move(entries)}};
}

}  // namespace

nlohmann::json dump_full(const ReducedDensity& rd, const FullMatrix& full) {
  return dump(rd, "full", full.entries);
}

nlohmann::json dump_compressed(const ReducedDensity& rd, const CompressedHermitian& b) {
  return dump(rd, "compressed", b.entries);
}

void append_matrix_rows(Table& table, const std::string& form, const ComplexMatrix& matrix) {
  for (std::size_t r = 0; r < matrix.order(); ++r)
    for (std::size_t c = 0; c < matrix.order(); ++c)
      table.rows.push_back({form, static_cast<long long>(r), static_cast<long long>(c),
                            matrix(r, c).real(), matrix(r, c).imag()});
}

}  // namespace fockent
