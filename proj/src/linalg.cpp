#include "ffnets/linalg.hpp"

#include <stdexcept>

namespace ffnets {

std::vector<size_t> rref_inplace(const Field& f, std::vector<Row>& rows) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");

  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    FieldElement inv = f.inv(rows[r][col]);
    for (size_t j = col; j < ncols; ++j) rows[r][j] = f.mul(inv, rows[r][j]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      FieldElement factor = rows[i][col];
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

size_t rank(const Field& f, std::vector<Row> rows) {
  return rref_inplace(f, rows).size();
}

std::vector<Row> kernel_basis(const Field& f, std::vector<Row> rows, size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("row width mismatch");
  std::vector<size_t> pivots = rref_inplace(f, rows);

  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<Row> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Row v(ncols, f.zero());
    v[free_col] = f.one();
    // Pivot row i forces x[pivots[i]] = -sum over free columns.
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(rows[i][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const Field& f, const std::vector<Row>& basis, const Row& v) {
  std::vector<Row> m = basis;
  size_t base = rank(f, m);
  m.push_back(v);
  return rank(f, m) == base;
}

}  // namespace ffnets
