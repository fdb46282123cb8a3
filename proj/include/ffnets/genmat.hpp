#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffnets/construct.hpp"

namespace ffnets {

/* Generating matrices C^(1..s) over F_q, all with the same depth. */
struct MatrixSet {
  Field field{2};
  Variant variant = Variant::genus0;
  int s = 0;
  int mu = 1;
  int g = 0;
  int jmax = 0;
  int cols = 0;
  /* entries[i-1][j-1][k]: row j (1-based), column k (0-based) of matrix i. */
  std::vector<std::vector<std::vector<FieldElement>>> entries;

  const FieldElement& at(int i, int j, int k) const;
  friend bool operator==(const MatrixSet&, const MatrixSet&) = default;
};

uint64_t fnv1a64(const std::string& text);

/* Canonical text form; the digest in the header covers the field line and
 * everything below it, so any edit is detected on deserialize. */
std::string serialize(const MatrixSet& ms);
MatrixSet deserialize(const std::string& text);  // throws std::runtime_error

void write_matrix_file(const MatrixSet& ms, const std::string& path);
MatrixSet read_matrix_file(const std::string& path);

/* Block column layout: expansion coefficient k of a row function is a
 * residue vector of length mu whose component r fills column k*mu + r. */
template <class FF>
MatrixSet build_rows_block(RowSystem<FF>& sys, int j_max, int cols) {
  if (j_max < 1 || cols < 1)
    throw std::invalid_argument("matrix depth must be positive");
  if (sys.variant() == Variant::xing)
    throw std::invalid_argument("block layout serves the block variants only");
  const FF& ff = sys.ff();
  int mu = sys.mu();
  int kmax = (cols + mu - 1) / mu;  // plus one guard coefficient below
  MatrixSet ms{ff.field(), sys.variant(), sys.s(), mu,
               ff.genus(), j_max,         cols,    {}};
  ms.entries.assign(size_t(sys.s()), {});
  for (int i = 1; i <= sys.s(); ++i) {
    auto& mat = ms.entries[i - 1];
    mat.reserve(size_t(j_max));
    for (int j = 1; j <= j_max; ++j) {
      auto blocks = ff.expand(sys.row_function(i, j), sys.params().pinf, 0, kmax);
      std::vector<FieldElement> row(static_cast<size_t>(cols));
      for (int k = 0; k < cols; ++k) row[k] = blocks[k / mu][k % mu];
      mat.push_back(std::move(row));
    }
  }
  return ms;
}

/* Expansion system for the row-deletion variant: powers of the local
 * parameter at the expansion place, with the gap functions substituted at
 * their gap indices.  Leading expansion order of the k-th entry is k. */
template <class FF>
std::vector<typename FF::Element> z_system(RowSystem<FF>& sys, int k_max) {
  if (sys.variant() != Variant::xing)
    throw std::invalid_argument("expansion system needs the row-deletion variant");
  const FF& ff = sys.ff();
  auto t = ff.uniformizer(sys.params().pinf);
  std::vector<typename FF::Element> zs;
  zs.reserve(size_t(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) zs.push_back(ff.pow(t, uint32_t(k)));
  for (size_t f = 0; f < sys.gap_indices().size(); ++f)
    if (sys.gap_indices()[f] <= k_max)
      zs[sys.gap_indices()[f]] = sys.gap_functions()[f];
  return zs;
}

/* Row-deletion layout: write the row function in the z_system by a forward
 * triangular solve on expansion coefficients, then drop the gap indices.
 * cols + g raw coefficients always leave at least cols survivors. */
template <class FF>
MatrixSet build_rows_xing(RowSystem<FF>& sys, int j_max, int cols) {
  if (j_max < 1 || cols < 1)
    throw std::invalid_argument("matrix depth must be positive");
  const FF& ff = sys.ff();
  const Field& f = ff.field();
  int g = ff.genus();
  int raw = cols + g;
  const auto& pinf = sys.params().pinf;
  auto zs = z_system(sys, raw - 1);
  std::vector<Row> zrows;
  zrows.reserve(zs.size());
  for (const auto& z : zs) {
    auto blocks = ff.expand(z, pinf, 0, raw - 1);
    Row r(static_cast<size_t>(raw));
    for (int k = 0; k < raw; ++k) r[k] = blocks[k][0];
    zrows.push_back(std::move(r));
  }
  std::vector<char> is_gap(size_t(raw), 0);
  for (int n : sys.gap_indices())
    if (n < raw) is_gap[n] = 1;
  MatrixSet ms{f, Variant::xing, sys.s(), 1, g, j_max, cols, {}};
  ms.entries.assign(size_t(sys.s()), {});
  for (int i = 1; i <= sys.s(); ++i) {
    for (int j = 1; j <= j_max; ++j) {
      auto blocks = ff.expand(sys.row_function(i, j), pinf, 0, raw - 1);
      std::vector<FieldElement> a(size_t(raw), f.zero());
      for (int kp = 0; kp < raw; ++kp) {
        FieldElement acc = blocks[kp][0];
        for (int k = 0; k < kp; ++k)
          if (!a[k].is_zero() && !zrows[k][kp].is_zero())
            acc = f.sub(acc, f.mul(a[k], zrows[k][kp]));
        a[kp] = f.mul(acc, f.inv(zrows[kp][kp]));
      }
      std::vector<FieldElement> row;
      row.reserve(size_t(cols));
      for (int k = 0; k < raw && int(row.size()) < cols; ++k)
        if (!is_gap[k]) row.push_back(a[k]);
      if (int(row.size()) != cols)
        throw std::logic_error("row deletion depth shortfall");
      ms.entries[i - 1].push_back(std::move(row));
    }
  }
  return ms;
}

template <class FF>
MatrixSet build_matrix_set(RowSystem<FF>& sys, int j_max, int cols) {
  return sys.variant() == Variant::xing ? build_rows_xing(sys, j_max, cols)
                                        : build_rows_block(sys, j_max, cols);
}

}  // namespace ffnets
