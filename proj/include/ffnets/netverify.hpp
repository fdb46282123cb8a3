#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ffnets/genmat.hpp"
#include "ffnets/linalg.hpp"
#include "ffnets/series.hpp"

namespace ffnets {

/* Rank test for the joint system of the first d_i rows of each matrix,
 * truncated to m columns. */
bool rows_independent(const MatrixSet& ms, int m, const std::vector<int>& d);

/* Exhaustive quality parameter at resolution m: m minus the largest depth d
 * whose row selections are all independent. */
int minimal_T(const MatrixSet& ms, int m);

/* Guaranteed parameter of the construction behind the matrices. */
int bound_T(Variant variant, int mu, int g, int m);

struct BoundReport {
  int m = 0;
  int tstar = 0;
  int bound = 0;
  int margin = 0;
  bool ok = false;
};
BoundReport check_bound(const MatrixSet& ms, int m);

/* Exact box counting: shape e partitions the cube into boxes of volume
 * q^(t-m); every box must hold the same number of the q^m points starting
 * at offset*q^m. */
struct ShapeReport {
  std::vector<int> e;
  bool ok = false;
};
std::vector<ShapeReport> net_equidistribution(const MatrixSet& ms, int m, int t,
                                              uint64_t offset);
bool net_equidistributed(const MatrixSet& ms, int m, int t, uint64_t offset);

/* Rank of a set of function field elements via local expansions at p.
 * A rank deficit is only reported when the kernel combination really
 * vanishes; otherwise the window was too shallow and PrecisionError says so. */
template <class FF>
int independence_rank(const FF& ff, const std::vector<typename FF::Element>& elems,
                      const typename FF::Place& p, int precision) {
  if (elems.empty()) return 0;
  if (precision < 1) throw std::invalid_argument("expansion window must be positive");
  const Field& f = ff.field();
  int lo = 0;
  for (const auto& e : elems)
    if (!ff.is_zero(e)) lo = std::min(lo, ff.valuation(e, p));
  std::vector<Row> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) {
    Row r;
    for (auto& block : ff.expand(e, p, lo, lo + precision - 1))
      for (auto& c : block) r.push_back(c);
    rows.push_back(std::move(r));
  }
  auto work = rows;
  auto pivots = rref_inplace(f, work);
  int rk = int(pivots.size());
  if (rk == int(elems.size())) return rk;
  /* row combinations live in the kernel of the transpose */
  std::vector<Row> tr(rows[0].size(), Row(elems.size(), f.zero()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) tr[c][r] = rows[r][c];
  auto kernel = kernel_basis(f, tr, int(elems.size()));
  for (const auto& c : kernel) {
    auto combo = ff.zero();
    for (size_t k = 0; k < elems.size(); ++k)
      if (!c[k].is_zero())
        combo = ff.add(combo, ff.scalar_mul(c[k], elems[k]));
    if (!ff.is_zero(combo))
      throw PrecisionError("expansion window too shallow to certify dependence");
  }
  return rk;
}

}  // namespace ffnets
