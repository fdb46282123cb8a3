#include "ffnets/netverify.hpp"

#include <functional>
#include <stdexcept>

#include "ffnets/seqgen.hpp"

namespace ffnets {

namespace {

/* Visit every nonnegative integer vector of length s summing to total. */
void each_composition(int total, int s,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> d(size_t(s), 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) {
    if (pos == s - 1) {
      d[size_t(pos)] = left;
      return visit(d);
    }
    for (int v = 0; v <= left; ++v) {
      d[size_t(pos)] = v;
      if (!rec(pos + 1, left - v)) return false;
    }
    return true;
  };
  if (s > 0) rec(0, total);
}

}  // namespace

bool rows_independent(const MatrixSet& ms, int m, const std::vector<int>& d) {
  if (m < 1 || m > ms.jmax || m > ms.cols)
    throw std::invalid_argument("resolution exceeds matrix size");
  if (int(d.size()) != ms.s)
    throw std::invalid_argument("need one row count per matrix");
  int total = 0;
  for (int di : d) {
    if (di < 0 || di > m) throw std::invalid_argument("row count out of range");
    total += di;
  }
  if (total > m) return false;
  std::vector<Row> rows;
  rows.reserve(size_t(total));
  for (int i = 1; i <= ms.s; ++i)
    for (int j = 1; j <= d[size_t(i - 1)]; ++j) {
      const auto& full = ms.entries[size_t(i - 1)][size_t(j - 1)];
      rows.emplace_back(full.begin(), full.begin() + m);
    }
  return rank(ms.field, rows) == total;
}

int minimal_T(const MatrixSet& ms, int m) {
  if (m < 1 || m > ms.jmax || m > ms.cols)
    throw std::invalid_argument("resolution exceeds matrix size");
  for (int depth = 1; depth <= m; ++depth) {
    bool all_ok = true;
    each_composition(depth, ms.s, [&](const std::vector<int>& d) {
      if (!rows_independent(ms, m, d)) {
        all_ok = false;
        return false;
      }
      return true;
    });
    if (!all_ok) return m - (depth - 1);
  }
  return 0;
}

int bound_T(Variant variant, int mu, int g, int m) {
  if (mu < 1 || g < 0 || m < 0) throw std::invalid_argument("bound parameters");
  int r = m % mu;
  switch (variant) {
    case Variant::genus0:
      return r;
    case Variant::gpos:
      return std::min(m, 2 * g + r);
    case Variant::xing:
      return std::min(m, g);
  }
  throw std::invalid_argument("unknown variant");
}

BoundReport check_bound(const MatrixSet& ms, int m) {
  BoundReport rep;
  rep.m = m;
  rep.tstar = minimal_T(ms, m);
  rep.bound = bound_T(ms.variant, ms.mu, ms.g, m);
  rep.margin = rep.bound - rep.tstar;
  rep.ok = rep.tstar <= rep.bound;
  return rep;
}

std::vector<ShapeReport> net_equidistribution(const MatrixSet& ms, int m, int t,
                                              uint64_t offset) {
  if (m < 1 || m > ms.jmax)
    throw std::invalid_argument("resolution exceeds matrix depth");
  if (t < 0 || t > m) throw std::invalid_argument("quality parameter out of range");
  uint64_t q = ms.field.size();
  uint64_t block = pow_u64(q, m);
  uint64_t per_box = pow_u64(q, t);

  std::vector<ShapeReport> out;
  each_composition(m - t, ms.s, [&](const std::vector<int>& e) {
    std::vector<uint64_t> scale(size_t(ms.s));
    uint64_t boxes = 1;
    for (int i = 0; i < ms.s; ++i) {
      scale[size_t(i)] = pow_u64(q, m - e[size_t(i)]);
      boxes *= pow_u64(q, e[size_t(i)]);
    }
    std::vector<uint64_t> count(size_t(boxes), 0);
    for (uint64_t n = offset * block; n < (offset + 1) * block; ++n) {
      auto y = net_point(ms, m, n);
      uint64_t box = 0;
      for (int i = 0; i < ms.s; ++i)
        box = box * pow_u64(q, e[size_t(i)]) + y[size_t(i)] / scale[size_t(i)];
      ++count[size_t(box)];
    }
    bool ok = true;
    for (uint64_t c : count)
      if (c != per_box) ok = false;
    out.push_back({e, ok});
    return true;
  });
  return out;
}

bool net_equidistributed(const MatrixSet& ms, int m, int t, uint64_t offset) {
  for (const auto& rep : net_equidistribution(ms, m, t, offset))
    if (!rep.ok) return false;
  return true;
}

}  // namespace ffnets
