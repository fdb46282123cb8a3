#include "ffnets/seqgen.hpp"

#include <limits>
#include <stdexcept>

namespace ffnets {

uint64_t pow_u64(uint64_t base, int exp) {
  if (base == 0 || exp < 0) throw std::invalid_argument("pow_u64 domain");
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / base)
      throw std::overflow_error("scale overflows 64 bits");
    r *= base;
  }
  return r;
}

std::vector<FieldElement> index_digits(const Field& f, uint64_t n, int m) {
  if (m < 0) throw std::invalid_argument("digit count must not be negative");
  uint64_t q = f.size();
  std::vector<FieldElement> digits;
  digits.reserve(size_t(m));
  for (int k = 0; k < m; ++k) {
    digits.push_back(f.from_index(n % q));
    n /= q;
  }
  if (n) throw std::out_of_range("index needs more digits than requested");
  return digits;
}

std::vector<uint64_t> net_point(const MatrixSet& ms, int m, uint64_t n) {
  if (m < 1 || m > ms.jmax)
    throw std::invalid_argument("resolution exceeds matrix depth");
  const Field& f = ms.field;
  uint64_t q = f.size();
  pow_u64(q, m);  // the denominator must be representable
  std::vector<FieldElement> a;
  try {
    a = index_digits(f, n, ms.cols);
  } catch (const std::out_of_range&) {
    throw std::out_of_range("point index exceeds the matrix width");
  }
  std::vector<uint64_t> out(size_t(ms.s), 0);
  for (int i = 1; i <= ms.s; ++i) {
    uint64_t num = 0;
    for (int j = 1; j <= m; ++j) {
      FieldElement y = f.zero();
      const auto& row = ms.entries[size_t(i - 1)][size_t(j - 1)];
      for (int k = 0; k < ms.cols; ++k)
        if (!a[size_t(k)].is_zero() && !row[size_t(k)].is_zero())
          y = f.add(y, f.mul(row[size_t(k)], a[size_t(k)]));
      num = num * q + f.index(y);
    }
    out[size_t(i - 1)] = num;
  }
  return out;
}

std::vector<double> net_point_real(const MatrixSet& ms, int m, uint64_t n) {
  auto nums = net_point(ms, m, n);
  double den = double(pow_u64(ms.field.size(), m));
  std::vector<double> out(nums.size());
  for (size_t i = 0; i < nums.size(); ++i) out[i] = double(nums[i]) / den;
  return out;
}

}  // namespace ffnets
