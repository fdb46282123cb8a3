#include "ffnets/series.hpp"

#include <algorithm>

namespace ffnets {

namespace {

long long clamp_hi(long long h) { return std::min<long long>(h, kSeriesExact); }

}  // namespace

Series::Series(const Field& f, int lo, int hi) : f_(&f), lo_(lo), hi_(hi) {
  if (hi_ < lo_ - 1) lo_ = hi_ + 1;
  if (hi_ < kSeriesExact && hi_ >= lo_) c_.assign(size_t(hi_ - lo_ + 1), f.zero());
}

Series Series::exact_poly(const Field& f, int lo, std::vector<FieldElement> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  size_t lead = 0;
  while (lead < c.size() && c[lead].is_zero()) ++lead;
  c.erase(c.begin(), c.begin() + long(lead));
  Series s(f, 0, kSeriesExact);
  s.lo_ = c.empty() ? 0 : lo + int(lead);
  s.c_ = std::move(c);
  return s;
}

Series Series::constant(const Field& f, const FieldElement& v) {
  return exact_poly(f, 0, {v});
}

Series Series::monomial(const Field& f, const FieldElement& v, int k) {
  return exact_poly(f, k, {v});
}

FieldElement Series::coeff(int k) const {
  if (k < lo_) return f_->zero();
  size_t i = size_t(k - lo_);
  if (i < c_.size()) return c_[i];
  if (k <= hi_) return f_->zero();
  throw PrecisionError("series coefficient beyond computed window");
}

void Series::set(int k, const FieldElement& v) {
  if (k < lo_ || k > hi_) throw std::logic_error("series set outside window");
  size_t i = size_t(k - lo_);
  if (i >= c_.size()) c_.resize(i + 1, f_->zero());
  c_[i] = v;
}

bool Series::window_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& v) { return v.is_zero(); });
}

long long Series::first_nonzero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return lo_ + (long long)i;
  return (long long)hi_ + 1;
}

int Series::valuation() const {
  long long v = first_nonzero();
  return v > (long long)hi_ ? kValInfinity : int(v);
}

Series Series::truncated(int new_hi) const {
  if (new_hi >= hi_) return *this;
  Series s(*f_, lo_, new_hi);
  size_t keep = new_hi >= lo_ ? std::min(c_.size(), size_t(new_hi - lo_ + 1)) : 0;
  s.c_.assign(c_.begin(), c_.begin() + long(keep));
  return s;
}

Series Series::shifted(int dk) const {
  Series s = *this;
  s.lo_ += dk;
  if (s.hi_ < kSeriesExact) s.hi_ += dk;
  return s;
}

Series add(const Series& a, const Series& b) {
  const Field& f = *a.f_;
  long long hi = std::min((long long)a.hi_, (long long)b.hi_);
  long long lo = std::min((long long)a.lo_, (long long)b.lo_);
  long long ext = std::max(a.lo_ + (long long)a.c_.size(), b.lo_ + (long long)b.c_.size());
  ext = std::min(ext, hi + 1);
  Series s(f, int(std::min(lo, hi + 1)), int(hi));
  s.c_.assign(size_t(std::max(0LL, ext - s.lo_)), f.zero());
  for (size_t i = 0; i < s.c_.size(); ++i)
    s.c_[i] = f.add(a.coeff(s.lo_ + int(i)), b.coeff(s.lo_ + int(i)));
  return s;
}

Series neg(const Series& a) {
  Series s = a;
  for (auto& v : s.c_) v = a.f_->neg(v);
  return s;
}

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series mul(const Series& a, const Series& b) {
  const Field& f = *a.f_;
  long long ea = a.first_nonzero(), eb = b.first_nonzero();
  /* The unknown tail of one factor meets the first visible term of the
   * other; an exact factor has no unknown tail and never binds. */
  long long hi = clamp_hi(std::min(a.exact() ? 4 * (long long)kSeriesExact : a.hi_ + eb,
                                   b.exact() ? 4 * (long long)kSeriesExact : b.hi_ + ea));
  long long lo = std::min((long long)a.lo_ + b.lo_, hi + 1);
  Series s(f, int(lo), int(hi));
  size_t len = size_t(std::max(0LL,
      std::min((long long)a.lo_ + b.lo_ + (long long)(a.c_.size() + b.c_.size()) - 1, hi + 1) - lo));
  s.c_.assign(len, f.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      long long k = a.lo_ + (long long)i + b.lo_ + (long long)j - lo;
      if (k < 0 || k >= (long long)len) continue;
      s.c_[size_t(k)] = f.add(s.c_[size_t(k)], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return s;
}

Series inverse(const Series& a) {
  const Field& f = *a.f_;
  if (a.window_zero()) {
    if (a.exact()) throw std::domain_error("series inverse of zero");
    throw PrecisionError("inverse of series with empty window");
  }
  long long nu = a.first_nonzero();
  if (a.exact()) {
    size_t nonzeros = 0;
    for (const auto& v : a.c_)
      if (!v.is_zero()) ++nonzeros;
    if (nonzeros == 1) return Series::monomial(f, f.inv(a.coeff(int(nu))), int(-nu));
    throw std::logic_error("truncate exact series before inverse");
  }
  int m = int((long long)a.hi_ - nu);
  std::vector<FieldElement> u(size_t(m) + 1), v(size_t(m) + 1);
  for (int j = 0; j <= m; ++j) u[size_t(j)] = a.coeff(int(nu) + j);
  FieldElement u0i = f.inv(u[0]);
  v[0] = u0i;
  for (int n = 1; n <= m; ++n) {
    FieldElement acc = f.zero();
    for (int j = 1; j <= n; ++j) acc = f.add(acc, f.mul(u[size_t(j)], v[size_t(n - j)]));
    v[size_t(n)] = f.neg(f.mul(u0i, acc));
  }
  Series s(f, int(-nu), int(a.hi_ - 2 * nu));
  s.c_ = std::move(v);
  return s;
}

}  // namespace ffnets
