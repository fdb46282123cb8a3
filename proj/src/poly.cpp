#include "ffnets/poly.hpp"

#include <stdexcept>

namespace ffnets {

namespace {
void trim(std::vector<FieldElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
}  // namespace

int degree(const Poly& a) { return int(a.c.size()) - 1; }

Poly poly_zero() { return {}; }

Poly poly_one(const Field& f) { return Poly{{f.one()}}; }

Poly poly_x(const Field& f) { return Poly{{f.zero(), f.one()}}; }

Poly poly_make(std::vector<FieldElement> coeffs) {
  trim(coeffs);
  return Poly{std::move(coeffs)};
}

Poly poly_from_indices(const Field& f, const std::vector<uint64_t>& idx) {
  std::vector<FieldElement> c;
  c.reserve(idx.size());
  for (uint64_t i : idx) c.push_back(f.from_index(i));
  return poly_make(std::move(c));
}

FieldElement leading(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return a.c.back();
}

bool is_monic(const Field& f, const Poly& a) {
  return !a.is_zero() && f.is_one(a.c.back());
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), f.zero());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
  return poly_make(std::move(c));
}

Poly neg(const Field& f, const Poly& a) {
  std::vector<FieldElement> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(f.neg(x));
  return Poly{std::move(c)};
}

Poly sub(const Field& f, const Poly& a, const Poly& b) { return add(f, a, neg(f, b)); }

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero();
  std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, f.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
  return poly_make(std::move(c));
}

Poly mul(const Field& f, const FieldElement& s, const Poly& a) {
  std::vector<FieldElement> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(f.mul(s, x));
  return poly_make(std::move(c));
}

Poly shift_up(const Poly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  if (k < 0) throw std::invalid_argument("negative shift");
  Poly out;
  out.c.assign(size_t(k), FieldElement(std::vector<uint8_t>(a.c[0].coeffs().size(), 0)));
  out.c.insert(out.c.end(), a.c.begin(), a.c.end());
  return out;
}

Poly pow(const Field& f, const Poly& a, uint32_t k) {
  Poly r = poly_one(f);
  Poly base = a;
  while (k) {
    if (k & 1) r = mul(f, r, base);
    base = mul(f, base, base);
    k >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree(a) < degree(b)) return {poly_zero(), a};
  FieldElement lb_inv = f.inv(leading(b));
  std::vector<FieldElement> r = a.c;
  std::vector<FieldElement> q(a.c.size() - b.c.size() + 1, f.zero());
  for (size_t k = a.c.size(); k-- >= b.c.size();) {
    if (r[k].is_zero()) continue;
    FieldElement coef = f.mul(r[k], lb_inv);
    size_t sh = k - (b.c.size() - 1);
    q[sh] = coef;
    for (size_t i = 0; i < b.c.size(); ++i)
      r[sh + i] = f.sub(r[sh + i], f.mul(coef, b.c[i]));
  }
  return {poly_make(std::move(q)), poly_make(std::move(r))};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly exact_div(const Field& f, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(f, a, b);
  if (!r.is_zero()) throw std::logic_error("division expected to be exact");
  return q;
}

Poly make_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return mul(f, f.inv(leading(a)), a);
}

Poly gcd_monic(const Field& f, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

Poly mod_inverse(const Field& f, const Poly& a, const Poly& m) {
  // Extended Euclid: r0 = m, r1 = a mod m, track t with r = ... + t*a (mod m).
  Poly r0 = m, r1 = rem(f, a, m);
  Poly t0 = poly_zero(), t1 = poly_one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(f, r0, r1);
    Poly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw std::domain_error("element not invertible modulo m");
  Poly inv = mul(f, f.inv(r0.c[0]), t0);
  return rem(f, inv, m);
}

FieldElement eval(const Field& f, const Poly& a, const FieldElement& x) {
  FieldElement acc = f.zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
  return acc;
}

bool is_irreducible(const Field& f, const Poly& a) {
  int d = degree(a);
  if (d < 1) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; 2 * dd <= d; ++dd) {
    std::vector<uint64_t> idx(size_t(dd), 0);
    for (;;) {
      std::vector<FieldElement> c;
      for (uint64_t i : idx) c.push_back(f.from_index(i));
      c.push_back(f.one());
      if (rem(f, a, Poly{std::move(c)}).is_zero()) return false;
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == f.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return true;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (size_t i = a.c.size(); i-- > 0;) {
    if (!(a.c[i] == b.c[i])) return elem_less(a.c[i], b.c[i]);
  }
  return false;
}

std::string to_index_string(const Field& f, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.index(a.c[i]));
  }
  return out;
}

}  // namespace ffnets
