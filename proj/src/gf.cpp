#include "ffnets/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffnets {

namespace {

/* Polynomials over Z_p as raw residue vectors, low-first, trimmed.  Only what
 * modulus validation needs; general F_q polynomials live in poly.hpp. */
using ZpPoly = std::vector<uint8_t>;

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mul(uint32_t p, const ZpPoly& a, const ZpPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + uint32_t(a[i]) * b[j]) % p;
  ZpPoly out(acc.begin(), acc.end());
  zp_trim(out);
  return out;
}

/* Remainder of a by monic m. */
ZpPoly zp_mod(uint32_t p, ZpPoly a, const ZpPoly& m) {
  zp_trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i < m.size(); ++i) {
      uint32_t sub = (lead * m[i]) % p;
      a[shift + i] = uint8_t((a[shift + i] + p - sub) % p);
    }
    zp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

/* Monic polynomials over Z_p of exact degree d, enumerated in lexicographic
 * order of the low-to-high coefficient tuple. */
bool next_tuple(uint32_t p, std::vector<uint8_t>& c) {
  for (size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

bool zp_is_irreducible(uint32_t p, const ZpPoly& m) {
  const size_t d = m.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  for (size_t dd = 1; 2 * dd <= d; ++dd) {
    std::vector<uint8_t> low(dd, 0);  // coefficients below the monic lead
    do {
      ZpPoly div(low.begin(), low.end());
      div.push_back(1);
      if (zp_mod(p, m, div).empty()) return false;
    } while (next_tuple(p, low));
  }
  return true;
}

ZpPoly canonical_modulus(uint32_t p, uint32_t e) {
  std::vector<uint8_t> low(e, 0);
  do {
    ZpPoly m(low.begin(), low.end());
    m.push_back(1);
    if (zp_is_irreducible(p, m)) return m;
  } while (next_tuple(p, low));
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint8_t c) { return c == 0; });
}

bool elem_less(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

Field::Field(uint32_t p, uint32_t e, std::vector<uint8_t> modulus) : p_(p), e_(e) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
  if (p > 251) throw std::invalid_argument("characteristic too large (max 251)");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  q_ = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > (1u << 20)) throw std::invalid_argument("field too large");
  }
  if (e == 1) {
    if (!modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
    return;
  }
  if (modulus.empty()) {
    modulus_ = canonical_modulus(p, e);
    return;
  }
  if (modulus.size() != e + 1) throw std::invalid_argument("modulus must have degree e");
  for (uint8_t c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!zp_is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible");
  modulus_ = std::move(modulus);
}

void Field::check(const FieldElement& a) const {
  if (a.coeffs().size() != e_) throw std::invalid_argument("element has wrong length for field");
  for (uint8_t c : a.coeffs())
    if (c >= p_) throw std::invalid_argument("element coefficient out of range");
}

FieldElement Field::zero() const { return FieldElement(std::vector<uint8_t>(e_, 0)); }

FieldElement Field::one() const {
  std::vector<uint8_t> c(e_, 0);
  c[0] = 1;
  return FieldElement(std::move(c));
}

FieldElement Field::from_residue(int64_t r) const {
  int64_t m = r % int64_t(p_);
  if (m < 0) m += p_;
  std::vector<uint8_t> c(e_, 0);
  c[0] = uint8_t(m);
  return FieldElement(std::move(c));
}

FieldElement Field::from_index(uint64_t idx) const {
  if (idx >= q_) throw std::invalid_argument("element index out of range");
  std::vector<uint8_t> c(e_, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = uint8_t(idx % p_);
    idx /= p_;
  }
  return FieldElement(std::move(c));
}

uint64_t Field::index(const FieldElement& a) const {
  check(a);
  uint64_t idx = 0;
  for (size_t i = a.coeffs().size(); i-- > 0;) idx = idx * p_ + a.coeffs()[i];
  return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<uint8_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) c[i] = uint8_t((a.coeffs()[i] + b.coeffs()[i]) % p_);
  return FieldElement(std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  std::vector<uint8_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) c[i] = uint8_t((p_ - a.coeffs()[i]) % p_);
  return FieldElement(std::move(c));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  if (e_ == 1) return FieldElement({uint8_t((uint32_t(a.coeffs()[0]) * b.coeffs()[0]) % p_)});
  std::vector<uint32_t> acc(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i)
    for (uint32_t j = 0; j < e_; ++j)
      acc[i + j] = (acc[i + j] + uint32_t(a.coeffs()[i]) * b.coeffs()[j]) % p_;
  for (size_t k = acc.size(); k-- > e_;) {
    uint32_t lead = acc[k];
    if (lead == 0) continue;
    acc[k] = 0;
    for (uint32_t i = 0; i < e_; ++i) {
      uint32_t sub = (lead * modulus_[i]) % p_;
      acc[k - e_ + i] = (acc[k - e_ + i] + p_ - sub) % p_;
    }
  }
  std::vector<uint8_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) c[i] = uint8_t(acc[i]);
  return FieldElement(std::move(c));
}

FieldElement Field::pow(const FieldElement& a, uint64_t k) const {
  check(a);
  FieldElement r = one();
  FieldElement base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

}  // namespace ffnets
