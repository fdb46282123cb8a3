#include "ffnets/ratfunc.hpp"

#include <stdexcept>

#include "ffnets/linalg.hpp"

namespace ffnets {

PlaceG0 PlaceG0::finite(const Field& f, Poly p) {
  if (!is_monic(f, p)) throw std::invalid_argument("place polynomial must be monic");
  if (!is_irreducible(f, p)) throw std::invalid_argument("place polynomial must be irreducible");
  PlaceG0 out;
  out.infinite_ = false;
  out.poly_ = std::move(p);
  return out;
}

RatFunc RationalFunctionField::make(Poly num, Poly den) const {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  if (num.is_zero()) return RatFunc{poly_zero(), poly_one(f_)};
  Poly g = gcd_monic(f_, num, den);
  if (degree(g) > 0) {
    num = exact_div(f_, num, g);
    den = exact_div(f_, den, g);
  }
  FieldElement lc_inv = f_.inv(leading(den));
  return RatFunc{ffnets::mul(f_, lc_inv, num), ffnets::mul(f_, lc_inv, den)};
}

std::vector<PlaceG0> RationalFunctionField::rational_places() const {
  std::vector<PlaceG0> out;
  out.push_back(PlaceG0::infinite());
  for (uint64_t i = 0; i < f_.size(); ++i)
    out.push_back(PlaceG0::finite(f_, poly_make({f_.from_index(i), f_.one()})));
  return out;
}

RatFunc RationalFunctionField::add(const Element& a, const Element& b) const {
  return make(ffnets::add(f_, ffnets::mul(f_, a.num, b.den), ffnets::mul(f_, b.num, a.den)),
              ffnets::mul(f_, a.den, b.den));
}

RatFunc RationalFunctionField::neg(const Element& a) const {
  return RatFunc{ffnets::neg(f_, a.num), a.den};
}

RatFunc RationalFunctionField::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

RatFunc RationalFunctionField::mul(const Element& a, const Element& b) const {
  return make(ffnets::mul(f_, a.num, b.num), ffnets::mul(f_, a.den, b.den));
}

RatFunc RationalFunctionField::scalar_mul(const FieldElement& c, const Element& a) const {
  return make(ffnets::mul(f_, c, a.num), a.den);
}

RatFunc RationalFunctionField::inv(const Element& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of the zero function");
  return make(a.den, a.num);
}

RatFunc RationalFunctionField::pow(const Element& a, uint32_t k) const {
  Element r = one();
  Element base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

RatFunc RationalFunctionField::uniformizer(const Place& p) const {
  if (p.is_infinite()) return make(poly_one(f_), poly_x(f_));
  return from_poly(p.poly());
}

int RationalFunctionField::valuation(const Element& a, const Place& p) const {
  if (a.is_zero()) return kValInfinity;
  if (p.is_infinite()) return degree(a.den) - degree(a.num);
  auto multiplicity = [&](Poly u) {
    int m = 0;
    for (;;) {
      auto [q, r] = divmod(f_, u, p.poly());
      if (!r.is_zero()) return m;
      ++m;
      u = std::move(q);
      if (u.is_zero()) return m;  // unreachable for nonzero input
    }
  };
  int mn = multiplicity(a.num);
  if (mn > 0) return mn;
  return -multiplicity(a.den);
}

int RationalFunctionField::height(const Element& a) const {
  if (a.is_zero()) return 0;
  return std::max(degree(a.num), degree(a.den));
}

std::vector<RatFunc> RationalFunctionField::rr_basis(const Div& d) const {
  int n_inf = d.coeff(Place::infinite());

  // Denominator carrying every permitted finite pole.
  Poly v = poly_one(f_);
  for (const auto& [p, n] : d.terms()) {
    if (p.is_infinite() || n <= 0) continue;
    v = ffnets::mul(f_, v, ffnets::pow(f_, p.poly(), uint32_t(n)));
  }

  int ncoef = degree(v) + n_inf + 1;  // deg(u) <= deg(v) + n_inf
  if (ncoef <= 0) return {};

  // Required vanishing u = 0 mod p^(-n) at finite places with n < 0, expressed
  // as linear conditions on the coefficients of u.
  std::vector<Row> constraints;
  for (const auto& [p, n] : d.terms()) {
    if (p.is_infinite() || n >= 0) continue;
    Poly m = ffnets::pow(f_, p.poly(), uint32_t(-n));
    int dm = degree(m);
    std::vector<Row> rows(size_t(dm), Row(size_t(ncoef), f_.zero()));
    Poly xk = poly_one(f_);
    for (int k = 0; k < ncoef; ++k) {
      for (int pos = 0; pos <= degree(xk); ++pos) rows[size_t(pos)][size_t(k)] = xk.c[size_t(pos)];
      xk = rem(f_, shift_up(xk, 1), m);
    }
    for (auto& r : rows) constraints.push_back(std::move(r));
  }

  std::vector<Row> kernel = kernel_basis(f_, std::move(constraints), size_t(ncoef));

  std::vector<Element> basis;
  basis.reserve(kernel.size());
  for (const auto& u : kernel) basis.push_back(make(poly_make(u), v));

  long expect = std::max(0L, d.degree() + 1);
  if (long(basis.size()) != expect)
    throw std::logic_error("Riemann-Roch dimension mismatch in rr_basis");
  for (const auto& f : basis)
    for (const auto& [p, n] : d.terms())
      if (valuation(f, p) < -n) throw std::logic_error("rr_basis element violates divisor");
  return basis;
}

/* Iterated division: with f = u/v and p coprime to v, a_0 = u v^{-1} mod p and
 * the next numerator is (u - a_0 v) / p.  Produces `count` residues. */
std::vector<Poly> RationalFunctionField::expand_at_poly(const Poly& num, const Poly& den,
                                                        const Poly& p, int count) const {
  std::vector<Poly> out;
  if (count <= 0) return out;
  Poly v_inv = mod_inverse(f_, den, p);
  Poly u = num;
  for (int k = 0; k < count; ++k) {
    Poly a = rem(f_, ffnets::mul(f_, rem(f_, u, p), v_inv), p);
    out.push_back(a);
    u = exact_div(f_, ffnets::sub(f_, u, ffnets::mul(f_, a, den)), p);
  }
  return out;
}

std::vector<Poly> RationalFunctionField::local_expansion(const Element& a, const Place& p,
                                                         int k_max) const {
  if (!a.is_zero() && valuation(a, p) < 0)
    throw std::invalid_argument("local expansion of a function with a pole at P");
  std::vector<Poly> out;
  auto flat = expand(a, p, 0, k_max);
  for (const auto& coeffs : flat) out.push_back(poly_make(coeffs));
  return out;
}

std::vector<std::vector<FieldElement>> RationalFunctionField::expand(const Element& a,
                                                                     const Place& p, int k_lo,
                                                                     int k_hi) const {
  if (k_hi < k_lo) throw std::invalid_argument("empty expansion window");
  const int mu = p.degree();
  std::vector<std::vector<FieldElement>> out(size_t(k_hi - k_lo + 1),
                                             std::vector<FieldElement>(size_t(mu), f_.zero()));
  if (a.is_zero()) return out;

  int nu = valuation(a, p);
  if (nu < k_lo)
    throw std::invalid_argument("pole order exceeds expansion window");

  std::vector<Poly> residues;  // coefficients for k = start, start+1, ...
  int start;
  if (p.is_infinite()) {
    // Substitute x = 1/z: u/v = z^(deg v - deg u) * rev(u)/rev(v), and expand
    // the z-fraction (a unit at z = 0) at the place (z).
    auto rev = [&](const Poly& a_) {
      std::vector<FieldElement> c(a_.c.rbegin(), a_.c.rend());
      return poly_make(std::move(c));
    };
    start = nu;
    if (k_hi >= start)
      residues = expand_at_poly(rev(a.num), rev(a.den), poly_x(f_), k_hi - start + 1);
  } else {
    // Clear the pole with a power of the place polynomial, expand from 0.
    int sigma = std::min(nu, 0);
    Element g = a;
    if (sigma < 0) g = mul(a, from_poly(ffnets::pow(f_, p.poly(), uint32_t(-sigma))));
    start = sigma;
    if (k_hi >= start) residues = expand_at_poly(g.num, g.den, p.poly(), k_hi - start + 1);
  }

  for (int k = std::max(k_lo, start); k <= k_hi; ++k) {
    const Poly& r = residues[size_t(k - start)];
    for (int i = 0; i <= degree(r); ++i) out[size_t(k - k_lo)][size_t(i)] = r.c[size_t(i)];
  }
  return out;
}

}  // namespace ffnets
