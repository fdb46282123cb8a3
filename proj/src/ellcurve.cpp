#include "ffnets/ellcurve.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffnets/linalg.hpp"

namespace ffnets {

namespace {

/* Truncated coefficient-vector product, indices 0..cap. */
std::vector<FieldElement> tmul(const Field& f, const std::vector<FieldElement>& a,
                               const std::vector<FieldElement>& b, int cap) {
  std::vector<FieldElement> r(size_t(cap) + 1, f.zero());
  for (size_t i = 0; i < a.size() && int(i) <= cap; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && int(i + j) <= cap; ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

/* a(x0 + t), padded with zeros to length n. */
std::vector<FieldElement> shifted_poly(const Field& f, const Poly& a,
                                       const FieldElement& x0, size_t n) {
  Poly lin = poly_make({x0, f.one()});
  Poly acc = poly_zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = add(f, mul(f, acc, lin), poly_make({a.c[i]}));
  std::vector<FieldElement> v = acc.c;
  v.resize(std::max(n, v.size()), f.zero());
  return v;
}

}  // namespace

FieldElement discriminant(const Curve& c) {
  const Field& f = c.f;
  auto r = [&](int64_t n) { return f.from_residue(n); };
  auto m = [&](const FieldElement& a, const FieldElement& b) { return f.mul(a, b); };
  FieldElement b2 = f.add(m(c.a1, c.a1), m(r(4), c.a2));
  FieldElement b4 = f.add(m(r(2), c.a4), m(c.a1, c.a3));
  FieldElement b6 = f.add(m(c.a3, c.a3), m(r(4), c.a6));
  FieldElement b8 = f.add(f.add(m(m(c.a1, c.a1), c.a6), m(r(4), m(c.a2, c.a6))),
                          f.add(f.sub(m(c.a2, m(c.a3, c.a3)), m(c.a1, m(c.a3, c.a4))),
                                f.neg(m(c.a4, c.a4))));
  FieldElement d = f.sub(m(r(9), m(b2, m(b4, b6))),
                         f.add(f.add(m(m(b2, b2), b8), m(r(8), m(b4, m(b4, b4)))),
                               m(r(27), m(b6, b6))));
  return d;
}

EllipticFunctionField::EllipticFunctionField(Curve c) : c_(std::move(c)) {
  if (discriminant(c_).is_zero()) throw std::invalid_argument("singular curve");
  hpoly_ = poly_make({c_.a3, c_.a1});
  fpoly_ = poly_make({c_.a6, c_.a4, c_.a2, c_.f.one()});
}

bool EllipticFunctionField::on_curve(const FieldElement& x0, const FieldElement& y0) const {
  const Field& f = c_.f;
  FieldElement lhs = f.add(f.mul(y0, y0), f.mul(y0, eval(f, hpoly_, x0)));
  return lhs == eval(f, fpoly_, x0);
}

std::vector<PlaceEC> EllipticFunctionField::rational_places() const {
  const Field& f = c_.f;
  std::vector<Place> ps{Place::infinite()};
  for (uint64_t xi = 0; xi < f.size(); ++xi)
    for (uint64_t yi = 0; yi < f.size(); ++yi) {
      FieldElement x0 = f.from_index(xi), y0 = f.from_index(yi);
      if (on_curve(x0, y0)) ps.push_back(Place::affine(x0, y0));
    }
  return ps;
}

PlaceEC EllipticFunctionField::conjugate(const Place& p) const {
  if (p.at_inf) return p;
  const Field& f = c_.f;
  return Place::affine(p.x0, f.neg(f.add(p.y0, eval(f, hpoly_, p.x0))));
}

FuncEC EllipticFunctionField::make(Poly a, Poly b, Poly den) const {
  const Field& f = c_.f;
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  if (a.is_zero() && b.is_zero()) return zero();
  Poly g = gcd_monic(f, gcd_monic(f, a, b), den);
  if (degree(g) > 0) {
    a = exact_div(f, a, g);
    b = exact_div(f, b, g);
    den = exact_div(f, den, g);
  }
  FieldElement s = f.inv(leading(den));
  return Element{ffnets::mul(f, s, a), ffnets::mul(f, s, b), ffnets::mul(f, s, den)};
}

FuncEC EllipticFunctionField::constant(const FieldElement& v) const {
  return make(poly_make({v}), poly_zero(), poly_one(c_.f));
}

FuncEC EllipticFunctionField::add(const Element& a, const Element& b) const {
  const Field& f = c_.f;
  return make(ffnets::add(f, ffnets::mul(f, a.a, b.den), ffnets::mul(f, b.a, a.den)),
              ffnets::add(f, ffnets::mul(f, a.b, b.den), ffnets::mul(f, b.b, a.den)),
              ffnets::mul(f, a.den, b.den));
}

FuncEC EllipticFunctionField::neg(const Element& a) const {
  return Element{ffnets::neg(c_.f, a.a), ffnets::neg(c_.f, a.b), a.den};
}

FuncEC EllipticFunctionField::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

FuncEC EllipticFunctionField::mul(const Element& a, const Element& b) const {
  const Field& f = c_.f;
  Poly bb = ffnets::mul(f, a.b, b.b);
  Poly na = ffnets::add(f, ffnets::mul(f, a.a, b.a), ffnets::mul(f, bb, fpoly_));
  Poly nb = ffnets::sub(f, ffnets::add(f, ffnets::mul(f, a.a, b.b), ffnets::mul(f, a.b, b.a)),
                        ffnets::mul(f, bb, hpoly_));
  return make(std::move(na), std::move(nb), ffnets::mul(f, a.den, b.den));
}

FuncEC EllipticFunctionField::scalar_mul(const FieldElement& s, const Element& a) const {
  return make(ffnets::mul(c_.f, s, a.a), ffnets::mul(c_.f, s, a.b), a.den);
}

FuncEC EllipticFunctionField::inv(const Element& a) const {
  const Field& f = c_.f;
  if (a.is_zero()) throw std::domain_error("division by zero");
  /* (a + by)(a - bh - by) = a^2 - abh - b^2 f, a norm in F_q(x). */
  Poly n = ffnets::sub(f, ffnets::mul(f, a.a, a.a),
                       ffnets::add(f, ffnets::mul(f, a.a, ffnets::mul(f, a.b, hpoly_)),
                                   ffnets::mul(f, ffnets::mul(f, a.b, a.b), fpoly_)));
  if (n.is_zero()) throw std::logic_error("vanishing norm on an irreducible curve");
  Poly conj = ffnets::sub(f, a.a, ffnets::mul(f, a.b, hpoly_));
  return make(ffnets::mul(f, a.den, conj), ffnets::neg(f, ffnets::mul(f, a.den, a.b)), n);
}

FuncEC EllipticFunctionField::pow(const Element& a, uint32_t k) const {
  Element r = one(), base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FuncEC EllipticFunctionField::uniformizer(const Place& p) const {
  const Field& f = c_.f;
  if (p.at_inf) return mul(x(), inv(y()));
  FieldElement fy = f.add(f.add(p.y0, p.y0), eval(f, hpoly_, p.x0));
  if (!fy.is_zero()) return make(poly_make({f.neg(p.x0), f.one()}), poly_zero(), poly_one(f));
  return make(poly_make({f.neg(p.y0)}), poly_one(f), poly_one(f));
}

EllipticFunctionField::XY EllipticFunctionField::xy_series(const Place& p, int prec) const {
  auto it = cache_.find(p);
  if (it != cache_.end() && it->second.first >= prec) return it->second.second;

  const Field& f = c_.f;
  int w = std::max(prec, 32);
  XY out{Series(f, 0, 0), Series(f, 0, 0)};

  if (p.at_inf) {
    /* Uniformizer t = x/y.  With x = t/v, y = 1/v the curve becomes
     * v = t^3 + a2 t^2 v + a4 t v^2 + a6 v^3 - a1 t v - a3 v^2, solved by
     * fixed-point iteration from v = t^3. */
    int wx = w + 8;
    std::vector<FieldElement> v(size_t(wx) + 1, f.zero());
    v[3] = f.one();
    bool stable = false;
    for (int iter = 0; iter < 2 * wx + 16 && !stable; ++iter) {
      std::vector<FieldElement> v2 = tmul(f, v, v, wx), v3 = tmul(f, v2, v, wx);
      std::vector<FieldElement> nx(size_t(wx) + 1, f.zero());
      for (int i = 0; i <= wx; ++i) {
        FieldElement acc = i == 3 ? f.one() : f.zero();
        if (i >= 2) acc = f.add(acc, f.mul(c_.a2, v[size_t(i - 2)]));
        if (i >= 1) acc = f.add(acc, f.mul(c_.a4, v2[size_t(i - 1)]));
        acc = f.add(acc, f.mul(c_.a6, v3[size_t(i)]));
        if (i >= 1) acc = f.sub(acc, f.mul(c_.a1, v[size_t(i - 1)]));
        acc = f.sub(acc, f.mul(c_.a3, v2[size_t(i)]));
        nx[size_t(i)] = acc;
      }
      stable = nx == v;
      v = std::move(nx);
    }
    if (!stable) throw std::logic_error("series at the infinite place did not stabilize");
    Series vs(f, 0, wx);
    for (int i = 0; i <= wx; ++i) vs.set(i, v[size_t(i)]);
    out.y = inverse(vs);
    out.x = ffnets::mul(Series::monomial(f, f.one(), 1), out.y);
  } else {
    FieldElement fy = f.add(f.add(p.y0, p.y0), eval(f, hpoly_, p.x0));
    if (!fy.is_zero()) {
      /* t = x - x0; lift y coefficient by coefficient, the y-partial stays
       * a unit so each step kills the next residual term of
       * y^2 + h(x)y - f(x). */
      std::vector<FieldElement> hv = shifted_poly(f, hpoly_, p.x0, size_t(w) + 1);
      std::vector<FieldElement> fv = shifted_poly(f, fpoly_, p.x0, size_t(w) + 1);
      std::vector<FieldElement> yv(size_t(w) + 1, f.zero());
      yv[0] = p.y0;
      FieldElement ui = f.inv(fy);
      for (int k = 1; k <= w; ++k) {
        FieldElement r = f.neg(fv[size_t(k)]);
        for (int i = 0; i <= k; ++i) r = f.add(r, f.mul(yv[size_t(i)], yv[size_t(k - i)]));
        for (int i = 0; i <= std::min(k, 1); ++i)
          r = f.add(r, f.mul(hv[size_t(i)], yv[size_t(k - i)]));
        yv[size_t(k)] = f.neg(f.mul(r, ui));
      }
      out.x = Series::exact_poly(f, 0, {p.x0, f.one()});
      Series ys(f, 0, w);
      for (int k = 0; k <= w; ++k) ys.set(k, yv[size_t(k)]);
      out.y = ys;
    } else {
      /* Ramification point of the x-cover: t = y - y0, solve for x.  The
       * x-partial 3x0^2 + 2 a2 x0 + a4 - a1 y0 is a unit there. */
      FieldElement gx = f.sub(f.add(f.mul(f.from_residue(3), f.mul(p.x0, p.x0)),
                                    f.add(f.mul(f.from_residue(2), f.mul(c_.a2, p.x0)), c_.a4)),
                              f.mul(c_.a1, p.y0));
      std::vector<FieldElement> y2{f.mul(p.y0, p.y0), f.add(p.y0, p.y0), f.one()};
      std::vector<FieldElement> xv(size_t(w) + 1, f.zero());
      xv[0] = p.x0;
      FieldElement ui = f.inv(gx);
      for (int k = 1; k <= w; ++k) {
        std::vector<FieldElement> x2 = tmul(f, xv, xv, w), x3 = tmul(f, x2, xv, w);
        FieldElement fx = f.add(f.add(x3[size_t(k)], f.mul(c_.a2, x2[size_t(k)])),
                                f.mul(c_.a4, xv[size_t(k)]));
        FieldElement hx = f.mul(c_.a1, xv[size_t(k)]);
        FieldElement hxm1 = f.add(f.mul(c_.a1, xv[size_t(k - 1)]), k == 1 ? c_.a3 : f.zero());
        FieldElement hy = f.add(f.mul(hx, p.y0), hxm1);
        FieldElement r = f.sub(fx, f.add(k < 3 ? y2[size_t(k)] : f.zero(), hy));
        xv[size_t(k)] = f.neg(f.mul(r, ui));
      }
      out.y = Series::exact_poly(f, 0, {p.y0, f.one()});
      Series xs(f, 0, w);
      for (int k = 0; k <= w; ++k) xs.set(k, xv[size_t(k)]);
      out.x = xs;
    }
  }
  cache_.insert_or_assign(p, std::make_pair(w, out));
  return out;
}

Series EllipticFunctionField::eval_poly(const Poly& a, const Series& xs) const {
  const Field& f = c_.f;
  Series acc = Series::exact_poly(f, 0, {});
  for (size_t i = a.c.size(); i-- > 0;)
    acc = ffnets::add(ffnets::mul(acc, xs), Series::constant(f, a.c[i]));
  return acc;
}

Series EllipticFunctionField::element_series(const Element& g, const Place& p,
                                             int hi_needed) const {
  for (int w = hi_needed + 16, tries = 0; tries < 12; ++tries, w = 2 * w + 16) {
    XY xy = xy_series(p, w);
    Series num = ffnets::add(eval_poly(g.a, xy.x), ffnets::mul(eval_poly(g.b, xy.x), xy.y));
    Series den = eval_poly(g.den, xy.x).truncated(w);
    if (den.window_zero()) continue;
    Series r = ffnets::mul(num, inverse(den));
    if (r.hi() >= hi_needed) return r;
  }
  throw PrecisionError("series window for expansion not reached");
}

int EllipticFunctionField::valuation(const Element& g, const Place& p) const {
  if (g.is_zero()) return kValInfinity;
  int bound = 2 * degree(g.den) +
              std::max(2 * std::max(0, degree(g.a)), 2 * std::max(0, degree(g.b)) + 3) + 1;
  Series r = element_series(g, p, bound);
  if (r.window_zero()) throw std::logic_error("valuation bound exceeded");
  return r.valuation();
}

std::vector<std::vector<FieldElement>> EllipticFunctionField::expand(const Element& g,
                                                                     const Place& p, int k_lo,
                                                                     int k_hi) const {
  const Field& f = c_.f;
  if (k_lo > k_hi) throw std::invalid_argument("empty expansion window");
  std::vector<std::vector<FieldElement>> out(size_t(k_hi - k_lo + 1));
  if (g.is_zero()) {
    for (auto& row : out) row = {f.zero()};
    return out;
  }
  if (valuation(g, p) < k_lo)
    throw std::invalid_argument("pole order exceeds expansion window");
  Series r = element_series(g, p, k_hi);
  for (int k = k_lo; k <= k_hi; ++k) out[size_t(k - k_lo)] = {r.coeff(k)};
  return out;
}

std::vector<FuncEC> EllipticFunctionField::rr_basis(const Div& d) const {
  const Field& f = c_.f;
  long degd = d.degree();
  if (degd < 0) return {};

  /* Clear the positive finite part with a polynomial in x, tracking its
   * divisor exactly from the known splitting of x - x0. */
  Poly clearing = poly_one(f);
  Div div_clearing;
  for (const auto& [p, n] : d.terms()) {
    if (p.at_inf || n <= 0) continue;
    Place pc = conjugate(p);
    int e = pc == p ? (n + 1) / 2 : n;
    Poly lin = poly_make({f.neg(p.x0), f.one()});
    clearing = ffnets::mul(f, clearing, ffnets::pow(f, lin, uint32_t(e)));
    if (pc == p) {
      div_clearing.add_term(p, 2 * e);
    } else {
      div_clearing.add_term(p, e);
      div_clearing.add_term(pc, e);
    }
    div_clearing.add_term(Place::infinite(), -2 * e);
  }
  Div shifted = d - div_clearing;
  int n_inf = shifted.coeff(Place::infinite());
  if (n_inf < 0) throw std::logic_error("cleared divisor has negative infinite part");

  /* Ambient space L(n_inf * infinity): monomials x^i (pole order 2i) and
   * x^j y (pole order 2j + 3). */
  std::vector<Element> ambient;
  for (int i = 0; 2 * i <= n_inf; ++i)
    ambient.push_back(make(shift_up(poly_one(f), i), poly_zero(), poly_one(f)));
  for (int j = 0; 2 * j + 3 <= n_inf; ++j)
    ambient.push_back(make(poly_zero(), shift_up(poly_one(f), j), poly_one(f)));

  /* Vanishing constraints at the negative finite part: one matrix row per
   * required expansion coefficient, one column per ambient element. */
  std::vector<Row> mat;
  for (const auto& [q, e] : shifted.terms()) {
    if (q.at_inf || e >= 0) continue;
    std::vector<std::vector<std::vector<FieldElement>>> ev;
    ev.reserve(ambient.size());
    for (const auto& g : ambient) ev.push_back(expand(g, q, 0, -e - 1));
    for (int k = 0; k < -e; ++k) {
      Row row(ambient.size(), f.zero());
      for (size_t r = 0; r < ambient.size(); ++r) row[r] = ev[r][size_t(k)][0];
      mat.push_back(std::move(row));
    }
  }

  Element cl_inv = inv(make(clearing, poly_zero(), poly_one(f)));
  std::vector<Element> basis;
  for (const Row& lam : kernel_basis(f, std::move(mat), ambient.size())) {
    Element g = zero();
    for (size_t r = 0; r < ambient.size(); ++r)
      if (!lam[r].is_zero()) g = add(g, scalar_mul(lam[r], ambient[r]));
    basis.push_back(mul(g, cl_inv));
  }

  for (const auto& g : basis)
    for (const auto& [p, n] : d.terms())
      if (valuation(g, p) < -n) throw std::logic_error("rr_basis element violates divisor");
  if (degd >= 1 && basis.size() != size_t(degd))
    throw std::logic_error("Riemann-Roch dimension mismatch in rr_basis");
  if (degd == 0 && basis.size() > 1)
    throw std::logic_error("Riemann-Roch dimension mismatch in rr_basis");
  return basis;
}

}  // namespace ffnets
