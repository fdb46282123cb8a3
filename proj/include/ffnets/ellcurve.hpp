#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ffnets/divisor.hpp"
#include "ffnets/poly.hpp"
#include "ffnets/series.hpp"

namespace ffnets {

/* Plane curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q. */
struct Curve {
  Field f;
  FieldElement a1, a2, a3, a4, a6;
};

FieldElement discriminant(const Curve& c);

/* Degree-one place: the point at infinity or an affine rational point.
 * Higher-degree places are not represented. */
struct PlaceEC {
  bool at_inf = false;
  FieldElement x0, y0;

  static PlaceEC infinite() { return PlaceEC{true, {}, {}}; }
  static PlaceEC affine(FieldElement x, FieldElement y) {
    return PlaceEC{false, std::move(x), std::move(y)};
  }
  int degree() const { return 1; }

  friend bool operator==(const PlaceEC&, const PlaceEC&) = default;
  friend bool operator<(const PlaceEC& a, const PlaceEC& b) {
    if (a.at_inf != b.at_inf) return a.at_inf;
    if (!(a.x0 == b.x0)) return elem_less(a.x0, b.x0);
    return elem_less(a.y0, b.y0);
  }
};

using DivisorEC = Divisor<PlaceEC>;

/* Element of the function field of the curve in canonical form
 * (a(x) + b(x) y) / den(x): den monic, gcd(a, b, den) = 1, zero as (0+0y)/1. */
struct FuncEC {
  Poly a, b, den;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const FuncEC&, const FuncEC&) = default;
};

/* Function field of a nonsingular curve in the form above, genus 1.  Supplies
 * the same backend surface as RationalFunctionField: places, valuations,
 * Riemann-Roch bases, local expansions. */
class EllipticFunctionField {
 public:
  using Element = FuncEC;
  using Place = PlaceEC;
  using Div = DivisorEC;

  /* Throws std::invalid_argument when the curve is singular. */
  explicit EllipticFunctionField(Curve c);

  const Field& field() const { return c_.f; }
  const Curve& curve() const { return c_; }
  int genus() const { return 1; }

  bool on_curve(const FieldElement& x0, const FieldElement& y0) const;
  /* Infinite place first, then affine points by (x, y) element index. */
  std::vector<Place> rational_places() const;
  /* The second point with the same x-coordinate; fixed points are the
   * ramification points of the x-cover. */
  Place conjugate(const Place& p) const;

  /* Throws std::invalid_argument on a zero denominator. */
  Element make(Poly a, Poly b, Poly den) const;
  Element zero() const { return Element{poly_zero(), poly_zero(), poly_one(c_.f)}; }
  Element one() const { return Element{poly_one(c_.f), poly_zero(), poly_one(c_.f)}; }
  Element constant(const FieldElement& v) const;
  Element x() const { return Element{poly_x(c_.f), poly_zero(), poly_one(c_.f)}; }
  Element y() const { return Element{poly_zero(), poly_one(c_.f), poly_one(c_.f)}; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scalar_mul(const FieldElement& s, const Element& a) const;
  /* Throws std::domain_error on zero. */
  Element inv(const Element& a) const;
  Element pow(const Element& a, uint32_t k) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

  /* x - x0, y - y0, or x/y at infinity, whichever has valuation 1 at p. */
  Element uniformizer(const Place& p) const;

  /* Exact; returns kValInfinity for the zero function. */
  int valuation(const Element& g, const Place& p) const;

  /* Basis of L(d), deterministic order.  Throws std::logic_error if the
   * internal dimension or membership verification fails. */
  std::vector<Element> rr_basis(const Div& d) const;

  /* Coefficients of the local expansion at p for exponents k_lo..k_hi, each
   * as a length-1 vector (all places have degree one).  Throws
   * std::invalid_argument when g has a pole at p below k_lo. */
  std::vector<std::vector<FieldElement>> expand(const Element& g, const Place& p,
                                                int k_lo, int k_hi) const;

 private:
  struct XY {
    Series x, y;
  };

  /* Expansions of x and y at p, exact through t^prec at least. */
  XY xy_series(const Place& p, int prec) const;
  Series element_series(const Element& g, const Place& p, int hi_needed) const;
  Series eval_poly(const Poly& a, const Series& xs) const;

  Curve c_;
  Poly hpoly_, fpoly_;  // y^2 + h(x) y = f(x)
  mutable std::map<Place, std::pair<int, XY>> cache_;
};

}  // namespace ffnets
