#pragma once

#include <limits>
#include <vector>

#include "ffnets/divisor.hpp"
#include "ffnets/poly.hpp"

namespace ffnets {

/* Rational function over F_q in canonical form: denominator monic,
 * gcd(num, den) = 1, zero represented as 0/1. */
struct RatFunc {
  Poly num, den;
  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

/* Place of the rational function field F_q(x): the infinite place (local
 * parameter 1/x) or a monic irreducible polynomial. */
class PlaceG0 {
 public:
  static PlaceG0 infinite() { return PlaceG0(); }
  /* Validates monic + irreducible; throws std::invalid_argument. */
  static PlaceG0 finite(const Field& f, Poly p);

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const { return poly_; }
  int degree() const { return infinite_ ? 1 : ffnets::degree(poly_); }

  friend bool operator==(const PlaceG0&, const PlaceG0&) = default;
  friend bool operator<(const PlaceG0& a, const PlaceG0& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_;
    if (a.infinite_) return false;
    return poly_less(a.poly_, b.poly_);
  }

 private:
  PlaceG0() : infinite_(true) {}
  bool infinite_ = false;
  Poly poly_;
};

using DivisorG0 = Divisor<PlaceG0>;

/* The rational function field F_q(x), genus 0.  Backend for the sequence
 * constructions: places, valuations, Riemann-Roch spaces, local expansions. */
class RationalFunctionField {
 public:
  using Element = RatFunc;
  using Place = PlaceG0;
  using Div = DivisorG0;

  explicit RationalFunctionField(Field f) : f_(std::move(f)) {}

  const Field& field() const { return f_; }
  int genus() const { return 0; }

  /* The q + 1 rational places: infinite first, then x - c by index of c. */
  std::vector<Place> rational_places() const;

  Element make(Poly num, Poly den) const;
  Element from_poly(Poly num) const { return make(std::move(num), poly_one(f_)); }
  Element zero() const { return from_poly(poly_zero()); }
  Element one() const { return from_poly(poly_one(f_)); }
  Element constant(const FieldElement& c) const { return from_poly(Poly{{c}}); }
  Element x() const { return from_poly(poly_x(f_)); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scalar_mul(const FieldElement& c, const Element& a) const;
  Element inv(const Element& a) const;  // throws std::domain_error on zero
  Element pow(const Element& a, uint32_t k) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

  /* Local parameter at P: the place polynomial, or 1/x at infinity. */
  Element uniformizer(const Place& p) const;

  /* Total: returns kValInfinity for the zero function. */
  int valuation(const Element& a, const Place& p) const;

  /* Degree of the pole divisor (= degree of the zero divisor) of nonzero a. */
  int height(const Element& a) const;

  /* Canonical basis of L(D) = { f : div(f) + D >= 0 }, dimension
   * max(0, deg D + 1).  Deterministic; every element is returned in canonical
   * form and verified against the defining valuation constraints. */
  std::vector<Element> rr_basis(const Div& d) const;

  /* Coefficients a_k of the local expansion at P for k in [k_lo, k_hi], each
   * as the residue representation w.r.t. the basis 1, x, ..., x^(deg P - 1):
   * a vector of deg(P) field elements.  Requires v_P(f) >= k_lo; throws
   * std::invalid_argument when the pole order exceeds the window. */
  std::vector<std::vector<FieldElement>> expand(const Element& a, const Place& p,
                                                int k_lo, int k_hi) const;

  /* Expansion coefficients as residue polynomials of degree < deg(P) for
   * k = 0..k_max; requires v_P(f) >= 0. */
  std::vector<Poly> local_expansion(const Element& a, const Place& p, int k_max) const;

 private:
  std::vector<Poly> expand_at_poly(const Poly& num, const Poly& den, const Poly& p,
                                   int count) const;

  Field f_;
};

}  // namespace ffnets
