#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffnets/gf.hpp"

namespace ffnets {

/* Dense univariate polynomial over F_q, coefficients low degree first.
 * Invariant: no trailing zeros; the zero polynomial has an empty vector. */
struct Poly {
  std::vector<FieldElement> c;

  bool is_zero() const { return c.empty(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

int degree(const Poly& a);  // -1 for the zero polynomial

Poly poly_zero();
Poly poly_one(const Field& f);
Poly poly_x(const Field& f);
Poly poly_make(std::vector<FieldElement> coeffs);  // trims
Poly poly_from_indices(const Field& f, const std::vector<uint64_t>& idx);

FieldElement leading(const Poly& a);  // throws on zero
bool is_monic(const Field& f, const Poly& a);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly neg(const Field& f, const Poly& a);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const FieldElement& s, const Poly& a);
Poly shift_up(const Poly& a, int k);  // multiply by x^k
Poly pow(const Field& f, const Poly& a, uint32_t k);

/* Quotient and remainder; b nonzero. */
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
/* Division known to be exact; throws std::logic_error on a nonzero remainder. */
Poly exact_div(const Field& f, const Poly& a, const Poly& b);

Poly make_monic(const Field& f, const Poly& a);
Poly gcd_monic(const Field& f, Poly a, Poly b);  // monic gcd; gcd(0,0) = 0
/* Inverse of a modulo monic m with gcd(a, m) = 1; throws std::domain_error
 * when no inverse exists. */
Poly mod_inverse(const Field& f, const Poly& a, const Poly& m);

FieldElement eval(const Field& f, const Poly& a, const FieldElement& x);

/* Trial-division irreducibility test over F_q; constants are not irreducible. */
bool is_irreducible(const Field& f, const Poly& a);

/* Field-independent canonical order: by degree, then coefficients compared
 * highest power first via elem_less. */
bool poly_less(const Poly& a, const Poly& b);

/* "1,0,1" style: comma-separated element indices, low power first. */
std::string to_index_string(const Field& f, const Poly& a);

}  // namespace ffnets
