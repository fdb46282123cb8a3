#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffnets {

/* Valuation of the zero function. */
inline constexpr int kValInfinity = 2147483647;

/* Element of F_q, q = p^e: residues mod p with respect to the power basis of
 * the field modulus, constant coefficient first.  Plain value type; all
 * arithmetic lives on Field. */
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<uint8_t> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<uint8_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<uint8_t> coeffs_;
};

/* Field-independent total order on elements: compares by digit index
 * (c_0 + c_1 p + ...), which for equal lengths is lexicographic on the
 * reversed coefficient vector. */
bool elem_less(const FieldElement& a, const FieldElement& b);

class Field {
 public:
  explicit Field(uint32_t p) : Field(p, 1) {}
  /* F_{p^e}.  modulus: monic irreducible over Z_p of degree e, low-first
   * including the leading 1 (length e+1).  Empty selects the canonical
   * modulus: the lexicographically smallest monic irreducible, coefficient
   * vector read low-to-high.  Throws std::invalid_argument on a composite p,
   * e = 0, or a non-monic/reducible modulus. */
  Field(uint32_t p, uint32_t e, std::vector<uint8_t> modulus = {});

  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return e_; }
  uint64_t size() const { return q_; }
  /* Empty for prime fields, length e+1 otherwise. */
  const std::vector<uint8_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /* r mod p, embedded in the prime subfield. */
  FieldElement from_residue(int64_t r) const;

  /* Positional digit bijection {0,...,q-1} <-> F_q: index = sum c_r p^r.
   * Maps 0 to the zero element; it is not a ring homomorphism for e > 1. */
  FieldElement from_index(uint64_t idx) const;
  uint64_t index(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /* Throws std::domain_error on zero. */
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, uint64_t k) const;

  bool is_zero(const FieldElement& a) const { return a.is_zero(); }
  bool is_one(const FieldElement& a) const { return a == one(); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  void check(const FieldElement& a) const;

  uint32_t p_ = 0;
  uint32_t e_ = 0;
  uint64_t q_ = 0;
  std::vector<uint8_t> modulus_;
};

bool is_prime_u32(uint32_t n);

}  // namespace ffnets
