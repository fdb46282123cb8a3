#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ffnets/gf.hpp"

namespace ffnets {

/* Raised when a computation would need series coefficients beyond the
 * computed window.  Callers with an adaptive precision loop catch this (or
 * check windows up front) and retry wider; it must never be swallowed into a
 * silent wrong answer. */
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& w) : std::runtime_error(w) {}
};

/* Window bound marking a series that is exact everywhere, i.e. a Laurent
 * polynomial.  Window arithmetic saturates at this value. */
inline constexpr int kSeriesExact = 1 << 28;

/* Truncated Laurent series in a local parameter.  Coefficients are exact for
 * exponents in [lo(), hi()]: below lo() they are zero, above hi() unknown.
 * Stored coefficients may stop short of hi(); the gap is zero. */
class Series {
 public:
  Series(const Field& f, int lo, int hi);
  /* Laurent polynomial sum c[i] t^(lo+i), exact at every exponent. */
  static Series exact_poly(const Field& f, int lo, std::vector<FieldElement> c);
  static Series constant(const Field& f, const FieldElement& v);
  static Series monomial(const Field& f, const FieldElement& v, int k);

  const Field& field() const { return *f_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool exact() const { return hi_ == kSeriesExact; }

  /* Zero below lo(), stored value through hi(), PrecisionError above. */
  FieldElement coeff(int k) const;
  void set(int k, const FieldElement& v);  // k must lie in [lo(), hi()]

  /* No nonzero coefficient in the window.  The true series may still be
   * nonzero past hi() unless exact(). */
  bool window_zero() const;
  /* Exponent of the first nonzero visible coefficient; kValInfinity when
   * window_zero(). */
  int valuation() const;

  Series truncated(int new_hi) const;
  Series shifted(int dk) const;  // multiply by t^dk

  friend Series add(const Series& a, const Series& b);
  friend Series sub(const Series& a, const Series& b);
  friend Series neg(const Series& a);
  friend Series mul(const Series& a, const Series& b);
  /* Window [-v, hi-2v] for valuation v.  Throws PrecisionError when the
   * window shows no leading term, std::logic_error on an exact multi-term
   * series (truncate first). */
  friend Series inverse(const Series& a);

 private:
  long long first_nonzero() const;  // hi_+1 when window_zero()

  const Field* f_;
  int lo_;
  int hi_;
  std::vector<FieldElement> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series inverse(const Series& a);

}  // namespace ffnets
