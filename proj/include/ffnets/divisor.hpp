#pragma once

#include <map>

namespace ffnets {

/* Formal Z-linear combination of places.  Place needs operator< (canonical
 * order) and a degree() accessor. */
template <class Place>
class Divisor {
 public:
  Divisor() = default;

  static Divisor single(const Place& p, int n) {
    Divisor d;
    d.add_term(p, n);
    return d;
  }

  Divisor& add_term(const Place& p, int n) {
    if (n == 0) return *this;
    auto [it, inserted] = terms_.emplace(p, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  int coeff(const Place& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  long degree() const {
    long d = 0;
    for (const auto& [p, n] : terms_) d += long(n) * p.degree();
    return d;
  }

  bool is_effective() const {
    for (const auto& [p, n] : terms_)
      if (n < 0) return false;
    return true;
  }

  const std::map<Place, int>& terms() const { return terms_; }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, n] : b.terms_) a.add_term(p, n);
    return a;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [p, n] : b.terms_) a.add_term(p, -n);
    return a;
  }
  Divisor scaled(int k) const {
    Divisor d;
    if (k == 0) return d;
    for (const auto& [p, n] : terms_) d.add_term(p, k * n);
    return d;
  }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, int> terms_;
};

}  // namespace ffnets
