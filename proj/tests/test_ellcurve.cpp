#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffnets/ellcurve.hpp"

#include <map>
#include <random>
#include <stdexcept>

using namespace ffnets;

namespace {

EllipticFunctionField kit_char2() {  // y^2 + y = x^3
  Field f(2);
  return EllipticFunctionField(
      Curve{f, f.zero(), f.zero(), f.one(), f.zero(), f.zero()});
}

EllipticFunctionField kit_char3() {  // y^2 = x^3 - x
  Field f(3);
  return EllipticFunctionField(
      Curve{f, f.zero(), f.zero(), f.zero(), f.from_residue(-1), f.zero()});
}

/* Exact Laurent polynomial for oracle-side convolution checks. */
using Laurent = std::map<int, FieldElement>;

Laurent from_expand(const Field& f, const std::vector<std::vector<FieldElement>>& e, int lo) {
  Laurent r;
  for (size_t i = 0; i < e.size(); ++i)
    if (!e[i][0].is_zero()) r[lo + int(i)] = e[i][0];
  (void)f;
  return r;
}

Laurent lmul(const Field& f, const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [i, u] : a)
    for (const auto& [j, v] : b) {
      FieldElement w = f.mul(u, v);
      auto [it, fresh] = r.emplace(i + j, w);
      if (!fresh) it->second = f.add(it->second, w);
    }
  return r;
}

Laurent ladd(const Field& f, const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [j, v] : b) {
    auto [it, fresh] = r.emplace(j, v);
    if (!fresh) it->second = f.add(it->second, v);
  }
  return r;
}

FieldElement lcoeff(const Field& f, const Laurent& a, int k) {
  auto it = a.find(k);
  return it == a.end() ? f.zero() : it->second;
}

FuncEC random_element(const EllipticFunctionField& k, std::mt19937& rng) {
  const Field& f = k.field();
  std::uniform_int_distribution<uint64_t> d(0, f.size() - 1);
  auto rp = [&](int deg) {
    std::vector<FieldElement> c(size_t(deg) + 1);
    for (auto& v : c) v = f.from_index(d(rng));
    return poly_make(std::move(c));
  };
  Poly den = poly_zero();
  while (den.is_zero()) den = rp(2);
  return k.make(rp(2), rp(1), den);
}

}  // namespace

TEST_CASE("series windows") {
  Field f(5);
  Series g(f, 0, 6);
  g.set(0, f.one());
  g.set(1, f.from_residue(-1));  // 1 - t
  Series inv = inverse(g);
  CHECK(inv.lo() == 0);
  CHECK(inv.hi() == 6);
  for (int k = 0; k <= 6; ++k) CHECK(inv.coeff(k) == f.one());
  CHECK_THROWS_AS(inv.coeff(7), PrecisionError);
  CHECK(mul(g, inv).valuation() == 0);

  Series a(f, 0, 3), b(f, 0, 3);
  a.set(0, f.one());
  a.set(1, f.one());
  b.set(0, f.one());
  Series p = mul(a, b);
  CHECK(p.hi() == 3);
  CHECK(p.coeff(1) == f.one());
  CHECK(add(a, b).hi() == 3);

  Series t2 = Series::monomial(f, f.one(), 2);
  CHECK(t2.exact());
  CHECK(mul(t2, a).hi() == 5);
  CHECK(mul(t2, a).coeff(3) == f.one());
  CHECK(inverse(t2).coeff(-2) == f.one());
  CHECK(t2.shifted(-5).lo() == -3);

  Series lead = Series::exact_poly(f, 0, {f.zero(), f.one()});
  CHECK(lead.coeff(0) == f.zero());
  CHECK(lead.valuation() == 1);

  Series hole(f, 0, 4);
  CHECK(hole.window_zero());
  CHECK(hole.valuation() == kValInfinity);
  CHECK_THROWS_AS(inverse(hole), PrecisionError);
  CHECK_THROWS_AS(inverse(Series::exact_poly(f, 0, {})), std::domain_error);
  Series two_terms = Series::exact_poly(f, 0, {f.one(), f.one()});
  CHECK_THROWS_AS(inverse(two_terms), std::logic_error);
  CHECK(inverse(two_terms.truncated(8)).hi() == 8);
  CHECK(inverse(two_terms.truncated(8)).coeff(1) == f.from_residue(-1));
}

TEST_CASE("curve validation and rational points") {
  CHECK_THROWS_AS(EllipticFunctionField(Curve{Field(3), Field(3).zero(), Field(3).zero(),
                                              Field(3).zero(), Field(3).zero(), Field(3).zero()}),
                  std::invalid_argument);  // y^2 = x^3 is singular

  EllipticFunctionField k2 = kit_char2();
  const Field& f2 = k2.field();
  auto ps2 = k2.rational_places();
  REQUIRE(ps2.size() == 3);
  CHECK(ps2[0] == PlaceEC::infinite());
  CHECK(ps2[1] == PlaceEC::affine(f2.zero(), f2.zero()));
  CHECK(ps2[2] == PlaceEC::affine(f2.zero(), f2.one()));

  EllipticFunctionField k3 = kit_char3();
  const Field& f3 = k3.field();
  auto ps3 = k3.rational_places();
  REQUIRE(ps3.size() == 4);
  CHECK(ps3[0] == PlaceEC::infinite());
  CHECK(ps3[1] == PlaceEC::affine(f3.zero(), f3.zero()));
  CHECK(ps3[2] == PlaceEC::affine(f3.one(), f3.zero()));
  CHECK(ps3[3] == PlaceEC::affine(f3.from_residue(2), f3.zero()));

  for (const auto& k : {k2, k3})
    for (const auto& p : k.rational_places()) {
      if (p.at_inf) continue;
      PlaceEC c = k.conjugate(p);
      CHECK(k.on_curve(c.x0, c.y0));
      CHECK(k.conjugate(c) == p);
    }
}

TEST_CASE("hasse bound over small fields") {
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    Field f(q);
    int checked = 0;
    for (uint64_t ai = 0; ai < f.size(); ++ai)
      for (uint64_t bi = 0; bi < f.size(); ++bi) {
        Curve c{f, f.zero(), f.zero(), q == 2 ? f.one() : f.zero(), f.from_index(ai),
                f.from_index(bi)};
        if (discriminant(c).is_zero()) continue;
        EllipticFunctionField k(c);
        long n = long(k.rational_places().size());
        CHECK((n - long(q) - 1) * (n - long(q) - 1) <= 4 * long(q));
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("function arithmetic") {
  std::mt19937 rng(2024);
  for (const auto& k : {kit_char2(), kit_char3()}) {
    const Curve& c = k.curve();
    const Field& f = k.field();
    // The defining relation: y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6.
    FuncEC h = k.add(k.scalar_mul(c.a1, k.x()), k.constant(c.a3));
    FuncEC lhs = k.add(k.mul(k.y(), k.y()), k.mul(h, k.y()));
    FuncEC rhs = k.add(k.pow(k.x(), 3),
                       k.add(k.scalar_mul(c.a2, k.mul(k.x(), k.x())),
                             k.add(k.scalar_mul(c.a4, k.x()), k.constant(c.a6))));
    CHECK(lhs == rhs);

    for (int it = 0; it < 40; ++it) {
      FuncEC a = random_element(k, rng), b = random_element(k, rng), g = random_element(k, rng);
      CHECK(k.mul(a, k.add(b, g)) == k.add(k.mul(a, b), k.mul(a, g)));
      CHECK(k.mul(k.mul(a, b), g) == k.mul(a, k.mul(b, g)));
      if (!a.is_zero()) {
        CHECK(k.mul(a, k.inv(a)) == k.one());
        CHECK(k.inv(k.inv(a)) == a);
      }
    }
    CHECK_THROWS_AS(k.inv(k.zero()), std::domain_error);
    CHECK_THROWS_AS(k.make(poly_one(f), poly_zero(), poly_zero()), std::invalid_argument);
  }
}

TEST_CASE("valuations at rational places") {
  EllipticFunctionField k2 = kit_char2();
  const Field& f2 = k2.field();
  PlaceEC o = PlaceEC::infinite();
  PlaceEC p00 = PlaceEC::affine(f2.zero(), f2.zero());
  PlaceEC p01 = PlaceEC::affine(f2.zero(), f2.one());
  CHECK(k2.valuation(k2.x(), o) == -2);
  CHECK(k2.valuation(k2.y(), o) == -3);
  CHECK(k2.valuation(k2.x(), p00) == 1);
  CHECK(k2.valuation(k2.y(), p00) == 3);
  CHECK(k2.valuation(k2.y(), p01) == 0);
  CHECK(k2.valuation(k2.add(k2.y(), k2.one()), p01) == 3);
  CHECK(k2.valuation(k2.zero(), o) == kValInfinity);
  CHECK(k2.valuation(k2.one(), p00) == 0);

  EllipticFunctionField k3 = kit_char3();
  const Field& f3 = k3.field();
  PlaceEC q00 = PlaceEC::affine(f3.zero(), f3.zero());
  PlaceEC q10 = PlaceEC::affine(f3.one(), f3.zero());
  CHECK(k3.valuation(k3.x(), PlaceEC::infinite()) == -2);
  CHECK(k3.valuation(k3.y(), PlaceEC::infinite()) == -3);
  CHECK(k3.valuation(k3.x(), q00) == 2);
  CHECK(k3.valuation(k3.y(), q00) == 1);
  CHECK(k3.valuation(k3.sub(k3.x(), k3.one()), q10) == 2);

  // div(x - x0) has degree zero: the rational-place sum is 0 when the fiber
  // above x0 is rational and -2 when its zeros sit at a degree-2 place.
  for (const auto& k : {k2, k3}) {
    const Field& f = k.field();
    auto places = k.rational_places();
    for (uint64_t xi = 0; xi < f.size(); ++xi) {
      FieldElement x0 = f.from_index(xi);
      FuncEC g = k.sub(k.x(), k.constant(x0));
      long total = 0;
      bool rational_fiber = false;
      for (const auto& p : places) {
        total += k.valuation(g, p);
        if (!p.at_inf && p.x0 == x0) rational_fiber = true;
      }
      CHECK(total == (rational_fiber ? 0 : -2));
    }
  }

  std::mt19937 rng(99);
  for (const auto& k : {k2, k3}) {
    auto places = k.rational_places();
    std::uniform_int_distribution<size_t> dp(0, places.size() - 1);
    for (int it = 0; it < 60; ++it) {
      FuncEC a = random_element(k, rng), b = random_element(k, rng);
      if (a.is_zero() || b.is_zero()) continue;
      PlaceEC p = places[dp(rng)];
      CHECK(k.valuation(k.mul(a, b), p) == k.valuation(a, p) + k.valuation(b, p));
    }
  }
}

TEST_CASE("uniformizers have valuation one") {
  for (const auto& k : {kit_char2(), kit_char3()})
    for (const auto& p : k.rational_places())
      CHECK(k.valuation(k.uniformizer(p), p) == 1);
}

TEST_CASE("expansions satisfy the curve equation") {
  for (const auto& k : {kit_char2(), kit_char3()}) {
    const Field& f = k.field();
    const Curve& c = k.curve();
    for (const auto& p : k.rational_places()) {
      Laurent ex = from_expand(f, k.expand(k.x(), p, -3, 12), -3);
      Laurent ey = from_expand(f, k.expand(k.y(), p, -3, 12), -3);
      Laurent h = {{0, c.a3}};
      if (!c.a1.is_zero()) h = ladd(f, h, lmul(f, Laurent{{0, c.a1}}, ex));
      Laurent lhs = ladd(f, lmul(f, ey, ey), lmul(f, h, ey));
      Laurent x2 = lmul(f, ex, ex);
      Laurent rhs = lmul(f, x2, ex);
      rhs = ladd(f, rhs, lmul(f, Laurent{{0, c.a2}}, x2));
      rhs = ladd(f, rhs, lmul(f, Laurent{{0, c.a4}}, ex));
      rhs = ladd(f, rhs, Laurent{{0, c.a6}});
      // Both sides are exact for exponents up to 6 given windows through 12.
      for (int kk = -9; kk <= 6; ++kk) CHECK(lcoeff(f, lhs, kk) == lcoeff(f, rhs, kk));
    }
  }
}

TEST_CASE("expansion product rule and leading term") {
  std::mt19937 rng(555);
  for (const auto& k : {kit_char2(), kit_char3()}) {
    const Field& f = k.field();
    auto places = k.rational_places();
    std::uniform_int_distribution<size_t> dp(0, places.size() - 1);
    for (int it = 0; it < 25; ++it) {
      FuncEC a = random_element(k, rng), b = random_element(k, rng);
      if (a.is_zero() || b.is_zero()) continue;
      PlaceEC p = places[dp(rng)];
      int va = k.valuation(a, p), vb = k.valuation(b, p);
      Laurent ea = from_expand(f, k.expand(a, p, va, va + 8), va);
      Laurent eb = from_expand(f, k.expand(b, p, vb, vb + 8), vb);
      Laurent eab = from_expand(f, k.expand(k.mul(a, b), p, va + vb, va + vb + 8), va + vb);
      CHECK(!ea.empty());
      CHECK(ea.begin()->first == va);
      Laurent prod = lmul(f, ea, eb);
      for (int kk = va + vb; kk <= va + vb + 8; ++kk)
        CHECK(lcoeff(f, prod, kk) == lcoeff(f, eab, kk));
    }
  }
}

TEST_CASE("expansion window errors") {
  EllipticFunctionField k = kit_char2();
  CHECK_THROWS_AS(k.expand(k.x(), PlaceEC::infinite(), 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(k.expand(k.x(), PlaceEC::infinite(), 2, 1), std::invalid_argument);
  auto e = k.expand(k.x(), PlaceEC::infinite(), -2, 1);
  CHECK(e[0][0] == k.field().one());
  auto z = k.expand(k.zero(), PlaceEC::infinite(), -1, 1);
  for (const auto& row : z) CHECK(row[0].is_zero());
}

TEST_CASE("riemann-roch spaces at the infinite place") {
  EllipticFunctionField k = kit_char2();
  PlaceEC o = PlaceEC::infinite();
  size_t want[8] = {1, 1, 2, 3, 4, 5, 6, 7};
  for (int n = 0; n <= 7; ++n)
    CHECK(k.rr_basis(DivisorEC::single(o, n)).size() == want[n]);

  auto b3 = k.rr_basis(DivisorEC::single(o, 3));
  REQUIRE(b3.size() == 3);
  CHECK(b3[0] == k.one());
  CHECK(b3[1] == k.x());
  CHECK(b3[2] == k.y());
  auto b5 = k.rr_basis(DivisorEC::single(o, 5));
  REQUIRE(b5.size() == 5);
  CHECK(b5[2] == k.mul(k.x(), k.x()));
  CHECK(b5[4] == k.mul(k.x(), k.y()));
}

TEST_CASE("riemann-roch spaces, frozen kit divisors") {
  EllipticFunctionField k2 = kit_char2();
  const Field& f2 = k2.field();
  PlaceEC p1 = PlaceEC::affine(f2.zero(), f2.zero());
  auto b = k2.rr_basis(DivisorEC::single(p1, 2));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == k2.one());
  CHECK(b[1] == k2.make(poly_one(f2), poly_one(f2), poly_from_indices(f2, {0, 0, 1})));

  EllipticFunctionField k3 = kit_char3();
  const Field& f3 = k3.field();
  PlaceEC q1 = PlaceEC::affine(f3.zero(), f3.zero());
  auto b3 = k3.rr_basis(DivisorEC::single(q1, 2));
  REQUIRE(b3.size() == 2);
  CHECK(b3[0] == k3.make(poly_one(f3), poly_zero(), poly_x(f3)));
  CHECK(b3[1] == k3.one());
}

TEST_CASE("riemann-roch genus-one signatures") {
  for (const auto& k : {kit_char2(), kit_char3()}) {
    PlaceEC o = PlaceEC::infinite();
    for (const auto& p : k.rational_places()) {
      if (p.at_inf) continue;
      // P - O has degree 0 but is not principal on a genus-1 curve.
      CHECK(k.rr_basis(DivisorEC::single(p, 1) - DivisorEC::single(o, 1)).empty());
      CHECK(k.rr_basis(DivisorEC::single(o, 1) - DivisorEC::single(p, 1)).empty());
      auto lp = k.rr_basis(DivisorEC::single(p, 1));
      REQUIRE(lp.size() == 1);
      CHECK(lp[0] == k.one());
    }
    CHECK(k.rr_basis(DivisorEC::single(o, -1)).empty());
    CHECK(k.rr_basis(DivisorEC()).size() == 1);
  }
}

TEST_CASE("riemann-roch dimensions on random divisors") {
  std::mt19937 rng(4242);
  for (const auto& k : {kit_char2(), kit_char3()}) {
    auto places = k.rational_places();
    std::uniform_int_distribution<size_t> dp(0, places.size() - 1);
    std::uniform_int_distribution<int> dn(-2, 3);
    for (int it = 0; it < 30; ++it) {
      DivisorEC d;
      for (int t = 0; t < 3; ++t) d.add_term(places[dp(rng)], dn(rng));
      auto basis = k.rr_basis(d);
      long deg = d.degree();
      if (deg >= 1) CHECK(long(basis.size()) == deg);
      else if (deg == 0) CHECK(basis.size() <= 1);
      else CHECK(basis.empty());
    }
  }
}
