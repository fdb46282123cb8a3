#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include "ffnets/ellcurve.hpp"
#include "ffnets/genmat.hpp"
#include "ffnets/kits.hpp"
#include "ffnets/ratfunc.hpp"

using namespace ffnets;

namespace {

/* Binomial table mod p, plain Pascal recurrence. */
std::vector<std::vector<int>> binom_mod(int n, int p) {
  std::vector<std::vector<int>> b(size_t(n), std::vector<int>(size_t(n), 0));
  for (int i = 0; i < n; ++i) {
    b[i][0] = 1;
    for (int k = 1; k <= i; ++k)
      b[i][k] = (b[i - 1][k - 1] + b[i - 1][k]) % p;
  }
  return b;
}

MatrixSet build_g0(uint32_t q, int s, int mu, int jmax, int cols) {
  Field f(q);
  RationalFunctionField ff(f);
  auto params = default_genus0_params(ff, s, mu);
  RowSystem<RationalFunctionField> sys(ff, params);
  return build_matrix_set(sys, jmax, cols);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("classical binary matrices are Pascal and negative Pascal") {
  auto ms = build_g0(2, 2, 1, 8, 8);
  CHECK(ms.s == 2);
  CHECK(ms.mu == 1);
  CHECK(ms.g == 0);
  CHECK(ms.variant == Variant::genus0);
  auto b = binom_mod(16, 2);
  Field f(2);
  for (int j = 1; j <= 8; ++j)
    for (int k = 0; k < 8; ++k) {
      /* x^(j-1) at the third rational place: binomial(j-1, k). */
      CHECK(f.index(ms.at(1, j, k)) == uint64_t(k <= j - 1 ? b[j - 1][k] : 0));
      /* x^(-j) there: binomial(j+k-1, k). */
      CHECK(f.index(ms.at(2, j, k)) == uint64_t(b[j + k - 1][k]));
    }
}

TEST_CASE("block layout interleaves residue components") {
  auto ms = build_g0(2, 3, 2, 4, 8);
  CHECK(ms.mu == 2);
  Field f(2);
  /* second matrix, first row: every expansion coefficient is x+1. */
  for (int k = 0; k < 8; ++k) CHECK(f.index(ms.at(2, 1, k)) == 1);
  /* first matrix, third row: x^2 = (x+1) + 1*t at t = x^2+x+1. */
  std::vector<uint64_t> want = {1, 1, 1, 0, 0, 0, 0, 0};
  for (int k = 0; k < 8; ++k) CHECK(f.index(ms.at(1, 3, k)) == want[size_t(k)]);
}

TEST_CASE("row deletion reduces to a shifted expansion when the gap function is constant") {
  Field f(2);
  EllipticFunctionField ec(demo_curve(f));
  auto params = default_ec_params(ec, 2, Variant::xing);
  RowSystem<EllipticFunctionField> sys(ec, params);
  REQUIRE(sys.gap_indices() == std::vector<int>{0});
  REQUIRE(sys.gap_functions()[0] == ec.one());
  auto ms = build_matrix_set(sys, 3, 6);
  CHECK(ms.g == 1);
  CHECK(ms.mu == 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) {
      auto coef = ec.expand(sys.row_function(i, j), params.pinf, 0, 6);
      for (int k = 0; k < 6; ++k)
        CHECK(ms.at(i, j, k) == coef[size_t(k) + 1][0]);
    }
}

TEST_CASE("row deletion with a nonconstant gap function matches the element identity") {
  Field f(3);
  EllipticFunctionField ec(demo_curve(f));
  auto places = default_places_ec(ec, 2);
  auto pinf = PlaceEC::infinite();
  auto paux = PlaceEC::affine(f.from_residue(2), f.zero());
  ConstructionParams<EllipticFunctionField> params{
      Variant::xing, places, pinf, DivisorEC::single(paux, 2), false};
  RowSystem<EllipticFunctionField> sys(ec, params);
  REQUIRE(sys.gap_indices() == std::vector<int>{0});
  auto w = sys.gap_functions()[0];
  REQUIRE_FALSE(w == ec.one());
  REQUIRE(sys.validate(3).ok());

  const int cols = 5, raw = cols + 1;
  auto ms = build_matrix_set(sys, 3, cols);
  auto t = ec.uniformizer(pinf);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) {
      auto beta = sys.row_function(i, j);
      /* leading coefficient against the gap function pins its weight */
      auto b0 = ec.expand(beta, pinf, 0, 0)[0][0];
      auto w0 = ec.expand(w, pinf, 0, 0)[0][0];
      auto a0 = f.mul(b0, f.inv(w0));
      auto resid = ec.sub(beta, ec.scalar_mul(a0, w));
      for (int k = 1; k <= cols; ++k)
        resid = ec.sub(resid,
                       ec.scalar_mul(ms.at(i, j, k - 1), ec.pow(t, uint32_t(k))));
      CHECK((ec.is_zero(resid) || ec.valuation(resid, pinf) >= raw));
    }
}

TEST_CASE("shallow builds are prefixes of deeper ones") {
  auto big = build_g0(2, 3, 2, 8, 8);
  auto small = build_g0(2, 3, 2, 4, 4);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 0; k < 4; ++k)
        CHECK(small.at(i, j, k) == big.at(i, j, k));

  Field f(2);
  EllipticFunctionField ec(demo_curve(f));
  auto params = default_ec_params(ec, 2, Variant::xing);
  RowSystem<EllipticFunctionField> sys(ec, params);
  auto xb = build_matrix_set(sys, 6, 8);
  auto xs = build_matrix_set(sys, 3, 4);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 0; k < 4; ++k)
        CHECK(xs.at(i, j, k) == xb.at(i, j, k));
}

TEST_CASE("depth and variant guards") {
  Field f(2);
  RationalFunctionField ff(f);
  auto params = default_genus0_params(ff, 2, 1);
  RowSystem<RationalFunctionField> sys(ff, params);
  CHECK_THROWS_WITH_AS(build_rows_block(sys, 0, 4), "matrix depth must be positive",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(z_system(sys, 3),
                       "expansion system needs the row-deletion variant",
                       std::invalid_argument);

  EllipticFunctionField ec(demo_curve(f));
  auto xp = default_ec_params(ec, 2, Variant::xing);
  RowSystem<EllipticFunctionField> xsys(ec, xp);
  CHECK_THROWS_WITH_AS(build_rows_block(xsys, 4, 4),
                       "block layout serves the block variants only",
                       std::invalid_argument);
}

TEST_CASE("fnv1a64 matches the published vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("serialized text has the fixed layout") {
  auto ms = build_g0(2, 2, 1, 2, 4);
  auto text = serialize(ms);
  auto ls = lines_of(text);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "FFNETS v1");
  CHECK(ls[1] == "q=2^1");
  CHECK(ls[2].substr(0, 35) == "s=2 variant=genus0 mu=1 g=0 digest=");
  std::string digest = ls[2].substr(ls[2].find("digest=") + 7);
  CHECK(digest.size() == 16);
  CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(ls[3] == "C 1 rows=2 cols=4");
  CHECK(ls[4] == "1 0 0 0");
  CHECK(ls[5] == "1 1 0 0");
  CHECK(ls[6] == "C 2 rows=2 cols=4");
  CHECK(ls[7] == "1 1 1 1");
  CHECK(ls[8] == "1 0 1 0");
  auto again = serialize(ms);
  CHECK(text == again);
}

TEST_CASE("round trip preserves every field") {
  auto ms = build_g0(3, 3, 1, 5, 6);
  auto back = deserialize(serialize(ms));
  CHECK(back == ms);

  Field f4(2, 2);
  RationalFunctionField ff(f4);
  auto params = default_genus0_params(ff, 2, 1);
  RowSystem<RationalFunctionField> sys(ff, params);
  auto ext = build_matrix_set(sys, 3, 3);
  auto text = serialize(ext);
  CHECK(lines_of(text)[1] == "q=2^2 modulus=1,1,1");
  CHECK(deserialize(text) == ext);

  Field f(2);
  EllipticFunctionField ec(demo_curve(f));
  auto xp = default_ec_params(ec, 2, Variant::xing);
  RowSystem<EllipticFunctionField> xsys(ec, xp);
  auto xms = build_matrix_set(xsys, 4, 4);
  CHECK(deserialize(serialize(xms)) == xms);
}

TEST_CASE("tampering is caught") {
  auto ms = build_g0(2, 2, 1, 2, 4);
  auto text = serialize(ms);

  auto flipped = text;
  size_t row = flipped.find("\n1 0 0 0");
  REQUIRE(row != std::string::npos);
  flipped[row + 1] = '0';
  CHECK_THROWS_WITH_AS(deserialize(flipped), "digest mismatch: matrix file corrupted",
                       std::runtime_error);

  auto badver = text;
  badver[7] = '2';
  CHECK_THROWS_WITH_AS(deserialize(badver), "unsupported matrix file version",
                       std::runtime_error);

  CHECK_THROWS_AS(deserialize("FFNETS v1\nq=2^1\ns=1 variant=genus0 mu=1 g=0\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(deserialize(""), std::runtime_error);
}

TEST_CASE("matrix files survive the disk") {
  auto ms = build_g0(2, 3, 2, 4, 6);
  const char* path = "test_genmat_roundtrip.ffn";
  write_matrix_file(ms, path);
  auto back = read_matrix_file(path);
  CHECK(back == ms);
  std::remove(path);
  CHECK_THROWS_AS(read_matrix_file("no_such_dir/missing.ffn"), std::runtime_error);
}

TEST_CASE("entry access is bounds checked") {
  auto ms = build_g0(2, 2, 1, 2, 2);
  CHECK_THROWS_AS(ms.at(0, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(ms.at(3, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(ms.at(1, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(ms.at(1, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(ms.at(1, 1, -1), std::out_of_range);
  CHECK_THROWS_AS(ms.at(1, 1, 2), std::out_of_range);
}
