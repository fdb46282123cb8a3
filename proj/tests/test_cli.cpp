#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ffnets/cli.hpp"
#include "ffnets/genmat.hpp"

using namespace ffnets;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool exists(const std::string& path) { return std::ifstream(path).good(); }

// scratch files live in the test working directory and are removed per case
struct Temp {
  std::vector<std::string> paths;
  std::string operator()(const std::string& name) {
    paths.push_back("cli_scratch_" + name);
    return paths.back();
  }
  ~Temp() {
    for (const auto& p : paths) std::remove(p.c_str());
  }
};

}  // namespace

TEST_CASE("construct writes a loadable file and prints its digest") {
  Temp tmp;
  auto path = tmp("k.ffn");
  auto r = cli({"construct", "--q", "2", "--s", "2", "--out", path});
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  auto ms = read_matrix_file(path);
  CHECK(ms.s == 2);
  CHECK(ms.jmax == 8);
  CHECK(r.out == "digest=" + serialize(ms).substr(serialize(ms).find("digest=") + 7,
                                                  16) +
                     "\n");
}

TEST_CASE("construct is reproducible byte for byte") {
  Temp tmp;
  auto pa = tmp("a.ffn"), pb = tmp("b.ffn");
  auto ra = cli({"construct", "--q", "3", "--s", "3", "--variant", "xing", "--out", pa});
  auto rb = cli({"construct", "--q", "3", "--s", "3", "--variant", "xing", "--out", pb});
  REQUIRE(ra.code == 0);
  REQUIRE(rb.code == 0);
  CHECK(ra.out == rb.out);
  CHECK(slurp(pa) == slurp(pb));
  CHECK(!slurp(pa).empty());
}

TEST_CASE("construct rejects kits that exhaust the rational places") {
  Temp tmp;
  auto path = tmp("bad.ffn");
  auto r = cli({"construct", "--q", "3", "--s", "4", "--out", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("no degree-1 expansion place remains") != std::string::npos);
  CHECK(!exists(path));
}

TEST_CASE("explicit place lists reproduce the default kit") {
  Temp tmp;
  auto pd = tmp("d.ffn"), pe = tmp("e.ffn"), pf = tmp("f.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--out", pd}).code == 0);
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--places", "inf;poly:0,1",
               "--out", pe})
              .code == 0);
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--places",
               "inf;poly:0,1;poly:1,1", "--out", pf})
              .code == 0);
  CHECK(slurp(pd) == slurp(pe));
  CHECK(slurp(pd) == slurp(pf));
}

TEST_CASE("geometric-progression rows match the default on the stock kits") {
  Temp tmp;
  auto pd = tmp("d3.ffn"), pv = tmp("v3.ffn");
  REQUIRE(cli({"construct", "--q", "3", "--s", "2", "--out", pd}).code == 0);
  REQUIRE(
      cli({"construct", "--q", "3", "--s", "2", "--vandermonde", "--out", pv}).code ==
      0);
  CHECK(slurp(pd) == slurp(pv));
  auto r = cli({"construct", "--q", "2", "--s", "2", "--variant", "gpos",
                "--vandermonde", "--out", tmp("x.ffn")});
  CHECK(r.code == 1);
  CHECK(r.err.find("genus zero only") != std::string::npos);
}

TEST_CASE("extension field kits carry the modulus in the file") {
  Temp tmp;
  auto path = tmp("f4.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--e", "2", "--s", "3", "--out", path}).code ==
          0);
  auto text = slurp(path);
  CHECK(text.find("q=2^2 modulus=1,1,1") != std::string::npos);
  auto ms = read_matrix_file(path);
  CHECK(ms.field.size() == 4);
}

TEST_CASE("place degree checks catch inconsistent requests") {
  Temp tmp;
  auto r1 = cli({"construct", "--q", "2", "--s", "2", "--mu", "1", "--places",
                 "inf;poly:0,1;poly:1,1,1", "--out", tmp("a.ffn")});
  CHECK(r1.code == 1);
  CHECK(r1.err.find("mu disagrees with the expansion place degree") !=
        std::string::npos);
  auto r2 = cli({"construct", "--q", "2", "--s", "2", "--places", "inf", "--out",
                 tmp("b.ffn")});
  CHECK(r2.code == 1);
  CHECK(r2.err.find("the place list needs s or s+1 entries") != std::string::npos);
}

TEST_CASE("points prints exact digit fractions") {
  Temp tmp;
  auto path = tmp("k.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--out", path}).code == 0);
  auto r = cli({"points", "--in", path, "--count", "4", "--exact", "--precision", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "0 0/8 0/8\n1 7/8 7/8\n2 2/8 5/8\n3 5/8 2/8\n");
  auto dec = cli({"points", "--in", path, "--count", "2"});
  REQUIRE(dec.code == 0);
  CHECK(dec.out ==
        "0 0.000000000000 0.000000000000\n1 0.996093750000 0.996093750000\n");
  auto off = cli({"points", "--in", path, "--count", "2", "--n0", "8", "--exact",
                  "--precision", "3"});
  REQUIRE(off.code == 0);
  CHECK(off.out == "8 0/8 4/8\n9 7/8 3/8\n");
}

TEST_CASE("tvalue reports margins and flags violations by exit code") {
  Temp tmp;
  auto path = tmp("k.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--out", path}).code == 0);
  auto r = cli({"tvalue", "--in", path, "--mmax", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1 0 0 0\n2 0 0 0\n3 0 0 0\n4 0 0 0\n");
  auto guard = cli({"tvalue", "--in", path, "--mmax", "9"});
  CHECK(guard.code == 1);
  CHECK(guard.err.find("mmax exceeds matrix size") != std::string::npos);
}

TEST_CASE("netcheck enumerates shapes and fails honestly") {
  Temp tmp;
  auto path = tmp("k.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--out", path}).code == 0);
  auto r = cli({"netcheck", "--in", path, "--m", "3", "--t", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "shape 0 3 pass\nshape 1 2 pass\nshape 2 1 pass\nshape 3 0 pass\n");
  auto off = cli({"netcheck", "--in", path, "--m", "3", "--t", "0", "--offset", "1"});
  CHECK(off.code == 0);

  auto gp = tmp("gp.ffn");
  REQUIRE(
      cli({"construct", "--q", "2", "--s", "2", "--variant", "gpos", "--out", gp})
          .code == 0);
  auto bad = cli({"netcheck", "--in", gp, "--m", "4", "--t", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find(" fail\n") != std::string::npos);
  CHECK(bad.out.find(" pass\n") != std::string::npos);
  auto ok = cli({"netcheck", "--in", gp, "--m", "4", "--t", "2"});
  CHECK(ok.code == 0);
}

TEST_CASE("expand prints local coefficients from the requested window") {
  auto geo = cli({"expand", "--q", "2", "--places", "poly:0,1", "--precision", "4",
                  "1/(1-x)"});
  REQUIRE(geo.code == 0);
  CHECK(geo.out == "0 1\n1 1\n2 1\n3 1\n");

  auto sq = cli({"expand", "--q", "2", "--places", "poly:1,1", "--precision", "3",
                 "x^2"});
  REQUIRE(sq.code == 0);
  CHECK(sq.out == "0 1\n1 0\n2 1\n");

  auto pole = cli({"expand", "--q", "2", "--places", "inf", "--precision", "3", "x^2"});
  REQUIRE(pole.code == 0);
  CHECK(pole.out == "-2 1\n-1 0\n0 0\n");

  auto quad = cli({"expand", "--q", "2", "--places", "poly:1,1,1", "--precision", "3",
                   "x"});
  REQUIRE(quad.code == 0);
  CHECK(quad.out == "0 0 1\n1 0 0\n2 0 0\n");

  auto one = cli({"expand", "--q", "2", "--places", "poly:0,1", "--precision", "2",
                  "1"});
  REQUIRE(one.code == 0);
  CHECK(one.out == "0 1\n1 0\n");
}

TEST_CASE("expand rejects bad input with positioned errors") {
  auto two = cli({"expand", "--q", "2", "--places", "poly:0,1;inf", "x"});
  CHECK(two.code == 1);
  CHECK(two.err.find("expand takes a single place") != std::string::npos);

  auto paren = cli({"expand", "--q", "2", "--places", "poly:0,1", "x/(x"});
  CHECK(paren.code == 1);
  CHECK(paren.err.find("expression error at position 4: expected ')'") !=
        std::string::npos);

  auto div = cli({"expand", "--q", "2", "--places", "poly:0,1", "1/(x-x)"});
  CHECK(div.code == 1);
  CHECK(div.err.find("division by zero") != std::string::npos);

  auto place = cli({"expand", "--q", "2", "--places", "foo", "x"});
  CHECK(place.code == 1);
  CHECK(place.err.find("place must be 'inf' or 'poly:") != std::string::npos);
}

TEST_CASE("damaged or missing matrix files are refused") {
  Temp tmp;
  auto path = tmp("k.ffn");
  REQUIRE(cli({"construct", "--q", "2", "--s", "2", "--out", path}).code == 0);
  auto text = slurp(path);
  auto pos = text.find("1 1 1 1");
  REQUIRE(pos != std::string::npos);
  text[pos] = '0';
  auto broken = tmp("broken.ffn");
  std::ofstream(broken, std::ios::binary) << text;
  auto r = cli({"tvalue", "--in", broken});
  CHECK(r.code == 1);
  CHECK(r.err.find("digest mismatch: matrix file corrupted") != std::string::npos);

  auto missing = cli({"points", "--in", "cli_scratch_nowhere.ffn"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("argument errors surface through the parser") {
  CHECK(cli({"frobnicate"}).code != 0);
  CHECK(cli({}).code != 0);
  CHECK(cli({"points", "--bogus"}).code != 0);
  CHECK(cli({"construct", "--q", "2", "--s", "2"}).code != 0);  // --out required
}
