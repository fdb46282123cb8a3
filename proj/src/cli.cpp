#include "ffnets/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ffnets/acceptance.hpp"
#include "ffnets/ellcurve.hpp"
#include "ffnets/genmat.hpp"
#include "ffnets/kits.hpp"
#include "ffnets/netverify.hpp"
#include "ffnets/ratfunc.hpp"
#include "ffnets/seqgen.hpp"
#include "ffnets/textio.hpp"

namespace ffnets {

namespace {

struct ConstructRequest {
  uint32_t q = 2;
  uint32_t e = 1;
  int s = 2;
  int mu = 1;
  bool mu_given = false;
  std::string variant = "genus0";
  std::string curve;
  std::string places;
  std::string divisor;
  bool vandermonde = false;
  int rows = 8;
  int cols = 8;
};

MatrixSet construct_matrices(const ConstructRequest& req) {
  Field f(req.q, req.e);
  Variant variant = parse_variant(req.variant);
  if (req.rows < 1 || req.cols < 1)
    throw std::invalid_argument("matrix depth must be positive");

  if (variant == Variant::genus0) {
    if (!req.curve.empty())
      throw std::invalid_argument("curve text serves the positive-genus variants");
    RationalFunctionField ff(f);
    std::vector<PlaceG0> places;
    PlaceG0 pinf = PlaceG0::infinite();
    int mu = req.mu;
    if (!req.places.empty()) {
      auto toks = split(req.places, ';');
      if (int(toks.size()) == req.s + 1) {
        for (int i = 0; i < req.s; ++i)
          places.push_back(parse_place_g0(f, toks[size_t(i)]));
        pinf = parse_place_g0(f, toks.back());
        if (req.mu_given && pinf.degree() != mu)
          throw std::invalid_argument("mu disagrees with the expansion place degree");
        mu = pinf.degree();
      } else if (int(toks.size()) == req.s) {
        for (const auto& t : toks) places.push_back(parse_place_g0(f, t));
        pinf = default_expansion_g0(ff, places, mu);
      } else {
        throw std::invalid_argument("the place list needs s or s+1 entries");
      }
    } else {
      places = default_places_g0(ff, req.s);
      pinf = default_expansion_g0(ff, places, mu);
    }
    DivisorG0 aux;
    if (!req.divisor.empty()) aux = parse_divisor_g0(f, req.divisor);
    ConstructionParams<RationalFunctionField> params{
        variant, std::move(places), pinf, aux, req.vandermonde};
    RowSystem<RationalFunctionField> sys(ff, params);
    return build_matrix_set(sys, req.rows, req.cols);
  }

  if (req.mu_given && req.mu != 1)
    throw std::invalid_argument("the curve backend serves mu = 1 only");
  Curve c = req.curve.empty() ? demo_curve(f) : parse_curve(f, req.curve);
  EllipticFunctionField ec(c);
  std::vector<PlaceEC> places;
  PlaceEC pinf = PlaceEC::infinite();
  if (!req.places.empty()) {
    auto toks = split(req.places, ';');
    if (int(toks.size()) == req.s + 1) {
      for (int i = 0; i < req.s; ++i)
        places.push_back(parse_place_ec(ec, toks[size_t(i)]));
      pinf = parse_place_ec(ec, toks.back());
    } else if (int(toks.size()) == req.s) {
      for (const auto& t : toks) places.push_back(parse_place_ec(ec, t));
      pinf = default_expansion_ec(ec, places);
    } else {
      throw std::invalid_argument("the place list needs s or s+1 entries");
    }
  } else {
    places = default_places_ec(ec, req.s);
    pinf = default_expansion_ec(ec, places);
  }
  DivisorEC aux = req.divisor.empty()
                      ? DivisorEC::single(places.at(0), 2 * ec.genus())
                      : parse_divisor_ec(ec, req.divisor);
  ConstructionParams<EllipticFunctionField> params{
      variant, std::move(places), pinf, aux, req.vandermonde};
  RowSystem<EllipticFunctionField> sys(ec, params);
  return build_matrix_set(sys, req.rows, req.cols);
}

int cmd_construct(const ConstructRequest& req, const std::string& out_path,
                  std::ostream& out) {
  auto ms = construct_matrices(req);
  auto text = serialize(ms);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
  file << text;
  if (!file.flush()) throw std::runtime_error("write failed: " + out_path);
  out << "digest=" << text.substr(text.find("digest=") + 7, 16) << "\n";
  return 0;
}

int cmd_points(const std::string& in_path, uint64_t n0, uint64_t count,
               int precision, bool exact, std::ostream& out) {
  auto ms = read_matrix_file(in_path);
  int m = precision > 0 ? precision : ms.jmax;
  uint64_t den = pow_u64(ms.field.size(), m);
  for (uint64_t n = n0; n < n0 + count; ++n) {
    out << n;
    if (exact) {
      for (uint64_t y : net_point(ms, m, n)) out << " " << y << "/" << den;
    } else {
      char buf[32];
      for (double x : net_point_real(ms, m, n)) {
        std::snprintf(buf, sizeof buf, "%.12f", x);
        out << " " << buf;
      }
    }
    out << "\n";
  }
  return 0;
}

int cmd_tvalue(const std::string& in_path, int mmax, std::ostream& out) {
  auto ms = read_matrix_file(in_path);
  if (mmax < 1 || mmax > std::min(ms.jmax, ms.cols))
    throw std::invalid_argument("mmax exceeds matrix size");
  bool all_ok = true;
  for (int m = 1; m <= mmax; ++m) {
    auto rep = check_bound(ms, m);
    out << rep.m << " " << rep.tstar << " " << rep.bound << " " << rep.margin
        << "\n";
    all_ok = all_ok && rep.ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_netcheck(const std::string& in_path, int m, int t, uint64_t offset,
                 std::ostream& out) {
  auto ms = read_matrix_file(in_path);
  bool all_ok = true;
  for (const auto& rep : net_equidistribution(ms, m, t, offset)) {
    out << "shape";
    for (int e : rep.e) out << " " << e;
    out << (rep.ok ? " pass" : " fail") << "\n";
    all_ok = all_ok && rep.ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_expand(const std::string& expr_text, uint32_t q, uint32_t e,
               const std::string& place_list, int precision, std::ostream& out) {
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  Field f(q, e);
  RationalFunctionField ff(f);
  auto toks = split(place_list, ';');
  if (toks.size() != 1)
    throw std::invalid_argument("expand takes a single place");
  auto place = parse_place_g0(f, toks[0]);
  auto elem = parse_ratfunc_expr(ff, expr_text);
  int lo = 0;
  if (!ff.is_zero(elem)) lo = std::min(0, ff.valuation(elem, place));
  auto blocks = ff.expand(elem, place, lo, lo + precision - 1);
  for (int k = 0; k < precision; ++k) {
    out << (lo + k);
    for (const auto& comp : blocks[size_t(k)]) out << " " << f.index(comp);
    out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"generating matrices of digital (T,s)-sequences over function fields",
               "ffnets"};
  app.require_subcommand(1);
  int ret = 0;

  ConstructRequest req;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build and save matrices");
  construct->add_option("--q", req.q, "field characteristic")->required();
  construct->add_option("--e", req.e, "extension degree");
  construct->add_option("--s", req.s, "number of coordinates")->required();
  construct->add_option("--mu", req.mu, "expansion place degree");
  construct->add_option("--variant", req.variant, "genus0 | gpos | xing");
  construct->add_option("--curve", req.curve, "curve text (positive genus)");
  construct->add_option("--places", req.places,
                        "';'-separated places, s or s+1 entries");
  construct->add_option("--D", req.divisor, "auxiliary divisor text");
  construct->add_flag("--vandermonde", req.vandermonde, "power rows (genus 0)");
  construct->add_option("--rows", req.rows, "matrix rows");
  construct->add_option("--cols", req.cols, "matrix columns");
  construct->add_option("--out", out_path, "output file")->required();
  construct->callback([&] {
    req.mu_given = construct->count("--mu") > 0;
    ret = cmd_construct(req, out_path, out);
  });

  std::string in_path;
  uint64_t n0 = 0, count = 16, offset = 0;
  int precision = 0, mmax = 8, m = 0, t = 0;
  bool exact = false;

  auto* points = app.add_subcommand("points", "emit sequence points");
  points->add_option("--in", in_path, "matrix file")->required();
  points->add_option("--n0", n0, "first index");
  points->add_option("--count", count, "number of points");
  points->add_option("--precision", precision, "digits per coordinate");
  points->add_flag("--exact", exact, "print exact y/q^m tokens");
  points->callback([&] { ret = cmd_points(in_path, n0, count, precision, exact, out); });

  auto* tvalue = app.add_subcommand("tvalue", "verified quality parameters");
  tvalue->add_option("--in", in_path, "matrix file")->required();
  tvalue->add_option("--mmax", mmax, "largest resolution");
  tvalue->callback([&] { ret = cmd_tvalue(in_path, mmax, out); });

  auto* netcheck = app.add_subcommand("netcheck", "equidistribution counting");
  netcheck->add_option("--in", in_path, "matrix file")->required();
  netcheck->add_option("--m", m, "resolution")->required();
  netcheck->add_option("--t", t, "quality parameter")->required();
  netcheck->add_option("--offset", offset, "sequence block index");
  netcheck->callback([&] { ret = cmd_netcheck(in_path, m, t, offset, out); });

  std::string expr_text, place_list;
  uint32_t q = 2, e = 1;
  auto* expand = app.add_subcommand("expand", "local expansion of an expression");
  expand->add_option("expression", expr_text, "rational function in x")->required();
  expand->add_option("--q", q, "field characteristic")->required();
  expand->add_option("--e", e, "extension degree");
  expand->add_option("--places", place_list, "expansion place (single entry)")
      ->required();
  expand->add_option("--precision", precision, "coefficients to print");
  expand->callback([&] {
    ret = cmd_expand(expr_text, q, e, place_list, precision > 0 ? precision : 8, out);
  });

  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_flag("--quick", quick, "reduced sweep");
  selftest->callback([&] { ret = run_acceptance(quick, out); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return ret;
}

}  // namespace ffnets
