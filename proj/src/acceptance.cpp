#include "ffnets/acceptance.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffnets/cli.hpp"
#include "ffnets/ellcurve.hpp"
#include "ffnets/genmat.hpp"
#include "ffnets/kits.hpp"
#include "ffnets/netverify.hpp"
#include "ffnets/ratfunc.hpp"
#include "ffnets/seqgen.hpp"

namespace ffnets {

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

struct Kit {
  uint32_t q;
  int s;
  int mu;
  const char* variant;
};

std::string kit_tag(const Kit& k) {
  std::ostringstream out;
  out << k.variant << "_q" << k.q << "_s" << k.s << "_mu" << k.mu;
  return out.str();
}

std::string kit_name(const Kit& k) {
  std::ostringstream out;
  out << "(" << k.q << "," << k.s << "," << k.mu << "," << k.variant << ")";
  return out.str();
}

std::vector<std::string> construct_args(const Kit& k, const std::string& path) {
  return {"construct",        "--q",  std::to_string(k.q),
          "--s",              std::to_string(k.s),
          "--mu",             std::to_string(k.mu),
          "--variant",        k.variant,
          "--out",            path};
}

const std::vector<Kit>& genus0_kits() {
  static const std::vector<Kit> kits = {{2, 2, 1, "genus0"},
                                        {2, 3, 2, "genus0"},
                                        {3, 4, 1, "genus0"},
                                        {3, 4, 2, "genus0"},
                                        {5, 6, 1, "genus0"}};
  return kits;
}

const std::vector<Kit>& curve_kits() {
  static const std::vector<Kit> kits = {{2, 2, 1, "gpos"},
                                        {3, 3, 1, "gpos"},
                                        {2, 2, 1, "xing"},
                                        {3, 3, 1, "xing"}};
  return kits;
}

MatrixSet build_g0_kit(uint32_t q, int s, int mu, int depth = 8) {
  Field f(q);
  RationalFunctionField ff(f);
  auto params = default_genus0_params(ff, s, mu);
  RowSystem<RationalFunctionField> sys(ff, params);
  return build_matrix_set(sys, depth, depth);
}

MatrixSet build_ec_kit(uint32_t q, int s, Variant v, int depth = 8) {
  Field f(q);
  EllipticFunctionField ec(demo_curve(f));
  auto params = default_ec_params(ec, s, v);
  RowSystem<EllipticFunctionField> sys(ec, params);
  return build_matrix_set(sys, depth, depth);
}

void each_composition(int total, int s,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> d(size_t(s), 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) {
    if (pos == s - 1) {
      d[size_t(pos)] = left;
      return visit(d);
    }
    for (int v = 0; v <= left; ++v) {
      d[size_t(pos)] = v;
      if (!rec(pos + 1, left - v)) return false;
    }
    return true;
  };
  if (s > 0) rec(0, total);
}

struct Suite {
  std::ostream& out;
  bool quick;
  int passed = 0;
  int total = 0;

  void verdict(int id, const std::string& name, bool pass, const std::string& detail) {
    ++total;
    if (pass) ++passed;
    out << "criterion " << std::setw(2) << std::setfill('0') << id
        << std::setfill(' ') << (pass ? " PASS " : " FAIL ") << name << ": "
        << detail << "\n";
  }
};

void criterion_bound_kits(Suite& st) {
  int mmax = st.quick ? 6 : 8;
  bool pass = true;
  int ok_kits = 0;
  std::string notes;
  for (const auto& kit : genus0_kits()) {
    std::string path = "ffnets_acc_c1_" + kit_tag(kit) + ".ffn";
    auto run = cli(construct_args(kit, path));
    if (run.code != 0) {
      pass = false;
      notes += " " + kit_name(kit) + " -> " + chomp(run.err) + ";";
      continue;
    }
    auto ms = read_matrix_file(path);
    bool kit_ok = true;
    for (int m = 1; m <= mmax; ++m)
      if (minimal_T(ms, m) > m % kit.mu) kit_ok = false;
    if (kit_ok) {
      ++ok_kits;
    } else {
      pass = false;
      notes += " " + kit_name(kit) + " exceeds the residue bound;";
    }
    std::remove(path.c_str());
  }
  std::ostringstream detail;
  detail << ok_kits << "/" << genus0_kits().size() << " kits meet T*(m) <= m mod mu for m <= "
         << mmax << ";" << (notes.empty() ? " all constructible" : notes);
  st.verdict(1, "residue bound on the rational kits", pass, detail.str());
}

void criterion_block_remainder(Suite& st) {
  int mmax = st.quick ? 6 : 8;
  bool pass = true;
  std::string notes;
  for (uint32_t q : {2u, 3u}) {
    int s = int(q) + 1;
    auto ms = build_g0_kit(q, s, 2);
    for (int m = 1; m <= mmax; ++m) {
      int tstar = minimal_T(ms, m);
      int want = m % 2;
      if (tstar > want) {
        pass = false;
        std::ostringstream n;
        n << " q=" << q << " m=" << m << " T*=" << tstar << " > " << want << ";";
        notes += n.str();
      }
    }
  }
  if (notes.empty()) {
    std::ostringstream d;
    d << "pairs-of-columns kits (s = q+1, q in {2,3}): T* = 0 for even m, <= 1 for odd m, m <= "
      << mmax;
    notes = d.str();
  }
  st.verdict(2, "full-width block kits", pass, notes);
}

void criterion_curve_bound(Suite& st) {
  int mmax = st.quick ? 6 : 8;
  bool pass = true;
  int worst = 0;
  for (const auto& [q, s] : std::vector<std::pair<uint32_t, int>>{{2, 2}, {3, 3}}) {
    auto ms = build_ec_kit(q, s, Variant::gpos);
    for (int m = 1; m <= mmax; ++m) {
      int tstar = minimal_T(ms, m);
      worst = std::max(worst, tstar);
      if (tstar > std::min(m, 2)) pass = false;
    }
  }
  std::ostringstream d;
  d << "curve kits (q,s) in {(2,2),(3,3)}: T*(m) <= min(m, 2g) for m <= " << mmax
    << ", largest observed T* = " << worst;
  st.verdict(3, "aux-divisor curve kits within twice the genus", pass, d.str());
}

void criterion_row_deletion_rank(Suite& st) {
  int mmax = st.quick ? 6 : 8;
  bool pass = true;
  long checked = 0;
  for (const auto& [q, s] : std::vector<std::pair<uint32_t, int>>{{2, 2}, {3, 3}}) {
    auto ms = build_ec_kit(q, s, Variant::xing);
    for (int m = 2; m <= mmax; ++m) {
      each_composition(m - 1, s, [&](const std::vector<int>& d) {
        ++checked;
        if (!rows_independent(ms, m, d)) pass = false;
        return pass;
      });
    }
  }
  std::ostringstream d;
  d << checked << " row selections one short of full depth, all independent, m <= "
    << mmax;
  st.verdict(4, "row-deletion kits keep full rank", pass, d.str());
}

void criterion_validation(Suite& st) {
  int jmax = st.quick ? 3 : 5;
  size_t violations = 0;
  int systems = 0;

  auto report_g0 = [&](uint32_t q, int s, int mu) {
    Field f(q);
    RationalFunctionField ff(f);
    auto params = default_genus0_params(ff, s, mu);
    RowSystem<RationalFunctionField> sys(ff, params);
    violations += sys.validate(jmax).violations.size();
    ++systems;
  };
  auto report_ec = [&](uint32_t q, int s, Variant v) {
    Field f(q);
    EllipticFunctionField ec(demo_curve(f));
    auto params = default_ec_params(ec, s, v);
    RowSystem<EllipticFunctionField> sys(ec, params);
    violations += sys.validate(jmax).violations.size();
    ++systems;
  };

  report_g0(2, 2, 1);
  report_g0(2, 3, 2);
  report_g0(3, 4, 2);
  report_ec(2, 2, Variant::gpos);
  report_ec(3, 3, Variant::gpos);
  report_ec(2, 2, Variant::xing);
  report_ec(3, 3, Variant::xing);

  std::ostringstream d;
  d << systems << " constructible kits validated to depth " << jmax << ", "
    << violations << " violations";
  st.verdict(5, "valuation and rank identities of the row systems", violations == 0,
             d.str());
}

void criterion_joint_independence(Suite& st) {
  bool pass = true;
  std::string notes;
  for (const auto& [q, s] : std::vector<std::pair<uint32_t, int>>{{2, 2}, {3, 3}}) {
    Field f(q);
    EllipticFunctionField ec(demo_curve(f));
    auto params = default_ec_params(ec, s, Variant::xing);
    RowSystem<EllipticFunctionField> sys(ec, params);
    std::vector<FuncEC> elems = sys.gap_functions();
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= 3; ++j) elems.push_back(sys.row_function(i, j));
    int want = int(elems.size());
    int got = independence_rank(ec, elems, params.pinf, want + 4);
    std::ostringstream n;
    n << (notes.empty() ? "" : " ") << "q=" << q << ": rank " << got << "/" << want
      << ";";
    notes += n.str();
    if (got != want) pass = false;
  }
  st.verdict(6, "gap function joins the rows independently", pass, notes);
}

void criterion_offset_nets(Suite& st) {
  auto ms = build_g0_kit(2, 2, 1);
  bool pass = true;
  int shapes = 0;
  for (uint64_t offset = 0; offset < 3; ++offset)
    for (const auto& rep : net_equidistribution(ms, 4, 0, offset)) {
      ++shapes;
      if (!rep.ok) pass = false;
    }
  std::ostringstream d;
  d << shapes << " shape/offset pairs at m=4, one point per box in every one";
  st.verdict(7, "offset blocks of the classical kit are perfect nets", pass, d.str());
}

void criterion_pascal(Suite& st) {
  auto ms = build_g0_kit(2, 2, 1);
  std::vector<std::vector<int>> b(16, std::vector<int>(16, 0));
  for (int i = 0; i < 16; ++i) {
    b[size_t(i)][0] = 1;
    for (int k = 1; k <= i; ++k)
      b[size_t(i)][size_t(k)] =
          (b[size_t(i - 1)][size_t(k - 1)] + b[size_t(i - 1)][size_t(k)]) % 2;
  }
  bool pass = true;
  for (int j = 1; j <= 8; ++j)
    for (int k = 0; k < 8; ++k) {
      uint64_t want = k <= j - 1 ? uint64_t(b[size_t(j - 1)][size_t(k)]) : 0;
      if (ms.field.index(ms.at(1, j, k)) != want) pass = false;
    }
  st.verdict(8, "first matrix of the classical kit is Pascal mod 2", pass,
             "all 64 entries match the binomial recurrence");
}

void criterion_algebra(Suite& st) {
  std::mt19937 rng(2026);
  int rr_g0 = 0, rr_ec = 0;
  long val_pairs = 0, lin_pairs = 0;
  bool pass = true;
  std::string notes;

  auto note = [&](const std::string& s) {
    pass = false;
    if (notes.size() < 200) notes += " " + s + ";";
  };

  int g0_trials = st.quick ? 13 : 25;
  for (uint32_t q : {2u, 3u}) {
    Field f(q);
    RationalFunctionField ff(f);
    auto pool = ff.rational_places();
    pool.push_back(default_expansion_g0(ff, pool, 2));
    for (int trial = 0; trial < g0_trials; ++trial) {
      DivisorG0 d;
      for (const auto& p : pool)
        if (rng() % 2) d.add_term(p, int(rng() % 7) - 3);
      long deg = d.degree();
      size_t want = deg >= 0 ? size_t(deg) + 1 : 0;
      if (ff.rr_basis(d).size() != want) note("genus-0 dimension mismatch");
      ++rr_g0;
    }
  }

  int ec_trials = st.quick ? 10 : 10;
  for (uint32_t q : {2u, 3u}) {
    Field f(q);
    EllipticFunctionField ec(demo_curve(f));
    auto pool = ec.rational_places();
    for (int trial = 0; trial < ec_trials; ++trial) {
      DivisorEC d;
      for (const auto& p : pool)
        if (rng() % 2) d.add_term(p, int(rng() % 4) - 1);
      long deg = d.degree();
      if (deg < 1) {
        d.add_term(pool[0], int(1 - deg));
        deg = 1;
      }
      if (ec.rr_basis(d).size() != size_t(deg)) note("curve dimension mismatch");
      ++rr_ec;
    }
  }

  auto rand_poly = [&](const Field& f, int maxdeg) {
    std::vector<uint64_t> idx;
    int deg = int(rng() % uint32_t(maxdeg + 1));
    for (int i = 0; i <= deg; ++i) idx.push_back(rng() % f.size());
    return poly_from_indices(f, idx);
  };

  int vg0 = st.quick ? 150 : 600, vec = st.quick ? 100 : 400;
  for (uint32_t q : {2u, 3u}) {
    Field f(q);
    RationalFunctionField ff(f);
    auto pool = ff.rational_places();
    pool.push_back(default_expansion_g0(ff, pool, 2));
    auto rand_nonzero = [&](int maxdeg) {
      Poly p = rand_poly(f, maxdeg);
      while (p.is_zero()) p = rand_poly(f, maxdeg);
      return p;
    };
    for (int done = 0; done < vg0 / 2; ++done) {
      auto a = ff.make(rand_nonzero(3), rand_nonzero(3));
      auto b = ff.make(rand_nonzero(3), rand_nonzero(3));
      const auto& p = pool[rng() % pool.size()];
      if (ff.valuation(ff.mul(a, b), p) != ff.valuation(a, p) + ff.valuation(b, p))
        note("genus-0 valuation not additive");
      ++val_pairs;
    }
    EllipticFunctionField ec(demo_curve(f));
    auto epool = ec.rational_places();
    auto rand_ec = [&]() {
      return ec.make(rand_poly(f, 2), rand_poly(f, 2), rand_nonzero(2));
    };
    for (int done = 0; done < vec / 2;) {
      auto a = rand_ec();
      auto b = rand_ec();
      if (ec.is_zero(a) || ec.is_zero(b)) continue;
      const auto& p = epool[rng() % epool.size()];
      if (ec.valuation(ec.mul(a, b), p) != ec.valuation(a, p) + ec.valuation(b, p))
        note("curve valuation not additive");
      ++val_pairs;
      ++done;
    }
  }

  int lg0 = st.quick ? 150 : 600, lec = st.quick ? 100 : 400;
  const int window = 6;
  for (uint32_t q : {2u, 3u}) {
    Field f(q);
    RationalFunctionField ff(f);
    auto pool = ff.rational_places();
    pool.push_back(default_expansion_g0(ff, pool, 2));
    auto rand_nonzero = [&](int maxdeg) {
      Poly p = rand_poly(f, maxdeg);
      while (p.is_zero()) p = rand_poly(f, maxdeg);
      return p;
    };
    for (int trial = 0; trial < lg0 / 2; ++trial) {
      auto a = ff.make(rand_poly(f, 3), rand_nonzero(3));
      auto b = ff.make(rand_poly(f, 3), rand_nonzero(3));
      auto ca = f.from_index(rng() % f.size());
      auto cb = f.from_index(rng() % f.size());
      const auto& p = pool[rng() % pool.size()];
      int lo = 0;
      if (!ff.is_zero(a)) lo = std::min(lo, ff.valuation(a, p));
      if (!ff.is_zero(b)) lo = std::min(lo, ff.valuation(b, p));
      auto lhs = ff.expand(ff.add(ff.scalar_mul(ca, a), ff.scalar_mul(cb, b)), p,
                           lo, lo + window);
      auto ea = ff.expand(a, p, lo, lo + window);
      auto eb = ff.expand(b, p, lo, lo + window);
      for (size_t k = 0; k < lhs.size(); ++k)
        for (size_t r = 0; r < lhs[k].size(); ++r) {
          auto want = f.add(f.mul(ca, ea[k][r]), f.mul(cb, eb[k][r]));
          if (!(lhs[k][r] == want)) note("genus-0 expansion not linear");
        }
      ++lin_pairs;
    }
    EllipticFunctionField ec(demo_curve(f));
    auto epool = ec.rational_places();
    auto rand_ec = [&]() {
      return ec.make(rand_poly(f, 2), rand_poly(f, 2), rand_nonzero(2));
    };
    for (int trial = 0; trial < lec / 2; ++trial) {
      auto a = rand_ec();
      auto b = rand_ec();
      auto ca = f.from_index(rng() % f.size());
      auto cb = f.from_index(rng() % f.size());
      const auto& p = epool[rng() % epool.size()];
      int lo = 0;
      if (!ec.is_zero(a)) lo = std::min(lo, ec.valuation(a, p));
      if (!ec.is_zero(b)) lo = std::min(lo, ec.valuation(b, p));
      auto lhs = ec.expand(ec.add(ec.scalar_mul(ca, a), ec.scalar_mul(cb, b)), p,
                           lo, lo + window);
      auto ea = ec.expand(a, p, lo, lo + window);
      auto eb = ec.expand(b, p, lo, lo + window);
      for (size_t k = 0; k < lhs.size(); ++k)
        for (size_t r = 0; r < lhs[k].size(); ++r) {
          auto want = f.add(f.mul(ca, ea[k][r]), f.mul(cb, eb[k][r]));
          if (!(lhs[k][r] == want)) note("curve expansion not linear");
        }
      ++lin_pairs;
    }
  }

  std::ostringstream d;
  d << rr_g0 << " genus-0 dimensions, " << rr_ec << " curve dimensions, "
    << val_pairs << " valuation pairs, " << lin_pairs
    << " linearity pairs, all exact" << notes;
  st.verdict(9, "algebra layer spot checks", pass, d.str());
}

void criterion_determinism(Suite& st) {
  bool pass = true;
  int identical = 0, constructible = 0;
  std::string notes;
  std::vector<Kit> kits = genus0_kits();
  for (const auto& k : curve_kits()) kits.push_back(k);
  for (const auto& kit : kits) {
    std::string pa = "ffnets_acc_c10_" + kit_tag(kit) + "_a.ffn";
    std::string pb = "ffnets_acc_c10_" + kit_tag(kit) + "_b.ffn";
    auto ra = cli(construct_args(kit, pa));
    auto rb = cli(construct_args(kit, pb));
    if (ra.code != 0 || rb.code != 0) {
      pass = false;
      bool same_error = ra.code == rb.code && ra.err == rb.err;
      notes += " " + kit_name(kit) + " produces no file (" +
               (same_error ? "error text reproducible" : "errors differ!") + ");";
      continue;
    }
    ++constructible;
    std::string ba = slurp(pa), bb = slurp(pb);
    if (!ba.empty() && ba == bb && ra.out == rb.out) {
      ++identical;
    } else {
      pass = false;
      notes += " " + kit_name(kit) + " bytes differ;";
    }
    std::remove(pa.c_str());
    std::remove(pb.c_str());
  }
  std::ostringstream d;
  d << identical << "/" << constructible
    << " constructible kits byte-identical across runs out of " << kits.size()
    << " kits total;" << (notes.empty() ? " no exceptions" : notes);
  st.verdict(10, "repeated runs reproduce every kit file", pass, d.str());
}

}  // namespace

int run_acceptance(bool quick, std::ostream& out) {
  Suite st{out, quick};
  criterion_bound_kits(st);
  criterion_block_remainder(st);
  criterion_curve_bound(st);
  criterion_row_deletion_rank(st);
  criterion_validation(st);
  criterion_joint_independence(st);
  criterion_offset_nets(st);
  criterion_pascal(st);
  criterion_algebra(st);
  criterion_determinism(st);
  out << "criteria passed: " << st.passed << "/" << st.total << "\n";
  return st.passed == st.total ? 0 : 1;
}

}  // namespace ffnets
