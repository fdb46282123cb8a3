#include "ffnets/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ffnets {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(trim(text.substr(pos)));
      return out;
    }
    out.push_back(trim(text.substr(pos, next - pos)));
    pos = next + 1;
  }
}

uint64_t parse_index(const Field& f, const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    bad("expected a field element index, got '" + text + "'");
  uint64_t v = 0;
  try {
    v = std::stoull(t);
  } catch (const std::exception&) {
    bad("expected a field element index, got '" + text + "'");
  }
  if (v >= f.size()) bad("element index " + t + " is out of range for this field");
  return v;
}

Poly parse_poly(const Field& f, const std::string& text) {
  std::vector<uint64_t> idx;
  for (const auto& tok : split(text, ','))
    idx.push_back(parse_index(f, tok));
  return poly_from_indices(f, idx);
}

std::string place_text(const Field& f, const PlaceG0& p) {
  if (p.is_infinite()) return "inf";
  return "poly:" + to_index_string(f, p.poly());
}

PlaceG0 parse_place_g0(const Field& f, const std::string& text) {
  std::string t = trim(text);
  if (t == "inf") return PlaceG0::infinite();
  if (t.rfind("poly:", 0) == 0) return PlaceG0::finite(f, parse_poly(f, t.substr(5)));
  bad("place must be 'inf' or 'poly:<coefficient indices>', got '" + text + "'");
}

std::string place_text(const Field& f, const PlaceEC& p) {
  if (p.at_inf) return "O";
  std::ostringstream out;
  out << "(" << f.index(p.x0) << "," << f.index(p.y0) << ")";
  return out.str();
}

PlaceEC parse_place_ec(const EllipticFunctionField& ec, const std::string& text) {
  std::string t = trim(text);
  if (t == "O") return PlaceEC::infinite();
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    bad("place must be 'O' or '(x,y)', got '" + text + "'");
  auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2) bad("place must be 'O' or '(x,y)', got '" + text + "'");
  const Field& f = ec.field();
  auto x0 = f.from_index(parse_index(f, parts[0]));
  auto y0 = f.from_index(parse_index(f, parts[1]));
  if (!ec.on_curve(x0, y0)) bad("point " + t + " is not on the curve");
  return PlaceEC::affine(x0, y0);
}

std::string curve_text(const Field& f, const Curve& c) {
  std::ostringstream out;
  out << "curve a1=" << f.index(c.a1) << " a2=" << f.index(c.a2)
      << " a3=" << f.index(c.a3) << " a4=" << f.index(c.a4)
      << " a6=" << f.index(c.a6);
  return out.str();
}

Curve parse_curve(const Field& f, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  size_t start = 0;
  if (!toks.empty() && toks[0] == "curve") start = 1;
  Curve c{f, f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
  std::vector<std::string> seen;
  for (size_t k = start; k < toks.size(); ++k) {
    size_t eq = toks[k].find('=');
    if (eq == std::string::npos)
      bad("curve coefficients look like a1=<index>, got '" + toks[k] + "'");
    std::string key = toks[k].substr(0, eq);
    auto val = f.from_index(parse_index(f, toks[k].substr(eq + 1)));
    for (const auto& s : seen)
      if (s == key) bad("curve coefficient " + key + " given twice");
    seen.push_back(key);
    if (key == "a1") c.a1 = val;
    else if (key == "a2") c.a2 = val;
    else if (key == "a3") c.a3 = val;
    else if (key == "a4") c.a4 = val;
    else if (key == "a6") c.a6 = val;
    else bad("unknown curve coefficient '" + key + "'");
  }
  return c;
}

namespace {

template <class Div, class PlaceText>
std::string divisor_text_impl(const Div& d, const PlaceText& ptext) {
  if (d.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [place, coeff] : d.terms()) {
    if (!first) out << " + ";
    first = false;
    out << coeff << "*" << ptext(place);
  }
  return out.str();
}

template <class Div, class ParsePlace>
Div parse_divisor_impl(const std::string& text, const ParsePlace& pplace) {
  Div d;
  std::string t = trim(text);
  if (t == "0" || t.empty()) return d;
  for (const auto& term : split(t, '+')) {
    size_t star = term.find('*');
    if (star == std::string::npos)
      bad("divisor terms look like <coefficient>*<place>, got '" + term + "'");
    std::string ctext = trim(term.substr(0, star));
    bool neg = !ctext.empty() && ctext[0] == '-';
    if (neg) ctext = trim(ctext.substr(1));
    if (ctext.empty() || ctext.find_first_not_of("0123456789") != std::string::npos)
      bad("divisor coefficient must be an integer, got '" + term + "'");
    int coeff = std::stoi(ctext);
    if (neg) coeff = -coeff;
    d.add_term(pplace(trim(term.substr(star + 1))), coeff);
  }
  return d;
}

}  // namespace

std::string divisor_text(const Field& f, const DivisorG0& d) {
  return divisor_text_impl<DivisorG0>(
      d, [&](const PlaceG0& p) { return place_text(f, p); });
}

DivisorG0 parse_divisor_g0(const Field& f, const std::string& text) {
  return parse_divisor_impl<DivisorG0>(
      text, [&](const std::string& t) { return parse_place_g0(f, t); });
}

std::string divisor_text(const Field& f, const DivisorEC& d) {
  return divisor_text_impl<DivisorEC>(
      d, [&](const PlaceEC& p) { return place_text(f, p); });
}

DivisorEC parse_divisor_ec(const EllipticFunctionField& ec, const std::string& text) {
  return parse_divisor_impl<DivisorEC>(
      text, [&](const std::string& t) { return parse_place_ec(ec, t); });
}

namespace {

/* expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
 * unary := '-' unary | factor ; factor := primary ('^' uint)* ;
 * primary := uint | 'x' | '(' expr ')' */
struct ExprParser {
  const RationalFunctionField& ff;
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool take(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    bad("expression error at position " + std::to_string(pos) + ": " + what);
  }

  uint64_t number() {
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected a number");
    return std::stoull(text.substr(start, pos - start));
  }

  RatFunc primary() {
    skip();
    if (pos >= text.size()) fail("expected a value");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      auto inner = expr();
      if (!take(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos;
      return ff.x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t idx = number();
      if (idx >= ff.field().size()) fail("element index out of range");
      return ff.constant(ff.field().from_index(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RatFunc factor() {
    auto base = primary();
    while (take('^')) {
      uint64_t k = number();
      if (k > 1u << 20) fail("exponent too large");
      base = ff.pow(base, uint32_t(k));
    }
    return base;
  }

  RatFunc unary() {
    if (take('-')) return ff.neg(unary());
    return factor();
  }

  RatFunc term() {
    auto acc = unary();
    while (true) {
      if (take('*')) {
        acc = ff.mul(acc, unary());
      } else if (take('/')) {
        auto d = unary();
        if (ff.is_zero(d)) fail("division by zero");
        acc = ff.mul(acc, ff.inv(d));
      } else {
        return acc;
      }
    }
  }

  RatFunc expr() {
    auto acc = term();
    while (true) {
      if (take('+')) {
        acc = ff.add(acc, term());
      } else if (take('-')) {
        acc = ff.sub(acc, term());
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

RatFunc parse_ratfunc_expr(const RationalFunctionField& ff, const std::string& text) {
  ExprParser p{ff, text};
  auto out = p.expr();
  p.skip();
  if (p.pos != text.size())
    bad("expression error at position " + std::to_string(p.pos) + ": trailing input");
  return out;
}

}  // namespace ffnets
