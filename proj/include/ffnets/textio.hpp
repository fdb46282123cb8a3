#pragma once

#include <string>
#include <vector>

#include "ffnets/ellcurve.hpp"
#include "ffnets/ratfunc.hpp"

namespace ffnets {

/* Separator split; tokens are trimmed of surrounding spaces. */
std::vector<std::string> split(const std::string& text, char sep);

uint64_t parse_index(const Field& f, const std::string& text);  // element index

Poly parse_poly(const Field& f, const std::string& text);  // csv, low first

std::string place_text(const Field& f, const PlaceG0& p);
PlaceG0 parse_place_g0(const Field& f, const std::string& text);

std::string place_text(const Field& f, const PlaceEC& p);
PlaceEC parse_place_ec(const EllipticFunctionField& ec, const std::string& text);

std::string curve_text(const Field& f, const Curve& c);
Curve parse_curve(const Field& f, const std::string& text);

std::string divisor_text(const Field& f, const DivisorG0& d);
DivisorG0 parse_divisor_g0(const Field& f, const std::string& text);
std::string divisor_text(const Field& f, const DivisorEC& d);
DivisorEC parse_divisor_ec(const EllipticFunctionField& ec, const std::string& text);

/* Arithmetic expressions over F_q(x): integers are element indices, the
 * letter x, + - * / ^ and parentheses. */
RatFunc parse_ratfunc_expr(const RationalFunctionField& ff, const std::string& text);

}  // namespace ffnets
