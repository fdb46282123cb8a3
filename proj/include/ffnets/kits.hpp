#pragma once

#include "ffnets/construct.hpp"
#include "ffnets/ellcurve.hpp"
#include "ffnets/ratfunc.hpp"

namespace ffnets {

/* Default place selection.  All choices are deterministic so that repeated
 * runs with the same flags produce identical output. */

/* The infinite place, then the finite rational places in index order. */
std::vector<PlaceG0> default_places_g0(const RationalFunctionField& ff, int s);

/* Smallest (index order) monic irreducible of degree mu whose place is not
 * among the used ones. */
PlaceG0 default_expansion_g0(const RationalFunctionField& ff,
                             const std::vector<PlaceG0>& used, int mu);

/* Affine rational points of the curve in enumeration order. */
std::vector<PlaceEC> default_places_ec(const EllipticFunctionField& ff, int s);

/* First rational place not used as a coordinate place; the point at infinity
 * whenever it is free. */
PlaceEC default_expansion_ec(const EllipticFunctionField& ff,
                             const std::vector<PlaceEC>& used);

/* Built-in demonstration curves: y^2 + y = x^3 over F_2, y^2 = x^3 - x over
 * F_3.  Throws for other fields. */
Curve demo_curve(const Field& f);

ConstructionParams<RationalFunctionField> default_genus0_params(
    const RationalFunctionField& ff, int s, int mu, bool vandermonde = false);

/* Coordinate places from default_places_ec, expansion place from
 * default_expansion_ec, auxiliary divisor 2g times the first place. */
ConstructionParams<EllipticFunctionField> default_ec_params(
    const EllipticFunctionField& ff, int s, Variant variant);

}  // namespace ffnets
