#include "ffnets/kits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffnets {

std::vector<PlaceG0> default_places_g0(const RationalFunctionField& ff, int s) {
  if (s < 2) throw std::invalid_argument("need at least two coordinate places");
  auto all = ff.rational_places();
  if (size_t(s) > all.size())
    throw std::invalid_argument(
        "only " + std::to_string(all.size()) + " rational places exist over F_" +
        std::to_string(ff.field().size()) + "; cannot select " + std::to_string(s) +
        " coordinate places");
  return std::vector<PlaceG0>(all.begin(), all.begin() + s);
}

PlaceG0 default_expansion_g0(const RationalFunctionField& ff,
                             const std::vector<PlaceG0>& used, int mu) {
  if (mu < 1) throw std::invalid_argument("expansion place degree must be positive");
  const Field& f = ff.field();
  if (mu == 1) {
    for (const auto& p : ff.rational_places())
      if (std::find(used.begin(), used.end(), p) == used.end()) return p;
    throw std::invalid_argument(
        "all " + std::to_string(f.size() + 1) +
        " rational places are taken by coordinate places; no degree-1 expansion "
        "place remains (need s <= q when mu = 1)");
  }
  uint64_t total = 1;
  for (int r = 0; r < mu; ++r) {
    if (total > (uint64_t(1) << 32) / f.size())
      throw std::invalid_argument("expansion place degree too large");
    total *= f.size();
  }
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FieldElement> cs;
    cs.reserve(mu + 1);
    uint64_t v = idx;
    for (int r = 0; r < mu; ++r) {
      cs.push_back(f.from_index(v % f.size()));
      v /= f.size();
    }
    cs.push_back(f.one());
    Poly cand = poly_make(std::move(cs));
    if (is_irreducible(f, cand)) return PlaceG0::finite(f, cand);
  }
  throw std::logic_error("no irreducible polynomial of the requested degree");
}

std::vector<PlaceEC> default_places_ec(const EllipticFunctionField& ff, int s) {
  if (s < 2) throw std::invalid_argument("need at least two coordinate places");
  std::vector<PlaceEC> affine;
  for (const auto& p : ff.rational_places())
    if (!p.at_inf) affine.push_back(p);
  if (size_t(s) > affine.size())
    throw std::invalid_argument(
        "the curve has only " + std::to_string(affine.size()) +
        " affine rational points; cannot select " + std::to_string(s) +
        " coordinate places");
  return std::vector<PlaceEC>(affine.begin(), affine.begin() + s);
}

PlaceEC default_expansion_ec(const EllipticFunctionField& ff,
                             const std::vector<PlaceEC>& used) {
  for (const auto& p : ff.rational_places())
    if (std::find(used.begin(), used.end(), p) == used.end()) return p;
  throw std::invalid_argument(
      "all rational places of the curve are taken by coordinate places; no "
      "expansion place remains");
}

Curve demo_curve(const Field& f) {
  if (f.size() == 2)
    return Curve{f, f.zero(), f.zero(), f.one(), f.zero(), f.zero()};
  if (f.size() == 3)
    return Curve{f, f.zero(), f.zero(), f.zero(), f.from_residue(-1), f.zero()};
  throw std::invalid_argument("no built-in curve for this field");
}

ConstructionParams<RationalFunctionField> default_genus0_params(
    const RationalFunctionField& ff, int s, int mu, bool vandermonde) {
  auto places = default_places_g0(ff, s);
  auto pinf = default_expansion_g0(ff, places, mu);
  return ConstructionParams<RationalFunctionField>{
      Variant::genus0, std::move(places), std::move(pinf), {}, vandermonde};
}

ConstructionParams<EllipticFunctionField> default_ec_params(
    const EllipticFunctionField& ff, int s, Variant variant) {
  auto places = default_places_ec(ff, s);
  auto pinf = default_expansion_ec(ff, places);
  DivisorEC aux = DivisorEC::single(places[0], 2 * ff.genus());
  return ConstructionParams<EllipticFunctionField>{
      variant, std::move(places), std::move(pinf), std::move(aux), false};
}

}  // namespace ffnets
