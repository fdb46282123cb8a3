#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffnets/linalg.hpp"

namespace ffnets {

/* genus0: rational function field, one-dimensional space per row.
 * gpos:   positive genus with an auxiliary divisor, same block column layout.
 * xing:   positive genus, rational expansion place, gap columns deleted. */
enum class Variant { genus0, gpos, xing };

const char* variant_token(Variant v);
Variant parse_variant(const std::string& token);  // throws std::invalid_argument

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/* Construction input: coordinate places P_1..P_s (rational, pairwise
 * distinct), an expansion place distinct from all of them, and for the
 * positive-genus variants a positive auxiliary divisor of degree 2g whose
 * support avoids the expansion place and P_2..P_s. */
template <class FF>
struct ConstructionParams {
  Variant variant = Variant::genus0;
  std::vector<typename FF::Place> places;
  typename FF::Place pinf;
  typename FF::Div aux;
  bool vandermonde = false;  // genus0 only: geometric-progression rows
};

/* Chooses and caches the functions whose expansion coefficients at the
 * expansion place fill the matrix rows.  Every choice is deterministic; the
 * canonical rr_basis order breaks all ties. */
template <class FF>
class RowSystem {
 public:
  using Element = typename FF::Element;
  using Place = typename FF::Place;
  using Div = typename FF::Div;

  RowSystem(const FF& ff, ConstructionParams<FF> params)
      : ff_(&ff), params_(std::move(params)) {
    check_params();
    if (params_.variant == Variant::xing) compute_gaps();
  }

  const FF& ff() const { return *ff_; }
  const ConstructionParams<FF>& params() const { return params_; }
  int s() const { return int(params_.places.size()); }
  int mu() const { return params_.pinf.degree(); }
  Variant variant() const { return params_.variant; }

  /* The function behind row j (1-based) of matrix i (1-based). */
  const Element& row_function(int i, int j);

  /* Row-deletion data (xing only): the expansion indices to drop, ascending,
   * one per genus, and the functions realizing them. */
  const std::vector<int>& gap_indices() const { return gap_indices_; }
  const std::vector<Element>& gap_functions() const { return gap_functions_; }

  /* Checks the valuation profile of every row function with j <= j_max plus
   * joint linear independence.  Empty report = all identities hold. */
  ValidationReport validate(int j_max);

 private:
  void check_params() const;
  void compute_gaps();
  Element choose(int i, int j) const;
  Element choose_genus0(int i, int j) const;
  Element choose_gpos(int i, int j) const;

  Row coord_row(const Element& e, int hi) const;
  std::vector<Row> coord_rows(const std::vector<Element>& es, int hi) const;
  const Element& first_outside(const std::vector<Element>& big,
                               const std::vector<Row>& subrows, int hi) const;

  const FF* ff_;
  ConstructionParams<FF> params_;
  std::map<std::pair<int, int>, Element> rows_;
  std::vector<int> gap_indices_;
  std::vector<Element> gap_functions_;
};

template <class FF>
void RowSystem<FF>::check_params() const {
  const auto& pr = params_;
  if (pr.places.size() < 2)
    throw std::invalid_argument("need at least two coordinate places");
  for (const auto& p : pr.places)
    if (p.degree() != 1)
      throw std::invalid_argument("coordinate places must be rational");
  for (size_t a = 0; a < pr.places.size(); ++a)
    for (size_t b = a + 1; b < pr.places.size(); ++b)
      if (pr.places[a] == pr.places[b])
        throw std::invalid_argument("coordinate places must be distinct");
  for (const auto& p : pr.places)
    if (p == pr.pinf)
      throw std::invalid_argument("expansion place collides with a coordinate place");
  if (pr.pinf.degree() < 1)
    throw std::invalid_argument("expansion place degree must be positive");
  int g = ff_->genus();
  if (pr.variant == Variant::genus0) {
    if (g != 0)
      throw std::invalid_argument("variant genus0 needs a genus-zero field");
    if (!pr.aux.terms().empty())
      throw std::invalid_argument("variant genus0 takes no auxiliary divisor");
  } else {
    if (g < 1)
      throw std::invalid_argument("variant needs a field of positive genus");
    if (pr.vandermonde)
      throw std::invalid_argument("vandermonde rows exist in genus zero only");
    if (!pr.aux.is_effective() || pr.aux.degree() != 2 * g)
      throw std::invalid_argument("auxiliary divisor must be positive of degree 2g");
    for (const auto& [p, n] : pr.aux.terms()) {
      if (p == pr.pinf)
        throw std::invalid_argument("auxiliary divisor must avoid the expansion place");
      for (size_t i = 1; i < pr.places.size(); ++i)
        if (p == pr.places[i])
          throw std::invalid_argument(
              "auxiliary divisor must avoid every coordinate place after the first");
    }
    if (pr.variant == Variant::xing && pr.pinf.degree() != 1)
      throw std::invalid_argument("variant xing needs a rational expansion place");
  }
}

/* The gap indices are the n in [0, 2g) where L(aux - P_1 - n pinf) drops as n
 * grows; exactly g drops exist between dimension g at n = 0 and 0 at n = 2g. */
template <class FF>
void RowSystem<FF>::compute_gaps() {
  int g = ff_->genus();
  int hi = 2 * g + 2;
  Div base = params_.aux - Div::single(params_.places[0], 1);
  std::vector<std::vector<Element>> bases;
  bases.reserve(2 * g + 1);
  for (int n = 0; n <= 2 * g; ++n)
    bases.push_back(ff_->rr_basis(base - Div::single(params_.pinf, n)));
  if (int(bases[0].size()) != g || !bases[2 * g].empty())
    throw std::logic_error("gap dimension profile out of range");
  for (int n = 0; n < 2 * g; ++n) {
    size_t d0 = bases[n].size(), d1 = bases[n + 1].size();
    if (d0 == d1) continue;
    if (d0 != d1 + 1) throw std::logic_error("gap dimension profile out of range");
    gap_indices_.push_back(n);
    gap_functions_.push_back(first_outside(bases[n], coord_rows(bases[n + 1], hi), hi));
  }
  if (int(gap_indices_.size()) != g)
    throw std::logic_error("gap dimension profile out of range");
}

template <class FF>
const typename RowSystem<FF>::Element& RowSystem<FF>::row_function(int i, int j) {
  if (i < 1 || i > s() || j < 1) throw std::out_of_range("row function index");
  auto key = std::make_pair(i, j);
  auto it = rows_.find(key);
  if (it == rows_.end()) it = rows_.emplace(key, choose(i, j)).first;
  return it->second;
}

template <class FF>
typename RowSystem<FF>::Element RowSystem<FF>::choose(int i, int j) const {
  return params_.variant == Variant::genus0 ? choose_genus0(i, j) : choose_gpos(i, j);
}

template <class FF>
typename RowSystem<FF>::Element RowSystem<FF>::choose_genus0(int i, int j) const {
  const auto& p1 = params_.places[0];
  const auto& pi = params_.places[i - 1];
  Div step = (i == 1) ? Div::single(p1, 1) - Div::single(params_.places[1], 1)
                      : Div::single(pi, 1) - Div::single(p1, 1);
  int power = (i == 1) ? j - 1 : j;
  if (params_.vandermonde) {
    auto basis = ff_->rr_basis(step);
    if (basis.size() != 1) throw std::logic_error("expected a one-dimensional space");
    return ff_->pow(basis[0], uint32_t(power));
  }
  auto basis = ff_->rr_basis(step.scaled(power));
  if (basis.size() != 1) throw std::logic_error("expected a one-dimensional space");
  return basis[0];
}

/* Positive genus.  Row i = 1 avoids one subspace; rows i >= 2 avoid two.  In
 * the two-subspace case pick u outside the first and v outside the second:
 * one of u, v, u + v lies outside both. */
template <class FF>
typename RowSystem<FF>::Element RowSystem<FF>::choose_gpos(int i, int j) const {
  int hi = 2 * ff_->genus() + 2;
  const auto& p1 = params_.places[0];
  if (i == 1) {
    const auto& p2 = params_.places[1];
    Div big = params_.aux + Div::single(p1, j - 1) - Div::single(p2, j - 1);
    Div sub = params_.aux + Div::single(p1, j - 2) - Div::single(p2, j - 1);
    return first_outside(ff_->rr_basis(big), coord_rows(ff_->rr_basis(sub), hi), hi);
  }
  const auto& pi = params_.places[i - 1];
  Div big = params_.aux + Div::single(pi, j) - Div::single(p1, j);
  Div sub1 = params_.aux + Div::single(pi, j) - Div::single(p1, j + 1);
  Div sub2 = params_.aux + Div::single(pi, j - 1) - Div::single(p1, j);
  auto basis = ff_->rr_basis(big);
  auto rows1 = coord_rows(ff_->rr_basis(sub1), hi);
  auto rows2 = coord_rows(ff_->rr_basis(sub2), hi);
  const Element& u = first_outside(basis, rows1, hi);
  const Element& v = first_outside(basis, rows2, hi);
  if (!in_span(ff_->field(), rows2, coord_row(u, hi))) return u;
  if (!in_span(ff_->field(), rows1, coord_row(v, hi))) return v;
  return ff_->add(u, v);
}

/* Expansion coefficients at the expansion place over [0, hi], flattened to
 * one vector per element.  The window is injective on every space handled
 * here: member functions have pole degree at most 2g away from the expansion
 * place, so agreement through index 2g forces equality. */
template <class FF>
Row RowSystem<FF>::coord_row(const Element& e, int hi) const {
  auto blocks = ff_->expand(e, params_.pinf, 0, hi);
  Row r;
  r.reserve(blocks.size() * size_t(mu()));
  for (const auto& blk : blocks) r.insert(r.end(), blk.begin(), blk.end());
  return r;
}

template <class FF>
std::vector<Row> RowSystem<FF>::coord_rows(const std::vector<Element>& es, int hi) const {
  std::vector<Row> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(coord_row(e, hi));
  return out;
}

template <class FF>
const typename RowSystem<FF>::Element& RowSystem<FF>::first_outside(
    const std::vector<Element>& big, const std::vector<Row>& subrows, int hi) const {
  for (const auto& e : big)
    if (!in_span(ff_->field(), subrows, coord_row(e, hi))) return e;
  throw std::logic_error("space difference is empty");
}

template <class FF>
ValidationReport RowSystem<FF>::validate(int j_max) {
  ValidationReport rep;
  auto note = [&](const std::string& where, const std::string& what) {
    rep.violations.push_back(where + ": " + what);
  };
  auto spot = [](int i, int j) {
    return "matrix " + std::to_string(i) + " row " + std::to_string(j);
  };
  int g = ff_->genus();
  int vaux1 = params_.aux.coeff(params_.places[0]);
  for (int i = 1; i <= s(); ++i)
    for (int j = 1; j <= j_max; ++j) {
      const Element& b = row_function(i, j);
      if (ff_->is_zero(b)) {
        note(spot(i, j), "zero function");
        continue;
      }
      for (int h = 1; h <= s(); ++h) {
        int v = ff_->valuation(b, params_.places[h - 1]);
        int want = 0;
        bool exact = false;
        if (variant() == Variant::genus0) {
          if (i == 1) {
            want = (h == 1) ? -(j - 1) : (h == 2 ? j - 1 : 0);
            exact = h <= 2;
          } else {
            want = (h == i) ? -j : (h == 1 ? j : 0);
            exact = h == i || h == 1;
          }
        } else {
          if (i == 1) {
            want = (h == 1) ? -(j - 1) - vaux1 : (h == 2 ? j - 1 : 0);
            exact = h == 1;
          } else {
            want = (h == i) ? -j : (h == 1 ? j - vaux1 : 0);
            exact = h == i || h == 1;
          }
        }
        if (exact ? v != want : v < want)
          note(spot(i, j), "order " + std::to_string(v) + " at coordinate place " +
                               std::to_string(h) + ", expected " +
                               (exact ? "" : "at least ") + std::to_string(want));
      }
      if (ff_->valuation(b, params_.pinf) < 0)
        note(spot(i, j), "pole at the expansion place");
    }
  if (variant() == Variant::xing) {
    for (size_t f = 0; f < gap_functions_.size(); ++f) {
      const Element& w = gap_functions_[f];
      std::string where = "gap function " + std::to_string(f + 1);
      if (ff_->is_zero(w)) {
        note(where, "zero function");
        continue;
      }
      if (ff_->valuation(w, params_.pinf) != gap_indices_[f])
        note(where, "expansion order differs from its gap index");
      if (ff_->valuation(w, params_.places[0]) < 1 - vaux1)
        note(where, "pole too deep at the first coordinate place");
      for (int h = 2; h <= s(); ++h)
        if (ff_->valuation(w, params_.places[h - 1]) < 0)
          note(where, "pole at coordinate place " + std::to_string(h));
    }
    for (size_t f = 0; f < gap_indices_.size(); ++f)
      if (gap_indices_[f] < 0 || gap_indices_[f] >= 2 * g ||
          (f > 0 && gap_indices_[f] <= gap_indices_[f - 1]))
        note("gap indices", "not strictly increasing within [0, 2g)");
  }
  std::vector<Element> all;
  for (int i = 1; i <= s(); ++i)
    for (int j = 1; j <= j_max; ++j) all.push_back(row_function(i, j));
  for (const Element& w : gap_functions_) all.push_back(w);
  int hi = int(all.size()) + 2 * g + 2;
  if (rank(ff_->field(), coord_rows(all, hi)) != all.size())
    note("joint system", "expansion rank deficit, functions dependent");
  return rep;
}

}  // namespace ffnets
