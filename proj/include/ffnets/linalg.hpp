#pragma once

#include <cstddef>
#include <vector>

#include "ffnets/gf.hpp"

namespace ffnets {

using Row = std::vector<FieldElement>;

/* Reduced row echelon form in place (exact arithmetic, pivot = first nonzero
 * in column order).  Returns the pivot column indices in row order. */
std::vector<size_t> rref_inplace(const Field& f, std::vector<Row>& rows);

size_t rank(const Field& f, std::vector<Row> rows);

/* Basis of the null space of the matrix given by rows over ncols unknowns.
 * Deterministic: one vector per free column in ascending column order, the
 * free coordinate set to 1. */
std::vector<Row> kernel_basis(const Field& f, std::vector<Row> rows, size_t ncols);

/* Whether v lies in the row span of basis. */
bool in_span(const Field& f, const std::vector<Row>& basis, const Row& v);

}  // namespace ffnets
