#pragma once

#include <cstdint>
#include <vector>

#include "ffnets/genmat.hpp"

namespace ffnets {

uint64_t pow_u64(uint64_t base, int exp);  // throws std::overflow_error

/* Base-q digits of n, least significant first, exactly m of them. */
std::vector<FieldElement> index_digits(const Field& f, uint64_t n, int m);

/* Coordinate numerators of point n at resolution m: x_i = out[i-1] / q^m.
 * All digits of n feed the matrix columns, so offset blocks work too. */
std::vector<uint64_t> net_point(const MatrixSet& ms, int m, uint64_t n);

std::vector<double> net_point_real(const MatrixSet& ms, int m, uint64_t n);

}  // namespace ffnets
