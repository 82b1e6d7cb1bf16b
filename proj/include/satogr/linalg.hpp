#pragma once

#include <optional>
#include <vector>

#include "satogr/scalars.hpp"

namespace satogr {

using RingMatrix = std::vector<std::vector<RingElement>>;  // row-major
using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Determinant over a truncated (local) ring: elimination on unit pivots, then a
// subset expansion of the remaining all-nilpotent block.
RingElement determinant(const Ring& ring, RingMatrix m);

ScalarMatrix residue_matrix(const RingMatrix& m);
std::size_t rank(ScalarMatrix m);
// Inverse of a square matrix over the base field; throws PreconditionError when singular.
ScalarMatrix inverse(ScalarMatrix m);

// Rows of an n x k matrix of residue rank k that form an invertible k x k minor,
// chosen greedily from the top. Empty optional when the rank is deficient.
std::optional<std::vector<std::size_t>> pivot_rows(const RingMatrix& m);

// Solution of a x = b for a square matrix with unit determinant.
std::vector<RingElement> solve_square(const Ring& ring, RingMatrix a, std::vector<RingElement> b);

}  // namespace satogr
