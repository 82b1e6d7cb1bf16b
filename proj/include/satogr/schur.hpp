#pragma once

#include <utility>
#include <vector>

#include "satogr/grassmann.hpp"

namespace satogr {

// Position of the last variable block, taken as the coordinate block x_1..x_d.
std::size_t coordinate_block_index(const Ring& ring);

// Jacobi-Trudi determinant det(x_{l_i - i + j}) over a ring whose last block is the
// coordinate block; needs |l| <= the block bound.
RingElement schur(const Partition& p, const Ring& ring);
RingElement schur(const Partition& p, const BaseField& field, int d);

// Coefficients in the Schur basis of an element of coordinate_ring(field, d), for every
// partition of size <= d in partition order.
std::vector<std::pair<Partition, Scalar>> schur_expand(const RingElement& f);
Scalar duality_pair(const RingElement& f, const RingElement& g);

// sum coords(l) * F_l over ring (x) k[x_1..x_d]; coordinates live in `ring`.
RingElement bosonize(const std::vector<std::pair<Partition, RingElement>>& coords, const Ring& ring, int d);
// The ring (x) k[x_1..x_d] with the coordinate block appended.
Ring with_coordinates(const Ring& ring, int d, const std::string& prefix = "x");

}  // namespace satogr
