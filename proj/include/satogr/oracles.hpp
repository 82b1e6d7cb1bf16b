#pragma once

#include <cstdint>
#include <vector>

#include "satogr/grassmann.hpp"
#include "satogr/linalg.hpp"

// Reference computations that avoid the library's own algorithms. Slow by design.
namespace satogr::oracle {

// Leibniz expansion over all permutations.
RingElement leibniz_det(const Ring& ring, const RingMatrix& m);

// Minor of an n x k frame at the given rows (0-based).
RingElement finite_plucker(const Ring& ring, const RingMatrix& frame, const std::vector<std::size_t>& rows);

// lambda_k = #{s in S : s < c_k} for the complement c_1 > c_2 > ...
Partition partition_by_counting(const MayaDiagram& s);

// Every charge-zero Maya diagram whose symmetric difference with {0,1,..} lies in [-w, w).
std::vector<MayaDiagram> maya_diagrams_in_window(int w);

// dim(L ∩ V+) and dim V/(L+V+) from spans in a finite window of exponents [-depth, top).
IndexData index_by_window(const GrassPoint& l);

// Rank over the base field by plain Gauss-Jordan on a copy.
std::size_t field_rank(std::vector<std::vector<Scalar>> m);

// s_l(t_1..t_m) summed over semistandard tableaux; the t_i are all variables of the ring.
RingElement schur_by_tableaux(const Partition& p, const Ring& t_ring);
// Sum of every monomial of degree k in the variables of the ring.
RingElement complete_homogeneous(int k, const Ring& t_ring);

}  // namespace satogr::oracle
