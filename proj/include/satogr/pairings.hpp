#pragma once

#include "satogr/gamma.hpp"
#include "satogr/linalg.hpp"

namespace satogr {

// res(f dg)
RingElement residue_pairing(const LaurentSeries& f, const LaurentSeries& g);

// Sign of the lift convention: [1 + e/z, 1 + t z] = 1 + kCommutatorOrientation * e t.
inline constexpr int kCommutatorOrientation = 1;

// Smallest window on which the commutator of lifts is stable: the sum of the principal
// lengths of both minus factors and of their inverses.
std::int64_t commutator_window_bound(const GammaElement& g1, const GammaElement& g2);

// det of T(g1) T(g2) T(g1)^{-1} T(g2)^{-1} on span{z^0..z^{w-1}}, T(g) = P+ g P+ the
// Toeplitz lift on k[[z]]. Throws PrecisionError when w is below the bound.
RingElement commutator_pairing(const GammaElement& g1, const GammaElement& g2, std::int64_t w);

}  // namespace satogr
