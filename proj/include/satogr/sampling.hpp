#pragma once

#include <cstdint>
#include <random>

#include "satogr/gamma.hpp"
#include "satogr/grassmann.hpp"

// Seeded generators for randomized checks.
namespace satogr::sampling {

using Rng = std::mt19937_64;

// Numerator in [-bound, bound], denominator in [1, bound] (a residue for F_p).
Scalar random_scalar(Rng& rng, const BaseField& f, int bound = 3);
RingElement random_element(Rng& rng, const Ring& r, double density = 0.6);
RingElement random_unit(Rng& rng, const Ring& r);
RingElement random_nilpotent(Rng& rng, const Ring& r);

// Index-0 point with depth n whose columns have constant entries on rows [-n, top]. With
// big_cell the rows [-n, -1] form a unit upper-triangular block, so the vacuum minor is 1.
GrassPoint random_point(Rng& rng, const Ring& r, std::int64_t n, std::int64_t top, bool big_cell = true,
                        int bound = 3);

// Invertible series with valuation in [-2, 2], up to two nilpotent coefficients below the
// unit one, and `tail` further coefficients.
LaurentSeries random_invertible(Rng& rng, const Ring& r, int tail = 24);

// 1 + nilpotent z^{-1..-len} factor and/or 1 + z^{1..len} factor, random unit when asked.
GammaElement random_gamma(Rng& rng, const Ring& r, bool minus, bool plus, int len = 2, bool unit = false);

}  // namespace satogr::sampling
