#pragma once

#include "satogr/grassmann.hpp"
#include "satogr/schur.hpp"

namespace satogr {

struct TauFunction {
  // Element of U.ring() (x) k[x_1..x_d]
  RingElement value;
  // The vacuum coordinate of U that value is divided by.
  RingElement normalization;
};

// Throws PreconditionError unless the vacuum coordinate of u is a unit; returns it.
RingElement big_cell_minor(const GrassPoint& u);

// Vacuum coordinate of v U, v = 1 + sum x_i z^{-i}.
TauFunction tau_direct(const GrassPoint& u, int d);
// sum over partitions of F_l times the coordinate at l.
TauFunction tau_schur(const GrassPoint& u, int d);

// v^{-1} tau(v phi_1(z)) / tau(v) over U.ring() (x) k[x_1..x_d], known below m + 1 - d.
LaurentSeries baker(const GrassPoint& u, int d, int m);
// (tau(t + [z]) / tau(t)) exp(-sum t_i z^{-i}) over U.ring() (x) k[t_1..t_d]; characteristic 0.
LaurentSeries baker_char0(const GrassPoint& u, int d, int m);
// Rewrites an element of R (x) k[x_1..x_d] in the coordinates x_i = [w^i] exp(sum t_j w^j).
RingElement to_power_sum_coordinates(const RingElement& f);
// Whether z^{-1} psi lies in U (x) k[x_1..x_d] on the known window.
bool baker_in_point(const LaurentSeries& psi, const GrassPoint& u);

// Hirota bilinear form of the KP hierarchy, checked on the coefficients of y-weight up to
// order + 2 that the truncation determines. Characteristic 0, 1 <= order <= d - 3.
bool hirota_kp_check(const RingElement& tau, int order);

}  // namespace satogr
