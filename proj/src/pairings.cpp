#include "satogr/pairings.hpp"

namespace satogr {

RingElement residue_pairing(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_ring(f.ring(), g.ring(), "residue_pairing");
  return residue(f * g.derivative());
}

std::int64_t commutator_window_bound(const GammaElement& g1, const GammaElement& g2) {
  std::int64_t b = 0;
  for (const auto* g : {&g1, &g2}) {
    b += g->principal_length();
    b += -laurent_invert(g->gminus()).min_exp();
  }
  return b;
}

namespace {

struct Lift {
  LaurentSeries forward;  // g
  LaurentSeries a_inv, c_inv, b_inv;
};

Lift make_lift(const GammaElement& g, std::int64_t cap) {
  return {g.series(), laurent_invert(g.gminus()), LaurentSeries::monomial(g.ring(), 0, g.unit().inverse()),
          power_series_inverse(g.gplus(), cap)};
}

LaurentSeries apply(const Lift& l, const LaurentSeries& f) { return (l.forward * f).nonnegative_part(); }

LaurentSeries apply_inverse(const Lift& l, const LaurentSeries& f) {
  return l.b_inv * l.c_inv * (l.a_inv * f).nonnegative_part();
}

}  // namespace

RingElement commutator_pairing(const GammaElement& g1, const GammaElement& g2, std::int64_t w) {
  require_same_ring(g1.ring(), g2.ring(), "commutator_pairing");
  if (g1.zpower() != 0 || g2.zpower() != 0) throw PreconditionError("commutator pairing needs z-power 0");
  const std::int64_t bound = commutator_window_bound(g1, g2);
  if (w < bound)
    throw PrecisionError("pair window " + std::to_string(w) + " is below the stability bound " + std::to_string(bound));
  const Ring& ring = g1.ring();
  const std::int64_t cap = w + bound + 2;
  const Lift l1 = make_lift(g1, cap), l2 = make_lift(g2, cap);
  RingMatrix m(static_cast<std::size_t>(w), std::vector<RingElement>(static_cast<std::size_t>(w), RingElement(ring)));
  for (std::int64_t j = 0; j < w; ++j) {
    LaurentSeries v = LaurentSeries::monomial(ring, j, 1).truncated(cap);
    v = apply(l1, apply(l2, apply_inverse(l1, apply_inverse(l2, v))));
    for (std::int64_t r = 0; r < w; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = v.coeff(r);
  }
  return determinant(ring, std::move(m));
}

}  // namespace satogr
