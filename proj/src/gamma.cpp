#include "satogr/gamma.hpp"

namespace satogr {

namespace {

void check_minus(const LaurentSeries& g) {
  if (!g.exact()) throw PreconditionError("gminus must be exact");
  if (g.max_exp() > 0) throw PreconditionError("gminus has positive exponents");
  if (!g.coeff(0).is_one()) throw PreconditionError("gminus must have constant term 1");
  for (std::int64_t e = g.min_exp(); e < 0; ++e)
    if (!g.coeff(e).is_nilpotent()) throw PreconditionError("gminus has a non-nilpotent coefficient at z^" + std::to_string(e));
}

void check_plus(const LaurentSeries& g) {
  if (g.trunc() <= 0) throw PrecisionError("gplus is not determined at z^0");
  if (g.min_exp() < 0) throw PreconditionError("gplus has negative exponents");
  if (!g.coeff(0).is_one()) throw PreconditionError("gplus must have constant term 1");
}

}  // namespace

GammaElement GammaElement::make(LaurentSeries gminus, RingElement unit, LaurentSeries gplus, std::int64_t zpower) {
  require_same_ring(gminus.ring(), unit.ring(), "gamma");
  require_same_ring(gplus.ring(), unit.ring(), "gamma");
  check_minus(gminus);
  check_plus(gplus);
  if (!unit.is_unit()) throw PreconditionError("gamma unit factor is not invertible");
  GammaElement g;
  g.gminus_ = std::move(gminus);
  g.unit_ = std::move(unit);
  g.gplus_ = std::move(gplus);
  g.zpower_ = zpower;
  return g;
}

GammaElement GammaElement::identity(const Ring& ring) {
  return make(LaurentSeries::one(ring), RingElement::constant(ring, 1), LaurentSeries::one(ring));
}

GammaElement GammaElement::minus(const LaurentSeries& gminus) {
  const Ring& r = gminus.ring();
  return make(gminus, RingElement::constant(r, 1), LaurentSeries::one(r));
}

GammaElement GammaElement::plus(const LaurentSeries& gplus) {
  const Ring& r = gplus.ring();
  return make(LaurentSeries::one(r), RingElement::constant(r, 1), gplus);
}

LaurentSeries GammaElement::series() const { return (gminus_ * gplus_ * unit_).shifted(zpower_); }

GammaElement GammaElement::inverse(std::optional<std::int64_t> cap) const {
  return make(laurent_invert(gminus_), unit_.inverse(), power_series_inverse(gplus_, cap), -zpower_);
}

bool GammaElement::agrees_with(const GammaElement& other) const {
  return zpower_ == other.zpower_ && unit_ == other.unit_ && gminus_ == other.gminus_ &&
         gplus_.agrees_with(other.gplus_);
}

bool operator==(const GammaElement& a, const GammaElement& b) {
  return a.zpower_ == b.zpower_ && a.unit_ == b.unit_ && a.gminus_ == b.gminus_ && a.gplus_ == b.gplus_;
}

GammaElement factorize(const LaurentSeries& f) {
  const ReducedValuation rv = reduced_valuation(f);
  const Ring& ring = f.ring();
  const LaurentSeries u = f.shifted(-rv.value);
  const LaurentSeries one = LaurentSeries::one(ring);

  // Newton-type iteration on gminus: the principal part of gminus^{-1} u lies in
  // a power of the nilpotent ideal that doubles at every step.
  LaurentSeries gm = one;
  LaurentSeries h = u;
  bool converged = false;
  for (int iter = 0; iter <= ring->nilpotency_bound() + 2; ++iter) {
    h = laurent_invert(gm) * u;
    if (h.trunc() <= 0) throw PrecisionError("precision too low to separate factors");
    LaurentSeries hneg = h.negative_part();
    if (hneg.is_zero()) {
      converged = true;
      break;
    }
    LaurentSeries a = h.nonnegative_part();
    std::int64_t need = -hneg.min_exp();
    if (!a.exact() && a.trunc() < need) throw PrecisionError("precision too low to separate factors");
    LaurentSeries ainv = power_series_inverse(a, need);
    LaurentSeries m = (hneg * ainv).negative_part();
    gm = gm * (one + m);
  }
  if (!converged) throw Error(ErrorKind::internal, "factorization did not converge");
  RingElement c = h.coeff(0);
  LaurentSeries gp = h.nonnegative_part() * c.inverse();
  return GammaElement::make(gm, c, gp, rv.value);
}

GammaElement gamma_mul(const GammaElement& g, const GammaElement& h) {
  require_same_ring(g.ring(), h.ring(), "gamma_mul");
  return GammaElement::make(g.gminus() * h.gminus(), g.unit() * h.unit(), g.gplus() * h.gplus(),
                            g.zpower() + h.zpower());
}

GammaElement embed(const GammaElement& g, const Ring& target) {
  return GammaElement::make(embed(g.gminus(), target), embed(g.unit(), target), embed(g.gplus(), target),
                            g.zpower());
}

GammaElement exp_char0(const Ring& ring, const std::vector<RingElement>& y, Sign sign,
                       std::optional<std::int64_t> trunc) {
  if (!ring->field().is_rational())
    throw PreconditionError("exp_char0 is undefined in characteristic " + std::to_string(ring->field().characteristic()));
  const LaurentSeries one = LaurentSeries::one(ring);
  LaurentSeries x(ring);
  for (std::size_t i = 0; i < y.size(); ++i) {
    require_same_ring(ring, y[i].ring(), "exp_char0");
    std::int64_t e = static_cast<std::int64_t>(i + 1);
    if (sign == Sign::minus) {
      if (!y[i].is_nilpotent()) throw PreconditionError("exp_char0(minus): coordinate y" + std::to_string(i + 1) + " is not nilpotent");
      x += LaurentSeries::monomial(ring, -e, y[i]);
    } else {
      x += LaurentSeries::monomial(ring, e, y[i]);
    }
  }
  std::int64_t terms = 0;
  if (sign == Sign::minus) {
    terms = ring->nilpotency_bound();
  } else {
    if (x.is_zero()) return GammaElement::identity(ring);
    if (!trunc) throw PrecisionError("exp_char0(plus) requires a truncation order");
    x = x.truncated(*trunc);
    terms = *trunc;
  }
  LaurentSeries sum = one, power = one;
  for (std::int64_t k = 1; k <= terms; ++k) {
    power = power * x * Scalar(ring->field(), mpq_class(1, k));
    if (power.is_zero() && power.exact()) break;
    sum += power;
  }
  if (sign == Sign::minus) return GammaElement::minus(sum);
  return GammaElement::plus(sum.truncated(*trunc));
}

GammaElement exp_charp(const Ring& ring, const std::vector<RingElement>& a, Sign sign) {
  LaurentSeries prod = LaurentSeries::one(ring);
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_same_ring(ring, a[i].ring(), "exp_charp");
    std::int64_t e = static_cast<std::int64_t>(i + 1);
    if (sign == Sign::minus && !a[i].is_nilpotent())
      throw PreconditionError("exp_charp(minus): coordinate a" + std::to_string(i + 1) + " is not nilpotent");
    prod = prod * (LaurentSeries::one(ring) - LaurentSeries::monomial(ring, sign == Sign::minus ? -e : e, a[i]));
  }
  return sign == Sign::minus ? GammaElement::minus(prod) : GammaElement::plus(prod);
}

std::vector<RingElement> witt_add(const Ring& r, const std::vector<RingElement>& a,
                                  const std::vector<RingElement>& b, int n) {
  if (n < 0) throw PreconditionError("witt_add: negative length");
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  std::vector<RingElement> p(len, RingElement(r));
  p[0] = RingElement::constant(r, 1);

  // p <- p * (1 - c w^i) mod w^{n+1}
  auto times_factor = [&](const RingElement& c, std::size_t i) {
    if (c.is_zero()) return;
    for (std::size_t e = len; e-- > i;) {
      if (!p[e - i].is_zero()) p[e] -= p[e - i] * c;
    }
  };
  for (const auto* list : {&a, &b}) {
    for (std::size_t i = 0; i < list->size() && i + 1 < len; ++i) {
      require_same_ring(r, (*list)[i].ring(), "witt_add");
      times_factor((*list)[i], i + 1);
    }
  }
  std::vector<RingElement> c(static_cast<std::size_t>(n), RingElement(r));
  for (std::size_t i = 1; i < len; ++i) {
    c[i - 1] = -p[i];
    if (c[i - 1].is_zero()) continue;
    // divide by (1 - c_i w^i): q[e] = p[e] + c_i q[e - i]
    for (std::size_t e = i; e < len; ++e) p[e].add_product(c[i - 1], p[e - i]);
  }
  return c;
}

GammaElement abel(const Ring& ring, const std::vector<RingElement>& points) {
  LaurentSeries prod = LaurentSeries::one(ring);
  for (std::size_t j = 0; j < points.size(); ++j) {
    require_same_ring(ring, points[j].ring(), "abel");
    if (!points[j].is_nilpotent())
      throw PreconditionError("abel: point t" + std::to_string(j + 1) +
                              " is not nilpotent; the principal part is infinite (use a truncation)");
    std::vector<RingElement> geo;  // coefficients of z^{-k}, k = D..0
    RingElement power = RingElement::constant(ring, 1);
    std::vector<RingElement> up;
    while (!power.is_zero()) {
      up.push_back(power);
      power = power * points[j];
    }
    geo.assign(up.rbegin(), up.rend());
    prod = prod * LaurentSeries(ring, -static_cast<std::int64_t>(up.size()) + 1, std::move(geo));
  }
  return GammaElement::minus(prod);
}

std::vector<RingElement> abel_coefficients(const Ring& ring, const std::vector<RingElement>& points, int m) {
  if (m < 0) throw PreconditionError("abel: negative truncation");
  const std::size_t len = static_cast<std::size_t>(m) + 1;
  std::vector<RingElement> h(len, RingElement(ring));
  h[0] = RingElement::constant(ring, 1);
  for (const auto& t : points) {
    require_same_ring(ring, t.ring(), "abel");
    // multiply by 1/(1 - t w): h[e] += t h[e-1], increasing e
    for (std::size_t e = 1; e < len; ++e) h[e].add_product(t, h[e - 1]);
  }
  return std::vector<RingElement>(h.begin() + 1, h.end());
}

VariableBlock coordinate_block(int d, const std::string& prefix) {
  VariableBlock b;
  for (int i = 1; i <= d; ++i) {
    b.names.push_back(prefix + std::to_string(i));
    b.weights.push_back(i);
  }
  b.bound = d;
  return b;
}

Ring coordinate_ring(const BaseField& field, int d, const std::string& prefix) {
  if (d < 0) throw PreconditionError("negative degree bound");
  if (d == 0) return CoeffRing::field_only(field);
  return CoeffRing::make(field, {coordinate_block(d, prefix)});
}

GammaElement universal_v(const BaseField& field, int d) {
  Ring ring = coordinate_ring(field, d);
  if (d == 0) return GammaElement::identity(ring);
  return universal_v(ring, 0);
}

GammaElement universal_v(const Ring& ring, std::size_t block) {
  const auto& blocks = ring->blocks();
  if (block >= blocks.size()) throw PreconditionError("universal_v: no such variable block");
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block; ++b) offset += blocks[b].names.size();
  LaurentSeries v = LaurentSeries::one(ring);
  for (std::size_t i = 0; i < blocks[block].names.size(); ++i)
    v += LaurentSeries::monomial(ring, -static_cast<std::int64_t>(i + 1), RingElement::variable(ring, offset + i));
  return GammaElement::minus(v);
}

}  // namespace satogr
