#include "satogr/sampling.hpp"

namespace satogr::sampling {

Scalar random_scalar(Rng& rng, const BaseField& f, int bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  if (f.is_rational()) return Scalar(f, mpq_class(num(rng), den(rng)));
  return Scalar(f, num(rng));
}

RingElement random_element(Rng& rng, const Ring& r, double density) {
  RingElement a(r);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r->size(); ++i)
    if (keep(rng)) a.set_coeff(i, random_scalar(rng, r->field()));
  return a;
}

RingElement random_unit(Rng& rng, const Ring& r) {
  RingElement a = random_element(rng, r);
  Scalar c(r->field());
  while (c.is_zero()) c = random_scalar(rng, r->field());
  a.set_coeff(0, c);
  return a;
}

RingElement random_nilpotent(Rng& rng, const Ring& r) {
  RingElement a = random_element(rng, r);
  a.set_coeff(0, Scalar(r->field()));
  return a;
}

GrassPoint random_point(Rng& rng, const Ring& r, std::int64_t n, std::int64_t top, bool big_cell, int bound) {
  for (;;) {
    std::vector<LaurentSeries> cols;
    for (std::int64_t j = 0; j < n; ++j) {
      std::vector<RingElement> c;
      for (std::int64_t e = -n; e <= top; ++e) {
        RingElement x = RingElement::constant(r, random_scalar(rng, r->field(), bound));
        if (big_cell && e < 0) {
          const std::int64_t row = e + n;
          if (row == j)
            x = RingElement::constant(r, 1);
          else if (row > j)
            x = RingElement(r);
        }
        c.push_back(x);
      }
      cols.emplace_back(r, -n, std::move(c));
    }
    try {
      return GrassPoint(r, n, std::move(cols));
    } catch (const PreconditionError&) {
    }
  }
}

LaurentSeries random_invertible(Rng& rng, const Ring& r, int tail) {
  const std::int64_t n = static_cast<std::int64_t>(rng() % 5) - 2;
  const int depth = static_cast<int>(rng() % 3);
  std::vector<RingElement> c;
  for (int k = 0; k < depth; ++k) c.push_back(random_nilpotent(rng, r));
  c.push_back(random_unit(rng, r));
  for (int k = 0; k < tail; ++k) c.push_back(random_element(rng, r));
  return LaurentSeries(r, n - depth, std::move(c), n + tail + 1);
}

GammaElement random_gamma(Rng& rng, const Ring& r, bool minus, bool plus, int len, bool unit) {
  LaurentSeries gm = LaurentSeries::one(r), gp = LaurentSeries::one(r);
  for (int i = 1; i <= len; ++i) {
    if (minus) gm += LaurentSeries::monomial(r, -i, random_nilpotent(rng, r));
    if (plus) gp += LaurentSeries::monomial(r, i, random_element(rng, r));
  }
  return GammaElement::make(gm, unit ? random_unit(rng, r) : RingElement::constant(r, 1), gp);
}

}  // namespace satogr::sampling
