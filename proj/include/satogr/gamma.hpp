#pragma once

#include <optional>
#include <vector>

#include "satogr/laurent.hpp"

namespace satogr {

// Invertible series in factored form gminus * unit * gplus * z^zpower with
// gminus = 1 + nilpotent principal part (exact) and gplus = 1 + positive part.
class GammaElement {
 public:
  GammaElement() = default;
  static GammaElement make(LaurentSeries gminus, RingElement unit, LaurentSeries gplus, std::int64_t zpower = 0);
  static GammaElement identity(const Ring& ring);
  static GammaElement minus(const LaurentSeries& gminus);
  static GammaElement plus(const LaurentSeries& gplus);

  const Ring& ring() const { return unit_.ring(); }
  const LaurentSeries& gminus() const { return gminus_; }
  const RingElement& unit() const { return unit_; }
  const LaurentSeries& gplus() const { return gplus_; }
  std::int64_t zpower() const { return zpower_; }

  LaurentSeries series() const;
  // gplus^{-1} needs cap when gplus is an exact non-constant polynomial.
  GammaElement inverse(std::optional<std::int64_t> cap = std::nullopt) const;
  // Largest k with a nonzero z^{-k} coefficient in gminus.
  std::int64_t principal_length() const { return -gminus_.min_exp(); }
  // Componentwise agreement on common windows.
  bool agrees_with(const GammaElement& other) const;

  friend bool operator==(const GammaElement& a, const GammaElement& b);

 private:
  LaurentSeries gminus_;
  RingElement unit_;
  LaurentSeries gplus_;
  std::int64_t zpower_ = 0;
};

GammaElement factorize(const LaurentSeries& f);
GammaElement gamma_mul(const GammaElement& g, const GammaElement& h);
GammaElement embed(const GammaElement& g, const Ring& target);

enum class Sign { minus, plus };

// exp(sum y_i z^{-i}) or exp(sum y_i z^i). The plus sign needs the truncation order.
GammaElement exp_char0(const Ring& ring, const std::vector<RingElement>& y, Sign sign,
                       std::optional<std::int64_t> trunc = std::nullopt);
// prod (1 - a_i z^{-i}) or prod (1 - a_i z^i).
GammaElement exp_charp(const Ring& ring, const std::vector<RingElement>& a, Sign sign);
// The c with prod(1 - a_i w^i) prod(1 - b_i w^i) = prod(1 - c_i w^i) mod w^{n+1}.
std::vector<RingElement> witt_add(const Ring& ring, const std::vector<RingElement>& a, const std::vector<RingElement>& b, int n);

// prod_j (1 - t_j / z)^{-1} for nilpotent t_j.
GammaElement abel(const Ring& ring, const std::vector<RingElement>& points);
// h_1(t), ..., h_m(t): the z^{-1}..z^{-m} coefficients of the same product, for any points.
std::vector<RingElement> abel_coefficients(const Ring& ring, const std::vector<RingElement>& points, int m);

// Ring k[x_1..x_d] with x_i of weight i, truncated at weighted degree > d.
Ring coordinate_ring(const BaseField& field, int d, const std::string& prefix = "x");
VariableBlock coordinate_block(int d, const std::string& prefix = "x");
// v = 1 + sum x_i z^{-i} over coordinate_ring(field, d).
GammaElement universal_v(const BaseField& field, int d);
// The same element over a ring containing the coordinate block at position block.
GammaElement universal_v(const Ring& ring, std::size_t block);

}  // namespace satogr
