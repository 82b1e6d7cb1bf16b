#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "satogr/scalars.hpp"

namespace satogr {

// Truncation order of a finitely supported series whose every coefficient is known.
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

inline bool is_exact_order(std::int64_t m) { return m >= kExact / 2; }
inline std::int64_t add_orders(std::int64_t a, std::int64_t b) {
  return (is_exact_order(a) || is_exact_order(b)) ? kExact : a + b;
}

// Element of A((z)) known on the window of exponents below trunc(). Coefficients below
// min_exp() are zero; coefficients at or beyond trunc() are unknown and may not be read.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // The zero series, known below trunc.
  explicit LaurentSeries(Ring ring, std::int64_t trunc = kExact);
  LaurentSeries(Ring ring, std::int64_t min_exp, std::vector<RingElement> coeffs,
                std::int64_t trunc = kExact);

  static LaurentSeries one(Ring ring);
  static LaurentSeries monomial(Ring ring, std::int64_t exp, const RingElement& c);
  static LaurentSeries monomial(Ring ring, std::int64_t exp, long c = 1);

  const Ring& ring() const { return ring_; }
  // Lowest exponent with a nonzero coefficient (trunc() or 0 for a zero series).
  std::int64_t min_exp() const { return min_exp_; }
  // Highest exponent with a nonzero coefficient (min_exp() - 1 for a zero series).
  std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::int64_t trunc() const { return trunc_; }
  bool exact() const { return is_exact_order(trunc_); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  // Throws PrecisionError when e is at or beyond the truncation order.
  RingElement coeff(std::int64_t e) const;
  // Stored coefficients from min_exp() to max_exp().
  const std::vector<RingElement>& coeffs() const { return coeffs_; }

  LaurentSeries truncated(std::int64_t m) const;
  LaurentSeries as_exact() const;
  // Multiplication by z^n.
  LaurentSeries shifted(std::int64_t n) const;
  // Terms with exponent < 0, > 0, >= 0; the negative part is exact when it is determined.
  LaurentSeries negative_part() const;
  LaurentSeries positive_part() const;
  LaurentSeries nonnegative_part() const;
  LaurentSeries derivative() const;
  LaurentSeries map_coeffs(const Ring& target,
                           const std::function<RingElement(const RingElement&)>& fn) const;

  // Equality on the common window of the two truncations.
  bool agrees_with(const LaurentSeries& other) const;
  std::string to_string(const std::string& var = "z") const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const RingElement& c);
  friend LaurentSeries operator*(const RingElement& c, const LaurentSeries& a) { return a * c; }
  friend LaurentSeries operator*(const LaurentSeries& a, const Scalar& c);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  Ring ring_;
  std::int64_t min_exp_ = 0;
  std::vector<RingElement> coeffs_;
  std::int64_t trunc_ = kExact;
};

struct ReducedValuation {
  std::int64_t value = 0;
  std::int64_t nilpotent_depth = 0;
  friend bool operator==(const ReducedValuation&, const ReducedValuation&) = default;
};

ReducedValuation reduced_valuation(const LaurentSeries& f);
bool is_invertible(const LaurentSeries& f);
// Inverse of a unit of A((z)). When the input is exact but its inverse has infinite support,
// cap is the truncation order requested for the result.
LaurentSeries laurent_invert(const LaurentSeries& f, std::optional<std::int64_t> cap = std::nullopt);
// Inverse of a power series with unit constant term.
LaurentSeries power_series_inverse(const LaurentSeries& f, std::optional<std::int64_t> cap = std::nullopt);
RingElement residue(const LaurentSeries& f);
// f raised to a non-negative power.
LaurentSeries pow(const LaurentSeries& f, unsigned k);

LaurentSeries embed(const LaurentSeries& f, const Ring& target);

}  // namespace satogr
