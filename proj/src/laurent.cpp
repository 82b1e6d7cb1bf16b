#include "satogr/laurent.hpp"

#include <algorithm>

namespace satogr {

LaurentSeries::LaurentSeries(Ring ring, std::int64_t trunc) : ring_(std::move(ring)), trunc_(trunc) {
  if (is_exact_order(trunc_)) trunc_ = kExact;
  normalize();
}

LaurentSeries::LaurentSeries(Ring ring, std::int64_t min_exp, std::vector<RingElement> coeffs,
                             std::int64_t trunc)
    : ring_(std::move(ring)), min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(trunc) {
  if (is_exact_order(trunc_)) trunc_ = kExact;
  for (const auto& c : coeffs_) require_same_ring(ring_, c.ring(), "laurent");
  normalize();
}

void LaurentSeries::normalize() {
  if (!exact() && max_exp() >= trunc_) {
    std::int64_t keep = std::max<std::int64_t>(0, trunc_ - min_exp_);
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) min_exp_ = exact() ? 0 : trunc_;
}

LaurentSeries LaurentSeries::one(Ring ring) { return monomial(std::move(ring), 0, 1); }

LaurentSeries LaurentSeries::monomial(Ring ring, std::int64_t exp, const RingElement& c) {
  return LaurentSeries(std::move(ring), exp, {c});
}

LaurentSeries LaurentSeries::monomial(Ring ring, std::int64_t exp, long c) {
  auto r = ring;
  return monomial(std::move(ring), exp, RingElement::constant(r, c));
}

bool LaurentSeries::is_one() const { return min_exp_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }

RingElement LaurentSeries::coeff(std::int64_t e) const {
  if (e >= trunc_)
    throw PrecisionError("coefficient of z^" + std::to_string(e) + " requested beyond truncation order " +
                         std::to_string(trunc_));
  if (e < min_exp_ || e > max_exp()) return RingElement(ring_);
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t m) const {
  if (m >= trunc_) return *this;
  return LaurentSeries(ring_, min_exp_, coeffs_, m);
}

LaurentSeries LaurentSeries::as_exact() const { return LaurentSeries(ring_, min_exp_, coeffs_, kExact); }

LaurentSeries LaurentSeries::shifted(std::int64_t n) const {
  LaurentSeries r = *this;
  r.min_exp_ += n;
  r.trunc_ = add_orders(trunc_, n);
  return r;
}

namespace {

LaurentSeries slice(const LaurentSeries& f, std::int64_t lo, std::int64_t hi, std::int64_t trunc) {
  std::vector<RingElement> out;
  std::int64_t start = std::max(lo, f.min_exp());
  std::int64_t stop = std::min(hi, f.max_exp() + 1);
  for (std::int64_t e = start; e < stop; ++e) out.push_back(f.coeffs()[static_cast<std::size_t>(e - f.min_exp())]);
  return LaurentSeries(f.ring(), start, std::move(out), trunc);
}

}  // namespace

LaurentSeries LaurentSeries::negative_part() const {
  if (trunc_ < 0) throw PrecisionError("principal part not determined: truncation order " + std::to_string(trunc_));
  return slice(*this, min_exp_, 0, kExact);
}

LaurentSeries LaurentSeries::positive_part() const { return slice(*this, 1, kExact, trunc_); }

LaurentSeries LaurentSeries::nonnegative_part() const { return slice(*this, 0, kExact, trunc_); }

LaurentSeries LaurentSeries::derivative() const {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
    out.push_back(coeffs_[i] * Scalar(ring_->field(), static_cast<long>(e)));
  }
  return LaurentSeries(ring_, min_exp_ - 1, std::move(out), add_orders(trunc_, -1));
}

LaurentSeries LaurentSeries::map_coeffs(const Ring& target,
                                        const std::function<RingElement(const RingElement&)>& fn) const {
  std::vector<RingElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(fn(c));
  LaurentSeries r(target, min_exp_, std::move(out), trunc_);
  if (r.is_zero() && !r.exact()) r.min_exp_ = r.trunc_;
  return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  require_same_ring(ring_, other.ring_, "laurent_compare");
  std::int64_t hi = std::min(trunc_, other.trunc_);
  std::int64_t lo = std::min(min_exp_, other.min_exp_);
  std::int64_t top = std::max(max_exp(), other.max_exp());
  if (!is_exact_order(hi)) top = std::min(top, hi - 1);
  for (std::int64_t e = lo; e <= top; ++e)
    if (!(coeff(e) == other.coeff(e))) return false;
  return true;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
    std::string c = coeffs_[i].to_string();
    bool compound = c.find_first_of("+-", 1) != std::string::npos;
    std::string zpart = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    std::string term;
    if (zpart.empty()) {
      term = compound ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = zpart;
    } else {
      term = (compound ? "(" + c + ")" : c) + "*" + zpart;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  if (!exact()) out += " + O(" + var + "^" + std::to_string(trunc_) + ")";
  return out;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  require_same_ring(ring_, other.ring_, "laurent_add");
  std::int64_t trunc = std::min(trunc_, other.trunc_);
  if (other.is_zero()) {
    *this = truncated(trunc);
    return *this;
  }
  std::int64_t lo = is_zero() ? other.min_exp_ : std::min(min_exp_, other.min_exp_);
  std::int64_t hi = std::max(is_zero() ? lo - 1 : max_exp(), other.max_exp());
  if (!is_exact_order(trunc)) hi = std::min(hi, trunc - 1);
  std::vector<RingElement> out;
  for (std::int64_t e = lo; e <= hi; ++e) {
    RingElement c(ring_);
    if (e >= min_exp_ && e <= max_exp()) c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
    if (e >= other.min_exp_ && e <= other.max_exp()) c += other.coeffs_[static_cast<std::size_t>(e - other.min_exp_)];
    out.push_back(std::move(c));
  }
  *this = LaurentSeries(ring_, lo, std::move(out), trunc);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) { return *this += -other; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a.ring_, b.ring_, "laurent_mul");
  if ((a.is_zero() && a.exact()) || (b.is_zero() && b.exact())) return LaurentSeries(a.ring_);
  std::int64_t trunc = std::min(add_orders(a.trunc_, b.min_exp_), add_orders(b.trunc_, a.min_exp_));
  if (a.is_zero() || b.is_zero()) return LaurentSeries(a.ring_, trunc);
  std::int64_t lo = a.min_exp_ + b.min_exp_;
  std::int64_t hi = a.max_exp() + b.max_exp();
  if (!is_exact_order(trunc)) hi = std::min(hi, trunc - 1);
  if (hi < lo) return LaurentSeries(a.ring_, trunc);
  std::vector<RingElement> out(static_cast<std::size_t>(hi - lo + 1), RingElement(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      std::size_t k = i + j;
      if (static_cast<std::int64_t>(k) > hi - lo) break;
      out[k].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return LaurentSeries(a.ring_, lo, std::move(out), trunc);
}

LaurentSeries operator*(const LaurentSeries& a, const RingElement& c) {
  require_same_ring(a.ring_, c.ring(), "laurent_scale");
  LaurentSeries r = a;
  for (auto& x : r.coeffs_) x = x * c;
  return LaurentSeries(r.ring_, r.min_exp_, std::move(r.coeffs_), r.trunc_);
}

LaurentSeries operator*(const LaurentSeries& a, const Scalar& c) {
  LaurentSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return LaurentSeries(r.ring_, r.min_exp_, std::move(r.coeffs_), r.trunc_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.trunc_ == b.trunc_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_ &&
         (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && a.ring_->same_as(*b.ring_)));
}

// ---------------------------------------------------------------------------

ReducedValuation reduced_valuation(const LaurentSeries& f) {
  for (std::int64_t e = f.min_exp(); e <= f.max_exp(); ++e) {
    if (f.coeffs()[static_cast<std::size_t>(e - f.min_exp())].is_unit())
      return ReducedValuation{e, e - f.min_exp()};
  }
  if (f.exact()) throw PreconditionError("series is not invertible: valuation undetermined (no unit coefficient)");
  throw PrecisionError("valuation undetermined at this precision (no unit coefficient below z^" +
                       std::to_string(f.trunc()) + ")");
}

bool is_invertible(const LaurentSeries& f) {
  try {
    reduced_valuation(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

LaurentSeries power_series_inverse(const LaurentSeries& f, std::optional<std::int64_t> cap) {
  if (f.is_zero() || f.min_exp() < 0) throw PreconditionError("power_series_inverse: input has negative exponents or is zero");
  RingElement a0 = f.coeff(0);
  if (!a0.is_unit()) throw PreconditionError("power_series_inverse: constant term is not a unit");
  RingElement a0inv = a0.inverse();
  if (f.exact() && f.max_exp() == 0) return LaurentSeries::monomial(f.ring(), 0, a0inv);
  std::int64_t m = f.trunc();
  if (f.exact()) {
    if (!cap) throw PrecisionError("inverse of an exact series has infinite support; a truncation order is required");
    m = *cap;
  } else if (cap) {
    m = std::min(m, *cap);
  }
  if (m <= 0) throw PrecisionError("insufficient truncation order to determine any coefficient of the inverse");
  std::vector<RingElement> b;
  b.reserve(static_cast<std::size_t>(m));
  b.push_back(a0inv);
  RingElement neg_a0inv = -a0inv;
  for (std::int64_t e = 1; e < m; ++e) {
    RingElement acc(f.ring());
    std::int64_t top = std::min(e, f.max_exp());
    for (std::int64_t i = 1; i <= top; ++i) {
      const RingElement& fi = f.coeffs()[static_cast<std::size_t>(i)];
      if (!fi.is_zero()) acc.add_product(fi, b[static_cast<std::size_t>(e - i)]);
    }
    b.push_back(acc * neg_a0inv);
  }
  return LaurentSeries(f.ring(), 0, std::move(b), m);
}

LaurentSeries laurent_invert(const LaurentSeries& f, std::optional<std::int64_t> cap) {
  ReducedValuation rv = reduced_valuation(f);
  const Ring& ring = f.ring();
  LaurentSeries u = f.shifted(-rv.value);
  RingElement a0inv = u.coeff(0).inverse();
  u = u * a0inv;
  LaurentSeries pos = u.nonnegative_part();
  LaurentSeries neg = u.negative_part();
  const int nil = ring->nilpotency_bound();

  std::optional<std::int64_t> working;
  if (cap) working = *cap + rv.value + rv.nilpotent_depth * nil;
  LaurentSeries q = power_series_inverse(pos, working);
  LaurentSeries s = LaurentSeries::one(ring);
  if (!neg.is_zero()) {
    LaurentSeries w = -(q * neg);
    LaurentSeries power = LaurentSeries::one(ring);
    for (int k = 1; k <= nil; ++k) {
      power = power * w;
      if (power.is_zero() && power.exact()) break;
      s += power;
    }
  }
  LaurentSeries result = (q * s * a0inv).shifted(-rv.value);
  if (cap) result = result.truncated(*cap);
  if (result.trunc() <= result.min_exp() && !result.exact())
    throw PrecisionError("insufficient truncation order to determine any coefficient of the inverse");
  return result;
}

RingElement residue(const LaurentSeries& f) {
  if (f.trunc() <= -1) throw PrecisionError("window does not include exponent -1");
  return f.coeff(-1);
}

LaurentSeries pow(const LaurentSeries& f, unsigned k) {
  LaurentSeries r = LaurentSeries::one(f.ring());
  for (unsigned i = 0; i < k; ++i) r = r * f;
  return r;
}

LaurentSeries embed(const LaurentSeries& f, const Ring& target) {
  if (f.ring().get() == target.get()) return f;
  return f.map_coeffs(target, [&](const RingElement& c) { return embed(c, target); });
}

}  // namespace satogr
