#include "satogr/tau.hpp"

namespace satogr {

namespace {

std::size_t vars_before(const Ring& ring, std::size_t block) {
  std::size_t n = 0;
  for (std::size_t b = 0; b < block; ++b) n += ring->blocks()[b].names.size();
  return n;
}

std::vector<int> block_bounds(const Ring& ring) {
  std::vector<int> out;
  for (const auto& b : ring->blocks()) out.push_back(b.bound);
  return out;
}

// Images of the leading variables of `source` as the same variables of `target`.
std::vector<RingElement> identity_images(const Ring& target, std::size_t count) {
  std::vector<RingElement> out;
  for (std::size_t v = 0; v < count; ++v) out.push_back(RingElement::variable(target, v));
  return out;
}

// Coefficient of var^k in f, as an element of `target` whose variables are f's variables
// with var removed and trailing ones dropped (they must not occur).
RingElement coefficient_of_power(const RingElement& f, std::size_t var, int k, const Ring& target) {
  RingElement out(target);
  for (const auto& [exps, c] : f.terms()) {
    if (exps[var] != k) continue;
    std::vector<int> e;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (i != var) e.push_back(exps[i]);
    for (std::size_t i = target->num_vars(); i < e.size(); ++i)
      if (e[i] != 0) throw Error(ErrorKind::internal, "coefficient has a variable outside the target ring");
    e.resize(target->num_vars());
    out += RingElement::monomial(target, e, c);
  }
  return out;
}

// [w^1..w^n] of exp(sum y_j w^j)
std::vector<RingElement> exp_coefficients(const Ring& ring, const std::vector<RingElement>& y, int n) {
  const GammaElement e = exp_char0(ring, y, Sign::plus, n + 1);
  std::vector<RingElement> out;
  for (int i = 1; i <= n; ++i) out.push_back(e.gplus().coeff(i));
  return out;
}

// The ratio tau(shifted) / tau over the product ring, shifted images given per x_i.
RingElement shifted_ratio(const RingElement& tau, const Ring& big, const std::vector<RingElement>& x_images,
                          const std::vector<RingElement>& base_images) {
  std::vector<RingElement> shift = identity_images(big, tau.ring()->num_vars() - x_images.size());
  shift.insert(shift.end(), x_images.begin(), x_images.end());
  std::vector<RingElement> base = identity_images(big, tau.ring()->num_vars() - base_images.size());
  base.insert(base.end(), base_images.begin(), base_images.end());
  return substitute(tau, shift) * substitute(tau, base).inverse();
}

LaurentSeries series_from_slot(const RingElement& ratio, std::size_t slot, int m, const Ring& target) {
  std::vector<RingElement> coeffs;
  for (int k = 0; k <= m; ++k) coeffs.push_back(coefficient_of_power(ratio, slot, k, target));
  return LaurentSeries(target, 0, std::move(coeffs), m + 1);
}

}  // namespace

RingElement big_cell_minor(const GrassPoint& u) {
  RingElement delta = plucker(u, MayaDiagram::vacuum());
  if (!delta.is_unit()) throw PreconditionError("point is not in the big cell (vacuum coordinate is not a unit)");
  return delta;
}

TauFunction tau_direct(const GrassPoint& u, int d) {
  const RingElement delta = big_cell_minor(u);
  const Ring rx = with_coordinates(u.ring(), d);
  const GrassPoint moved = act(universal_v(rx, coordinate_block_index(rx)), embed(u, rx));
  return {plucker(moved, MayaDiagram::vacuum()) * embed(delta, rx).inverse(), delta};
}

TauFunction tau_schur(const GrassPoint& u, int d) {
  const RingElement delta = big_cell_minor(u);
  const Ring rx = with_coordinates(u.ring(), d);
  return {bosonize(plucker_coordinates(u, d), u.ring(), d) * embed(delta, rx).inverse(), delta};
}

LaurentSeries baker(const GrassPoint& u, int d, int m) {
  if (m < 0) throw PreconditionError("baker: negative window");
  const int deep = d + m;
  const RingElement tau = tau_direct(u, deep).value;
  const Ring& rxd = tau.ring();
  const Ring big = rxd->extended({VariableBlock{{"zeta"}, {1}, m}});
  const std::size_t xoff = vars_before(big, rxd->blocks().size() - 1);
  const std::size_t slot = big->num_vars() - 1;
  const RingElement zeta = RingElement::variable(big, slot);
  // x_i -> sum_k x_{i-k} zeta^k
  std::vector<RingElement> shifted, plain;
  for (int i = 1; i <= deep; ++i) {
    RingElement s = zeta.pow(static_cast<unsigned>(i));
    for (int k = 0; k < i; ++k) s.add_product(RingElement::variable(big, xoff + static_cast<std::size_t>(i - k - 1)), zeta.pow(static_cast<unsigned>(k)));
    shifted.push_back(s);
    plain.push_back(RingElement::variable(big, xoff + static_cast<std::size_t>(i - 1)));
  }
  std::vector<int> bounds = block_bounds(big);
  bounds[bounds.size() - 2] = d;
  const RingElement ratio = shifted_ratio(tau, big, shifted, plain).truncated(bounds);
  const Ring target = with_coordinates(u.ring(), d);
  const LaurentSeries raw = series_from_slot(ratio, slot, m, target);
  return laurent_invert(universal_v(target, coordinate_block_index(target)).series()) * raw;
}

RingElement to_power_sum_coordinates(const RingElement& f) {
  const Ring& rx = f.ring();
  const std::size_t b = coordinate_block_index(rx);
  const int d = rx->blocks()[b].bound;
  const std::size_t off = vars_before(rx, b);
  std::vector<VariableBlock> blocks(rx->blocks().begin(), rx->blocks().end() - 1);
  blocks.push_back(coordinate_block(d, "t"));
  const Ring rt = CoeffRing::make(rx->field(), blocks);
  std::vector<RingElement> t;
  for (int i = 0; i < d; ++i) t.push_back(RingElement::variable(rt, off + static_cast<std::size_t>(i)));
  std::vector<RingElement> images = identity_images(rt, off);
  for (auto& p : exp_coefficients(rt, t, d)) images.push_back(std::move(p));
  return substitute(f, images);
}

LaurentSeries baker_char0(const GrassPoint& u, int d, int m) {
  if (!u.ring()->field().is_rational())
    throw PreconditionError("the exponential form of the Baker function needs characteristic 0");
  if (m < 0) throw PreconditionError("baker: negative window");
  const int deep = d + m;
  const RingElement tau = tau_direct(u, deep).value;
  const Ring& rxd = tau.ring();
  std::vector<VariableBlock> blocks(rxd->blocks().begin(), rxd->blocks().end() - 1);
  const std::size_t off = rxd->num_vars() - static_cast<std::size_t>(deep);
  blocks.push_back(coordinate_block(deep, "t"));
  blocks.push_back(VariableBlock{{"zeta"}, {1}, m});
  const Ring big = CoeffRing::make(rxd->field(), blocks);
  const std::size_t slot = big->num_vars() - 1;
  const RingElement zeta = RingElement::variable(big, slot);
  std::vector<RingElement> t, t_shift;
  for (int i = 1; i <= deep; ++i) {
    RingElement ti = RingElement::variable(big, off + static_cast<std::size_t>(i - 1));
    t_shift.push_back(ti + zeta.pow(static_cast<unsigned>(i)) * Scalar(big->field(), mpq_class(1, i)));
    t.push_back(std::move(ti));
  }
  std::vector<int> bounds = block_bounds(big);
  bounds[bounds.size() - 2] = d;
  const RingElement ratio =
      shifted_ratio(tau, big, exp_coefficients(big, t_shift, deep), exp_coefficients(big, t, deep)).truncated(bounds);
  std::vector<VariableBlock> tblocks(rxd->blocks().begin(), rxd->blocks().end() - 1);
  tblocks.push_back(coordinate_block(d, "t"));
  const Ring target = CoeffRing::make(rxd->field(), tblocks);
  const LaurentSeries raw = series_from_slot(ratio, slot, m, target);
  std::vector<RingElement> minus_t;
  for (int i = 0; i < d; ++i) minus_t.push_back(-RingElement::variable(target, off + static_cast<std::size_t>(i)));
  return exp_char0(target, minus_t, Sign::minus).series() * raw;
}

bool baker_in_point(const LaurentSeries& psi, const GrassPoint& u) {
  return contains(embed(u, psi.ring()), psi.shifted(-1));
}

bool hirota_kp_check(const RingElement& tau, int order) {
  const Ring& rx = tau.ring();
  if (!rx->field().is_rational())
    throw PreconditionError("KP check is not applicable in characteristic " + std::to_string(rx->field().characteristic()));
  const std::size_t b = coordinate_block_index(rx);
  const int d = rx->blocks()[b].bound;
  if (order < 1 || order > d - 3)
    throw PreconditionError("KP check needs 1 <= order <= d - 3 (d = " + std::to_string(d) + ")");
  const std::size_t off = vars_before(rx, b);

  // One jointly truncated block: s_1..s_d, y_1..y_d, u.
  VariableBlock joint;
  for (const char* prefix : {"s", "y"})
    for (int i = 1; i <= d; ++i) {
      joint.names.push_back(prefix + std::to_string(i));
      joint.weights.push_back(i);
    }
  joint.names.push_back("u");
  joint.weights.push_back(1);
  joint.bound = d;
  std::vector<VariableBlock> blocks(rx->blocks().begin(), rx->blocks().end() - 1);
  blocks.push_back(joint);
  const Ring big = CoeffRing::make(rx->field(), blocks);
  const BaseField& field = big->field();
  const std::size_t du = static_cast<std::size_t>(d);
  auto s = [&](int i) { return RingElement::variable(big, off + static_cast<std::size_t>(i - 1)); };
  auto y = [&](int i) { return RingElement::variable(big, off + du + static_cast<std::size_t>(i - 1)); };
  const std::size_t uvar = off + 2 * du;
  const RingElement u = RingElement::variable(big, uvar);

  std::vector<RingElement> plus, minus, two_y;
  for (int i = 1; i <= d; ++i) {
    const RingElement bracket = u.pow(static_cast<unsigned>(i)) * Scalar(field, mpq_class(1, i));
    plus.push_back(s(i) + y(i) - bracket);
    minus.push_back(s(i) - y(i) + bracket);
    two_y.push_back(y(i) * Scalar(field, 2));
  }
  std::vector<RingElement> img_plus = identity_images(big, off), img_minus = identity_images(big, off);
  for (auto& p : exp_coefficients(big, plus, d)) img_plus.push_back(std::move(p));
  for (auto& p : exp_coefficients(big, minus, d)) img_minus.push_back(std::move(p));
  const RingElement product = substitute(tau, img_plus) * substitute(tau, img_minus);
  std::vector<RingElement> p2y = exp_coefficients(big, two_y, d);
  p2y.insert(p2y.begin(), RingElement::constant(big, 1));

  RingElement e(big);
  for (int l = 0; l + 1 <= d; ++l) {
    // u is the last variable, so its coefficients stay in the same ring
    e.add_product(p2y[static_cast<std::size_t>(l)], coefficient_of_power(product, uvar, l + 1, big));
  }
  for (const auto& [exps, c] : e.terms()) {
    int yweight = 0, total = 0;
    for (int i = 1; i <= d; ++i) {
      total += i * (exps[off + static_cast<std::size_t>(i - 1)] + exps[off + du + static_cast<std::size_t>(i - 1)]);
      yweight += i * exps[off + du + static_cast<std::size_t>(i - 1)];
    }
    if (total <= d - 1 && yweight <= order + 2 && !c.is_zero()) return false;
  }
  return true;
}

}  // namespace satogr
