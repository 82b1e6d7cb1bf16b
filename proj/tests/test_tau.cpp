#include <doctest.h>

#include "satogr/tau.hpp"
#include "support.hpp"

using namespace satogr;
using namespace satogr::testing;

namespace {

LaurentSeries z(const Ring& r, std::int64_t e) { return LaurentSeries::monomial(r, e, 1); }

}  // namespace

TEST_SUITE("tau") {

TEST_CASE("vacuum") {
  auto q = CoeffRing::field_only(BaseField::rationals());
  auto vac = GrassPoint::vacuum(q);
  CHECK(tau_direct(vac, 5).value.is_one());
  CHECK(tau_schur(vac, 5).value.is_one());
  auto psi = baker(vac, 5, 6);
  auto v = universal_v(BaseField::rationals(), 5);
  CHECK(psi.trunc() == 2);
  CHECK(psi.agrees_with(laurent_invert(v.series())));
  CHECK(baker_in_point(psi, vac));
}

TEST_CASE("one-column point") {
  auto rc = qring({"c"}, 2);
  auto c = var(rc, "c");
  GrassPoint l(rc, 1, {z(rc, -1) + LaurentSeries::monomial(rc, 0, c)});
  auto t = tau_direct(l, 2);
  auto rx = with_coordinates(rc, 2);
  CHECK(t.value == cst(rx, 1) + embed(c, rx) * var(rx, "x1"));
  CHECK(t.value == tau_schur(l, 2).value);
  CHECK(t.normalization.is_one());
  CHECK(baker_in_point(baker(l, 2, 4), l));
}

TEST_CASE("two independent tau paths agree") {
  std::mt19937_64 rng(17);
  for (auto r : {CoeffRing::field_only(BaseField::rationals()), CoeffRing::field_only(BaseField::prime(5)),
                 qring({"e"}, 2)}) {
    for (int t = 0; t < 8; ++t) {
      GrassPoint u = random_point(rng, r, 1 + t % 4, 3);
      const int d = r->num_vars() ? 4 : 6;
      auto a = tau_direct(u, d), b = tau_schur(u, d);
      CHECK(a.value == b.value);
      CHECK(a.value.constant_term().is_one());
    }
  }
}

TEST_CASE("tau does not depend on the window") {
  std::mt19937_64 rng(2);
  auto q = CoeffRing::field_only(BaseField::rationals());
  GrassPoint u = random_point(rng, q, 3, 4);
  CHECK(tau_direct(u, 5).value == tau_direct(u.deepened(6), 5).value);
  auto t4 = tau_direct(u, 4).value;
  auto t6 = tau_direct(u, 6).value;
  RingElement lifted(t6.ring());
  for (auto [exps, c] : t4.terms()) {
    exps.resize(6, 0);
    lifted += RingElement::monomial(t6.ring(), exps, c);
  }
  CHECK(t6.truncated({4}) == lifted);
}

TEST_CASE("Baker function in both forms") {
  std::mt19937_64 rng(9);
  auto q = CoeffRing::field_only(BaseField::rationals());
  for (int t = 0; t < 4; ++t) {
    GrassPoint u = random_point(rng, q, 1 + t % 3, 3);
    auto psi = baker(u, 3, 5);
    CHECK(psi.trunc() == 3);
    CHECK(baker_in_point(psi, u));
    auto psi0 = baker_char0(u, 3, 5);
    auto converted = psi.map_coeffs(psi0.ring(), [](const RingElement& c) { return to_power_sum_coordinates(c); });
    CHECK(converted.agrees_with(psi0));
    // At x = 0 the series starts with 1.
    CHECK(psi.coeff(0).constant_term().is_one());
  }
  CHECK_THROWS_AS(baker_char0(GrassPoint::vacuum(CoeffRing::field_only(BaseField::prime(3))), 2, 2), PreconditionError);
}

TEST_CASE("not in the big cell") {
  auto q = CoeffRing::field_only(BaseField::rationals());
  GrassPoint l(q, 1, {z(q, 0)});
  CHECK_THROWS_AS(tau_direct(l, 3), PreconditionError);
  CHECK_THROWS_AS(tau_schur(l, 3), PreconditionError);
}

TEST_CASE("KP check") {
  const auto f = BaseField::rationals();
  auto r = coordinate_ring(f, 6);
  CHECK(hirota_kp_check(cst(r, 1), 3));
  for (const auto& p : partitions_up_to(4)) CHECK(hirota_kp_check(schur(p, r), 3));
  auto x1 = var(r, "x1");
  CHECK(!hirota_kp_check(cst(r, 1) + x1 * x1, 3));
  CHECK(!hirota_kp_check(cst(r, 1) + x1 * x1, 1));
  std::mt19937_64 rng(1);
  auto q = CoeffRing::field_only(f);
  for (int t = 0; t < 5; ++t) CHECK(hirota_kp_check(tau_schur(random_point(rng, q, 1 + t % 4, 3), 6).value, 3));
  CHECK_THROWS_AS(hirota_kp_check(cst(coordinate_ring(BaseField::prime(5), 6), 1), 1), PreconditionError);
  CHECK_THROWS_AS(hirota_kp_check(cst(r, 1), 4), PreconditionError);
}

}  // TEST_SUITE

TEST_SUITE("tau") {

TEST_CASE("tau along a product in the negative group") {
  // tau_U(g1 g2) = tau_{g2 U}(g1) tau_U(g2), evaluating x_i at the coefficients of g.
  Rng rng(23);
  const auto r = qring({"a", "b"}, 2);
  const int d = 4;
  auto evaluate = [&](const TauFunction& t, const GammaElement& g) {
    std::vector<RingElement> images = {var(r, "a"), var(r, "b")};
    for (int i = 1; i <= d; ++i)
      images.push_back(-i >= g.gminus().min_exp() ? g.gminus().coeff(-i) : RingElement(r));
    return substitute(t.value, images);
  };
  for (int i = 0; i < 10; ++i) {
    const GrassPoint u = random_point(rng, r, 1 + i % 3, 2);
    const GammaElement g1 = random_gamma(rng, r, true, false), g2 = random_gamma(rng, r, true, false);
    const TauFunction tu = tau_direct(u, d);
    const RingElement lhs = evaluate(tu, gamma_mul(g1, g2));
    const RingElement rhs = evaluate(tau_direct(act(g2, u), d), g1) * evaluate(tu, g2);
    CHECK(lhs == rhs);
    CHECK(evaluate(tu, GammaElement::identity(r)).is_one());
  }
}

}  // TEST_SUITE
