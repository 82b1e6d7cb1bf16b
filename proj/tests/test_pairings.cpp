#include <doctest.h>

#include "satogr/pairings.hpp"
#include "support.hpp"

using namespace satogr;
using namespace satogr::testing;

namespace {

LaurentSeries zc(const Ring& r, std::int64_t e, const RingElement& c) { return LaurentSeries::monomial(r, e, c); }


}  // namespace

TEST_SUITE("pairings") {

TEST_CASE("residue pairing") {
  auto q = CoeffRing::field_only(BaseField::rationals());
  auto zq = [&](std::int64_t e) { return LaurentSeries::monomial(q, e, 1); };
  CHECK(residue_pairing(zq(-1), zq(1)).is_one());
  CHECK(residue_pairing(zq(-2), zq(2)) == cst(q, 2));
  CHECK(residue_pairing(zq(2), zq(-2)) == cst(q, -2));
  for (int m = -10; m <= 10; ++m)
    for (int n = -10; n <= 10; ++n) CHECK(residue_pairing(zq(m), zq(n)) == cst(q, m + n == 0 ? n : 0));
  auto f2 = CoeffRing::field_only(BaseField::prime(2));
  auto f = LaurentSeries::monomial(f2, -3, 1) + LaurentSeries::monomial(f2, 1, 1) + LaurentSeries::one(f2);
  CHECK(residue_pairing(f, f).is_zero());
}

TEST_CASE("commutator examples") {
  auto r = qring({"e", "t"}, 2);
  auto e = var(r, "e"), t = var(r, "t");
  auto g1 = GammaElement::minus(LaurentSeries::one(r) + zc(r, -1, e));
  auto g2 = GammaElement::plus(LaurentSeries::one(r) + zc(r, 1, t));
  CHECK(commutator_pairing(g1, g2, commutator_window_bound(g1, g2)) == cst(r, 1) + e * t * Scalar(r->field(), kCommutatorOrientation));
  CHECK(commutator_pairing(g1, g1, 6).is_one());
  CHECK(commutator_pairing(g2, g2, 0).is_one());
  CHECK_THROWS_AS(commutator_pairing(g1, g2, 1), PrecisionError);
}

TEST_CASE("commutator properties") {
  std::mt19937_64 rng(6);
  auto r = qring({"a", "b"}, 3);
  for (int i = 0; i < 10; ++i) {
    auto p1 = random_gamma(rng, r, false, true), p2 = random_gamma(rng, r, false, true);
    CHECK(commutator_pairing(p1, p2, commutator_window_bound(p1, p2)).is_one());
    auto m1 = random_gamma(rng, r, true, false), m2 = random_gamma(rng, r, true, false);
    const auto wb = commutator_window_bound(m1, m2);
    CHECK(commutator_pairing(m1, m2, wb).is_one());
    auto g1 = random_gamma(rng, r, true, true), g2 = random_gamma(rng, r, true, true);
    const auto w = commutator_window_bound(g1, g2);
    auto c = commutator_pairing(g1, g2, w);
    CHECK(c == commutator_pairing(g1, g2, w + 3));
    auto g1b = random_gamma(rng, r, true, true);
    auto prod = gamma_mul(g1, g1b);
    const auto w2 = std::max(commutator_window_bound(prod, g2), commutator_window_bound(g1b, g2));
    CHECK(commutator_pairing(prod, g2, w2) == commutator_pairing(g1, g2, w2) * commutator_pairing(g1b, g2, w2));
  }
}

TEST_CASE("infinitesimal commutator is the residue pairing") {
  auto r = qring({"e", "t"}, 2);
  auto e = var(r, "e"), t = var(r, "t");
  auto q = CoeffRing::field_only(BaseField::rationals());
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      auto g1 = GammaElement::minus(LaurentSeries::one(r) + zc(r, -a, e));
      auto g2 = GammaElement::plus(LaurentSeries::one(r) + zc(r, b, t));
      auto c = commutator_pairing(g1, g2, commutator_window_bound(g1, g2));
      auto et = (e * t).terms().front().first;
      long idx = r->find(et);
      auto res = residue_pairing(LaurentSeries::monomial(q, -a, 1), LaurentSeries::monomial(q, b, 1));
      CHECK(c.coeff(static_cast<std::size_t>(idx)) == res.constant_term() * Scalar(q->field(), kCommutatorOrientation));
    }
}

}  // TEST_SUITE
