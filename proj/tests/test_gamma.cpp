#include <doctest.h>

#include "satogr/gamma.hpp"
#include "support.hpp"

using namespace satogr;
using namespace satogr::testing;

namespace {

LaurentSeries z(const Ring& r, std::int64_t e) { return LaurentSeries::monomial(r, e, 1); }
LaurentSeries zc(const Ring& r, std::int64_t e, const RingElement& c) { return LaurentSeries::monomial(r, e, c); }

// Independent oracle for the Witt law: the product series, computed with truncated Laurent arithmetic.
LaurentSeries witt_series(const Ring& r, const std::vector<RingElement>& a, int n) {
  LaurentSeries p = LaurentSeries::one(r).truncated(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) p = p * (LaurentSeries::one(r) - zc(r, static_cast<long>(i) + 1, a[i]));
  return p;
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("factorize examples") {
  auto r = qring({"x1"}, 1);
  auto x1 = var(r, "x1");
  auto f = zc(r, 0, cst(r, 2) + x1 * Scalar(r->field(), 2)) + zc(r, 1, cst(r, 2)) + zc(r, -1, x1 * Scalar(r->field(), 2));
  auto g = factorize(f);
  CHECK(g.gminus() == LaurentSeries::one(r) + zc(r, -1, x1));
  CHECK(g.unit() == cst(r, 2));
  CHECK(g.gplus() == LaurentSeries::one(r) + z(r, 1));
  CHECK(g.zpower() == 0);
  CHECK(g.series() == f);

  auto q = CoeffRing::field_only(BaseField::rationals());
  CHECK(factorize(LaurentSeries::one(q)) == GammaElement::identity(q));
  auto f7 = CoeffRing::field_only(BaseField::prime(7));
  auto g7 = factorize(z(f7, 3));
  CHECK(g7.zpower() == 3);
  CHECK(g7.gminus().is_one());
  CHECK(g7.gplus().is_one());
  CHECK(g7.unit().is_one());
  CHECK_THROWS_AS(factorize(zc(r, 0, x1)), PreconditionError);
}

TEST_CASE("factorization round trip and uniqueness") {
  std::mt19937_64 rng(21);
  for (const Ring& r : {qring({"x1", "x2"}, 2), fpring(5, {"x1"}, 2)}) {
    for (int i = 0; i < 20; ++i) {
      std::int64_t n = static_cast<std::int64_t>(rng() % 5) - 2;
      std::vector<RingElement> c;
      int depth = static_cast<int>(rng() % 3);
      for (int k = 0; k < depth; ++k) c.push_back(random_nilpotent(rng, r));
      c.push_back(random_unit(rng, r));
      for (int k = 0; k < 24; ++k) c.push_back(random_element(rng, r));
      auto f = LaurentSeries(r, n - depth, c, n + 25);
      auto g = factorize(f);
      CHECK(g.zpower() == n);
      CHECK(g.series().agrees_with(f));
      CHECK(g.series().trunc() > n);
      auto again = factorize(g.series());
      CHECK(again.agrees_with(g));
    }
  }
}

TEST_CASE("gamma_mul examples") {
  auto r = qring({"a1", "b1"}, 2);
  auto a1 = var(r, "a1"), b1 = var(r, "b1");
  auto ga = GammaElement::plus(LaurentSeries::one(r) + zc(r, 1, a1));
  auto gb = GammaElement::plus(LaurentSeries::one(r) + zc(r, 1, b1));
  auto p = gamma_mul(ga, gb);
  CHECK(p.gplus() == LaurentSeries::one(r) + zc(r, 1, a1 + b1) + zc(r, 2, a1 * b1));
  auto inv = ga.inverse(6);
  CHECK(gamma_mul(ga, inv).gplus().agrees_with(LaurentSeries::one(r)));

  auto s = qring({"e", "d"}, 2);
  auto e = var(s, "e"), d = var(s, "d");
  auto m = gamma_mul(GammaElement::minus(LaurentSeries::one(s) + zc(s, -1, e)),
                     GammaElement::minus(LaurentSeries::one(s) + zc(s, -1, d)));
  CHECK(m.gminus() == LaurentSeries::one(s) + zc(s, -1, e + d) + zc(s, -2, e * d));
}

TEST_CASE("factorize canonicalizes products") {
  std::mt19937_64 rng(4);
  auto r = qring({"e", "d"}, 2);
  for (int i = 0; i < 15; ++i) {
    auto mk = [&]() {
      auto gm = LaurentSeries::one(r) + zc(r, -1, random_nilpotent(rng, r)) + zc(r, -2, random_nilpotent(rng, r));
      auto gp = (LaurentSeries::one(r) + zc(r, 1, random_element(rng, r)) + zc(r, 3, random_element(rng, r))).truncated(30);
      return GammaElement::make(gm, random_unit(rng, r), gp);
    };
    auto g = mk(), h = mk();
    auto prod = gamma_mul(g, h);
    auto f = factorize(prod.series());
    CHECK(f.agrees_with(prod));
    CHECK(factorize(f.series()).agrees_with(f));
  }
}

TEST_CASE("exp_char0") {
  auto r = qring({"y1"}, 3);
  auto y1 = var(r, "y1");
  auto g = exp_char0(r, {y1}, Sign::minus);
  auto expect = LaurentSeries::one(r) + zc(r, -1, y1) + zc(r, -2, y1 * y1 * Scalar(r->field(), mpq_class(1, 2))) +
                zc(r, -3, y1.pow(3) * Scalar(r->field(), mpq_class(1, 6)));
  CHECK(g.gminus() == expect);
  CHECK(exp_char0(r, {}, Sign::minus) == GammaElement::identity(r));
  CHECK_THROWS_AS(exp_char0(fpring(3, {"y"}, 2), {}, Sign::minus), PreconditionError);
  CHECK_THROWS_AS(exp_char0(r, {cst(r, 1)}, Sign::minus), PreconditionError);
  CHECK_THROWS_AS(exp_char0(r, {cst(r, 1)}, Sign::plus), PrecisionError);
}

TEST_CASE("exp_char0 is a homomorphism") {
  std::mt19937_64 rng(8);
  auto r = qring({"a", "b"}, 6);
  for (Sign sign : {Sign::minus, Sign::plus}) {
    for (int i = 0; i < 4; ++i) {
      std::vector<RingElement> y, yp, sum;
      for (int k = 0; k < 3; ++k) {
        y.push_back(sign == Sign::minus ? random_nilpotent(rng, r) : random_element(rng, r));
        yp.push_back(sign == Sign::minus ? random_nilpotent(rng, r) : random_element(rng, r));
        sum.push_back(y.back() + yp.back());
      }
      auto lhs = gamma_mul(exp_char0(r, y, sign, 8), exp_char0(r, yp, sign, 8));
      auto rhs = exp_char0(r, sum, sign, 8);
      CHECK(lhs.agrees_with(rhs));
    }
  }
}

TEST_CASE("exp_charp and witt_add examples") {
  auto r = fpring(3, {"a1", "a2", "b1"}, 2);
  auto a1 = var(r, "a1"), a2 = var(r, "a2"), b1 = var(r, "b1");
  CHECK(exp_charp(r, {a1}, Sign::minus).gminus() == LaurentSeries::one(r) - zc(r, -1, a1));
  CHECK(exp_charp(r, {}, Sign::minus) == GammaElement::identity(r));
  CHECK(exp_charp(r, {a1, a2}, Sign::minus).gminus() ==
        LaurentSeries::one(r) - zc(r, -1, a1) - zc(r, -2, a2) + zc(r, -3, a1 * a2));
  auto c = witt_add(r, {a1}, {b1}, 2);
  CHECK(c[0] == a1 + b1);
  CHECK(c[1] == -(a1 * b1));
  auto z0 = witt_add(r, {a1, a2}, {}, 2);
  CHECK(z0[0] == a1);
  CHECK(z0[1] == a2);
}

TEST_CASE("witt_add matches the series oracle and the group axioms") {
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    auto f = CoeffRing::field_only(BaseField::prime(p));
    for (int i = 0; i < 40; ++i) {
      std::vector<RingElement> a, b, c;
      for (int k = 0; k < 4; ++k) {
        a.push_back(cst(f, static_cast<long>(rng() % p)));
        b.push_back(cst(f, static_cast<long>(rng() % p)));
        c.push_back(cst(f, static_cast<long>(rng() % p)));
      }
      auto s = witt_add(f, a, b, 4);
      CHECK(witt_series(f, s, 4) == (witt_series(f, a, 4) * witt_series(f, b, 4)));
      CHECK(s == witt_add(f, b, a, 4));
      CHECK(witt_add(f, s, c, 4) == witt_add(f, a, witt_add(f, b, c, 4), 4));
    }
  }
}

TEST_CASE("abel") {
  auto r = qring({"t", "s"}, 3);
  auto t = var(r, "t"), s = var(r, "s");
  auto g = abel(r, {t});
  CHECK(g.gminus() == LaurentSeries::one(r) + zc(r, -1, t) + zc(r, -2, t * t) + zc(r, -3, t.pow(3)));
  CHECK(abel(r, {RingElement(r)}) == GammaElement::identity(r));
  auto h = abel_coefficients(r, {t, s}, 2);
  CHECK(h[0] == t + s);
  CHECK(h[1] == t * t + t * s + s * s);
  CHECK(abel(r, {t, s}) == abel(r, {s, t}));
  CHECK(abel(r, {t, s}).gminus().coeff(-2) == h[1]);
  CHECK_THROWS_AS(abel(r, {cst(r, 1)}), PreconditionError);
  auto q = CoeffRing::field_only(BaseField::rationals());
  auto hq = abel_coefficients(q, {cst(q, 2)}, 3);
  CHECK(hq[2] == cst(q, 8));
}

TEST_CASE("universal_v") {
  auto v1 = universal_v(BaseField::rationals(), 1);
  CHECK(v1.gminus().to_string() == "x1*z^-1 + 1");
  CHECK(universal_v(BaseField::rationals(), 0).gminus().is_one());
  auto v3 = universal_v(BaseField::rationals(), 3);
  CHECK((v3.series() * laurent_invert(v3.series())).is_one());
}

}
