#include <doctest.h>

#include "support.hpp"

using namespace satogr;
using namespace satogr::testing;

TEST_SUITE("scalars") {

TEST_CASE("field parsing") {
  CHECK(BaseField::parse("q").is_rational());
  CHECK(BaseField::parse("fp:7").characteristic() == 7);
  CHECK_THROWS_AS(BaseField::parse("fp:8"), ParseError);
  CHECK_THROWS_AS(BaseField::parse("r"), ParseError);
  CHECK(BaseField::parse("fp:9223372036854775783").characteristic() == 9223372036854775783ULL);
}

TEST_CASE("scalar parsing and arithmetic") {
  auto q = BaseField::rationals();
  CHECK(Scalar::parse(q, "6/4").to_string() == "3/2");
  CHECK(Scalar::parse(q, "-2").to_string() == "-2");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
  auto f7 = BaseField::prime(7);
  CHECK(Scalar::parse(f7, "-1").to_string() == "6");
  CHECK(Scalar::parse(f7, "1/2").to_string() == "4");
  CHECK((Scalar(f7, 3) * Scalar(f7, 3).inverse()).is_one());
  CHECK_THROWS_AS(Scalar(q).inverse(), PreconditionError);
  // products near 2^63 go through 128-bit intermediates
  auto big = BaseField::prime(9223372036854775783ULL);
  Scalar a(big, -2);
  CHECK((a * a).to_string() == "4");
}

TEST_CASE("ring_add examples") {
  auto r = qring({"x1"}, 2);
  auto x1 = var(r, "x1");
  CHECK((x1 + -x1).is_zero());
  CHECK((cst(r, 1) + x1 + x1).to_string() == "1 + 2*x1");
  auto f2 = fpring(2, {"x1"}, 2);
  auto y = cst(f2, 1) + var(f2, "x1");
  CHECK((y + y).is_zero());
}

TEST_CASE("ring_mul examples") {
  auto r = qring({"x1"}, 2);
  auto x1 = var(r, "x1");
  CHECK(((cst(r, 1) + x1) * (cst(r, 1) - x1)).to_string() == "1 - x1^2");
  auto r1 = qring({"x1"}, 1);
  CHECK((var(r1, "x1") * var(r1, "x1")).is_zero());
  auto r2 = qring({"x1", "x2"}, 2);
  auto s = var(r2, "x1") + var(r2, "x2");
  CHECK((s * s).to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK_THROWS_AS(x1 * var(r2, "x1"), PreconditionError);
}

TEST_CASE("nilpotency and inverses") {
  auto r3 = qring({"x1"}, 3);
  CHECK(var(r3, "x1").is_nilpotent());
  CHECK(!(cst(r3, 1) + var(r3, "x1")).is_nilpotent());
  CHECK(RingElement(r3).is_nilpotent());
  auto r = qring({"x1"}, 2);
  auto a = cst(r, 1) + var(r, "x1");
  CHECK(a.inverse().to_string() == "1 - x1 + x1^2");
  CHECK(cst(r, 2).inverse().to_string() == "1/2");
  auto f2 = fpring(2, {"x1"}, 1);
  auto b = cst(f2, 1) + var(f2, "x1");
  CHECK(b.inverse() == b);
  CHECK_THROWS_AS(var(r, "x1").inverse(), PreconditionError);
}

TEST_CASE("weighted truncation") {
  auto w = CoeffRing::weighted(BaseField::rationals(), {"x1", "x2", "x3"}, {1, 2, 3}, 3);
  CHECK(w->size() == 7);  // partitions of 0..3
  auto x1 = var(w, "x1"), x2 = var(w, "x2");
  CHECK((x1 * x2).to_string() == "x1*x2");
  CHECK((x2 * x2).is_zero());
  CHECK(x1.pow(3).to_string() == "x1^3");
  CHECK(x1.pow(4).is_zero());
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (const Ring& r : {qring({"a", "b"}, 3), fpring(5, {"a", "b", "c"}, 2),
                        CoeffRing::weighted(BaseField::rationals(), {"x1", "x2", "x3"}, {1, 2, 3}, 4)}) {
    for (int i = 0; i < 25; ++i) {
      auto a = random_element(rng, r), b = random_element(rng, r), c = random_element(rng, r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a.is_nilpotent() != a.is_unit()));
      if (a.is_unit()) CHECK((a * a.inverse()).is_one());
      if (a.is_nilpotent()) CHECK(a.pow(static_cast<unsigned>(r->nilpotency_bound() + 1)).is_zero());
    }
  }
}

TEST_CASE("truncation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  auto big = qring({"a", "b"}, 4);
  for (int i = 0; i < 20; ++i) {
    auto a = random_element(rng, big), b = random_element(rng, big);
    auto t = [](const RingElement& x) { return x.truncated({2}); };
    CHECK(t(a + b) == t(a) + t(b));
    CHECK(t(a * b) == t(t(a) * t(b)));
  }
}

TEST_CASE("embedding and substitution") {
  auto r = qring({"a"}, 2);
  auto big = r->extended({VariableBlock{{"t"}, {1}, 3}});
  auto a = var(r, "a");
  auto e = embed(cst(r, 1) + a, big);
  CHECK(e.to_string() == "1 + a");
  CHECK(restrict_to(e * var(big, "t") + e, r) == cst(r, 1) + a);
  // a -> a + t is a homomorphism into the tensor ring
  auto img = var(big, "a") + var(big, "t");
  auto x = (cst(r, 1) + a) * (cst(r, 2) - a);
  CHECK(substitute(x, {img}) == substitute(cst(r, 1) + a, {img}) * substitute(cst(r, 2) - a, {img}));
}

}
