#include <doctest.h>

#include "satogr/jobs.hpp"
#include "satogr/pairings.hpp"
#include "satogr/serialize.hpp"
#include "support.hpp"

using namespace satogr;
using namespace satogr::testing;
using satogr::io::Json;

namespace {

Json run_ok(const std::string& cmd, const std::string& payload, const jobs::Options& o = {}) {
  auto out = jobs::run(cmd, payload, o);
  INFO(out.document);
  REQUIRE(out.status == jobs::Status::ok);
  return Json::parse(out.document);
}

jobs::Status status_of(const std::string& cmd, const std::string& payload, const jobs::Options& o = {}) {
  return jobs::run(cmd, payload, o).status;
}

const char* kOneColumn =
    R"({"ring":{"vars":["c"],"deg":1},"point":{"tail_depth":1,"columns":[{"terms":[)"
    R"({"exp":-1,"coeff":"1"},{"exp":0,"coeff":[{"exponents":[1],"coeff":"1"}]}]}]}})";

}  // namespace

TEST_SUITE("jobs") {

TEST_CASE("ring encodings") {
  const auto q = BaseField::rationals();
  auto r = io::ring_from_json(Json::parse(R"({"vars":["a","b"],"deg":2})"), q);
  CHECK(r->same_as(*qring({"a", "b"}, 2)));
  auto w = io::ring_from_json(io::to_json(coordinate_ring(q, 3)), q);
  CHECK(w->same_as(*coordinate_ring(q, 3)));
  CHECK(io::ring_from_json(nullptr, q)->num_vars() == 0);
  CHECK_THROWS_AS(io::ring_from_json(Json::parse(R"({"field":"fp:3","vars":["a"],"deg":1})"), q), ParseError);
}

TEST_CASE("round trips") {
  Rng rng(11);
  for (const auto& r : {qring({"a", "b"}, 2), fpring(3, {"t"}, 3)}) {
    for (int i = 0; i < 20; ++i) {
      const RingElement a = random_element(rng, r);
      CHECK(io::element_from_json(io::to_json(a), r) == a);
      const LaurentSeries f = random_invertible(rng, r, 4);
      CHECK(io::series_from_json(io::to_json(f), r) == f);
      const GammaElement g = random_gamma(rng, r, true, true, 2, true);
      CHECK(io::gamma_from_json(io::to_json(g), r) == g);
      const GrassPoint l = random_point(rng, r, 2, 2, false);
      const GrassPoint back = io::point_from_json(io::to_json(l), r);
      CHECK(back.tail_depth() == l.tail_depth());
      CHECK(back.columns() == l.columns());
    }
  }
  for (const auto& p : partitions_up_to(5)) {
    CHECK(io::partition_from_json(io::to_json(p)) == p);
    const MayaDiagram s = partition_to_maya(p);
    CHECK(io::maya_from_json(io::to_json(s)) == s);
    CHECK(io::maya_from_json(io::to_json(p)) == s);
  }
}

TEST_CASE("malformed encodings") {
  const auto r = qring({"a"}, 2);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"([{"exponents":[1,0],"coeff":"1"}])"), r), ParseError);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"([{"exponents":[3],"coeff":"1"}])"), r), ParseError);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"([{"exponents":[1],"coeff":"1/0"}])"), r), ParseError);
  CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"trunc_order":2,"terms":[{"exp":2,"coeff":"1"}]})"), r),
                  ParseError);
  CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"terms":[{"exp":1,"coeff":"1"},{"exp":1,"coeff":"2"}]})"), r),
                  ParseError);
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("[1,2]")), ParseError);
}

TEST_CASE("tau of a one-column point") {
  jobs::Options o;
  o.deg = 2;
  const Json doc = run_ok("tau", kOneColumn, o);
  CHECK(doc["status"] == "ok");
  CHECK(doc["result"]["text"] == "1 + c*x1");
  CHECK(doc["precision_used"]["deg"] == 2);
  CHECK(doc["convention_flags"]["commutator_orientation"] == kCommutatorOrientation);
  o.tail_depth = 3;
  CHECK(run_ok("tau", kOneColumn, o)["result"]["text"] == "1 + c*x1");
}

TEST_CASE("factor example") {
  const Json doc = run_ok("factor",
                          R"({"ring":{"vars":["x1"],"deg":1},"series":{"terms":[{"exp":-1,"coeff":[{"exponents":[1],)"
                          R"("coeff":"1"}]},{"exp":0,"coeff":"2"},{"exp":1,"coeff":"1"}]}})");
  const auto r = qring({"x1"}, 1);
  const GammaElement g = io::gamma_from_json(doc["result"]["gamma"], r);
  const RingElement x = var(r, "x1");
  CHECK(g.series() == series(r, -1, {x, cst(r, 2), cst(r, 1)}));
  CHECK(g.unit() == cst(r, 2) - frac(r, 1, 2) * x);
}

TEST_CASE("error codes") {
  CHECK(status_of("tau", kOneColumn) == jobs::Status::parse);
  CHECK(status_of("nope", "{}") == jobs::Status::parse);
  CHECK(status_of("index", "[1]") == jobs::Status::parse);
  CHECK(status_of("index", "{") == jobs::Status::parse);
  CHECK(status_of("index", R"({"point":{"tail_depth":0}})") == jobs::Status::parse);
  jobs::Options bad;
  bad.field = "fp:9";
  CHECK(status_of("index", R"({"point":{"tail_depth":0,"columns":[]}})", bad) == jobs::Status::parse);

  jobs::Options o;
  o.deg = 2;
  // index 1
  CHECK(status_of("tau", R"({"point":{"tail_depth":0,"columns":[{"terms":[{"exp":0,"coeff":"1"}]}]}})", o) ==
        jobs::Status::precondition);
  // dependent columns
  CHECK(status_of("index",
                  R"({"point":{"tail_depth":0,"columns":[{"terms":[{"exp":0,"coeff":"1"}]},)"
                  R"({"terms":[{"exp":0,"coeff":"2"}]}]}})") == jobs::Status::precondition);
  const std::string comm =
      R"({"kind":"commutator","ring":{"vars":["e","t"],"deg":2},)"
      R"("g1":{"terms":[{"exp":0,"coeff":"1"},{"exp":-1,"coeff":[{"exponents":[1,0],"coeff":"1"}]}]},)"
      R"("g2":{"terms":[{"exp":0,"coeff":"1"},{"exp":1,"coeff":[{"exponents":[0,1],"coeff":"1"}]}]}})";
  jobs::Options w;
  w.pair_window = 2;
  CHECK(status_of("pair", comm, w) == jobs::Status::precision);
  w.pair_window = 3;
  const Json doc = run_ok("pair", comm, w);
  const auto r = qring({"e", "t"}, 2);
  CHECK(io::element_from_json(doc["result"]["value"], r) ==
        cst(r, 1) + var(r, "e") * var(r, "t") * Scalar(r->field(), kCommutatorOrientation));

  const Json err = Json::parse(jobs::run("tau", kOneColumn, {}).document);
  CHECK(err["status"] == "error");
  CHECK(err["error"]["kind"] == "parse");
  CHECK(err["error"]["message"] == "tau requires --deg");
}

TEST_CASE("determinism") {
  jobs::Options o;
  o.deg = 4;
  o.window = 6;
  const std::string p = R"({"point":{"tail_depth":2,"columns":[{"terms":[{"exp":-2,"coeff":"1"},{"exp":0,"coeff":"1/3"}]},)"
                        R"({"terms":[{"exp":-1,"coeff":"1"},{"exp":1,"coeff":"-2"}]}]}})";
  for (const char* cmd : {"tau", "baker", "plucker", "index"}) {
    const auto a = jobs::run(cmd, p, o), b = jobs::run(cmd, p, o);
    CHECK(a.status == jobs::Status::ok);
    CHECK(a.document == b.document);
  }
  jobs::Options v;
  v.seed = 0;
  v.scale = "small";
  const auto a = jobs::run("verify", R"({"suite":"witt"})", v), b = jobs::run("verify", R"({"suite":"witt"})", v);
  CHECK(a.status == jobs::Status::ok);
  CHECK(a.document == b.document);
}

}  // TEST_SUITE
