#include <catch_amalgamated.hpp>

#include <random>

#include "spherahall/io.hpp"
#include "spherahall/sampling.hpp"

using namespace spherahall;

TEST_CASE("object text syntax") {
  SphereDim d3{3};
  REQUIRE(parse_object("0", d3).is_zero());
  REQUIRE(parse_object(" S ", d3) == simple(d3));
  REQUIRE(parse_object("S[-1]", d3) == simple(d3, -1));
  REQUIRE(parse_object("2*S + M2[1]", d3) == ObjClass(d3, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}}));
  REQUIRE(parse_object("S \xE2\x8A\x95 S[2]", d3) == ObjClass(d3, {{0, 1, 1}, {2, 1, 1}}));
  REQUIRE(parse_object("-1:3", d3) == ObjClass(d3, {{-1, 3, 1}}));
  SphereDim d0{0};
  REQUIRE(parse_object("T + T'[1]", d0) == ObjClass(d0, {{0, 1, 1}, {1, 1, 2}}));
  REQUIRE(parse_object("0:1:2", d0) == simple(d0, 0, 2));
  for (const char* bad : {"", "Q", "S[", "S[x]", "M[1]", "S+", "-1*S", "1:2:3:4"})
    REQUIRE_THROWS_AS(parse_object(bad, d3), InvalidArgument);
  REQUIRE_THROWS_AS(parse_object("M0", d3), InvalidLabel);
  REQUIRE_THROWS_AS(parse_object("T'", d3), InvalidLabel);
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(83);
  for (int d : {3, 1, 0, -2}) {
    SphereDim dim{d};
    for (int k = 0; k < 50; ++k) {
      ObjClass x = random_object(dim, rng, 5, -4, 4);
      REQUIRE(object_from_json(to_json(x)) == x);
      REQUIRE(parse_object(to_json(x).dump(), dim) == x);
    }
  }
  SphereDim d3{3};
  HallElement e = HallElement::basis(simple(d3), 3) * HallElement::basis(simple(d3, -1), 3);
  json j = to_json(e);
  REQUIRE(j["q"] == 3);
  REQUIRE(element_from_json(j) == e);
  REQUIRE(j["terms"][0]["coeff"] == "1/2");
  REQUIRE_THROWS_AS(parse_object("{\"d\": 3}", d3), InvalidArgument);
  REQUIRE_THROWS_AS(parse_object("{\"d\": 3, \"summands\": [{\"shift\": \"a\", \"len\": 1}]}", d3), InvalidArgument);
  REQUIRE_THROWS_AS(parse_object("{oops", d3), InvalidArgument);
}

TEST_CASE("polynomial text at q") {
  NCPolynomial p = NCPolynomial::constant(RationalFunctionV(-2)) +
                   RationalFunctionV(2) * (gen(gx(0)) * gen(gy(0))) -
                   gen(gy(1)) + RationalFunctionV::q() * gen(gzj(0, 2));
  REQUIRE(format_at_q(p, 3) == "-2 + 2*x0*y0 - y1 + 3*z[0,2]");
  REQUIRE(format_at_q(NCPolynomial(), 2) == "0");
  REQUIRE(format_at_q(NCPolynomial::constant(RationalFunctionV(1)), 2) == "1");
}
