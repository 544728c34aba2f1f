#include "liex/error.hpp"
#include "liex/io.hpp"
#include "liex/liealg.hpp"

#include <doctest.h>

using namespace liex;

TEST_CASE("rational JSON") {
  CHECK(rational_to_json(Rational(-3, 4)) == Json("-3/4"));
  CHECK(rational_to_json(Rational(2)) == Json("2"));
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);
}

TEST_CASE("tensor round trip") {
  for (const auto& c : {catalog("sl2R"), catalog("A3.4", Rational(-1, 3)), catalog("gF"), catalog("3A1")}) {
    CHECK(tensor_from_json(tensor_to_json(c)) == c);
    CHECK(tensor_from_json(Json::parse(tensor_to_json(c).dump())) == c);
  }
}

TEST_CASE("tensor JSON layout") {
  const auto j = tensor_to_json(catalog("sl2R"));
  CHECK(j["dim"] == 3);
  REQUIRE(j["brackets"].size() == 3);
  CHECK(j["brackets"][0]["i"] == 1);
  CHECK(j["brackets"][0]["j"] == 2);
  CHECK(j["brackets"][0]["coeffs"]["1"] == "1");
}

TEST_CASE("one-sided input implies antisymmetry, two-sided is kept verbatim") {
  const auto one = tensor_from_json(Json::parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}}]})"));
  CHECK(one(1, 0, 0) == -1);
  CHECK(validate_lie(one).ok());
  const auto both = tensor_from_json(Json::parse(
      R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}},{"i":2,"j":1,"coeffs":{"1":"1"}}]})"));
  CHECK(both(1, 0, 0) == 1);
  CHECK(validate_lie(both).antisymmetry.has_value());
  CHECK(tensor_from_json(tensor_to_json(both)) == both);
}

TEST_CASE("malformed tensors") {
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"brackets":[]})")), InputError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"dim":2,"brackets":[{"i":1,"j":3,"coeffs":{}}]})")), InputError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"5":"1"}}]})")),
                  InputError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse("[1,2]")), InputError);
}

TEST_CASE("semigroup round trip is 1-based") {
  const auto s = builtin_s3();
  const auto j = semigroup_to_json(s);
  CHECK(j["order"] == 3);
  CHECK(j["table"][0][0] == 1);
  CHECK(semigroup_from_json(j) == s);
  CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"table":[[0]]})")), InputError);
}

TEST_CASE("matrix and family round trip") {
  MatrixQ m(2, 3);
  m << 1, Rational(-1, 2), 0, 0, 3, 4;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  const auto u = builtin_family("uF");
  const auto back = family_from_json(family_to_json(u));
  CHECK((back.entries == u.entries));
  const auto j = family_to_json(u);
  CHECK(j["entries"]["2,4"]["4"] == "1/2");
}

TEST_CASE("span parsing") {
  const auto a = parse_span("E1,E2,E6", 9);
  CHECK(a.rows() == 3);
  CHECK(a(2, 5) == 1);
  const auto b = parse_span("E1-E2, 2E1+1/2E3", 3);
  CHECK(b(0, 0) == 1);
  CHECK(b(0, 1) == -1);
  CHECK(b(1, 0) == 2);
  CHECK(b(1, 2) == Rational(1, 2));
  CHECK_THROWS_AS(parse_span("E10", 3), InputError);
  CHECK_THROWS_AS(parse_span("E1,,", 3), InputError);
  CHECK_THROWS_AS(parse_span("X1", 3), InputError);
}

TEST_CASE("identification JSON") {
  const auto id = identify3(catalog("A3.4", Rational(1, 2)));
  const auto j = identification_to_json(id);
  CHECK(j["class"] == "A3.4");
  CHECK(j["a"] == "1/2");
  CHECK(j["witness"].size() == 3);
}
