#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixedvol/json_io.hpp"

using namespace mixedvol;

TEST_CASE("integers round-trip through numbers and strings") {
  CHECK(int_from_json(Json(42)) == 42);
  CHECK(int_from_json(Json(-7)) == -7);
  CHECK(int_from_json(Json("123456789012345678901234567890")) ==
        Int("123456789012345678901234567890"));
  Int big("-98765432109876543210");
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_to_json(Int(5)).is_number_integer());
  CHECK(int_to_json(Int("123456789012345678901234567890")).is_string());
  CHECK_THROWS_AS(int_from_json(Json("12x")), std::invalid_argument);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("polytopes and tuples round-trip") {
  Json j = parse_json_text(R"({"dim": 2, "points": [[0,0],[3,0],[0,3],[1,1]]})");
  auto p = polytope_from_json(j);
  CHECK(p.vertices.size() == 3);
  auto back = polytope_from_json(polytope_to_json(p));
  CHECK(back.vertices == p.vertices);

  Json tj = parse_json_text(
      R"({"dim": 2, "polytopes": [{"dim": 2, "points": [[0,0],[1,0],[0,1]]},
                                  {"dim": 2, "points": [[0,0],[2,0],[0,2]]}]})");
  auto t = tuple_from_json(tj);
  CHECK(t.polytopes.size() == 2);
  CHECK(mixed_volume(t) == 2);
}

TEST_CASE("malformed polytopes are rejected") {
  CHECK_THROWS_AS(polytope_from_json(parse_json_text(R"({"points": [[0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polytope_from_json(parse_json_text(R"({"dim": 2, "points": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_json_text("{not json"), std::invalid_argument);
}

TEST_CASE("configurations default the unit set") {
  Json withm0 = parse_json_text(
      R"({"vars": 2, "sets": [{"degree": 1, "exponents": [[1,0],[0,1]]},
                              {"degree": 3, "exponents": [[3,0],[0,3]]}]})");
  auto c1 = configuration_from_json(withm0);
  CHECK(c1.sets.size() == 2);

  Json without = parse_json_text(R"({"vars": 2, "sets": [{"exponents": [[3,0],[0,3]]}]})");
  auto c2 = configuration_from_json(without);
  CHECK(c2.sets.size() == 2);
  CHECK(c2.sets[0].exponents == MonomialSet::units(2).exponents);
  CHECK(c2.sets[1].degree == 3);

  CHECK_THROWS_AS(configuration_from_json(parse_json_text(
                      R"({"vars": 2, "sets": [{"degree": 2, "exponents": [[3,0]]}]})")),
                  std::invalid_argument);

  auto again = configuration_from_json(configuration_to_json(c2));
  CHECK(again.sets.size() == c2.sets.size());
  CHECK(again.sets[1].exponents == c2.sets[1].exponents);
}

TEST_CASE("systems parse negative exponents and merge duplicate terms") {
  Json j = parse_json_text(
      R"({"vars": 2, "polys": [{"terms": [{"coeff": 2, "exp": [-1, 0]},
                                          {"coeff": 3, "exp": [-1, 0]},
                                          {"coeff": 1, "exp": [0, 2]}]},
                               {"terms": [{"coeff": -1, "exp": [1, 1]}]}]})");
  auto s = system_from_json(j);
  CHECK(s.polys[0].terms.size() == 2);
  CHECK(s.polys[0].terms.at({-1, 0}) == 5);
  auto round = system_from_json(system_to_json(s));
  CHECK(round.polys[0].terms == s.polys[0].terms);
  CHECK_THROWS_AS(system_from_json(parse_json_text(R"({"vars": 2, "polys": []})")),
                  std::invalid_argument);
}
