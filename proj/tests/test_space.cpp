#include <doctest.h>

#include "polyprod/json_io.hpp"
#include "polyprod/space.hpp"

using namespace polyprod;

TEST_SUITE("space") {

TEST_CASE("s-expression printing") {
  CHECK(to_sexpr(point()) == "(point)");
  CHECK(to_sexpr(wedge({sphere(3), loop(sphere(2))})) == "(wedge (sphere 3) (loop (sphere 2)))");
  CHECK(to_sexpr(wedge_power(sphere(2), 3)) == "(wedge (rep 3 (sphere 2)))");
  CHECK(to_sexpr(join(sphere(1), cone(sphere(1)))) == "(join (sphere 1) (cone (sphere 1)))");
  CHECK(to_sexpr(cp_infinity()) == "(atom CP^inf (loop-series 1 1))");
  CHECK(to_sexpr(atom("a b", std::vector<long long>{0, 0, 1})) == "(atom \"a b\" (series 0 0 1))");
}

TEST_CASE("s-expression round trip") {
  const std::vector<Space> terms = {
      point(),
      sphere(7),
      cp_infinity(),
      atom("G"),
      prod({Factor{sphere(1), 3}, Factor{loop(sphere(3)), 1}}),
      smash_power(loop(atom("X")), 2),
      rhalf_smash(wedge({sphere(3), sphere(4)}), loop(join(sphere(1), sphere(1)))),
      susp(cone(point())),
  };
  for (const auto& t : terms) {
    CAPTURE(to_sexpr(t));
    CHECK(parse_sexpr(to_sexpr(t)) == t);
    CHECK(space_from_json(to_json(t)) == t);
  }
  CHECK(parse_sexpr("  ( wedge\n (sphere 2) (rep 2 (sphere 3)) ) ") ==
        wedge({Factor{sphere(2), 1}, Factor{sphere(3), 2}}));
}

TEST_CASE("s-expression errors") {
  for (const char* bad : {"", "(sphere)", "(sphere 0)", "(sphere x)", "(wedge (sphere 2)", "(foo)",
                          "(wedge (rep 0 (sphere 2)))", "(point) (point)", "(atom X (colour 1))", "(join (point))"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sexpr(bad), std::invalid_argument);
  }
}

TEST_CASE("JSON form") {
  const Json j = to_json(wedge({Factor{sphere(2), 2}}));
  CHECK(j.dump() == R"({"args":[{"args":[{"dim":2,"op":"sphere"}],"count":2,"op":"rep"}],"op":"wedge"})");
  CHECK_THROWS_AS(space_from_json(Json::parse(R"({"op":"susp","args":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(Json::parse(R"({"op":"nope"})")), std::invalid_argument);
}

TEST_CASE("ordering and equality are structural") {
  CHECK(sphere(2) < sphere(3));
  CHECK(point() < sphere(1));
  CHECK(wedge({sphere(2), sphere(3)}) != wedge({sphere(3), sphere(2)}));
  CHECK(loop(sphere(2)) == loop(sphere(2)));
  CHECK(atom("X") != atom("X", std::vector<long long>{0, 1}));
  CHECK(node_count(wedge({sphere(2), loop(sphere(3))})) == 4);
}

TEST_CASE("constructors validate") {
  CHECK_THROWS_AS(sphere(0), std::invalid_argument);
  CHECK_THROWS_AS(atom(""), std::invalid_argument);
  CHECK_THROWS_AS(smash_power(sphere(1), 0), std::invalid_argument);
  CHECK(wedge_power(sphere(2), 0) == point());
  CHECK_THROWS_AS(wedge({Factor{sphere(2), 0}}), std::invalid_argument);
}

}
