#include <doctest.h>

#include "latpoly/codec.hpp"
#include "latpoly/errors.hpp"

using namespace latpoly;

TEST_CASE("json encodings are byte-stable") {
  CHECK(to_json(Poly{2, 3, 2}).dump() == "[2,3,2]");
  CHECK(to_json(Poly{}).dump() == "[]");
  CHECK(to_json(LatticePath::parse("EEENEN")).dump() == "\"EEENEN\"");
  CHECK(to_json(PartialMatching(4, {{2, 4}, {1, 3}})).dump() == R"({"m":4,"edges":[[1,3],[2,4]]})");
  CHECK(to_json(EvenTree{}).dump() == R"({"dotted":false,"root":[]})");
  CHECK(to_json(EvenTree::parse_parens("*()(()())")).dump() == R"({"dotted":true,"root":[[],[[],[]]]})");
}

TEST_CASE("decoders invert the encoders") {
  PartialMatching m(6, {{1, 4}, {2, 5}});
  CHECK(matching_from_json(to_json(m)) == m);
  EvenTree t = EvenTree::parse_parens("*()((()())()()())");
  CHECK(tree_from_json(to_json(t)) == t);
  CHECK(poly_from_json(to_json(Poly{5, 5, 2})) == Poly{5, 5, 2});
  CHECK(path_from_json(to_json(LatticePath::parse("EEEN"))).to_string() == "EEEN");
}

TEST_CASE("text-or-json readers") {
  CHECK(read_path("EEN").to_string() == "EEN");
  CHECK(read_path(" \"EEN\"\n").to_string() == "EEN");
  CHECK(read_path("").empty());
  CHECK(read_matching("1,2,1,2") == PartialMatching(4, {{1, 3}, {2, 4}}));
  CHECK(read_matching(R"({"m":4,"edges":[[1,3],[2,4]]})") == PartialMatching(4, {{1, 3}, {2, 4}}));
  CHECK(read_matching("") == PartialMatching{});
  CHECK(read_tree("()(()())") == EvenTree::parse_parens("()(()())"));
  CHECK(read_tree(R"({"dotted":false,"root":[[],[]]})") == EvenTree::parse_parens("()()"));
}

TEST_CASE("malformed input is a ParseError") {
  CHECK_THROWS_AS(read_path("EEZ"), ParseError);
  CHECK_THROWS_AS(read_path("\"EEN"), ParseError);
  CHECK_THROWS_AS(read_matching(R"({"m":4})"), ParseError);
  CHECK_THROWS_AS(read_matching(R"({"m":4,"edges":[[1,3],[3,4]]})"), ParseError);
  CHECK_THROWS_AS(read_matching(R"({"m":4,"edges":[[1]]})"), ParseError);
  CHECK_THROWS_AS(read_matching("1,1,1"), ParseError);
  CHECK_THROWS_AS(read_tree(R"({"root":[[]]})"), ParseError);
  CHECK_THROWS_AS(read_tree(R"({"dotted":1,"root":[]})"), ParseError);
  CHECK_THROWS_AS(read_tree("(x)"), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([1,"a"])")), ParseError);
}
