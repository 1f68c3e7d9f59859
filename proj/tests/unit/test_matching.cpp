#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latpoly/errors.hpp"
#include "latpoly/matching.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

PartialMatching seq(std::vector<int> labels) { return PartialMatching::from_sequence(labels); }

std::vector<int> pattern(std::initializer_list<int> p) { return p; }

}  // namespace

TEST_CASE("construction validates edges") {
  CHECK_NOTHROW(PartialMatching(4, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(PartialMatching(4, {{1, 3}, {3, 4}}), DomainError);
  CHECK_THROWS_AS(PartialMatching(4, {{1, 5}}), DomainError);
  CHECK_THROWS_AS(PartialMatching(4, {{3, 2}}), DomainError);
  CHECK_THROWS_AS(seq({1, 1, 1}), DomainError);
  PartialMatching m(5, {{3, 5}, {1, 4}});
  CHECK(m.edges()[0] == Edge{1, 4});
  CHECK(m.isolated_points() == std::vector<int>{2});
}

TEST_CASE("canonical sequential form") {
  CHECK(canonical_sequence(PartialMatching(8, {{1, 7}, {2, 4}, {3, 8}, {5, 6}})) ==
        SequentialForm{1, 2, 3, 2, 4, 4, 1, 3});
  CHECK(canonical_sequence(PartialMatching(5, {{1, 4}, {3, 5}})) == SequentialForm{1, 2, 3, 1, 3});
  CHECK(canonical_sequence(PartialMatching(1, {})) == SequentialForm{1});
  CHECK(format_sequence(SequentialForm{1, 2, 3, 2, 4, 4, 1, 3}) == "1,2,3,2,4,4,1,3");
  CHECK(parse_sequence("1,2,10,2") == SequentialForm{1, 2, 10, 2});
  CHECK(parse_sequence("").empty());
  CHECK_THROWS_AS(parse_sequence("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_sequence("1,0"), ParseError);
}

TEST_CASE("closed sequential form appends isolated labels nested") {
  // isolated points 2 and 6 (labels 2 and 4) close in reverse order
  CHECK(closed_sequence(seq({1, 2, 3, 1, 3, 4})) == SequentialForm{1, 2, 3, 1, 3, 4, 4, 2});
  CHECK(closed_sequence(PartialMatching(2, {{1, 2}})) == SequentialForm{1, 1});
}

TEST_CASE("pattern containment") {
  const std::vector<int> p12312(kPattern12312.begin(), kPattern12312.end());
  CHECK(contains_pattern(std::vector<int>{1, 2, 3, 2, 4, 4, 1, 3}, p12312));
  CHECK_FALSE(contains_pattern(std::vector<int>{1, 2, 3, 1, 3}, p12312));
  CHECK(contains_pattern(std::vector<int>{4}, pattern({1})));
  CHECK_FALSE(contains_pattern(std::vector<int>{}, pattern({1})));
  // equal pattern entries demand equal sequence entries
  CHECK_FALSE(contains_pattern(std::vector<int>{1, 2}, pattern({1, 1})));
  CHECK(contains_pattern(std::vector<int>{2, 1, 2}, pattern({1, 1})));
  CHECK_FALSE(contains_pattern(std::vector<int>{1, 1}, pattern({1, 2})));
}

TEST_CASE("pattern containment agrees with subset oracle on random input") {
  std::mt19937_64 rng(12312);
  std::uniform_int_distribution<int> slen(0, 12), plen(1, 5), sval(1, 6), pval(1, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> s(static_cast<std::size_t>(slen(rng)));
    for (int& v : s) v = sval(rng);
    std::vector<int> p(static_cast<std::size_t>(plen(rng)));
    for (int& v : p) v = pval(rng);
    CAPTURE(format_sequence(s));
    CAPTURE(format_sequence(p));
    CHECK(contains_pattern(s, p) == oracle::contains(s, p));
  }
}

TEST_CASE("generalized crossings") {
  CHECK(crossings(seq({1, 2, 3, 1, 2})) == 3);
  CHECK(crossings(seq({1, 2, 3, 1, 3})) == 2);
  CHECK(crossings(seq({1, 2, 3, 3, 1})) == 1);
  CHECK(crossings(PartialMatching(4, {{1, 3}, {2, 4}})) == 1);
  CHECK(crossings(PartialMatching(4, {{1, 4}, {2, 3}})) == 0);
}

TEST_CASE("class Q membership") {
  CHECK(in_class_q(PartialMatching(4, {{1, 3}})));
  CHECK_FALSE(in_class_q(PartialMatching(4, {{1, 4}})));
  CHECK_FALSE(in_class_q(PartialMatching(4, {{2, 4}})));
  auto why = class_q_violation(PartialMatching(4, {{1, 4}}));
  REQUIRE(why);
  CHECK(why->find("covers 2") != std::string::npos);
  EdgeBalance b = balance(PartialMatching(5, {{2, 4}}), {2, 4});
  CHECK(b.left == 1);
  CHECK(b.covered == 1);
  CHECK(b.right == 1);
}

TEST_CASE("literal plain-sequence avoidance overcounts at (6,2)") {
  // Both are balanced members of Q and avoid 12312 as plain sequences, yet
  // no path generates them; closing the isolated points exposes the pattern.
  for (auto labels : {std::vector<int>{1, 2, 3, 1, 3, 4}, std::vector<int>{1, 2, 3, 3, 1, 4}}) {
    PartialMatching m = seq(labels);
    CHECK(in_class_q(m));
    CHECK_FALSE(contains_pattern(canonical_sequence(m), kPattern12312));
    CHECK_FALSE(avoids_12312(m));
  }
}

TEST_CASE("brute-force enumeration of Q") {
  auto q21 = enumerate_q(2, 1);
  REQUIRE(q21.size() == 1);
  CHECK(q21[0] == PartialMatching(2, {{1, 2}}));
  auto q42 = enumerate_q(4, 2);
  CHECK(q42.size() == 3);
  auto q10 = enumerate_q(1, 0);
  REQUIRE(q10.size() == 1);
  CHECK(q10[0].points() == 1);
  CHECK(enumerate_q(0, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_q(3, 2), DomainError);

  auto q41 = enumerate_q(4, 1);
  CHECK(q41 == std::vector<PartialMatching>{PartialMatching(4, {{1, 2}}), PartialMatching(4, {{1, 3}}),
                                             PartialMatching(4, {{2, 3}})});
  CHECK(std::is_sorted(q41.begin(), q41.end()));

  CHECK(q_poly(4, 1) == Poly{2, 1});
  CHECK(q_poly(4, 2) == Poly{2, 1});
  CHECK(q_poly(6, 3) == Poly{5, 5, 2});
  CHECK(q_poly(6, 2) == Poly{5, 5, 2});
  for (int i = 0; i <= 8; ++i) CHECK(q_poly(i, 0) == Poly{1});
}

TEST_CASE("shift and lift") {
  CHECK(shift(PartialMatching{}) == PartialMatching(1, {}));
  CHECK(shift(PartialMatching(2, {{1, 2}})) == PartialMatching(3, {{1, 2}}));
  CHECK(lift(PartialMatching(2, {})) == PartialMatching(2, {{1, 2}}));
  CHECK(lift(PartialMatching(4, {})) == PartialMatching(4, {{2, 3}}));
  PartialMatching odd = lift(PartialMatching(3, {}));
  CHECK(odd == PartialMatching(3, {{1, 3}}));
  CHECK(crossings(odd) == 1);
  CHECK_THROWS_AS(lift(PartialMatching(1, {})), DomainError);
  CHECK_THROWS_AS(lift(PartialMatching(3, {{1, 2}})), DomainError);
}

TEST_CASE("path to matching and back") {
  CHECK(path_to_matching(LatticePath::parse("EEN")) == PartialMatching(2, {{1, 2}}));
  PartialMatching m = path_to_matching(LatticePath::parse("EEENEN"));
  CHECK(m == PartialMatching(4, {{1, 3}, {2, 4}}));
  CHECK(crossings(m) == 1);
  CHECK(path_to_matching(LatticePath{}) == PartialMatching{});

  CHECK(matching_to_path(PartialMatching(4, {{1, 3}, {2, 4}})).to_string() == "EEENEN");
  CHECK(matching_to_path(PartialMatching(2, {{1, 2}})).to_string() == "EEN");
  CHECK(matching_to_path(PartialMatching{}).empty());
}

TEST_CASE("reverse map names the violated condition") {
  try {
    matching_to_path(PartialMatching(4, {{1, 4}}));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("not in class Q") != std::string::npos);
  }
  try {
    matching_to_path(seq({1, 2, 3, 1, 2, 4, 5, 6}));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("12312") != std::string::npos);
  }
}

TEST_CASE("bijection with paths, exhaustively up to 10 points") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; 2 * j <= i; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      std::vector<PartialMatching> images;
      for (const LatticePath& p : enumerate_paths({i, j})) {
        PartialMatching m = path_to_matching(p);
        CHECK(in_class_q(m));
        CHECK(avoids_12312(m));
        CHECK(crossings(m) == weight_exponent(p));
        CHECK(crossings(m) == oracle::crossings_of_sequence(canonical_sequence(m)));
        CHECK(matching_to_path(m) == p);
        images.push_back(m);
      }
      std::sort(images.begin(), images.end());
      CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
      CHECK(images == enumerate_q(i, j));
    }
  }
}

TEST_CASE("crossing statistic is carried on random long paths") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 8 + static_cast<int>(rng() % 8);
    LatticePath p = LatticePath::parse(oracle::random_path(n, rng));
    PartialMatching m = path_to_matching(p);
    CHECK(crossings(m) == weight_exponent(p));
    CHECK(in_class_q(m));
    CHECK(matching_to_path(m) == p);
  }
}
