#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "latpoly/errors.hpp"
#include "latpoly/poly.hpp"

using latpoly::ArithmeticOverflow;
using latpoly::Poly;

TEST_CASE("addition") {
  CHECK(Poly{1, 1} + Poly{2, 1} == Poly{3, 2});
  CHECK(Poly{2, 1} + Poly{3, 2} == Poly{5, 3});
  CHECK(Poly{2, 1} + Poly{} == Poly{2, 1});
  // cancellation restores canonical form
  CHECK((Poly{1, 2} + Poly{0, -2}).coeffs().size() == 1);
}

TEST_CASE("multiply by x") {
  CHECK(Poly{1}.shift_mul_x() == Poly{0, 1});
  CHECK(Poly{2, 1}.shift_mul_x() == Poly{0, 2, 1});
  CHECK(Poly{}.shift_mul_x().is_zero());
}

TEST_CASE("equality uses canonical form") {
  CHECK(Poly{1, 1} == Poly{1, 1});
  CHECK_FALSE(Poly{1, 1} == Poly{1, 2});
  CHECK(Poly{} == Poly{0});
  CHECK(Poly{3, 0, 0} == Poly{3});
  CHECK(Poly{0}.degree() == -1);
}

TEST_CASE("evaluation at one") {
  CHECK(Poly{2, 1}.eval_at_one() == 3);
  CHECK(Poly{14, 21, 15, 5}.eval_at_one() == 55);
  CHECK(Poly{}.eval_at_one() == 0);
}

TEST_CASE("text rendering") {
  CHECK(Poly{}.to_text() == "0");
  CHECK(Poly{1}.to_text() == "1");
  CHECK(Poly{2, 1}.to_text() == "2 + x");
  CHECK(Poly{14, 21, 15, 5}.to_text() == "14 + 21*x + 15*x^2 + 5*x^3");
  CHECK(Poly{0, 0, 1}.to_text() == "x^2");
  CHECK(Poly{1, 0, 3}.to_text() == "1 + 3*x^2");
  CHECK(Poly{-1, -1}.to_text() == "-1 - x");
}

TEST_CASE("overflow is reported, never wrapped") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Poly{big} + Poly{1}, ArithmeticOverflow);
  CHECK_THROWS_AS((Poly{big, big}.eval_at_one()), ArithmeticOverflow);
  CHECK_THROWS_AS(latpoly::checked::mul(big / 2 + 1, 2), ArithmeticOverflow);
  CHECK(latpoly::checked::add(big - 1, 1) == big);
}

TEST_CASE("monomial") {
  CHECK(Poly::monomial(1, 3) == Poly{0, 0, 0, 1});
  CHECK(Poly::monomial(0, 3).is_zero());
}

namespace {

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<std::int64_t> val(-50, 50);
  std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
  for (auto& v : c) v = val(rng);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("addition laws on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    // canonical form is idempotent: rebuilding from coefficients changes nothing
    Poly again(std::vector<std::int64_t>(a.coeffs().begin(), a.coeffs().end()));
    CHECK(again == a);
    CHECK((a.coeffs().empty() || a.coeffs().back() != 0));
  }
}
