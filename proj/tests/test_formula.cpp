#include <doctest.h>

#include "fanohost/error.hpp"
#include "fanohost/formula.hpp"

using fano::Formula;

TEST_CASE("formula evaluation") {
  CHECK(Formula("3").evaluate() == 3);
  CHECK(Formula("2*g-1").evaluate({{"g", 20}}) == 39);
  CHECK(Formula("3*g - 3").evaluate({{"g", 2}}) == 3);
  CHECK(Formula("min(2*g-1, 3*g-3)").evaluate({{"g", 4}}) == 7);
  CHECK(Formula("max(1, g)").evaluate({{"g", 0}}) == 1);
  CHECK(Formula("-(g+1)*2").evaluate({{"g", 3}}) == -8);
  CHECK(Formula("1 - 2 - 3").evaluate() == -4);
  CHECK(Formula(" 2 * ( g + 1 ) ").text() == " 2 * ( g + 1 ) ");
}

TEST_CASE("formula errors") {
  CHECK_THROWS_AS(Formula(""), fano::InvalidInput);
  CHECK_THROWS_AS(Formula("2 +"), fano::InvalidInput);
  CHECK_THROWS_AS(Formula("(1"), fano::InvalidInput);
  CHECK_THROWS_AS(Formula("sqrt(4)"), fano::InvalidInput);
  CHECK_THROWS_AS(Formula("2 $ 3"), fano::InvalidInput);
  CHECK_THROWS_AS(Formula("g").evaluate(), fano::InvalidInput);
}
