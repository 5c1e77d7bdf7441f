#include <catch2/catch_amalgamated.hpp>

#include "mpk/mpk.hpp"

TEST_CASE("scalar arithmetic is exact") {
  auto Q = mpk::FieldSpec::rationals();
  auto a = mpk::Scalar::of_fraction(Q, 1, 3);
  auto b = mpk::Scalar::of_fraction(Q, 1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK(((a + b) - b) == a);
}
