#include <doctest.h>

#include <sstream>

#include "nedlib/rational.hpp"

using nedlib::Rational;

TEST_CASE("rationals normalize to lowest terms") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK(Rational(15, 56).num() == 15);
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() == 2);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 7) + Rational(1, 8) == Rational(15, 56));
  CHECK(Rational(1, 10) + Rational(1, 11) + Rational(1, 12) == Rational(181, 660));
  CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons are exact even for close fractions") {
  CHECK(Rational(1, 4) < Rational(15, 56));
  CHECK(Rational(15, 56) < Rational(181, 660));
  CHECK(Rational(181, 660) < Rational(2, 7));
  CHECK(Rational(2, 3) > Rational(181, 660));
  CHECK(Rational(1, 3) <= Rational(1, 3));
  CHECK(nedlib::min(Rational(1), Rational(13, 12)) == Rational(1));
  CHECK(nedlib::max(Rational(1, 2), Rational(2, 5)) == Rational(1, 2));
}

TEST_CASE("rendering") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(0).str() == "0/1");
  std::ostringstream os;
  os << Rational(4, 6);
  CHECK(os.str() == "2/3");
  CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
}
