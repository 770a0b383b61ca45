#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "azulink/exactfield.hpp"

using namespace azulink;

TEST_CASE("rational square detection") {
  Rational root;
  CHECK(is_square(Rational(0), &root));
  CHECK(root == 0);
  CHECK(is_square(Rational(49), &root));
  CHECK(root == 7);
  CHECK(is_square(Rational(4, 9), &root));
  CHECK(root == Rational(2, 3));
  CHECK(is_square(Rational(62500), &root));
  CHECK(root == 250);
  CHECK_FALSE(is_square(Rational(2), nullptr));
  CHECK_FALSE(is_square(Rational(-4), nullptr));
  CHECK_FALSE(is_square(Rational(8, 9), nullptr));
  // non-canonical input still decided correctly
  Rational ugly(8, 2);  // = 4 before canonicalization
  CHECK(is_square(ugly, &root));
  CHECK(root == 2);
}

TEST_CASE("squarefree integers") {
  CHECK(is_squarefree_int(1));
  CHECK(is_squarefree_int(2));
  CHECK(is_squarefree_int(30));
  CHECK(is_squarefree_int(-15));
  CHECK_FALSE(is_squarefree_int(4));
  CHECK_FALSE(is_squarefree_int(18));
  CHECK_FALSE(is_squarefree_int(-12));
  CHECK_FALSE(is_squarefree_int(0));
}

TEST_CASE("squarefree decomposition r = scale^2 * core") {
  auto check = [](const Rational& r, long core_want) {
    auto [core, scale] = squarefree_decompose(r);
    CHECK(core == core_want);
    CHECK(scale * scale * core == r);
    CHECK(is_squarefree_int(core));
  };
  check(Rational(18), 2);
  check(Rational(-12), -3);
  check(Rational(1, 2), 2);    // 1/2 = (1/2)^2 * 2
  check(Rational(49), 1);
  check(Rational(6061), 6061);  // 11 * 19 * 29
  check(Rational(-1), -1);
  CHECK_THROWS_AS(squarefree_decompose(Rational(0)), std::domain_error);
}

TEST_CASE("quadratic element construction guards") {
  CHECK_NOTHROW(Quad(Rational(1), Rational(2), 5));
  CHECK_NOTHROW(Quad(Rational(1), Rational(2), -1));
  CHECK_THROWS_AS(Quad(Rational(1), Rational(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(Quad(Rational(1), Rational(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(Quad(Rational(1), Rational(2), 4), std::invalid_argument);
  CHECK_THROWS_AS(Quad(Rational(1), Rational(2), 12), std::invalid_argument);
  // rational carrier: b must be zero when d = 0
  CHECK(Quad(Rational(7)).is_rational());
  CHECK(Quad().is_zero());
}

TEST_CASE("quadratic arithmetic in Q(sqrt 5)") {
  Quad phi(Rational(1, 2), Rational(1, 2), 5);  // (1 + sqrt5)/2
  Quad sq = phi * phi;
  CHECK(sq == Quad(Rational(3, 2), Rational(1, 2), 5));  // phi^2 = phi + 1
  CHECK(sq == phi + Quad(Rational(1)));
  CHECK(phi.norm() == Rational(-1));
  CHECK(phi.conj() == Quad(Rational(1, 2), Rational(-1, 2), 5));
  CHECK(phi * phi.inverse() == Quad(Rational(1)));
  CHECK((phi - phi).is_zero());
  // mixed tags are rejected, rational values compare across tags
  Quad r2(Rational(0), Rational(1), 2);
  CHECK_THROWS_AS(phi + r2, std::domain_error);
  CHECK(Quad(Rational(3), Rational(0), 5) == Quad(Rational(3)));
}

TEST_CASE("imaginary quadratic arithmetic") {
  Quad i(Rational(0), Rational(1), -1);
  CHECK(i * i == Quad(Rational(-1)));
  CHECK(i.norm() == Rational(1));
  CHECK(i.inverse() == -i);
}

TEST_CASE("square roots inside a fixed quadratic field") {
  // (2 + sqrt3)^2 = 7 + 4 sqrt3
  Quad target(Rational(7), Rational(4), 3);
  auto r = sqrt_in(target, 3);
  REQUIRE(r.has_value());
  CHECK(*r * *r == target);
  // rational square inside any field
  auto nine = sqrt_in(Quad(Rational(9)), 2);
  REQUIRE(nine.has_value());
  CHECK(*nine * *nine == Quad(Rational(9)));
  // the generator itself
  auto two = sqrt_in(Quad(Rational(2)), 2);
  REQUIRE(two.has_value());
  CHECK(*two * *two == Quad(Rational(2)));
  // 3 is not a square in Q(sqrt 2)
  CHECK_FALSE(sqrt_in(Quad(Rational(3)), 2).has_value());
  // (3 + sqrt5)/2 = ((1 + sqrt5)/2)^2
  auto g = sqrt_in(Quad(Rational(3, 2), Rational(1, 2), 5), 5);
  REQUIRE(g.has_value());
  CHECK(*g * *g == Quad(Rational(3, 2), Rational(1, 2), 5));
  // 8811 + 4158 sqrt5 has no square root in Q(sqrt 5)
  CHECK_FALSE(sqrt_in(Quad(Rational(8811), Rational(4158), 5), 5).has_value());
}

TEST_CASE("ordering is a strict weak order on each field") {
  Quad a(Rational(1), Rational(1), 5);
  Quad b(Rational(1), Rational(2), 5);
  Quad c(Rational(2), Rational(0), 5);
  bool ab = a < b, ba = b < a;
  CHECK(ab != ba);  // asymmetric on distinct elements
  CHECK_FALSE(a < a);
  bool bc = b < c, ac = a < c;
  if (ab && bc) CHECK(ac);  // transitivity on this triple
}
