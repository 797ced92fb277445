#include "heightrel/number_field.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace heightrel;

namespace {

FieldElement fe(long a, long b = 0) { return FieldElement(Rational(a), Rational(b)); }
FieldElement feq(Rational a, Rational b) { return FieldElement(std::move(a), std::move(b)); }

const int kSupported[] = {-1, -2, -3, -7, -11};

}  // namespace

TEST_CASE("field constructors") {
  CHECK(NumberField::rationals().is_rationals());
  CHECK(NumberField::imaginary_quadratic(-7).d() == -7);
  CHECK_THROWS_AS(NumberField::imaginary_quadratic(-5), std::invalid_argument);
  CHECK_THROWS_AS(NumberField::imaginary_quadratic(2), std::invalid_argument);
}

TEST_CASE("arithmetic in Q(i)") {
  NumberField F = NumberField::imaginary_quadratic(-1);
  FieldElement i = fe(0, 1);
  CHECK(F.mul(i, i) == fe(-1));
  CHECK(F.mul(fe(1, 1), fe(1, -1)) == fe(2));
  CHECK(F.norm(fe(3, 2)) == 13);
  CHECK(F.div(fe(2), fe(1, 1)) == fe(1, -1));
  CHECK_THROWS_AS(F.div(fe(1), fe(0)), std::invalid_argument);
}

TEST_CASE("integrality") {
  NumberField Qi = NumberField::imaginary_quadratic(-1);
  CHECK(Qi.is_integral(fe(3, -2)));
  CHECK_FALSE(Qi.is_integral(feq(Rational(1, 2), Rational(1, 2))));

  NumberField F7 = NumberField::imaginary_quadratic(-7);
  CHECK(F7.is_integral(feq(Rational(1, 2), Rational(1, 2))));
  CHECK(F7.is_integral(feq(Rational(3, 2), Rational(-5, 2))));
  CHECK_FALSE(F7.is_integral(feq(Rational(1, 2), Rational(1))));
  CHECK_FALSE(F7.is_integral(feq(Rational(1, 3), Rational(0))));

  NumberField Q = NumberField::rationals();
  CHECK(Q.is_integral(fe(-4)));
  CHECK_FALSE(Q.is_integral(feq(Rational(1, 2), Rational(0))));
}

TEST_CASE("nearest integer leaves a remainder of norm below one") {
  testutil::RNG rng(97);
  for (int d : kSupported) {
    NumberField F = NumberField::imaginary_quadratic(d);
    for (int trial = 0; trial < 200; ++trial) {
      FieldElement x = feq(testutil::random_rational(rng, 40, 7),
                           testutil::random_rational(rng, 40, 7));
      FieldElement q = F.nearest_integer(x);
      CHECK(F.is_integral(q));
      CHECK(F.norm(F.sub(x, q)) < 1);
    }
  }
}

TEST_CASE("gcd of 1+i and 2") {
  NumberField F = NumberField::imaginary_quadratic(-1);
  // 2 = -i (1+i)^2, so the gcd is an associate of 1+i
  FieldElement g = F.gcd(fe(1, 1), fe(2));
  CHECK(g == fe(1, 1));
  CHECK(F.norm(g) == 2);
}

TEST_CASE("gcd properties on random Gaussian-type integers") {
  testutil::RNG rng(12321);
  std::uniform_int_distribution<long> coeff(-60, 60);
  for (int d : kSupported) {
    NumberField F = NumberField::imaginary_quadratic(d);
    for (int trial = 0; trial < 60; ++trial) {
      FieldElement x = fe(coeff(rng), coeff(rng));
      FieldElement y = fe(coeff(rng), coeff(rng));
      if (x.is_zero() && y.is_zero()) continue;
      FieldElement g = F.gcd(x, y);
      CHECK_FALSE(g.is_zero());
      FieldElement qx = F.divide_exact(x, g);
      FieldElement qy = F.divide_exact(y, g);
      CHECK(F.is_integral(qx));
      CHECK(F.is_integral(qy));
      // the cofactors are coprime
      if (!qx.is_zero() || !qy.is_zero()) {
        CHECK(F.norm(F.gcd(qx, qy)) == 1);
      }
    }
  }
}

TEST_CASE("gcd over Q reduces to the integer gcd") {
  NumberField Q = NumberField::rationals();
  CHECK(Q.norm(Q.gcd(fe(12), fe(18))) == 36);  // gcd 6
  CHECK(Q.gcd(fe(0), fe(-7)) == fe(7));
}

TEST_CASE("canonical associate is deterministic and unit-invariant") {
  for (int d : kSupported) {
    NumberField F = NumberField::imaginary_quadratic(d);
    FieldElement x = fe(3, 1);
    FieldElement canon = F.canonical_associate(x);
    for (const FieldElement& u : F.units()) {
      CHECK(F.canonical_associate(F.mul(x, u)) == canon);
    }
  }
}

TEST_CASE("unit counts") {
  CHECK(NumberField::imaginary_quadratic(-1).units().size() == 4);
  CHECK(NumberField::imaginary_quadratic(-3).units().size() == 6);
  CHECK(NumberField::imaginary_quadratic(-7).units().size() == 2);
  for (int d : kSupported) {
    NumberField F = NumberField::imaginary_quadratic(d);
    for (const FieldElement& u : F.units()) CHECK(F.norm(u) == 1);
  }
}

TEST_CASE("exact division failure is reported") {
  NumberField F = NumberField::imaginary_quadratic(-2);
  CHECK_THROWS_AS(F.divide_exact(fe(3), fe(2)), std::logic_error);
  CHECK(F.divide_exact(fe(0, 2), fe(0, 1)) == fe(2));
}
