#include <doctest.h>

#include <random>

#include "lcoalg/error.hpp"
#include "lcoalg/scalar.hpp"

using namespace lcoalg;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), num(-4, 4), den(1, 3), count(0, 3);
  Scalar s;
  for (int i = count(rng); i > 0; --i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    s += Scalar::monomial(c, exp(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("scalar rendering") {
  CHECK(Scalar::parse("3/2*q^-1 + 1 + q^2").to_string() == "3/2*q^-1 + 1 + q^2");
  CHECK(Scalar::parse("q^2 + 1 + 3/2*q^-1").to_string() == "3/2*q^-1 + 1 + q^2");
  CHECK(Scalar::parse("-q - 2*q^3").to_string() == "-q - 2*q^3");
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar::parse("q + q").to_string() == "2*q");
  CHECK(Scalar::parse("q - q").is_zero());
  CHECK(Scalar::parse("-1/2").to_string() == "-1/2");
}

TEST_CASE("scalar parse errors") {
  CHECK_THROWS_AS(Scalar::parse("q^"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse("2 +"), Error);
  CHECK_THROWS_AS(Scalar::parse("x"), Error);
}

TEST_CASE("monomial inverse") {
  CHECK(Scalar::parse("2*q^3").inverse() == Scalar::parse("1/2*q^-3"));
  CHECK(Scalar::q(1) * Scalar::q(-1) == Scalar(1));
  CHECK_THROWS_AS(Scalar::parse("1 + q").inverse(), Error);
  try {
    Scalar().inverse();
    FAIL("expected ZeroInverse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInverse);
  }
}

TEST_CASE("evaluation") {
  CHECK(Scalar::parse("q + q^-1").eval(2) == Rational(5, 2));
  CHECK(Scalar::parse("q^-2").eval(Rational(1, 3)) == 9);
  try {
    Scalar::q(-1).eval(0);
    FAIL("expected ZeroBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroBase);
  }
}

TEST_CASE("ring laws on random Laurent polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    CHECK(a * Scalar(1) == a);
    CHECK(Scalar::parse(a.to_string()) == a);
    // Evaluation at q0 = 2 and 1/3 is a ring homomorphism.
    for (Rational q0 : {Rational(2), Rational(1, 3)}) {
      CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
      CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
    }
  }
}
