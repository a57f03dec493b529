#include <doctest.h>

#include "generators.hpp"

using iqc::QLaurent;
using iqc::QScalar;

namespace {
QScalar q(int twice) { return QScalar::q_power(twice); }
}  // namespace

TEST_CASE("difference of squares") {
  CHECK((q(2) - q(-2)) * (q(2) + q(-2)) == q(4) - q(-4));
}

TEST_CASE("opposite reciprocals cancel") {
  QScalar a = QScalar(1) / (q(2) - q(-2));
  QScalar b = QScalar(1) / (q(-2) - q(2));
  CHECK((a + b).is_zero());
}

TEST_CASE("long division of q^2 - q^-2 by q - q^-1") {
  QScalar r = (q(4) - q(-4)) / (q(2) - q(-2));
  CHECK(r == q(2) + q(-2));
  CHECK(r.is_integral());
  QLaurent quotient;
  REQUIRE(QLaurent::try_divide((q(4) - q(-4)).num(), (q(2) - q(-2)).num(), quotient));
  CHECK(quotient == QLaurent::q_power(2) + QLaurent::q_power(-2));
}

TEST_CASE("bar") {
  CHECK(q(3).bar() == q(-3));
  CHECK((QScalar(1) + q(4)).bar() == QScalar(1) + q(-4));
  CHECK((q(2) + q(-2)).bar() == q(2) + q(-2));
}

TEST_CASE("integrality") {
  CHECK((q(1) + QScalar(3)).is_integral());
  CHECK_FALSE((QScalar(1) / (q(2) - q(-2))).is_integral());
  CHECK_FALSE((QScalar(1) / QScalar(2)).is_integral());
}

TEST_CASE("canonical form") {
  QScalar a(QLaurent::monomial(3, 2) + QLaurent::monomial(5, 4), QLaurent::monomial(-1, -6));
  CHECK(a.den() == QLaurent(3));
  CHECK(a.num() == QLaurent::monomial(4, -1) + QLaurent::monomial(6, -2));
  QScalar b = (q(2) + QScalar(1)) / ((q(2) + QScalar(1)) * (q(2) - QScalar(1)));
  CHECK(b == QScalar(1) / (q(2) - QScalar(1)));
  CHECK(b.den().low() == 0);
  CHECK(b.den().leading_coeff() > 0);
}

TEST_CASE("rendering and parsing") {
  QScalar a = QScalar(QLaurent::monomial(1, 3)) - q(-4);
  CHECK(a.str() == "3*q^(1/2) - q^(-2)");
  CHECK(QScalar::parse("3*q^(1/2) - q^(-2)") == a);
  CHECK(QScalar::parse("q + q^(-1)") == q(2) + q(-2));
  CHECK(QScalar::parse("(q^2 - q^(-2))/(q - q^(-1))") == q(2) + q(-2));
  CHECK(QScalar::parse("-q^3") == -q(6));
  CHECK(QScalar().str() == "0");
  CHECK_THROWS_AS(QScalar::parse("q^(1/3)"), iqc::ParseError);
  CHECK_THROWS_AS(QScalar(1) / QScalar(0), iqc::DivisionByZero);
}

TEST_CASE("ring axioms on random samples") {
  using namespace iqc::testing;
  for (int trial = 0; trial < 200; ++trial) {
    QScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(QScalar::parse(a.str()) == a);
  }
}
