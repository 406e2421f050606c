#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uqa/scalar.hpp"

using uqa::Poly;
using uqa::Scalar;

namespace {

Poly poly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

const Scalar q = Scalar::q_power(1);

}  // namespace

TEST_CASE("normalize reduces to canonical form", "[scalar]") {
  SECTION("(q^2 - 1) / (q - 1) = q + 1") {
    // oracle: (q - 1)(q + 1) = q^2 - 1 by expansion
    REQUIRE(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    const Scalar s = Scalar::normalize(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(s == q + 1);
    CHECK(s.numerator() == poly({1, 1}));
    CHECK(s.denominator() == poly({1}));
    CHECK(s.unit_exponent() == 0);
  }
  SECTION("zero numerator") {
    const Scalar s = Scalar::normalize(Poly(), poly({7, 0, 0, 1}));
    CHECK(s.is_zero());
    CHECK(s == Scalar());
    CHECK(s.numerator().is_zero());
    CHECK(s.denominator() == poly({1}));
    CHECK(s.unit_exponent() == 0);
  }
  SECTION("identity") { CHECK(Scalar::normalize(poly({1, 1}), poly({1, 1})).is_one()); }
  SECTION("zero denominator is rejected") {
    CHECK_THROWS_AS(Scalar::normalize(poly({1}), Poly()), uqa::DivisionByZero);
  }
  SECTION("powers of q move into the unit exponent") {
    const Scalar s = Scalar::normalize(poly({0, 0, 3, 3}), poly({0, 2}));
    CHECK(s.unit_exponent() == 1);
    CHECK(s.numerator() == poly({1, 1}));
    CHECK(s.denominator() == poly({1}));
    CHECK(s.content() == mpq_class(3, 2));
  }
  SECTION("idempotent") {
    const Scalar s = Scalar::normalize(poly({2, 4, 6}), poly({-4, 0, 8}));
    CHECK(Scalar::normalize(s.numerator().scaled(s.content().get_num()),
                            s.denominator().scaled(s.content().get_den())) *
              Scalar::q_power(s.unit_exponent()) ==
          s);
  }
}

TEST_CASE("field arithmetic", "[scalar]") {
  const Scalar a = (q * q + 3) / (q - 2);
  CHECK((a + (-a)).is_zero());
  CHECK((q - 1) * (q + 1) == q * q - 1);
  SECTION("negative exponents are cleared into the unit exponent") {
    const Scalar s = Scalar(1) / (q + q.inverse());
    CHECK(s.unit_exponent() == 1);
    CHECK(s.numerator() == poly({1}));
    CHECK(s.denominator() == poly({1, 0, 1}));
    CHECK(s == q / (q * q + 1));
  }
  CHECK_THROWS_AS(q / Scalar(), uqa::DivisionByZero);
  CHECK(uqa::arith(q, q, uqa::ArithOp::sub).is_zero());
  CHECK(uqa::arith(q, q, uqa::ArithOp::div).is_one());
}

TEST_CASE("q-integers", "[scalar]") {
  CHECK(uqa::q_integer(0, 1).is_zero());
  CHECK(uqa::q_integer(1, 3).is_one());
  CHECK(uqa::q_integer(2, 1) == q + q.inverse());
  // defining ratio (q^{nd} - q^{-nd}) / (q^d - q^{-d})
  for (int n = -4; n <= 5; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const Scalar ratio = (q.pow(n * d) - q.pow(-n * d)) / (q.pow(d) - q.pow(-d));
      CHECK(uqa::q_integer(n, d) == ratio);
    }
  }
  CHECK(uqa::q_binomial(3, 1, 1) == q * q + 1 + q.pow(-2));
}

TEST_CASE("evaluation at rational points", "[scalar]") {
  CHECK((q + q.inverse()).evaluate_at(2) == mpq_class(5, 2));
  CHECK(Scalar().evaluate_at(mpq_class(7, 3)) == 0);
  CHECK(Scalar::normalize(poly({-1, 0, 1}), poly({-1, 1})).evaluate_at(3) == 4);
  CHECK_THROWS_AS((Scalar(1) / (q - 1)).evaluate_at(1), uqa::DivisionByZero);
  CHECK_THROWS_AS(q.inverse().evaluate_at(0), uqa::DivisionByZero);
}

TEST_CASE("field axioms on seeded random triples", "[scalar][property]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = oracle::random_scalar(rng);
    const Scalar b = oracle::random_scalar(rng);
    const Scalar c = oracle::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    // the canonical denominator is primitive with positive leading coefficient
    CHECK(a.denominator().content() == 1);
    CHECK(a.denominator().lead() > 0);
    // evaluation is a ring homomorphism where defined
    for (long q0 : {2L, 3L, -5L}) {
      try {
        const mpq_class ea = a.evaluate_at(q0), eb = b.evaluate_at(q0);
        CHECK((a * b).evaluate_at(q0) == ea * eb);
        CHECK((a + b).evaluate_at(q0) == ea + eb);
      } catch (const uqa::DivisionByZero&) {
      }
    }
  }
}

TEST_CASE("text form", "[scalar]") {
  CHECK(Scalar().to_string() == "0");
  CHECK((q.pow(-2) - 1).to_string() == "-1 + q^-2");
  CHECK((q + q.inverse()).to_string() == "q + q^-1");
  CHECK((q / (q * q + 1)).to_string() == "q/(q^2 + 1)");
  CHECK(Scalar(mpq_class(-3, 4)).to_string() == "-3/4");
}
