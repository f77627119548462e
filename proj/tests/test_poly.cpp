#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace singcat;
using namespace singcat::test;

TEST_CASE("addition cancels and respects identities") {
  auto a = qq({"x", "y"});
  CHECK(pp(a, "x + y") + pp(a, "x - y") == pp(a, "2*x"));
  Polynomial f = pp(a, "x^3 - 2*x*y + 1/2");
  CHECK(f + Polynomial::zero(a) == f);
  CHECK(pp(a, "x^3 - y^5") + pp(a, "y^5") == pp(a, "x^3"));
}

TEST_CASE("multiplication") {
  auto a = qq({"x", "y"});
  CHECK(pp(a, "x") * pp(a, "x^2") == pp(a, "x^3"));
  CHECK(pp(a, "x - y") * pp(a, "x + y") == pp(a, "x^2 - y^2"));
  CHECK(pp(a, "x - y").pow(2) == pp(a, "x^2 - 2*x*y + y^2"));
}

TEST_CASE("Frobenius over F_2") {
  auto a = make_ambient(Field::prime(2), {"x", "y"});
  CHECK(pp(a, "x + y").pow(2) == pp(a, "x^2 + y^2"));
}

TEST_CASE("partial derivatives") {
  auto a = qq({"x", "y"});
  CHECK(pp(a, "x^3 - y^5").derivative(0) == pp(a, "3*x^2"));
  auto b = qq({"x", "y", "z", "w"});
  CHECK(pp(b, "x^3 + y^3 + x*y*z + w^2").derivative(2) == pp(b, "x*y"));
  CHECK(pp(a, "7/3").derivative(0).is_zero());
  CHECK_THROWS_AS(pp(a, "x").derivative(5), Error);
}

TEST_CASE("ambient mismatch is rejected") {
  auto a = qq({"x", "y"});
  auto b = qq({"x", "z"});
  CHECK_THROWS_AS(pp(a, "x") + pp(b, "x"), AmbientError);
  CHECK_THROWS_AS(pp(a, "x") * pp(b, "z"), AmbientError);
}

TEST_CASE("ring axioms on randomized polynomials") {
  auto a = qq({"x", "y", "z"});
  std::mt19937 rng(20240811);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_polynomial(a, rng), g = random_polynomial(a, rng),
               h = random_polynomial(a, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("Leibniz rule on randomized polynomials") {
  auto a = qq({"x", "y"});
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_polynomial(a, rng), g = random_polynomial(a, rng);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("parse-print-parse is the identity") {
  auto a = qq({"x", "y", "z"});
  for (const char* s : {"0", "1", "-1", "x", "x^3 + y^3 + x*y*z", "-5*y^4 + 1/3*x",
                        "2/3*x^2*y - z + 7"}) {
    Polynomial f = pp(a, s);
    CHECK(pp(a, f.str()) == f);
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 80; ++i) {
    Polynomial f = random_polynomial(a, rng, 6, 4);
    CHECK(pp(a, f.str()) == f);
  }
  auto p = make_ambient(Field::prime(7), {"x", "y"});
  std::mt19937 rng2(100);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_polynomial(p, rng2, 6, 4);
    CHECK(parse_polynomial(f.str(), p) == f);
  }
}

TEST_CASE("grammar corners") {
  auto a = qq({"x", "y"});
  CHECK(pp(a, "2*x^2") == pp(a, "x^2 + x^2"));       // ^ binds tighter than *
  CHECK(pp(a, "-x^2") == Polynomial::zero(a) - pp(a, "x^2"));
  CHECK(pp(a, "(x + y)*(x - y)") == pp(a, "x^2 - y^2"));
  CHECK(pp(a, "1/3*x").terms()[0].coeff == Scalar("1/3"));
  CHECK(pp(a, "x^0") == pp(a, "1"));
  CHECK_THROWS_AS(pp(a, "2x"), ParseError);   // implicit multiplication
  CHECK_THROWS_AS(pp(a, "q + 1"), ParseError);  // unknown variable
  CHECK_THROWS_AS(pp(a, "x +"), ParseError);
  CHECK_THROWS_AS(pp(a, "x ^ y"), ParseError);
  CHECK_THROWS_AS(pp(a, "1/0"), ParseError);
  try {
    pp(a, "x + 2q");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("ring spec grammar") {
  auto spec = parse_ring_spec("QQ[x,y]/(x^3 - y^5)");
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.relations.size() == 1);
  auto spec2 = parse_ring_spec("QQ[x,y,z,w]/(x^3+y^3+x*y*z+w^2)");
  CHECK(spec2.relations[0] == pp(spec2.ambient, "x^3 + y^3 + x*y*z + w^2"));
  auto spec3 = parse_ring_spec("QQ[x]/()");
  CHECK(spec3.relations.empty());
  auto spec4 = parse_ring_spec("F5[x,y]/(x^2 + 4*y)");
  CHECK(spec4.field.characteristic() == 5);
  CHECK_THROWS_AS(parse_ring_spec("F4[x]/()"), ParseError);      // 4 is not prime
  CHECK_THROWS_AS(parse_ring_spec("QQ[x,x]/()"), ParseError);    // duplicate variable
  CHECK_THROWS_AS(parse_ring_spec("QQ[x]/(x"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("ZZ[x]/()"), ParseError);
}

TEST_CASE("prime field coefficients normalize into [0, p)") {
  Field f5 = Field::prime(5);
  CHECK(f5.normalize(Scalar("1/3")) == Scalar(2));  // 3^{-1} = 2 mod 5
  CHECK(f5.normalize(Scalar(-1)) == Scalar(4));
  CHECK(f5.div(Scalar(1), Scalar(2)) == Scalar(3));
  CHECK_THROWS_AS(f5.normalize(Scalar("1/5")), HypothesisError);
  CHECK_THROWS_AS(Field::prime(1), HypothesisError);
  CHECK_THROWS_AS(Field::prime(91), HypothesisError);  // 7 * 13
}
