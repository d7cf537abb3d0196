#include <doctest.h>

#include "nga/parse.hpp"

using namespace nga;

TEST_CASE("function expressions") {
  const auto P = TimeMode::PolyTime;
  const FunctionElement x1 = FunctionElement::coordinate(P, 1), x2 = FunctionElement::coordinate(P, 2);
  const FunctionElement t = FunctionElement::time(P);
  const ScalarSum theta = ScalarSum::param("theta");
  CHECK(parse_function("x1*x2 + 2*i*theta*t^2", P, 3) ==
        x1 * x2 + t.pow(2) * (ScalarSum(2) * ScalarSum::i() * theta));
  CHECK(parse_function("(x1 - x2)^2", P, 3) == x1 * x1 - x1 * x2 * ScalarSum(2) + x2 * x2);
  CHECK(parse_function("x1/2", P, 3) == x1 * ScalarSum(Rational(frac(1, 2))));
  CHECK(parse_function("-t", P, 3) == -t);
  CHECK(parse_function("C^2", TimeMode::Hyper, 3) ==
        FunctionElement::constant(TimeMode::Hyper, 1) +
            FunctionElement::sine(TimeMode::Hyper).pow(2));
  CHECK(parse_function("tau^-2*S", TimeMode::Trig, 3) ==
        FunctionElement::sine(TimeMode::Trig) * ScalarSum::param("tau", -2));
}

TEST_CASE("function expression errors") {
  const auto P = TimeMode::PolyTime;
  CHECK_THROWS_AS(parse_function("x4", P, 3), ParseError);
  CHECK_THROWS_AS(parse_function("S", P, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("x1 +", P, 3), ParseError);
  CHECK_THROWS_AS(parse_function("x1 / x2", P, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("x1 $ 2", P, 3), ParseError);
  CHECK_THROWS_AS(parse_function("G:1:1", P, 3), ParseError);
  CHECK_THROWS_AS(parse_function("(x1", P, 3), ParseError);
}

TEST_CASE("scalar expressions") {
  CHECK(parse_scalar("3/4*alpha^2 - i") ==
        ScalarSum(Rational(frac(3, 4))) * ScalarSum::param("alpha", 2) - ScalarSum::i());
  CHECK(parse_scalar("alpha_1_2") == ScalarSum::param("alpha_1_2"));
  CHECK(parse_scalar("1/(2*i)") == ScalarSum(Gaussian(0, frac(-1, 2))));
  CHECK_THROWS_AS(parse_scalar("1/(alpha + 1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("alpha^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x1"), std::invalid_argument);
}

TEST_CASE("generator polynomials") {
  const LieAlgebra alg({1, 3, Variant::Galilei});
  const Enveloping env(alg);
  const EnvElement e = parse_env("G:1:1*H", env);
  EnvElement expected = EnvElement::ordered_word({alg.index("H"), alg.index("G:1:1")});
  expected -= EnvElement::generator(alg.index("G:1:0"), ScalarSum::i());
  CHECK(e == expected);
  CHECK(parse_env("2*alpha*H + 1", env) ==
        EnvElement::generator(alg.index("H"), ScalarSum(2) * ScalarSum::param("alpha")) +
            EnvElement::unit());
  CHECK_THROWS(parse_env("G:1:4", env));
  CHECK_THROWS(parse_env("x1", env));
}

TEST_CASE("assignments") {
  const auto [name, value] = parse_assignment("alpha_1_2=-3/4");
  CHECK(name == "alpha_1_2");
  CHECK(value == frac(-3, 4));
  CHECK(parse_assignment("theta=2").second == 2);
  CHECK_THROWS_AS(parse_assignment("theta"), ParseError);
  CHECK_THROWS_AS(parse_assignment("=2"), ParseError);
  CHECK_THROWS_AS(parse_assignment("theta=x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
