#include <random>

#include "doctest.h"
#include "intz/poly.hpp"

using namespace intz;

TEST_CASE("parse and format round trip") {
  CHECK(format_poly(parse_poly("x^3 - 16x^2 + 68x - 80")) == "x^3 - 16x^2 + 68x - 80");
  CHECK(format_poly(parse_poly("-x")) == "-x");
  CHECK(format_poly(parse_poly("2*x^2+ 3 x -1")) == "2x^2 + 3x - 1");
  CHECK(format_poly(parse_poly("0")) == "0");
  CHECK(format_poly(parse_poly("x - x")) == "0");
  CHECK(parse_poly("x^2 + x^2") == parse_poly("2x^2"));
  CHECK(parse_poly("123456789012345678901234567890x").coeff(1) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_poly("x^2 + 1/2"), ParseError);
  CHECK_THROWS_AS(parse_poly("y + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  try {
    parse_poly("x + 3y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("canonical form and degree") {
  IntPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK_THROWS_AS(z.deg(), DomainError);
  IntPoly f({BigInt(1), BigInt(2), BigInt(0), BigInt(0)});
  CHECK(f.deg() == 1);
  CHECK(f.coeffs().size() == 2);
  CHECK(f.coeff(7) == 0);
}

TEST_CASE("arithmetic against evaluation") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto rp = [&] {
      std::vector<BigInt> c;
      for (int i = 0; i <= static_cast<int>(rng() % 6); ++i) c.push_back(BigInt(static_cast<long>(rng() % 41) - 20));
      return IntPoly(c);
    };
    IntPoly f = rp(), g = rp();
    for (long c = -5; c <= 5; ++c) {
      BigInt x(c);
      CHECK(evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x));
      CHECK(evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x));
      CHECK(evaluate(f - g, x) == evaluate(f, x) - evaluate(g, x));
    }
  }
}

TEST_CASE("content and primitive part") {
  IntPoly f = parse_poly("-6x^2 + 4x - 10");
  CHECK(content(f) == 2);
  auto d = primitive_part(f);
  CHECK(d.sign == -1);
  CHECK(d.content == 2);
  CHECK(d.primitive == parse_poly("3x^2 - 2x + 5"));
  CHECK(is_primitive(d.primitive));
  CHECK_FALSE(is_primitive(f));
}

TEST_CASE("binomial basis round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::vector<BigInt> c;
    for (int i = 0; i <= static_cast<int>(rng() % 8); ++i) c.push_back(BigInt(static_cast<long>(rng() % 2001) - 1000));
    IntPoly f(c);
    if (f.is_zero()) continue;
    auto coords = binomial_coefficients(f);
    CHECK(coords.size() == f.deg() + 1);
    auto back = from_binomial_coefficients(coords);
    CHECK(back == RationalPoly{f, BigInt(1)}.normalized());
  }
  // C(x, 2) = (x^2 - x) / 2
  std::vector<BigInt> e2{BigInt(0), BigInt(0), BigInt(1)};
  auto b = from_binomial_coefficients(e2);
  CHECK(b.numerator == parse_poly("x^2 - x"));
  CHECK(b.denominator == 2);
}

TEST_CASE("from_roots") {
  std::vector<BigInt> r{BigInt(2), BigInt(4), BigInt(10)};
  CHECK(from_roots(r) == parse_poly("x^3 - 16x^2 + 68x - 80"));
  CHECK(from_roots(std::span<const BigInt>{}) == IntPoly::constant(1));
}
