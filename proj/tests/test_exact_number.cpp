#include "hurwitz/exact_number.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace hw;

TEST_SUITE("exact_number") {

TEST_CASE("two_cos values against floating point") {
  for (long q = 1; q <= 40; ++q)
    for (long p = 0; p <= 2 * q; ++p) CHECK(two_cos(p, q).to_double() == doctest::Approx(2 * std::cos(M_PI * p / q)).epsilon(1e-12));
}

TEST_CASE("classical identities") {
  CHECK(two_cos(1, 3) == ExactNumber(1));
  CHECK(two_cos(1, 2) == ExactNumber(0));
  CHECK(two_cos(0, 1) == ExactNumber(2));
  CHECK(two_cos(1, 1) == ExactNumber(-2));
  CHECK(two_cos(1, 4) * two_cos(1, 4) == ExactNumber(2));
  CHECK(two_cos(1, 6) * two_cos(1, 6) == ExactNumber(3));
  // golden ratio: (2cos(pi/5))^2 = 2cos(pi/5) + 1
  ExactNumber t = two_cos(1, 5);
  CHECK(t * t == t + 1);
  CHECK(sqrt_rational(5) == 2 * t - 1);
  CHECK(sqrt_rational(2) == two_cos(1, 4));
  CHECK(sqrt_rational(mpq_class(9, 4)) == ExactNumber(mpq_class(3, 2)));
  CHECK_THROWS(sqrt_rational(-1));
}

TEST_CASE("parse and format") {
  CHECK(parse_expr("2cos(pi*1/3)") == ExactNumber(1));
  CHECK(parse_expr("7/2 - 3/2*sqrt(5)") == 5 + 3 * two_cos(4, 5));
  CHECK(parse_expr("-1/2") == ExactNumber(mpq_class(-1, 2)));
  CHECK_THROWS_AS(parse_expr("2cos(pi*1/0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("2 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("sqrt(-3)"), std::exception);
  for (auto s : {"0", "1", "-3/7", "2cos(pi*1/5)", "1 - 2cos(pi*2/7) + 3*2cos(pi*1/9)", "sqrt(3)"}) {
    ExactNumber x = parse_expr(s);
    CHECK(parse_expr(format_expr(x)) == x);
  }
}

TEST_CASE("approximation") {
  CHECK(approx(sqrt_rational(2), 10).rfind("1.414213562", 0) == 0);
  CHECK(approx(ExactNumber(mpq_class(1, 3)), 5).rfind("0.3333", 0) == 0);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-5, 5), den(1, 4), qd(1, 12);
  auto rnd = [&] {
    ExactNumber x = ExactNumber(mpq_class(c(rng), den(rng)));
    for (int k = 0; k < 2; ++k) {
      long q = qd(rng);
      x += ExactNumber(c(rng)) * two_cos(std::uniform_int_distribution<long>(0, q)(rng), q);
    }
    return x;
  };
  for (int t = 0; t < 200; ++t) {
    ExactNumber a = rnd(), b = rnd(), d = rnd();
    CHECK((a + b) - b == a);
    CHECK(a * (b + d) == a * b + a * d);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a.is_real());
    CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-9));
    int ord = compare(a, b);
    CHECK((ord < 0) == (a.encode() < b.encode()));
    CHECK((ord == 0) == (a == b));
  }
  CHECK_THROWS_AS(ExactNumber(1) / ExactNumber(0), DivisionByZero);
}

TEST_CASE("roots of unity") {
  ExactNumber z = ExactNumber::root_of_unity(1, 12);
  ExactNumber p = 1;
  for (int k = 0; k < 12; ++k) p *= z;
  CHECK(p == ExactNumber(1));
  CHECK(!z.is_real());
  CHECK(z + z.conj() == two_cos(1, 6));
}

}
