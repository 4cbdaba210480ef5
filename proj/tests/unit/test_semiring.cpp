#include "doctest.h"

#include <random>

#include "symtan/semiring.hpp"

using namespace symtan;

TEST_CASE("selectors round-trip and reject junk") {
  for (const char* s : {"nat", "int", "bool", "tropical", "mod:5", "mod:2"}) CHECK(Semiring::parse(s).selector() == s);
  for (const char* s : {"", "mod", "mod:", "mod:1", "mod:0", "mod:x", "natural", "mod:05"})
    CHECK_THROWS_AS(Semiring::parse(s), std::invalid_argument);
}

TEST_CASE("natural-number action") {
  CHECK(Semiring::parse("mod:5").format(Semiring::parse("mod:5").natural(7)) == "2");
  CHECK(Semiring::parse("bool").format(Semiring::parse("bool").natural(2)) == "1");
  CHECK(Semiring::parse("bool").format(Semiring::parse("bool").natural(0)) == "0");
  // n·1 in min-plus is min(0, ..., 0)
  const Semiring trop = Semiring::parse("tropical");
  CHECK(trop.format(trop.natural(3)) == "0");
  CHECK(trop.format(trop.natural(0)) == "inf");
  const Semiring nat = Semiring::parse("nat");
  CHECK(nat.format(nat.natural(BigInt("123456789012345678901234567890"))) == "123456789012345678901234567890");
}

TEST_CASE("tropical operations are min and plus") {
  const Semiring t = Semiring::parse("tropical");
  const Scalar a = t.parse_scalar("3"), b = t.parse_scalar("5");
  CHECK(t.format(t.add(a, b)) == "3");
  CHECK(t.format(t.mul(a, b)) == "8");
  CHECK(t.add(a, t.zero()) == a);
  CHECK(t.mul(a, t.zero()) == t.zero());
  CHECK(t.format(t.one()) == "0");
}

TEST_CASE("negation exists only with additive inverses") {
  CHECK_THROWS_AS(Semiring::parse("nat").negate(Semiring::parse("nat").one()), std::domain_error);
  CHECK_THROWS_AS(Semiring::parse("bool").negate(Semiring::parse("bool").one()), std::domain_error);
  const Semiring m = Semiring::parse("mod:5");
  CHECK(m.format(m.negate(m.parse_scalar("2"))) == "3");
  const Semiring z = Semiring::parse("int");
  CHECK(z.format(z.negate(z.parse_scalar("4"))) == "-4");
}

TEST_CASE("scalars parse only in canonical form") {
  CHECK_THROWS(Semiring::parse("mod:5").parse_scalar("7"));
  CHECK_THROWS(Semiring::parse("bool").parse_scalar("2"));
  CHECK_THROWS(Semiring::parse("nat").parse_scalar("-1"));
  CHECK_THROWS(Semiring::parse("nat").parse_scalar("01"));
  CHECK(Semiring::parse("tropical").parse_scalar("inf") == Semiring::parse("tropical").zero());
}

TEST_CASE("finite carriers") {
  CHECK(Semiring::parse("mod:5").carrier().size() == 5);
  CHECK(Semiring::parse("bool").carrier().size() == 2);
  CHECK_FALSE(Semiring::parse("int").carrier_size());
  CHECK_THROWS_AS(Semiring::parse("nat").carrier(), std::domain_error);
}

TEST_CASE("random draws stay in a 16-element window") {
  std::mt19937_64 rng(1);
  const Semiring nat = Semiring::parse("nat");
  for (int i = 0; i < 200; ++i) CHECK(nat.random(rng).value < 16);
  const Semiring z = Semiring::parse("int");
  for (int i = 0; i < 200; ++i) {
    const BigInt v = z.random(rng).value;
    CHECK(v >= -8);
    CHECK(v < 8);
  }
}
