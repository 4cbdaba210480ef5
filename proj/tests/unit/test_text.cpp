#include "doctest.h"

#include <random>

#include "lawcheck_support.hpp"
#include "symtan/render.hpp"
#include "symtan/text.hpp"

using namespace symtan;

namespace {

const std::vector<std::string> xy{"x", "y"};

std::string reparse(const std::string& text, const char* sel, const std::vector<std::string>& vars = xy) {
  return render(Names{vars}, parse_polynomial(text, vars, Semiring::parse(sel)));
}

std::size_t error_position(const std::string& text, const char* sel) {
  try {
    parse_polynomial(text, xy, Semiring::parse(sel));
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("direct reading") {
  const Semiring nat = Semiring::parse("nat");
  const auto p = parse_polynomial("x^2*y + 2*x", xy, nat);
  const auto x = Monomial<Gen>::variable(Gen{0});
  CHECK(p.size() == 2);
  CHECK(p.coefficient(x * x * Monomial<Gen>::variable(Gen{1})) == nat.one());
  CHECK(p.coefficient(x) == nat.natural(2));
}

TEST_CASE("expansion and canonical printing") {
  CHECK(reparse("(x+y)^2", "int") == "x^2 + 2*x*y + y^2");
  CHECK(reparse("x - x", "int") == "0");
  CHECK(reparse("-x + 3", "int") == "-x + 3");
  CHECK(reparse("x*y*x", "nat") == "x^2*y");
  CHECK(reparse(" ( x ) ^ 3 ", "nat") == "x^3");
  CHECK(reparse("3*x + 4*x", "mod:5") == "2*x");
  CHECK(reparse("x + x", "bool") == "x");
  CHECK(reparse("2", "tropical") == "0");
  CHECK(reparse("x^0", "nat") == "1");
}

TEST_CASE("negation needs additive inverses") {
  try {
    parse_polynomial("x - y", xy, Semiring::parse("bool"));
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("negation unavailable in semiring bool") == 0);
    CHECK(e.position() == 3);
  }
  CHECK(reparse("x - y", "mod:5") == "x + 4*y");
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("x +", "nat") == 4);
  CHECK(error_position("x y", "nat") == 3);
  CHECK(error_position("2x", "nat") == 2);
  CHECK(error_position("(x", "nat") == 3);
  CHECK(error_position("x^y", "nat") == 3);
  CHECK(error_position("x^-1", "int") == 3);
  CHECK(error_position("z", "nat") == 1);
  CHECK(error_position("x^99999999999", "nat") == 3);
  CHECK(error_position("", "nat") == 1);
}

TEST_CASE("variable lists") {
  CHECK(parse_variables("x,y,z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_variables("a_1") == std::vector<std::string>{"a_1"});
  CHECK_THROWS_AS(parse_variables("x,x"), ParseError);
  CHECK_THROWS_AS(parse_variables("x,,y"), ParseError);
  CHECK_THROWS_AS(parse_variables("1x"), ParseError);
  CHECK_THROWS_AS(parse_variables(""), ParseError);
}

TEST_CASE("derivatives grouped by variable") {
  const Semiring nat = Semiring::parse("nat");
  CHECK(format_derivative(xy, derive(parse_polynomial("x^2*y", xy, nat))) == "2*x*y (x) + x^2 (y)");
  CHECK(format_derivative(xy, derive(parse_polynomial("x^2 + x + y", xy, nat))) == "(2*x + 1) (x) + 1 (y)");
  CHECK(format_derivative(xy, derive(parse_polynomial("7", xy, nat))) == "0");
  const Semiring z = Semiring::parse("int");
  CHECK(format_derivative(xy, derive(parse_polynomial("x - x*y", xy, z))) == "(-y + 1) (x) - x (y)");
}

TEST_CASE("format then parse is the identity on 500 random polynomials per semiring") {
  const std::vector<std::string> vars{"x", "y", "z"};
  const auto basis = laws::monomials(laws::gens(3), 4);
  for (const char* sel : {"nat", "int", "bool", "mod:5", "mod:7"}) {
    const Semiring sr = Semiring::parse(sel);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> terms(1, 6), pick(0, basis.size() - 1);
    for (int i = 0; i < 500; ++i) {
      Polynomial<Gen> p(sr);
      for (std::size_t t = terms(rng); t > 0; --t) p.add_term(basis[pick(rng)], sr.random(rng));
      const std::string text = render(Names{vars}, p);
      CHECK_MESSAGE(parse_polynomial(text, vars, sr) == p, sel << ": " << text);
    }
  }
}
