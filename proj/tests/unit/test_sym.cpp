#include "doctest.h"

#include "lawcheck_support.hpp"
#include "symtan/oracles.hpp"
#include "symtan/render.hpp"
#include "symtan/sym.hpp"

using namespace symtan;

namespace {

const Names xyz{{"x", "y", "z"}};

Polynomial<Gen> var(const Semiring& sr, std::uint32_t i) { return variable_polynomial(sr, Gen{i}); }

template <class K>
std::string joined(const std::vector<K>& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : ", ") + render_key(xyz, k);
  return out;
}

}  // namespace

TEST_CASE("enumeration of S(V) is by degree, descending within a degree") {
  CHECK(joined(laws::monomials(laws::gens(1), 2)) == "1, x, x^2");
  CHECK(joined(laws::monomials(laws::gens(2), 2)) == "1, x, y, x^2, x*y, y^2");
}

TEST_CASE("enumeration of S(V+V) with one variable per copy") {
  CHECK(laws::monomials(laws::copies(laws::gens(1), 2), 2).size() == 6);
}

TEST_CASE("enumeration of S(S(V)) with inner degree 2 and outer degree 1") {
  const auto basis = laws::nested(laws::gens(1), 2, 1);
  CHECK(joined(basis) == "1, [1], [x], [x^2]");
}

TEST_CASE("pair enumeration is bounded by total weight") {
  const auto ms = laws::monomials(laws::gens(1), 3);
  const auto ps = laws::pairs(ms, laws::gens(1), 3);
  // (x^k ⊗ x) for k = 0..2
  CHECK(ps.size() == 3);
  CHECK(render_key(xyz, ps.back()) == "(x^2 ⊗ x)");
}

TEST_CASE("d follows the power rule") {
  const Semiring nat = Semiring::parse("nat");
  const Polynomial<Gen> p = multiply(multiply(var(nat, 0), var(nat, 0)), var(nat, 1));
  CHECK(render(xyz, derive(p)) == "(x^2 ⊗ y) + 2*(x*y ⊗ x)");
  CHECK(render(xyz, derive(constant_polynomial<Gen>(nat, nat.natural(5)))) == "0");
}

TEST_CASE("d agrees with the power-rule oracle on every monomial") {
  for (const char* sel : {"nat", "bool", "mod:5", "int", "tropical"}) {
    const Semiring sr = Semiring::parse(sel);
    const auto vars = laws::gens(3);
    for (const auto& m : laws::monomials(vars, 4)) {
      oracle::Poly p{3, {{laws::exponents_of(m, vars), sr.one()}}};
      DerivativeElement<Gen> expected(sr);
      for (const auto& [key, c] : oracle::power_rule_d(sr, p)) {
        std::vector<Monomial<Gen>::Factor> f;
        for (std::uint32_t i = 0; i < 3; ++i) f.emplace_back(Gen{i}, key.first[i]);
        expected.add_term({Monomial<Gen>::from_factors(f), Gen{key.second}}, c);
      }
      CHECK(derive(Polynomial<Gen>::basis(sr, m)) == expected);
    }
  }
}

TEST_CASE("power-rule oracle on x") {
  const Semiring nat = Semiring::parse("nat");
  const auto d = oracle::power_rule_d(nat, oracle::Poly{1, {{{1}, nat.one()}}});
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first.first == oracle::Exponents{0});
  CHECK(d.begin()->first.second == 0);
  CHECK(d.begin()->second == nat.one());
}

TEST_CASE("Euler identity: coderive after derive scales by degree") {
  const Semiring nat = Semiring::parse("nat");
  for (const auto& m : laws::monomials(laws::gens(3), 4)) {
    const auto p = Polynomial<Gen>::basis(nat, m);
    CHECK(coderive(derive(p)) == Polynomial<Gen>::term(nat, m, nat.natural(m.degree())));
  }
}

TEST_CASE("dual-number oracle: x^2 + xy + y^2 gives (x^2, x^2)") {
  const Semiring nat = Semiring::parse("nat");
  oracle::Poly p{2, {{{2, 0}, nat.one()}, {{1, 1}, nat.one()}, {{0, 2}, nat.one()}}};
  const auto [base, tangent] = oracle::dual_number_lambda(nat, p);
  const std::map<oracle::Exponents, Scalar> x2{{{2}, nat.one()}};
  CHECK(base.terms == x2);
  CHECK(tangent.terms == x2);
}

TEST_CASE("substitution oracle: u*w with u = x^2, w = xy flattens to x^3 y") {
  const Semiring nat = Semiring::parse("nat");
  oracle::NestedPoly p{{{2, 0}, {1, 1}}, {{{1, 1}, nat.one()}}};
  const auto flat = oracle::substitution_mu(nat, 2, p);
  CHECK(flat.terms == std::map<oracle::Exponents, Scalar>{{{3, 1}, nat.one()}});

  const auto u = Monomial<Gen>::from_factors({{Gen{0}, 2}});
  const auto w = Monomial<Gen>::from_factors({{Gen{0}, 1}, {Gen{1}, 1}});
  const NestedPolynomial<Gen> nested = NestedPolynomial<Gen>::basis(nat, Monomial<Monomial<Gen>>::variable(u) *
                                                                           Monomial<Monomial<Gen>>::variable(w));
  CHECK(render(xyz, mu(nested)) == "x^3*y");
}

TEST_CASE("S(f) substitutes and expands") {
  const Semiring nat = Semiring::parse("nat");
  auto f = [&](const Gen& g) {
    Combination<Gen> out = Combination<Gen>::basis(nat, Gen{1});
    if (g.index == 0) out.add_term(Gen{0}, nat.one());
    return out;
  };
  const auto p = multiply(var(nat, 0), var(nat, 0));
  CHECK(render(xyz, sym_map(p, f)) == "x^2 + 2*x*y + y^2");
}

TEST_CASE("Seely split and merge are inverse and split is multiplicative") {
  const Semiring sr = Semiring::parse("mod:5");
  const auto a = variable_polynomial(sr, Tagged<Gen>{0, Gen{0}});
  const auto b = variable_polynomial(sr, Tagged<Gen>{1, Gen{0}});
  const auto p = power(a + b, 3), q = multiply(a, b) + b;
  CHECK(seely_merge(seely_split(p)) == p);
  CHECK(render(xyz, seely_split(p)) == "(x^3 ⊗ 1) + 3*(x^2 ⊗ x) + 3*(x ⊗ x^2) + (1 ⊗ x^3)");

  // split(p q) = split(p) · split(q) in S(A) ⊗ S(B)
  const SeelyPair<Gen> sp = seely_split(p), sq = seely_split(q);
  SeelyPair<Gen> product(sr);
  for (const auto& [k1, c1] : sp.terms())
    for (const auto& [k2, c2] : sq.terms())
      product.add_term({std::get<0>(k1) * std::get<0>(k2), std::get<1>(k1) * std::get<1>(k2)}, sr.mul(c1, c2));
  CHECK(seely_split(multiply(p, q)) == product);
}

TEST_CASE("seely_split rejects a third summand") {
  const Semiring nat = Semiring::parse("nat");
  CHECK_THROWS_AS(seely_split(variable_polynomial(nat, Tagged<Gen>{2, Gen{0}})), std::invalid_argument);
}
