#include "doctest.h"

#include "lawcheck_support.hpp"
#include "symtan/em_tangent.hpp"
#include "symtan/oracles.hpp"

using namespace symtan;

namespace {

Combination<Gen> vec(const Semiring& sr, const std::vector<int>& entries) {
  Combination<Gen> out(sr);
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i]) out.add_term(Gen{static_cast<std::uint32_t>(i)}, sr.natural(entries[i]));
  return out;
}

LinearMap from_indices(const Semiring& sr, const FreeModule& dom, const FreeModule& cod,
                       const std::vector<std::vector<std::uint32_t>>& rows) {
  const auto carrier = sr.carrier();
  LinearMap m(dom, cod);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, carrier[rows[r][c]]);
  return m;
}

}  // namespace

TEST_CASE("Weil extensions of the unit algebra") {
  const Semiring nat = Semiring::parse("nat");
  const StructureAlgebra k = unit_algebra(nat);
  const StructureAlgebra t = weil_extend(k, WeilKind::T);
  CHECK(t.labels() == std::vector<std::string>{"1", "eps"});
  CHECK(t.multiply(t.basis_vector(1), t.basis_vector(1)).is_zero());

  const StructureAlgebra tsq = weil_extend(k, WeilKind::Tsq);
  REQUIRE(tsq.rank() == 4);
  CHECK(tsq.labels() == std::vector<std::string>{"1", "eps1", "eps2", "eps1*eps2"});
  CHECK(tsq.multiply(tsq.basis_vector(1), tsq.basis_vector(1)).is_zero());
  CHECK(tsq.multiply(tsq.basis_vector(2), tsq.basis_vector(2)).is_zero());
  CHECK(tsq.multiply(tsq.basis_vector(1), tsq.basis_vector(2)) == tsq.basis_vector(3));

  const StructureAlgebra t2 = weil_extend(k, WeilKind::T2);
  CHECK(t2.multiply(t2.basis_vector(1), t2.basis_vector(2)).is_zero());
}

TEST_CASE("Weil extension of a rank-2 algebra uses prefixed labels") {
  const Semiring sr = Semiring::parse("mod:5");
  const auto a = laws::test_algebras(sr, 2)[1].algebra;  // K[t]/t^2
  CHECK(weil_extend(a, WeilKind::T).labels() == std::vector<std::string>{"1", "t", "eps", "eps*t"});
}

TEST_CASE("algebra JSON round-trips and rejects malformed input") {
  for (const char* sel : {"nat", "bool", "mod:5", "int", "tropical"}) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& na : laws::test_algebras(sr, 3)) {
      const auto tsq = weil_extend(na.algebra, WeilKind::Tsq);
      CHECK(algebra_from_json(algebra_to_json(tsq)) == tsq);
    }
  }
  CHECK_THROWS_AS(algebra_from_json("{"), FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"semiring":"nat","basis":["1"],"unit":{"x":"1"},"table":{}})"), FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"semiring":"bogus","basis":["1"],"unit":{"1":"1"},"table":{}})"), FormatError);
}

TEST_CASE("violations are reported for a non-associative table") {
  const Semiring nat = Semiring::parse("nat");
  // 1*e = 0 breaks unitality
  const auto bad = StructureAlgebra::unchecked(FreeModule(nat, {"1", "e"}), vec(nat, {1, 0}),
                                               {vec(nat, {1, 0}), vec(nat, {0, 0}), vec(nat, {0, 0}), vec(nat, {0, 1})});
  CHECK_FALSE(bad.violations().empty());
  CHECK_THROWS_AS(StructureAlgebra::make(bad.carrier(), bad.unit(), {vec(nat, {1, 0}), vec(nat, {0, 0}),
                                                                     vec(nat, {0, 0}), vec(nat, {0, 1})}),
                  AlgebraError);
}

TEST_CASE("structural components on coordinates") {
  const Semiring sr = Semiring::parse("mod:5");
  const StructureAlgebra k = unit_algebra(sr);
  // p(a + b eps) = a
  CHECK(apply_morphism(em_component(EmKind::p, k), vec(sr, {3, 4})) == vec(sr, {3}));
  // z(a) = a
  CHECK(apply_morphism(em_component(EmKind::z, k), vec(sr, {2})) == vec(sr, {2, 0}));
  // sigma(a + b eps + c eps') = a + (b + c) eps
  CHECK(apply_morphism(em_component(EmKind::sigma, k), vec(sr, {1, 2, 4})) == vec(sr, {1, 1}));
  // l(a + b eps) = a + b eps1 eps2
  CHECK(apply_morphism(em_component(EmKind::l, k), vec(sr, {1, 3})) == vec(sr, {1, 0, 0, 3}));
  // c(a + b eps1 + c eps2 + d eps1 eps2) = a + c eps1 + b eps2 + d eps1 eps2
  CHECK(apply_morphism(em_component(EmKind::c, k), vec(sr, {1, 2, 3, 4})) == vec(sr, {1, 3, 2, 4}));
}

TEST_CASE("lift of an S-algebra matches the Weil extension and the dual-number oracle") {
  for (const char* sel : {"nat", "bool", "mod:5", "int", "tropical"}) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& na : laws::test_algebras(sr, 3)) {
      const auto weil = weil_extend(na.algebra, WeilKind::T);
      CHECK(tabulate(lift_tangent(finite_algebra(na.algebra)), weil.labels()) == weil);
      const auto dual = oracle::lift_vs_weil(na.algebra);
      for (std::size_t i = 0; i < weil.rank(); ++i)
        for (std::size_t j = 0; j < weil.rank(); ++j)
          for (std::size_t r = 0; r < weil.rank(); ++r)
            CHECK(weil.product(i, j).coefficient(Gen{static_cast<std::uint32_t>(r)}) == dual.table[i][j][r]);
    }
  }
}

TEST_CASE("infinitesimal object is the dual numbers") {
  for (const char* sel : {"nat", "bool", "mod:5", "int", "tropical"}) {
    const Semiring sr = Semiring::parse(sel);
    const auto d = infinitesimal_object(sr);
    CHECK(d == weil_extend(unit_algebra(sr), WeilKind::T));
    CHECK(d == tabulate(lift_tangent(initial_algebra(sr)), {"1", "eps"}));
  }
}

TEST_CASE("vertical lift factorization agrees with the brute-force enumeration") {
  for (const char* sel : {"bool", "mod:2"}) {
    const Semiring sr = Semiring::parse(sel);
    for (const auto& na : laws::test_algebras(sr, 2)) {
      if (na.name == "KxK") continue;
      const auto t2 = weil_extend(na.algebra, WeilKind::T2), tsq = weil_extend(na.algebra, WeilKind::Tsq);
      const auto cases = oracle::brute_equalizer(na.algebra, 1);
      CHECK_FALSE(cases.empty());
      for (const auto& ec : cases) {
        const LinearMorphism h{ec.domain, tsq, from_indices(sr, ec.domain.carrier(), tsq.carrier(), ec.h)};
        const LinearMorphism k = vertical_lift_factor(na.algebra, h);
        CHECK(k.map == from_indices(sr, ec.domain.carrier(), t2.carrier(), ec.k));
      }
    }
  }
  CHECK_THROWS_AS(oracle::brute_equalizer(unit_algebra(Semiring::parse("nat")), 1), std::domain_error);
}

TEST_CASE("vertical lift factors itself through the identity") {
  const Semiring sr = Semiring::parse("bool");
  const auto a = unit_algebra(sr);
  const LinearMorphism lift = vertical_lift_morphism(a);
  const LinearMorphism k = vertical_lift_factor(a, lift);
  CHECK(k.map == structural_map(StructuralKind::identity, {weil_extend(a, WeilKind::T2).carrier()}));
}

TEST_CASE("pushforward is forward-mode differentiation") {
  const Semiring z = Semiring::parse("int");
  const auto x = variable_polynomial(z, Gen{0}), y = variable_polynomial(z, Gen{1});
  const SubstitutionMorphism f{z, {multiply(multiply(x, x), y), x + y}, false};
  const auto pf = pushforward(f, {z.from_integer(3), z.from_integer(-2)}, {z.from_integer(1), z.from_integer(5)});
  // x^2 y at (3,-2) = -18; d = 2xy*1 + x^2*5 = -12 + 45
  CHECK(pf.values == std::vector<Scalar>{z.from_integer(-18), z.from_integer(1)});
  CHECK(pf.tangents == std::vector<Scalar>{z.from_integer(33), z.from_integer(6)});
  CHECK_THROWS_AS(pushforward(f, {z.one()}, {z.one()}), std::invalid_argument);
}
