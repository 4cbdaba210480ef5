#include "doctest.h"

#include "symtan/biproduct_tangent.hpp"
#include "symtan/render.hpp"

using namespace symtan;

namespace {

LinearMap then(const LinearMap& f, const LinearMap& g) { return combine_maps(MapOp::compose, f, g); }
LinearMap identity(const FreeModule& v) { return structural_map(StructuralKind::identity, {v}); }

}  // namespace

TEST_CASE("tangent bundle labels") {
  const FreeModule v(Semiring::parse("nat"), {"a", "b"});
  CHECK(tangent_power(v).dim() == 4);
  CHECK(tangent_power(v, 2).dim() == 6);
  CHECK(tangent_square(v).dim() == 8);
}

TEST_CASE("structural maps on T(V) = V + V") {
  for (const char* sel : {"nat", "bool", "mod:5", "int", "tropical"}) {
    const FreeModule v = FreeModule::numbered(Semiring::parse(sel), 2, "v");
    const LinearMap p = bt_component(TangentKind::projection, v), z = bt_component(TangentKind::zero, v);
    const LinearMap l = bt_component(TangentKind::lift, v), c = bt_component(TangentKind::flip, v);
    CHECK(then(z, p) == identity(v));
    CHECK(then(c, c) == identity(tangent_square(v)));
    CHECK(then(l, c) == l);
    // σ after the injections of the two tangent parts is the same map
    const LinearMap sigma = bt_component(TangentKind::sum, v);
    CHECK(then(bt_component(TangentKind::rho, v, 2, 0), bt_component(TangentKind::projection, v)) ==
          then(sigma, p));
  }
}

TEST_CASE("T(f) is blockwise") {
  const Semiring nat = Semiring::parse("nat");
  const FreeModule v = FreeModule::numbered(nat, 2, "v"), w = FreeModule::numbered(nat, 1, "w");
  LinearMap f(v, w);
  f.set(0, 0, nat.natural(2));
  f.set(0, 1, nat.natural(3));
  const LinearMap tf = bt_functor(f);
  CHECK(tf.domain().dim() == 4);
  CHECK(tf.codomain().dim() == 2);
  CHECK(tf.at(1, 2) == nat.natural(2));
  CHECK(tf.at(1, 3) == nat.natural(3));
  CHECK(tf.at(0, 2) == nat.zero());
  // naturality of p
  CHECK(then(tf, bt_component(TangentKind::projection, w)) == then(bt_component(TangentKind::projection, v), f));
}

TEST_CASE("the vertical lift equalizes T(p) and p;p;z") {
  for (const char* sel : {"bool", "mod:3", "nat"}) {
    const FreeModule v = FreeModule::numbered(Semiring::parse(sel), 2, "v");
    CHECK(equalizes_vertical_pair(vertical_lift_map(v), v));
    CHECK_FALSE(equalizes_vertical_pair(identity(tangent_square(v)), v));
  }
}

TEST_CASE("left inverse by exhaustive search") {
  const FreeModule v = FreeModule::numbered(Semiring::parse("bool"), 1, "v");
  const auto inv = brute_force_left_inverse(vertical_lift_map(v));
  REQUIRE(inv);
  CHECK(then(vertical_lift_map(v), *inv) == identity(tangent_power(v, 2)));
  CHECK_THROWS_AS(brute_force_left_inverse(vertical_lift_map(FreeModule::numbered(Semiring::parse("nat"), 1))),
                  std::domain_error);
}

TEST_CASE("key-level lift and flip") {
  const Semiring nat = Semiring::parse("nat");
  const Names names{{"x"}};
  const auto b = Combination<Tagged<Gen>>::basis(nat, Tagged<Gen>{1, Gen{0}});
  const auto lifted = symtan::apply(b, tangent_lift(nat));
  CHECK(render(names, lifted) == "1.1.x");
  const auto mixed = Combination<Tagged<Tagged<Gen>>>::basis(nat, {1, {0, Gen{0}}});
  CHECK(render(names, symtan::apply(mixed, tangent_flip(nat))) == "0.1.x");
  CHECK(render(names, symtan::apply(b, tangent_projection(nat))) == "0");
  CHECK(render(names, symtan::apply(Combination<Tagged<Gen>>::basis(nat, {2, Gen{0}}), tangent_sum(nat))) == "1.x");
}
