// Laws of the base category: semiring axioms, additive enrichment of linear
// maps, biproducts and the symmetric tensor.

#include <array>

#include "lawcheck_support.hpp"

namespace symtan::laws {

namespace {

LinearMap then(const LinearMap& f, const LinearMap& g) { return combine_maps(MapOp::compose, f, g); }
LinearMap plus(const LinearMap& f, const LinearMap& g) { return combine_maps(MapOp::add, f, g); }
LinearMap tensor_of(const LinearMap& f, const LinearMap& g) { return combine_maps(MapOp::tensor, f, g); }

void expect_maps(Ctx& c, const std::string& law, const LinearMap& lhs, const LinearMap& rhs) {
  c.expect(lhs == rhs, law, [&] { return matrix_text(lhs); }, [&] { return matrix_text(rhs); });
}

FreeModule space(Ctx& c, const std::string& prefix) {
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  return FreeModule::numbered(c.sr, dim(c.rng), prefix);
}

std::uint32_t random_rounds(const Ctx& c) { return std::max<std::uint32_t>(c.cfg.random_samples, 1) * 5; }

void semiring_axioms(Ctx& c) {
  const Semiring& sr = c.sr;
  std::vector<std::array<Scalar, 3>> triples;
  if (sr.carrier_size()) {
    const auto all = sr.carrier();
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& d : all) triples.push_back({a, b, d});
  } else {
    for (std::uint32_t i = 0; i < random_rounds(c) * 10; ++i)
      triples.push_back({sr.random(c.rng), sr.random(c.rng), sr.random(c.rng)});
  }
  const Scalar zero = sr.zero(), one = sr.one();
  for (const auto& [a, b, d] : triples) {
    const bool ok = sr.add(sr.add(a, b), d) == sr.add(a, sr.add(b, d)) && sr.add(a, b) == sr.add(b, a) &&
                    sr.add(a, zero) == a && sr.mul(sr.mul(a, b), d) == sr.mul(a, sr.mul(b, d)) &&
                    sr.mul(a, b) == sr.mul(b, a) && sr.mul(a, one) == a &&
                    sr.mul(a, sr.add(b, d)) == sr.add(sr.mul(a, b), sr.mul(a, d)) && sr.mul(a, zero) == zero &&
                    sr.parse_scalar(sr.format(a)) == a;
    c.expect(ok, "(" + sr.format(a) + ", " + sr.format(b) + ", " + sr.format(d) + ")",
             [] { return std::string("some axiom fails"); }, [] { return std::string("all axioms hold"); });
  }
}

void enrichment(Ctx& c) {
  for (std::uint32_t i = 0; i < random_rounds(c); ++i) {
    const FreeModule a = space(c, "a"), b = space(c, "b"), d = space(c, "c"), e = space(c, "d");
    const LinearMap h = random_matrix(c, a, b), f = random_matrix(c, b, d), g = random_matrix(c, b, d),
                    k = random_matrix(c, d, e);
    c.context = "case " + std::to_string(i);
    expect_maps(c, "h;(f+g);k = h;f;k + h;g;k", then(then(h, plus(f, g)), k), plus(then(then(h, f), k), then(then(h, g), k)));
    const LinearMap zero_bd = structural_map(StructuralKind::zero, {b, d});
    expect_maps(c, "h;0 = 0", then(h, zero_bd), structural_map(StructuralKind::zero, {a, d}));
    expect_maps(c, "0;k = 0", then(zero_bd, k), structural_map(StructuralKind::zero, {b, e}));
    expect_maps(c, "f+0 = f", plus(f, zero_bd), f);
  }
}

void biproduct(Ctx& c) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      const FreeModule a = FreeModule::numbered(c.sr, m, "a"), b = FreeModule::numbered(c.sr, n, "b");
      const FreeModule sum = combine_modules(ModuleOp::biproduct, a, b);
      c.context = std::to_string(m) + "+" + std::to_string(n);
      auto inj = [&](std::size_t i) { return structural_map(StructuralKind::injection, {a, b}, i); };
      auto proj = [&](std::size_t i) { return structural_map(StructuralKind::projection, {a, b}, i); };
      expect_maps(c, "i0;p0 = 1", then(inj(0), proj(0)), structural_map(StructuralKind::identity, {a}));
      expect_maps(c, "i1;p1 = 1", then(inj(1), proj(1)), structural_map(StructuralKind::identity, {b}));
      expect_maps(c, "i0;p1 = 0", then(inj(0), proj(1)), structural_map(StructuralKind::zero, {a, b}));
      expect_maps(c, "i1;p0 = 0", then(inj(1), proj(0)), structural_map(StructuralKind::zero, {b, a}));
      expect_maps(c, "p0;i0 + p1;i1 = 1", plus(then(proj(0), inj(0)), then(proj(1), inj(1))),
                  structural_map(StructuralKind::identity, {sum}));
      const LinearMap f = random_matrix(c, a, a), g = random_matrix(c, b, b);
      const LinearMap fg = combine_maps(MapOp::biproduct, f, g);
      expect_maps(c, "i0;(f+g) = f;i0", then(inj(0), fg), then(f, inj(0)));
      expect_maps(c, "(f+g);p1 = p1;g", then(fg, proj(1)), then(proj(1), g));
      expect_maps(c, "<p0,p1> = 1", pair_into_biproduct({proj(0), proj(1)}, sum), structural_map(StructuralKind::identity, {sum}));
      expect_maps(c, "[i0,i1] = 1", copair_from_biproduct({inj(0), inj(1)}, sum), structural_map(StructuralKind::identity, {sum}));
    }
}

void tensor(Ctx& c) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      const FreeModule a = FreeModule::numbered(c.sr, m, "a"), b = FreeModule::numbered(c.sr, n, "b");
      c.context = std::to_string(m) + "x" + std::to_string(n);
      const LinearMap tau_ab = structural_map(StructuralKind::symmetry, {a, b});
      const LinearMap tau_ba = structural_map(StructuralKind::symmetry, {b, a});
      expect_maps(c, "tau;tau = 1", then(tau_ab, tau_ba),
                  structural_map(StructuralKind::identity, {combine_modules(ModuleOp::tensor, a, b)}));
      const FreeModule a2 = space(c, "c"), b2 = space(c, "d"), a3 = space(c, "e"), b3 = space(c, "f");
      const LinearMap f = random_matrix(c, a, a2), g = random_matrix(c, b, b2), f2 = random_matrix(c, a2, a3),
                      g2 = random_matrix(c, b2, b3), g_alt = random_matrix(c, b, b2);
      expect_maps(c, "(f x g);(f' x g') = (f;f') x (g;g')", then(tensor_of(f, g), tensor_of(f2, g2)),
                  tensor_of(then(f, f2), then(g, g2)));
      expect_maps(c, "(f x g);tau = tau;(g x f)",
                  then(tensor_of(f, g), structural_map(StructuralKind::symmetry, {a2, b2})),
                  then(tau_ab, tensor_of(g, f)));
      expect_maps(c, "f x (g + g') = f x g + f x g'", tensor_of(f, plus(g, g_alt)), plus(tensor_of(f, g), tensor_of(f, g_alt)));
    }
}

}  // namespace

void register_core_laws(std::vector<LawEntry>& out) {
  auto add = [&](std::string id, std::string statement, void (*fn)(Ctx&)) {
    out.push_back({{std::move(id), "core", std::move(statement)}, fn});
  };
  add("core.semiring-axioms", "commutative semiring axioms and canonical scalar rendering", semiring_axioms);
  add("core.enrichment", "composition is bilinear and 0 absorbs", enrichment);
  add("core.biproduct", "injections and projections form biproducts", biproduct);
  add("core.tensor", "⊗ is functorial, symmetric and additive", tensor);
}

}  // namespace symtan::laws
