// Laws of the symmetric algebra modality: deriving and coderiving
// transformations, the monad and monoid structure, naturality, the Seely
// isomorphism, and agreement with the independent oracles.

#include "lawcheck_support.hpp"

namespace symtan::laws {

namespace {

auto constant_rule_rhs(Semiring sr) {
  return [sr](const Unit&) { return DerivativeElement<Gen>(sr); };
}

// v ↦ 1 ⊗ v
auto unit_tensor(Semiring sr) {
  return [sr](const Gen& v) { return DerivativeElement<Gen>::basis(sr, {Monomial<Gen>{}, v}); };
}

void cd1(Ctx& c) {
  c.sweep(std::vector<Unit>{Unit{}}, compose(unit_map<Gen>(c.sr), derive_fn(c)), constant_rule_rhs(c.sr), false);
}

void cd2(Ctx& c) {
  const Semiring sr = c.sr;
  auto d = derive_fn(c);
  auto nab = nabla_map(sr);
  auto sv = monomials(gens(c.n()), c.degree());
  auto lhs = compose(nab, d);
  // (∇ ⊗ 1) after differentiating the first factor and moving its linear part to the end
  auto first = compose(on_slot<0>(d), swap_slots<1, 2>(sr), on_slots<0, 2>(nab));
  auto second = compose(on_slot<1>(d), on_slots<0, 2>(nab));
  if (c.cfg.mutation == Mutation::leibniz_tau_swapped)
    c.sweep(pairs(sv, sv, c.degree()), lhs, sum_of(second, second));
  else
    c.sweep(pairs(sv, sv, c.degree()), lhs, sum_of(first, second));
}

void cd3(Ctx& c) {
  c.sweep(gens(c.n()), compose(eta_map(c.sr), derive_fn(c)), unit_tensor(c.sr), false);
}

void cd4(Ctx& c) {
  const Semiring sr = c.sr;
  auto d = derive_fn(c);
  auto lhs = compose(mu_map(sr), d);
  auto rhs = compose(d, on_slot<0>(mu_map(sr)), on_slot<1>(d), on_slots<0, 2>(nabla_map(sr)));
  c.sweep(nested(gens(c.n()), c.inner(), c.outer()), lhs, rhs);
}

void cd5(Ctx& c) {
  auto d = derive_fn(c);
  auto lhs = compose(d, on_slot<0>(d));
  auto rhs = compose(lhs, swap_slots<1, 2>(c.sr));
  c.sweep(monomials(gens(c.n()), c.degree()), lhs, rhs);
}

void coderive_unit(Ctx& c) {
  c.sweep(gens(c.n()), compose(unit_tensor(c.sr), coderive_map(c.sr)), eta_map(c.sr), false);
}

void coderive_nabla(Ctx& c) {
  const Semiring sr = c.sr;
  auto sv = monomials(gens(c.n()), c.degree());
  auto lhs = compose(on_slots<0, 2>(nabla_map(sr)), coderive_map(sr));
  auto rhs = compose(on_slots<1, 2>(coderive_map(sr)), nabla_map(sr));
  c.sweep(triples(sv, sv, gens(c.n()), c.degree()), lhs, rhs);
}

void coderive_d(Ctx& c) {
  const Semiring sr = c.sr;
  auto d = derive_fn(c);
  auto lhs = compose(coderive_map(sr), d);
  auto rhs = sum_of(identity_map(sr), compose(on_slot<0>(d), swap_slots<1, 2>(sr), on_slots<0, 2>(coderive_map(sr))));
  c.sweep(pairs(monomials(gens(c.n()), c.degree()), gens(c.n()), c.degree()), lhs, rhs);
}

void monad_unit_left(Ctx& c) {
  c.sweep(monomials(gens(c.n()), c.degree()), compose(eta_map(c.sr), mu_map(c.sr)), identity_map(c.sr));
}

void monad_unit_right(Ctx& c) {
  c.sweep(monomials(gens(c.n()), c.degree()), compose(sym_map_fn(c.sr, eta_map(c.sr)), mu_map(c.sr)),
          identity_map(c.sr));
}

void monad_assoc(Ctx& c) {
  const Semiring sr = c.sr;
  auto inputs = monomials(nested(gens(c.n()), c.inner(), c.outer()), c.outer());
  c.sweep(inputs, compose(sym_map_fn(sr, mu_map(sr)), mu_map(sr)), compose(mu_map(sr), mu_map(sr)));
}

void monoid_assoc(Ctx& c) {
  const Semiring sr = c.sr;
  auto sv = monomials(gens(c.n()), c.degree());
  c.sweep(triples(sv, sv, sv, c.degree()), compose(on_slots<0, 2>(nabla_map(sr)), nabla_map(sr)),
          compose(on_slots<1, 2>(nabla_map(sr)), nabla_map(sr)));
}

void monoid_unit(Ctx& c) {
  const Semiring sr = c.sr;
  auto with_unit = [sr](const Monomial<Gen>& m) {
    return Combination<std::tuple<Monomial<Gen>, Monomial<Gen>>>::basis(sr, {m, Monomial<Gen>{}});
  };
  c.sweep(monomials(gens(c.n()), c.degree()), compose(with_unit, nabla_map(sr)), identity_map(sr));
}

void monoid_comm(Ctx& c) {
  const Semiring sr = c.sr;
  auto sv = monomials(gens(c.n()), c.degree());
  c.sweep(pairs(sv, sv, c.degree()), nabla_map(sr), compose(swap_slots<0, 1>(sr), nabla_map(sr)));
}

void monoid_mu_morphism(Ctx& c) {
  const Semiring sr = c.sr;
  auto ssv = nested(gens(c.n()), c.inner(), c.outer());
  auto lhs = compose(nabla_map(sr), mu_map(sr));
  auto rhs = compose(on_slot<0>(mu_map(sr)), on_slot<1>(mu_map(sr)), nabla_map(sr));
  c.sweep(pairs(ssv, ssv, c.outer()), lhs, rhs);
}

// --- naturality against random linear maps ---------------------------------------

struct RandomMap {
  std::vector<Combination<Gen>> columns;
  Combination<Gen> operator()(const Gen& g) const { return columns.at(g.index); }
};

std::vector<RandomMap> random_maps(Ctx& c) {
  std::vector<RandomMap> out;
  std::uniform_int_distribution<std::uint32_t> dim(1, 3);
  for (int i = 0; i < 3; ++i) {
    std::vector<Gen> target = gens(dim(c.rng));
    RandomMap f;
    for (std::uint32_t col = 0; col < c.n(); ++col) f.columns.push_back(c.random_element(target));
    out.push_back(std::move(f));
  }
  return out;
}

template <class Body>
void for_random_maps(Ctx& c, Body body) {
  auto maps = random_maps(c);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    c.context = "f" + std::to_string(i);
    body(maps[i]);
  }
}

void natural_eta(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    c.sweep(gens(c.n()), compose(f, eta_map(c.sr)), compose(eta_map(c.sr), sym_map_fn(c.sr, f)), false);
  });
}

void natural_unit(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    c.sweep(std::vector<Unit>{Unit{}}, compose(unit_map<Gen>(c.sr), sym_map_fn(c.sr, f)), unit_map<Gen>(c.sr), false);
  });
}

void natural_mu(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    auto sf = sym_map_fn(c.sr, f);
    c.sweep(nested(gens(c.n()), c.inner(), c.outer()), compose(sym_map_fn(c.sr, sf), mu_map(c.sr)),
            compose(mu_map(c.sr), sf));
  });
}

void natural_nabla(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    auto sf = sym_map_fn(c.sr, f);
    auto sv = monomials(gens(c.n()), c.degree());
    c.sweep(pairs(sv, sv, c.degree()), compose(on_slot<0>(sf), on_slot<1>(sf), nabla_map(c.sr)),
            compose(nabla_map(c.sr), sf));
  });
}

void natural_d(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    auto sf = sym_map_fn(c.sr, f);
    auto d = derive_fn(c);
    c.sweep(monomials(gens(c.n()), c.degree()), compose(sf, d), compose(d, on_slot<0>(sf), on_slot<1>(f)));
  });
}

void natural_coderive(Ctx& c) {
  for_random_maps(c, [&](const RandomMap& f) {
    auto sf = sym_map_fn(c.sr, f);
    auto inputs = pairs(monomials(gens(c.n()), c.degree()), gens(c.n()), c.degree());
    c.sweep(inputs, compose(on_slot<0>(sf), on_slot<1>(f), coderive_map(c.sr)), compose(coderive_map(c.sr), sf));
  });
}

// --- Seely ---------------------------------------------------------------------------

void seely_roundtrip(Ctx& c) {
  const Semiring sr = c.sr;
  auto v = gens(c.n());
  auto split_merge = [sr](const Monomial<Tagged<Gen>>& m) {
    return seely_merge(seely_split(Polynomial<Tagged<Gen>>::basis(sr, m)));
  };
  c.sweep(monomials(copies(v, 2), c.degree()), split_merge, identity_map(sr));
  auto merge_split = [sr](const std::tuple<Monomial<Gen>, Monomial<Gen>>& t) {
    return seely_split(seely_merge(SeelyPair<Gen>::basis(sr, t)));
  };
  auto sv = monomials(v, c.degree());
  c.sweep(pairs(sv, sv, c.degree()), merge_split, identity_map(sr));
}

void seely_multiplicative(Ctx& c) {
  const Semiring sr = c.sr;
  auto stv = monomials(copies(gens(c.n()), 2), c.degree());
  auto split = [sr](const Monomial<Tagged<Gen>>& m) { return seely_split(Polynomial<Tagged<Gen>>::basis(sr, m)); };
  // (a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'
  auto tensor_product = [sr](const std::tuple<std::tuple<Monomial<Gen>, Monomial<Gen>>, std::tuple<Monomial<Gen>, Monomial<Gen>>>& k) {
    const auto& [l, r] = k;
    return SeelyPair<Gen>::basis(sr, {std::get<0>(l) * std::get<0>(r), std::get<1>(l) * std::get<1>(r)});
  };
  auto lhs = compose(nabla_map(sr), split);
  auto rhs = [&](const std::tuple<Monomial<Tagged<Gen>>, Monomial<Tagged<Gen>>>& k) {
    auto a = split(std::get<0>(k)), b = split(std::get<1>(k));
    Combination<std::tuple<std::tuple<Monomial<Gen>, Monomial<Gen>>, std::tuple<Monomial<Gen>, Monomial<Gen>>>> both(sr);
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) both.add_term({ka, kb}, sr.mul(ca, cb));
    return symtan::apply(both, tensor_product);
  };
  c.sweep(pairs(stv, stv, c.degree()), lhs, rhs);
}

// --- oracle agreement ------------------------------------------------------------------

Monomial<Gen> monomial_of(const oracle::Exponents& e) {
  std::vector<Monomial<Gen>::Factor> f;
  for (std::size_t i = 0; i < e.size(); ++i) f.emplace_back(Gen{static_cast<std::uint32_t>(i)}, e[i]);
  return Monomial<Gen>::from_factors(std::move(f));
}

Polynomial<Gen> from_oracle(const Semiring& sr, const oracle::Poly& p) {
  Polynomial<Gen> out(sr);
  for (const auto& [e, c] : p.terms) out.add_term(monomial_of(e), c);
  return out;
}

void oracle_lambda(Ctx& c) {
  const Semiring sr = c.sr;
  auto tv = copies(gens(c.n_copy()), 2);
  auto by_oracle = [sr, tv](const Monomial<Tagged<Gen>>& m) {
    oracle::Poly p{tv.size(), {{exponents_of(m, tv), sr.one()}}};
    auto [value, eps] = oracle::dual_number_lambda(sr, p);
    auto out = symtan::apply(from_oracle(sr, value), injection(sr, 0));
    out += symtan::apply(from_oracle(sr, eps), injection(sr, 1));
    return out;
  };
  c.sweep(monomials(tv, c.degree()), lambda_fn(c), by_oracle);
}

void oracle_mu(Ctx& c) {
  const Semiring sr = c.sr;
  auto v = gens(c.n());
  auto tokens = monomials(v, c.inner());
  auto by_oracle = [sr, v, tokens](const Monomial<Monomial<Gen>>& m) {
    oracle::NestedPoly p;
    for (const auto& t : tokens) p.tokens.push_back(exponents_of(t, v));
    p.terms.emplace(exponents_of(m, tokens), sr.one());
    return from_oracle(sr, oracle::substitution_mu(sr, v.size(), p));
  };
  c.sweep(monomials(tokens, c.outer()), mu_map(sr), by_oracle);
}

void oracle_d(Ctx& c) {
  const Semiring sr = c.sr;
  auto v = gens(c.n());
  auto by_oracle = [sr, v](const Monomial<Gen>& m) {
    oracle::Poly p{v.size(), {{exponents_of(m, v), sr.one()}}};
    DerivativeElement<Gen> out(sr);
    for (const auto& [key, coeff] : oracle::power_rule_d(sr, p)) out.add_term({monomial_of(key.first), Gen{key.second}}, coeff);
    return out;
  };
  c.sweep(monomials(v, c.degree()), derive_fn(c), by_oracle);
}

}  // namespace

void register_symmetric_laws(std::vector<LawEntry>& out) {
  auto add = [&](std::string id, std::string family, std::string statement, void (*fn)(Ctx&)) {
    out.push_back({{std::move(id), std::move(family), std::move(statement)}, fn});
  };
  add("cd.1", "codifferential", "u ; d = 0 (constant rule)", cd1);
  add("cd.2", "codifferential", "∇ ; d = (d ⊗ 1)(1 ⊗ τ)(∇ ⊗ 1) + (1 ⊗ d)(∇ ⊗ 1) (Leibniz rule)", cd2);
  add("cd.3", "codifferential", "η ; d = u ⊗ 1 (linear rule)", cd3);
  add("cd.4", "codifferential", "μ ; d = d (μ ⊗ d)(∇ ⊗ 1) (chain rule)", cd4);
  add("cd.5", "codifferential", "d (d ⊗ 1) = d (d ⊗ 1)(1 ⊗ τ) (interchange rule)", cd5);
  add("appendix.coderive-unit", "coderiving", "(u ⊗ 1) d° = η", coderive_unit);
  add("appendix.coderive-nabla", "coderiving", "(∇ ⊗ 1) d° = (1 ⊗ d°) ∇", coderive_nabla);
  add("appendix.coderive-d", "coderiving", "d° d = 1 + (d ⊗ 1)(1 ⊗ τ)(d° ⊗ 1)", coderive_d);
  add("monad.unit-left", "monad", "η_S ; μ = 1", monad_unit_left);
  add("monad.unit-right", "monad", "S(η) ; μ = 1", monad_unit_right);
  add("monad.assoc", "monad", "S(μ) ; μ = μ_S ; μ", monad_assoc);
  add("monoid.assoc", "monoid", "(∇ ⊗ 1) ∇ = (1 ⊗ ∇) ∇", monoid_assoc);
  add("monoid.unit", "monoid", "(1 ⊗ u) ∇ = 1", monoid_unit);
  add("monoid.comm", "monoid", "∇ = τ ∇", monoid_comm);
  add("monoid.mu-morphism", "monoid", "∇ μ = (μ ⊗ μ) ∇", monoid_mu_morphism);
  add("natural.eta", "naturality", "f ; η = η ; S(f)", natural_eta);
  add("natural.unit", "naturality", "u ; S(f) = u", natural_unit);
  add("natural.mu", "naturality", "S(S(f)) ; μ = μ ; S(f)", natural_mu);
  add("natural.nabla", "naturality", "(S(f) ⊗ S(f)) ∇ = ∇ S(f)", natural_nabla);
  add("natural.d", "naturality", "S(f) ; d = d ; (S(f) ⊗ f)", natural_d);
  add("natural.coderive", "naturality", "(S(f) ⊗ f) d° = d° S(f)", natural_coderive);
  add("seely.roundtrip", "seely", "split ; merge = 1 and merge ; split = 1", seely_roundtrip);
  add("seely.multiplicative", "seely", "∇ ; split = (split ⊗ split) ; product of S(A) ⊗ S(B)", seely_multiplicative);
  add("oracle.lambda", "oracle", "λ(p) = p(x, εx) mod ε² computed with dual numbers", oracle_lambda);
  add("oracle.mu", "oracle", "μ = naive substitution", oracle_mu);
  add("oracle.d", "oracle", "d = one-variable-at-a-time power rule", oracle_d);
}

}  // namespace symtan::laws
