#include "symtan/em_tangent.hpp"

namespace symtan {

namespace {

Gen gen(std::size_t i) { return Gen{static_cast<std::uint32_t>(i)}; }

// The same matrix between differently labelled modules of equal dimensions.
LinearMap relabel(const LinearMap& m, const FreeModule& domain, const FreeModule& codomain) {
  if (m.domain().dim() != domain.dim() || m.codomain().dim() != codomain.dim())
    throw std::invalid_argument("relabel: dimension mismatch");
  LinearMap out(domain, codomain);
  for (std::size_t r = 0; r < codomain.dim(); ++r)
    for (std::size_t c = 0; c < domain.dim(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

LinearMorphism checked_morphism(StructureAlgebra domain, StructureAlgebra codomain, const LinearMap& matrix) {
  LinearMap map = relabel(matrix, domain.carrier(), codomain.carrier());
  LinearMorphism f{std::move(domain), std::move(codomain), std::move(map)};
  verify_morphism(f);
  return f;
}

struct Dual {
  Scalar value;
  Scalar tangent;
};

}  // namespace

SAlgebra<Gen> finite_algebra(const StructureAlgebra& a) {
  SAlgebra<Gen> out{a.semiring(), [a](const Monomial<Gen>& m) { return a.evaluate(m); }, {}};
  for (std::size_t i = 0; i < a.rank(); ++i) out.basis.push_back(gen(i));
  return out;
}

SAlgebra<Unit> initial_algebra(const Semiring& sr) {
  return {sr, [sr](const Monomial<Unit>&) { return Combination<Unit>::basis(sr, Unit{}); }, {Unit{}}};
}

void verify_morphism(const LinearMorphism& f) {
  const auto& dom = f.domain;
  const auto& cod = f.codomain;
  if (!(f.map.domain() == dom.carrier()) || !(f.map.codomain() == cod.carrier()))
    throw AlgebraError("morphism matrix does not match its algebras");
  if (!(apply_morphism(f, dom.unit()) == cod.unit())) throw AlgebraError("morphism does not preserve the unit");
  for (std::size_t i = 0; i < dom.rank(); ++i)
    for (std::size_t j = i; j < dom.rank(); ++j) {
      auto left = apply_morphism(f, dom.product(i, j));
      auto right = cod.multiply(f.map.column(i), f.map.column(j));
      if (!(left == right))
        throw AlgebraError("morphism does not preserve the product " + dom.labels()[i] + "·" + dom.labels()[j]);
    }
}

Combination<Gen> apply_morphism(const LinearMorphism& f, const Combination<Gen>& x) {
  Combination<Gen> out(f.map.semiring());
  for (const auto& [g, c] : x.terms()) out.add_scaled(f.map.column(g.index), c);
  return out;
}

Polynomial<Gen> apply_morphism(const SubstitutionMorphism& f, const Polynomial<Gen>& p) {
  auto image = [&f](const Gen& g) {
    if (g.index >= f.images.size()) throw std::invalid_argument("substitution has no image for a generator");
    return f.images[g.index];
  };
  return mu(sym_map(p, image));
}

Combination<Tagged<Monomial<Gen>>> apply_morphism(const SubstitutionMorphism& f,
                                                  const Combination<Tagged<Monomial<Gen>>>& x) {
  if (!f.lifted) throw std::invalid_argument("only a lifted substitution acts on tangent elements");
  SubstitutionMorphism base{f.semiring, f.images, false};
  auto on_monomial = [&](const Monomial<Gen>& m) {
    return apply_morphism(base, Polynomial<Gen>::basis(f.semiring, m));
  };
  return symtan::apply(x, tangent_map(on_monomial));
}

LinearMorphism em_component(EmKind kind, const StructureAlgebra& a) {
  const FreeModule& v = a.carrier();
  switch (kind) {
    case EmKind::p:
      return checked_morphism(weil_extend(a, WeilKind::T), a, bt_component(TangentKind::projection, v));
    case EmKind::z:
      return checked_morphism(a, weil_extend(a, WeilKind::T), bt_component(TangentKind::zero, v));
    case EmKind::sigma:
      return checked_morphism(weil_extend(a, WeilKind::T2), weil_extend(a, WeilKind::T), bt_component(TangentKind::sum, v));
    case EmKind::l:
      return checked_morphism(weil_extend(a, WeilKind::T), weil_extend(a, WeilKind::Tsq), bt_component(TangentKind::lift, v));
    case EmKind::c: {
      auto tsq = weil_extend(a, WeilKind::Tsq);
      return checked_morphism(tsq, tsq, bt_component(TangentKind::flip, v));
    }
  }
  throw std::invalid_argument("unknown structural transformation");
}

LinearMorphism em_functor(const LinearMorphism& f) {
  return checked_morphism(weil_extend(f.domain, WeilKind::T), weil_extend(f.codomain, WeilKind::T), bt_functor(f.map));
}

AlgebraMorphism em_functor(const AlgebraMorphism& f) {
  if (const auto* linear = std::get_if<LinearMorphism>(&f)) return em_functor(*linear);
  const auto& sub = std::get<SubstitutionMorphism>(f);
  if (sub.lifted) throw std::invalid_argument("iterated lifting of substitutions is not supported");
  return SubstitutionMorphism{sub.semiring, sub.images, true};
}

Scalar evaluate_at(const Polynomial<Gen>& p, const std::vector<Scalar>& point) {
  const Semiring& sr = p.semiring();
  Scalar out = sr.zero();
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (const auto& [g, e] : m.factors()) {
      if (g.index >= point.size()) throw std::invalid_argument("no coordinate given for a generator");
      for (std::uint32_t k = 0; k < e; ++k) term = sr.mul(term, point[g.index]);
    }
    out = sr.add(out, term);
  }
  return out;
}

Pushforward pushforward(const SubstitutionMorphism& f, const std::vector<Scalar>& point,
                        const std::vector<Scalar>& tangent) {
  if (point.size() != tangent.size()) throw std::invalid_argument("point and tangent have different lengths");
  const Semiring& sr = f.semiring;
  Pushforward out;
  for (const auto& image : f.images) {
    out.values.push_back(evaluate_at(image, point));

    Scalar jvp = sr.zero();
    const auto d = derive(image);
    for (const auto& [key, c] : d.terms()) {
      const auto& [partial, var] = key;
      if (var.index >= tangent.size()) throw std::invalid_argument("no tangent coordinate given for a generator");
      Scalar at = evaluate_at(Polynomial<Gen>::term(sr, partial, c), point);
      jvp = sr.add(jvp, sr.mul(at, tangent[var.index]));
    }
    out.tangents.push_back(jvp);

    // Plain dual-number arithmetic as a cross-check.
    Dual total{sr.zero(), sr.zero()};
    for (const auto& [m, c] : image.terms()) {
      Dual term{c, sr.zero()};
      for (const auto& [g, e] : m.factors())
        for (std::uint32_t k = 0; k < e; ++k)
          term = {sr.mul(term.value, point[g.index]),
                  sr.add(sr.mul(term.value, tangent[g.index]), sr.mul(term.tangent, point[g.index]))};
      total = {sr.add(total.value, term.value), sr.add(total.tangent, term.tangent)};
    }
    if (!(total.value == out.values.back()) || !(total.tangent == out.tangents.back()))
      throw std::logic_error("pushforward disagrees with dual-number evaluation");
  }
  return out;
}

StructureAlgebra infinitesimal_object(const Semiring& sr) {
  StructureAlgebra d = tabulate(lift_tangent(initial_algebra(sr)), {"1", "eps"});
  if (!(d == weil_extend(unit_algebra(sr), WeilKind::T)))
    throw std::logic_error("lift of the initial algebra differs from the dual numbers");
  return d;
}

LinearMorphism vertical_lift_morphism(const StructureAlgebra& a) {
  return checked_morphism(weil_extend(a, WeilKind::T2), weil_extend(a, WeilKind::Tsq), vertical_lift_map(a.carrier()));
}

LinearMorphism vertical_lift_factor(const StructureAlgebra& a, const LinearMorphism& h) {
  const StructureAlgebra tsq = weil_extend(a, WeilKind::Tsq);
  if (!(h.codomain == tsq)) throw std::invalid_argument("morphism must land in A[eps1,eps2]");
  const FreeModule& v = a.carrier();
  if (!equalizes_vertical_pair(relabel(h.map, h.map.domain(), tangent_square(v)), v))
    throw FactorizationError("morphism does not equalize T(p) and p;p;z");

  const Semiring& sr = a.semiring();
  const std::vector<Scalar> carrier = sr.carrier();
  const LinearMorphism lift = vertical_lift_morphism(a);
  const std::size_t rows = lift.domain.rank();

  LinearMap k(h.domain.carrier(), lift.domain.carrier());
  for (std::size_t col = 0; col < h.domain.rank(); ++col) {
    const Combination<Gen> target = h.map.column(col);
    std::vector<std::size_t> digits(rows, 0);
    std::optional<std::vector<std::size_t>> found;
    for (;;) {
      Combination<Gen> candidate(sr);
      for (std::size_t r = 0; r < rows; ++r) candidate.add_term(gen(r), carrier[digits[r]]);
      if (apply_morphism(lift, candidate) == target) {
        if (found) throw FactorizationError("factorization through the vertical lift is not unique");
        found = digits;
      }
      std::size_t pos = 0;
      while (pos < rows && ++digits[pos] == carrier.size()) digits[pos++] = 0;
      if (pos == rows) break;
    }
    if (!found) throw FactorizationError("no factorization through the vertical lift");
    for (std::size_t r = 0; r < rows; ++r) k.set(r, col, carrier[(*found)[r]]);
  }
  LinearMorphism factor{h.domain, lift.domain, std::move(k)};
  try {
    verify_morphism(factor);
  } catch (const AlgebraError& e) {
    throw FactorizationError(std::string("factor is not an algebra morphism: ") + e.what());
  }
  return factor;
}

}  // namespace symtan
