#pragma once

// Tangent structure on S-algebras (commutative semiring algebras).
//
// λ : S(T A) -> T S(A) is the distributive law
//     λ = S(π₀)ι₀ + d (S(π₀) ⊗ π₁) d° ι₁,
// i.e. λ(p) = (p(x, 0), Σ ∂p/∂y_i (x, 0) · x_i) for p in the variables x of
// copy 0 and y of copy 1. An S-algebra (A, ν) lifts to (T A, λ;T(ν)).

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "symtan/algebra.hpp"
#include "symtan/biproduct_tangent.hpp"
#include "symtan/sym.hpp"

namespace symtan {

// --- the distributive law ----------------------------------------------------

/// λ_n on monomials of S(T_n A): S(π₀)ι₀ + Σ_{k=1..n} d (S(π₀) ⊗ π_k) d° ι_k.
inline auto lambda_n_map(Semiring sr, std::uint32_t n) {
  return [sr, n](const auto& m) {
    auto base = sym_map_fn(sr, projection(sr, 0));
    auto out = symtan::apply(base(m), injection(sr, 0));
    for (std::uint32_t k = 1; k <= n; ++k) {
      auto tangent = compose(derive_map(sr), on_slot<0>(base), on_slot<1>(projection(sr, k)), coderive_map(sr),
                             injection(sr, k));
      out += tangent(m);
    }
    return out;
  };
}

inline auto lambda_map(Semiring sr) { return lambda_n_map(sr, 1); }

template <class K>
Combination<Tagged<Monomial<K>>> lambda(const Polynomial<Tagged<K>>& p) {
  return symtan::apply(p, lambda_map(p.semiring()));
}

template <class K>
Combination<Tagged<Monomial<K>>> lambda_n(const Polynomial<Tagged<K>>& p, std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  for (const auto& [m, _] : p.terms())
    for (const auto& [var, e] : m.factors())
      if (var.tag > n) throw std::invalid_argument("variable belongs to no copy of T_n");
  return symtan::apply(p, lambda_n_map(p.semiring(), n));
}

/// The components (p₀, ..., p_n) of a T_n S(A) element as polynomials.
template <class K>
std::vector<Polynomial<K>> components(const Combination<Tagged<Monomial<K>>>& x, std::uint32_t n) {
  std::vector<Polynomial<K>> out;
  for (std::uint32_t t = 0; t <= n; ++t) out.push_back(component(x, t));
  return out;
}

/// Product on T A induced by a product on A: (a, b)(a', b') = (aa', ab' + ba').
template <class K, class Mul>
Combination<Tagged<K>> lifted_product(const Mul& mul, const Combination<Tagged<K>>& x, const Combination<Tagged<K>>& y) {
  const Semiring& sr = x.semiring();
  auto a = component(x, 0), b = component(x, 1), a2 = component(y, 0), b2 = component(y, 1);
  auto out = symtan::apply(mul(a, a2), injection(sr, 0));
  out += symtan::apply(mul(a, b2) + mul(b, a2), injection(sr, 1));
  return out;
}

// --- S-algebras ----------------------------------------------------------------

/**
 * An S-algebra with carrier basis K and structure map ν given on monomials.
 * `basis` lists the carrier basis for finite-rank carriers (empty for free ones).
 */
template <class K>
struct SAlgebra {
  Semiring semiring;
  std::function<Combination<K>(const Monomial<K>&)> nu;
  std::vector<K> basis;

  Combination<K> structure(const Polynomial<K>& p) const { return symtan::apply(p, nu); }
};

/// The free algebra S(V) with ν = μ.
template <class K>
SAlgebra<Monomial<K>> free_algebra(const Semiring& sr) {
  auto mu = mu_map(sr);
  return {sr, [mu](const Monomial<Monomial<K>>& m) { return mu(m); }, {}};
}

/// A finite-rank algebra with ν evaluating polynomials through the structure constants.
SAlgebra<Gen> finite_algebra(const StructureAlgebra& a);

/// K itself, with ν evaluating the single generator at 1.
SAlgebra<Unit> initial_algebra(const Semiring& sr);

/// (T_n A, λ_n ; T_n(ν)).
template <class K>
SAlgebra<Tagged<K>> lift_tangent_n(const SAlgebra<K>& a, std::uint32_t n) {
  SAlgebra<Tagged<K>> out{a.semiring, {}, {}};
  auto nu = a.nu;
  auto lam = lambda_n_map(a.semiring, n);
  out.nu = [nu, lam](const Monomial<Tagged<K>>& m) { return symtan::apply(lam(m), tangent_map(nu)); };
  for (std::uint32_t tag = 0; tag <= n; ++tag)
    for (const auto& k : a.basis) out.basis.push_back(Tagged<K>{tag, k});
  return out;
}

/// (T A, λ ; T(ν)).
template <class K>
SAlgebra<Tagged<K>> lift_tangent(const SAlgebra<K>& a) {
  return lift_tangent_n(a, 1);
}

/// ∇^ν on basis pairs and u^ν = u;ν for a finite-rank S-algebra.
template <class K>
struct InducedMonoid {
  std::vector<Combination<K>> table;  // row-major over basis × basis
  Combination<K> unit;
};

template <class K>
InducedMonoid<K> induced_monoid(const SAlgebra<K>& a) {
  InducedMonoid<K> out{{}, a.nu(Monomial<K>{})};
  for (const auto& i : a.basis)
    for (const auto& j : a.basis) out.table.push_back(a.nu(Monomial<K>::variable(i) * Monomial<K>::variable(j)));
  return out;
}

/// Tabulates a finite-rank S-algebra as structure constants over the given labels (one per basis key).
template <class K>
StructureAlgebra tabulate(const SAlgebra<K>& a, std::vector<std::string> labels) {
  if (labels.size() != a.basis.size()) throw std::invalid_argument("one label per basis element required");
  auto index = [&](const K& k) {
    for (std::size_t i = 0; i < a.basis.size(); ++i)
      if (a.basis[i] == k) return Gen{static_cast<std::uint32_t>(i)};
    throw std::logic_error("structure map leaves the declared basis");
  };
  auto reindex = [&](const Combination<K>& v) {
    Combination<Gen> out(a.semiring);
    for (const auto& [k, c] : v.terms()) out.add_term(index(k), c);
    return out;
  };
  InducedMonoid<K> monoid = induced_monoid(a);
  std::vector<Combination<Gen>> table;
  for (const auto& v : monoid.table) table.push_back(reindex(v));
  return StructureAlgebra::make(FreeModule(a.semiring, std::move(labels)), reindex(monoid.unit), std::move(table));
}

// --- morphisms -------------------------------------------------------------------

/// Algebra morphism between finite-rank algebras, given by its matrix.
struct LinearMorphism {
  StructureAlgebra domain;
  StructureAlgebra codomain;
  LinearMap map;
};

/**
 * Morphism S(X) -> S(Y) of free algebras sending generator i of X to images[i].
 * When `lifted`, it is T̄ of that morphism, acting on (p₀, p₁) componentwise.
 */
struct SubstitutionMorphism {
  Semiring semiring;
  std::vector<Polynomial<Gen>> images;
  bool lifted = false;
};

using AlgebraMorphism = std::variant<LinearMorphism, SubstitutionMorphism>;

/// Throws AlgebraError unless the map preserves the unit and all basis products.
void verify_morphism(const LinearMorphism& f);

Combination<Gen> apply_morphism(const LinearMorphism& f, const Combination<Gen>& x);
Polynomial<Gen> apply_morphism(const SubstitutionMorphism& f, const Polynomial<Gen>& p);
/// T̄(f) on a T S(X) element; requires f.lifted.
Combination<Tagged<Monomial<Gen>>> apply_morphism(const SubstitutionMorphism& f,
                                                  const Combination<Tagged<Monomial<Gen>>>& x);

enum class EmKind { p, z, sigma, l, c };

/**
 * The lifted structural transformation at A as an algebra morphism:
 *   p : A[ε] -> A            z : A -> A[ε]
 *   σ : A[ε,ε′] -> A[ε]      ℓ : A[ε] -> A[ε₁,ε₂]     c : A[ε₁,ε₂] -> A[ε₁,ε₂]
 */
LinearMorphism em_component(EmKind kind, const StructureAlgebra& a);

/// T̄(f) = T(f).
AlgebraMorphism em_functor(const AlgebraMorphism& f);
LinearMorphism em_functor(const LinearMorphism& f);

struct Pushforward {
  std::vector<Scalar> values;
  std::vector<Scalar> tangents;
};

/// Value of a polynomial at a point (one scalar per generator).
Scalar evaluate_at(const Polynomial<Gen>& p, const std::vector<Scalar>& point);

/**
 * Forward-mode pushforward of the tangent vector `tangent` at `point` along
 * the substitution f: values f(point) and the Jacobian-vector product computed
 * with d. Cross-checked against plain dual-number evaluation; throws
 * std::logic_error on disagreement and std::invalid_argument on a missing coordinate.
 */
Pushforward pushforward(const SubstitutionMorphism& f, const std::vector<Scalar>& point,
                        const std::vector<Scalar>& tangent);

/// The dual numbers over the semiring, built as the lift of the initial S-algebra.
StructureAlgebra infinitesimal_object(const Semiring& sr);

/// Raised when a morphism fails to factor through the vertical lift.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * The unique k : B -> A[ε,ε′] with k ; ⟨ρ₀z, ρ₁ℓ⟩T(σ) = h, for h : B -> A[ε₁,ε₂]
 * equalizing T(p) and p;p;z. Found by exhaustive search over a finite carrier;
 * throws FactorizationError when h does not equalize or the factor is missing
 * or not unique, std::domain_error for infinite semirings.
 */
LinearMorphism vertical_lift_factor(const StructureAlgebra& a, const LinearMorphism& h);

/// The comparison map of the vertical lift as an algebra morphism A[ε,ε′] -> A[ε₁,ε₂].
LinearMorphism vertical_lift_morphism(const StructureAlgebra& a);

}  // namespace symtan
