#pragma once

// The free commutative-algebra modality S = Sym.
//
// All transformations are given on basis keys (as factories returning
// callables usable with apply/compose/on_slot) and, for convenience, on whole
// elements. Naming follows the structure maps:
//   η : M -> S(M)                    unit of the monad
//   μ : S(S(M)) -> S(M)              multiplication of the monad
//   ∇ : S(M) ⊗ S(M) -> S(M)          product,  u : K -> S(M) its unit
//   d : S(M) -> S(M) ⊗ M             deriving transformation
//   d°: S(M) ⊗ M -> S(M)             coderiving transformation (1 ⊗ η)∇
//   S(f)                             functor action (substitute and expand)

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "symtan/combination.hpp"
#include "symtan/monomial.hpp"

namespace symtan {

/// Tensor element of S(M) ⊗ M, the codomain of d.
template <class K>
using DerivativeElement = Combination<std::tuple<Monomial<K>, K>>;

/// Element of S(S(M)); outer variables are monomials of S(M).
template <class K>
using NestedPolynomial = Polynomial<Monomial<K>>;

// --- basis-level maps ------------------------------------------------------

inline auto eta_map(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key)>;
    return variable_polynomial<K>(sr, key);
  };
}

inline auto mu_map(Semiring sr) {
  return [sr](const auto& outer) {
    using Inner = typename std::remove_cvref_t<decltype(outer)>::Factor::first_type;
    Inner flat;
    for (const auto& [token, e] : outer.factors()) flat = flat * token.pow(e);
    return Combination<Inner>::basis(sr, std::move(flat));
  };
}

inline auto nabla_map(Semiring sr) {
  return [sr](const auto& pair) {
    const auto& [a, b] = pair;
    using M = std::remove_cvref_t<decltype(a)>;
    return Combination<M>::basis(sr, a * b);
  };
}

template <class K>
auto unit_map(Semiring sr) {
  return [sr](const Unit&) { return Polynomial<K>::basis(sr, Monomial<K>{}); };
}

/// d(x1^e1 ... xn^en) = Σ ei · x1^e1..xi^(ei-1)..xn^en ⊗ xi, with ei acting by the natural-number action.
inline auto derive_map(Semiring sr) {
  return [sr](const auto& m) {
    using K = typename std::remove_cvref_t<decltype(m)>::Factor::first_type;
    DerivativeElement<K> out(sr);
    for (const auto& [var, e] : m.factors()) out.add_term({m.without_one(var), var}, sr.natural(e));
    return out;
  };
}

inline auto coderive_map(Semiring sr) {
  return [sr](const auto& pair) {
    const auto& [m, var] = pair;
    using M = std::remove_cvref_t<decltype(m)>;
    return Combination<M>::basis(sr, m * M::variable(var));
  };
}

/// S(f) on a monomial: substitute each variable by its image under the linear map f and expand.
template <class F>
auto sym_map_fn(Semiring sr, F f) {
  return [sr, f = std::move(f)](const auto& m) {
    using K1 = typename std::remove_cvref_t<decltype(m)>::Factor::first_type;
    using K2 = typename std::invoke_result_t<F&, const K1&>::key_type;
    Polynomial<K2> result = constant_polynomial<K2>(sr, sr.one());
    for (const auto& [var, e] : m.factors()) result = multiply(result, power(linear_polynomial(f(var)), e));
    return result;
  };
}

// --- element-level operations ----------------------------------------------

template <class K>
Polynomial<K> eta(const Combination<K>& v) {
  return symtan::apply(v, eta_map(v.semiring()));
}

template <class K>
Polynomial<K> mu(const NestedPolynomial<K>& p) {
  return symtan::apply(p, mu_map(p.semiring()));
}

template <class K>
Polynomial<K> nabla(const Polynomial<K>& p, const Polynomial<K>& q) {
  return symtan::apply(tensor(p, q), nabla_map(p.semiring()));
}

template <class K>
Polynomial<K> algebra_unit(const Semiring& sr) {
  return unit_map<K>(sr)(Unit{});
}

template <class K>
DerivativeElement<K> derive(const Polynomial<K>& p) {
  return symtan::apply(p, derive_map(p.semiring()));
}

template <class K>
Polynomial<K> coderive(const DerivativeElement<K>& t) {
  return symtan::apply(t, coderive_map(t.semiring()));
}

/// S(f)(p) for a linear map f given on basis keys.
template <class K, class F>
auto sym_map(const Polynomial<K>& p, F f) {
  return symtan::apply(p, sym_map_fn(p.semiring(), std::move(f)));
}

// --- Seely isomorphism S(A ⊕ B) ≅ S(A) ⊗ S(B) -------------------------------

template <class K>
using SeelyPair = Combination<std::tuple<Monomial<K>, Monomial<K>>>;

/// Splits each monomial of S(A ⊕ B) into its A-part ⊗ B-part (tags 0 and 1).
template <class K>
SeelyPair<K> seely_split(const Polynomial<Tagged<K>>& p) {
  SeelyPair<K> out(p.semiring());
  for (const auto& [m, c] : p.terms()) {
    std::vector<typename Monomial<K>::Factor> left, right;
    for (const auto& [var, e] : m.factors()) {
      if (var.tag == 0)
        left.emplace_back(var.key, e);
      else if (var.tag == 1)
        right.emplace_back(var.key, e);
      else
        throw std::invalid_argument("variable not attributable to either summand of the biproduct");
    }
    out.add_term({Monomial<K>::from_factors(std::move(left)), Monomial<K>::from_factors(std::move(right))}, c);
  }
  return out;
}

/// Inverse of seely_split: multiplies the two parts back together in S(A ⊕ B).
template <class K>
Polynomial<Tagged<K>> seely_merge(const SeelyPair<K>& t) {
  Polynomial<Tagged<K>> out(t.semiring());
  for (const auto& [key, c] : t.terms()) {
    const auto& [left, right] = key;
    std::vector<typename Monomial<Tagged<K>>::Factor> factors;
    for (const auto& [var, e] : left.factors()) factors.emplace_back(Tagged<K>{0, var}, e);
    for (const auto& [var, e] : right.factors()) factors.emplace_back(Tagged<K>{1, var}, e);
    out.add_term(Monomial<Tagged<K>>::from_factors(std::move(factors)), c);
  }
  return out;
}

}  // namespace symtan
