#pragma once

// The tangent structure on free semimodules given by T(V) = V ⊕ V.
//
// Two presentations are provided:
//  * matrices (bt_component, bt_functor) on labelled FreeModules, and
//  * key-level maps on Tagged<K> keys, which act on any object (in particular
//    on S(A), whose basis is monomials) and are used by the distributive-law code.
//
// Key conventions: T(A) = Tagged<K> with tag 0 = base, 1 = tangent part;
// T²(A) = T(T(A)) = Tagged<Tagged<K>> with the outer tag first;
// T_n(A) = Tagged<K> with tags 0..n.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "symtan/combination.hpp"
#include "symtan/module.hpp"

namespace symtan {

enum class TangentKind { projection, zero, lift, flip, sum, rho };

/**
 * Matrix of a structural transformation at V:
 *   projection p : T V -> V            zero z : V -> T V
 *   lift ℓ       : T V -> T² V         flip c : T² V -> T² V
 *   sum σ        : T₂ V -> T V         rho ρ_i: T_n V -> T V   (1 ⊕ π_i, i < n)
 */
LinearMap bt_component(TangentKind kind, const FreeModule& v, std::size_t n = 2, std::size_t i = 0);

/// T_n(f) = f ⊕ ... ⊕ f with n+1 blocks; n = 0 gives f itself.
LinearMap bt_functor(const LinearMap& f, std::size_t n = 1);

/// T_n(V) as a labelled module: n+1 tagged copies.
FreeModule tangent_power(const FreeModule& v, std::size_t n = 1);
/// T²(V) = T(T(V)).
FreeModule tangent_square(const FreeModule& v);

/**
 * Pairing into T(T₂V) of two maps f, g : X -> T²V that agree after T(p):
 * in each outer block the result carries (π₀f, π₁f, π₁g).
 */
LinearMap tangent_pullback_pair(const LinearMap& f, const LinearMap& g, const FreeModule& v);

/// The comparison map ⟨ρ₀ z_{T V}, ρ₁ ℓ_V⟩ T(σ_V) : T₂V -> T²V.
LinearMap vertical_lift_map(const FreeModule& v);

/// Whether h : X -> T²V satisfies h T(p_V) = h p_{T V} p_V z_V.
bool equalizes_vertical_pair(const LinearMap& h, const FreeModule& v);

/**
 * A left inverse of m found by exhaustive search, one row at a time, over a
 * finite carrier. Throws std::domain_error for infinite semirings; returns
 * nullopt when some row has no solution.
 */
std::optional<LinearMap> brute_force_left_inverse(const LinearMap& m);

// ---------------------------------------------------------------------------
// Key-level structural maps.

inline auto tangent_projection(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key)>;
    return key.tag == 0 ? Combination<K>::basis(sr, key.key) : Combination<K>(sr);
  };
}

inline auto tangent_zero(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key)>;
    return Combination<Tagged<K>>::basis(sr, Tagged<K>{0, key});
  };
}

/// Summand injection into a biproduct of copies.
inline auto injection(Semiring sr, std::uint32_t tag) {
  return [sr, tag](const auto& key) {
    using K = std::remove_cvref_t<decltype(key)>;
    return Combination<Tagged<K>>::basis(sr, Tagged<K>{tag, key});
  };
}

/// Summand projection from a biproduct of copies.
inline auto projection(Semiring sr, std::uint32_t tag) {
  return [sr, tag](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key)>;
    return key.tag == tag ? Combination<K>::basis(sr, key.key) : Combination<K>(sr);
  };
}

/// σ : T₂ -> T, adding the two tangent parts.
inline auto tangent_sum(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key)>;
    return Combination<Tagged<K>>::basis(sr, Tagged<K>{key.tag == 0 ? 0u : 1u, key.key});
  };
}

/// ρ_i : T_n -> T, keeping the base and the (i+1)-th tangent part.
inline auto tangent_rho(Semiring sr, std::uint32_t i) {
  return [sr, i](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key)>;
    if (key.tag == 0) return Combination<Tagged<K>>::basis(sr, Tagged<K>{0, key.key});
    if (key.tag == i + 1) return Combination<Tagged<K>>::basis(sr, Tagged<K>{1, key.key});
    return Combination<Tagged<K>>(sr);
  };
}

/// ℓ : T -> T², a ↦ (0,(0,a)), b ↦ (1,(1,b)).
inline auto tangent_lift(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key)>;
    return Combination<Tagged<Tagged<K>>>::basis(sr, Tagged<Tagged<K>>{key.tag, Tagged<K>{key.tag, key.key}});
  };
}

/// c : T² -> T², exchanging the outer and inner tags.
inline auto tangent_flip(Semiring sr) {
  return [sr](const auto& key) {
    using K = std::remove_cvref_t<decltype(key.key.key)>;
    return Combination<Tagged<Tagged<K>>>::basis(sr, Tagged<Tagged<K>>{key.key.tag, Tagged<K>{key.tag, key.key.key}});
  };
}

/// T(f) (equally T_n(f)): apply f inside each tag.
template <class F>
auto tangent_map(F f) {
  return [f = std::move(f)](const auto& key) {
    auto image = f(key.key);
    using K = typename decltype(image)::key_type;
    Combination<Tagged<K>> out(image.semiring());
    for (const auto& [k, c] : image.terms()) out.add_term(Tagged<K>{key.tag, k}, c);
    return out;
  };
}

/// Tag-wise view: the summand of a T_n-element carrying the given tag.
template <class K>
Combination<K> component(const Combination<Tagged<K>>& x, std::uint32_t tag) {
  return symtan::apply(x, projection(x.semiring(), tag));
}

/// ⟨f, g⟩ into T₂ for T-elements f, g with the same base part: (π₀f, π₁f, π₁g).
template <class K>
Combination<Tagged<K>> pullback_pair(const Combination<Tagged<K>>& f, const Combination<Tagged<K>>& g) {
  if (!(component(f, 0) == component(g, 0))) throw std::invalid_argument("pairing: base parts differ");
  const Semiring& sr = f.semiring();
  Combination<Tagged<K>> out = symtan::apply(component(f, 0), injection(sr, 0));
  out += symtan::apply(component(f, 1), injection(sr, 1));
  out += symtan::apply(component(g, 1), injection(sr, 2));
  return out;
}

}  // namespace symtan
