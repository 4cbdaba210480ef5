#pragma once

// Finite formal linear combinations over an ordered key set.
//
// Every object the engine works with is a free semimodule whose basis is
// described by a key type:
//   Gen            basis vector of a FreeModule (by index)
//   Unit           the single basis vector of the monoidal unit K
//   Tagged<K>      basis of a biproduct M ⊕ M ⊕ ... (tag = summand index)
//   Monomial<K>    basis of S(M) (see monomial.hpp)
//   std::tuple<..> basis of a tensor product, flattened left to right
// Linear maps are functions key -> Combination, extended by linearity with apply().

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <type_traits>
#include <utility>

#include "symtan/semiring.hpp"

namespace symtan {

/// Basis vector of a FreeModule, identified by its position in the basis list.
struct Gen {
  std::uint32_t index = 0;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Basis vector of the monoidal unit.
struct Unit {
  friend auto operator<=>(const Unit&, const Unit&) = default;
};

/// Basis vector of the `tag`-th summand of an iterated biproduct.
template <class K>
struct Tagged {
  std::uint32_t tag = 0;
  K key{};
  friend auto operator<=>(const Tagged&, const Tagged&) = default;
};

template <class Key>
class Combination {
 public:
  using key_type = Key;
  using term_map = std::map<Key, Scalar>;

  explicit Combination(Semiring semiring) : semiring_(semiring) {}

  static Combination basis(Semiring semiring, Key key) {
    Combination c(semiring);
    c.terms_.emplace(std::move(key), semiring.one());
    return c;
  }

  static Combination term(Semiring semiring, Key key, const Scalar& coefficient) {
    Combination c(semiring);
    c.add_term(key, coefficient);
    return c;
  }

  const Semiring& semiring() const { return semiring_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? semiring_.zero() : it->second;
  }

  /// Accumulates coefficient·key; zero coefficients are never stored.
  void add_term(const Key& key, const Scalar& coefficient) {
    if (semiring_.is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second = semiring_.add(it->second, coefficient);
      if (semiring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Accumulates scale·other.
  void add_scaled(const Combination& other, const Scalar& scale) {
    if (semiring_.is_zero(scale)) return;
    bool unit = semiring_.is_one(scale);
    for (const auto& [k, c] : other.terms_) add_term(k, unit ? c : semiring_.mul(scale, c));
  }

  Combination& operator+=(const Combination& other) {
    add_scaled(other, semiring_.one());
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) {
    a += b;
    return a;
  }

  Combination scaled(const Scalar& scale) const {
    Combination out(semiring_);
    out.add_scaled(*this, scale);
    return out;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Semiring semiring_;
  term_map terms_;
};

/// Linear extension: Σ c·f(k) over the terms of x.
template <class Key, class F>
auto apply(const Combination<Key>& x, F&& f) {
  using Out = std::invoke_result_t<F&, const Key&>;
  Out out(x.semiring());
  for (const auto& [k, c] : x.terms()) out.add_scaled(f(k), c);
  return out;
}

/// Diagrammatic composition of basis-level linear maps: first f, then g, ...
template <class F>
auto compose(F f) {
  return f;
}

template <class F, class G, class... Rest>
auto compose(F f, G g, Rest... rest) {
  auto fg = [f = std::move(f), g = std::move(g)](const auto& key) { return symtan::apply(f(key), g); };
  return compose(std::move(fg), std::move(rest)...);
}

/// Sum of two parallel basis-level maps.
template <class F, class G>
auto sum_of(F f, G g) {
  return [f = std::move(f), g = std::move(g)](const auto& key) { return f(key) + g(key); };
}

// ---------------------------------------------------------------------------
// Tensor products. Tuple keys are kept flat: a slot whose image is itself a
// tuple is spliced in place, and a 1-tuple collapses to its element.

template <class T>
struct is_tuple : std::false_type {};
template <class... Ts>
struct is_tuple<std::tuple<Ts...>> : std::true_type {};
template <class T>
inline constexpr bool is_tuple_v = is_tuple<std::remove_cvref_t<T>>::value;

template <class T>
auto as_tuple(const T& v) {
  if constexpr (is_tuple_v<T>)
    return v;
  else
    return std::tuple<T>(v);
}

template <class T>
auto collapse(T t) {
  if constexpr (std::tuple_size_v<T> == 1)
    return std::get<0>(std::move(t));
  else
    return t;
}

namespace detail {

template <std::size_t Offset, class Tuple, std::size_t... I>
auto tuple_range(const Tuple& t, std::index_sequence<I...>) {
  return std::make_tuple(std::get<Offset + I>(t)...);
}

template <std::size_t Begin, std::size_t End, class Tuple>
auto tuple_slice(const Tuple& t) {
  return tuple_range<Begin>(t, std::make_index_sequence<End - Begin>{});
}

// Replaces slots [I, I+N) of `key` with the (spliced) key `image`.
template <std::size_t I, std::size_t N, class Tuple, class K>
auto splice(const Tuple& key, const K& image) {
  constexpr std::size_t size = std::tuple_size_v<Tuple>;
  return collapse(std::tuple_cat(tuple_slice<0, I>(key), as_tuple(image), tuple_slice<I + N, size>(key)));
}

}  // namespace detail

/// Tensor product of two combinations, flattened.
template <class A, class B>
auto tensor(const Combination<A>& a, const Combination<B>& b) {
  using Key = decltype(std::tuple_cat(as_tuple(std::declval<A>()), as_tuple(std::declval<B>())));
  Combination<Key> out(a.semiring());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term(std::tuple_cat(as_tuple(ka), as_tuple(kb)), a.semiring().mul(ca, cb));
  return out;
}

/// 1 ⊗ ... ⊗ f ⊗ ... ⊗ 1 with f acting on the single slot I.
template <std::size_t I, class F>
auto on_slot(F f) {
  return [f = std::move(f)](const auto& key) {
    auto image = f(std::get<I>(key));
    using Key = decltype(detail::splice<I, 1>(key, image.terms().begin()->first));
    Combination<Key> out(image.semiring());
    for (const auto& [k, c] : image.terms()) out.add_term(detail::splice<I, 1>(key, k), c);
    return out;
  };
}

/// Applies a map whose domain is the N-fold tensor of slots [I, I+N) (e.g. ∇ ⊗ 1 with I = 0, N = 2).
template <std::size_t I, std::size_t N, class F>
auto on_slots(F f) {
  return [f = std::move(f)](const auto& key) {
    auto image = f(collapse(detail::tuple_slice<I, I + N>(key)));
    using Key = decltype(detail::splice<I, N>(key, image.terms().begin()->first));
    Combination<Key> out(image.semiring());
    for (const auto& [k, c] : image.terms()) out.add_term(detail::splice<I, N>(key, k), c);
    return out;
  };
}

namespace detail {

template <std::size_t I, std::size_t J, std::size_t K>
inline constexpr std::size_t swapped_index = K == I ? J : (K == J ? I : K);

template <std::size_t I, std::size_t J, class Tuple, std::size_t... K>
auto swap_tuple(const Tuple& t, std::index_sequence<K...>) {
  return std::make_tuple(std::get<swapped_index<I, J, K>>(t)...);
}

}  // namespace detail

/// The symmetry exchanging slots I and J of a flat tensor key (the slot types move with them).
template <std::size_t I, std::size_t J>
auto swap_slots(Semiring semiring) {
  return [semiring](const auto& key) {
    using T = std::remove_cvref_t<decltype(key)>;
    auto swapped = detail::swap_tuple<I, J>(key, std::make_index_sequence<std::tuple_size_v<T>>{});
    return Combination<decltype(swapped)>::basis(semiring, swapped);
  };
}

/// Identity map on any key type.
inline auto identity_map(Semiring semiring) {
  return [semiring](const auto& key) { return Combination<std::remove_cvref_t<decltype(key)>>::basis(semiring, key); };
}

}  // namespace symtan
