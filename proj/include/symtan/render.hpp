#pragma once

// Text rendering of keys and combinations.
//
// Polynomials print in descending graded-lex order with explicit `*` and `^`
// so that output re-parses: "x^2 + 2*x*y + y^2". Tensor keys print as
// "(a ⊗ b)", biproduct keys as "<tag>.<key>", and a monomial used as a
// variable of an outer polynomial is bracketed: "[x*y]^2".

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symtan/combination.hpp"
#include "symtan/monomial.hpp"

namespace symtan {

/// Names for Gen keys; indices without a name print as g<index>.
struct Names {
  std::vector<std::string> gens;

  std::string operator()(const Gen& g) const {
    return g.index < gens.size() ? gens[g.index] : "g" + std::to_string(g.index);
  }
};

template <class K>
std::string render_key(const Names& names, const K& key);

namespace detail {

template <class K>
struct is_monomial : std::false_type {};
template <class K>
struct is_monomial<Monomial<K>> : std::true_type {};

template <class K>
std::string render_variable(const Names& names, const K& var) {
  if constexpr (is_monomial<K>::value)
    return "[" + render_key(names, var) + "]";
  else
    return render_key(names, var);
}

}  // namespace detail

template <class K>
std::string render_key(const Names& names, const K& key) {
  if constexpr (std::is_same_v<K, Gen>) {
    return names(key);
  } else if constexpr (std::is_same_v<K, Unit>) {
    return "1";
  } else if constexpr (detail::is_monomial<K>::value) {
    if (key.is_one()) return "1";
    std::string out;
    for (const auto& [var, e] : key.factors()) {
      if (!out.empty()) out += "*";
      out += detail::render_variable(names, var);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  } else if constexpr (is_tuple_v<K>) {
    std::string out = "(";
    bool first = true;
    std::apply(
        [&](const auto&... slot) {
          ((out += (first ? "" : " ⊗ ") + render_key(names, slot), first = false), ...);
        },
        key);
    return out + ")";
  } else {
    return std::to_string(key.tag) + "." + render_key(names, key.key);
  }
}

/// True when the key renders as the bare scalar "1" (so coefficients must be shown).
template <class K>
bool key_is_unit(const K& key) {
  if constexpr (std::is_same_v<K, Unit>)
    return true;
  else if constexpr (detail::is_monomial<K>::value)
    return key.is_one();
  else
    return false;
}

/// Renders a combination in descending key order; the zero combination prints as "0".
template <class K>
std::string render(const Names& names, const Combination<K>& c) {
  if (c.is_zero()) return "0";
  const Semiring& sr = c.semiring();
  std::string out;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [key, coeff] = *it;
    Scalar shown = coeff;
    bool negative = sr.kind() == SemiringKind::integers && coeff.value < 0;
    if (negative) shown = sr.negate(coeff);
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (key_is_unit(key)) {
      out += sr.format(shown);
    } else if (sr.is_one(shown)) {
      out += render_key(names, key);
    } else {
      out += sr.format(shown) + "*" + render_key(names, key);
    }
  }
  return out;
}

}  // namespace symtan
