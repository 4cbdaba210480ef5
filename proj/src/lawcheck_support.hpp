#pragma once

// Shared machinery for the law suites: the per-run context, basis
// enumeration, the (possibly mutated) calculus maps and the test algebras.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "symtan/algebra.hpp"
#include "symtan/em_tangent.hpp"
#include "symtan/lawcheck.hpp"
#include "symtan/oracles.hpp"
#include "symtan/render.hpp"

namespace symtan::laws {

struct Ctx {
  GeneratorConfig cfg;
  Semiring sr;
  Names names;
  std::mt19937_64 rng;
  LawReport report;
  std::string context;  // prefixed to counterexample inputs, e.g. the algebra under test

  bool failed() const { return report.status == LawStatus::fail; }

  void fail(const std::string& input, std::string lhs, std::string rhs) {
    if (failed()) return;
    report.status = LawStatus::fail;
    report.counterexample = Counterexample{context.empty() ? input : context + " | " + input, std::move(lhs), std::move(rhs)};
  }

  void skip(std::string why) {
    report.status = LawStatus::skipped;
    report.note = std::move(why);
  }

  /// One case decided elsewhere; lhs/rhs render lazily.
  template <class L, class R>
  void expect(bool ok, const std::string& input, L lhs, R rhs) {
    if (failed()) return;
    ++report.checked;
    if (!ok) fail(input, lhs(), rhs());
  }

  template <class Key, class L, class R>
  void check_elem(const Combination<Key>& x, const L& lhs, const R& rhs) {
    if (failed()) return;
    ++report.checked;
    try {
      auto l = symtan::apply(x, lhs);
      auto r = symtan::apply(x, rhs);
      if (!(l == r)) fail(render(names, x), render(names, l), render(names, r));
    } catch (const std::exception& e) {
      fail(render(names, x), std::string("error: ") + e.what(), "");
    }
  }

  template <class Key>
  Combination<Key> random_element(const std::vector<Key>& basis) {
    std::uniform_int_distribution<std::size_t> terms(1, 6), pick(0, basis.size() - 1);
    Combination<Key> out(sr);
    for (std::size_t t = terms(rng); t > 0; --t) out.add_term(basis[pick(rng)], sr.random(rng));
    return out;
  }

  /// Every basis key, then the configured number of random combinations of them.
  template <class Key, class L, class R>
  void sweep(const std::vector<Key>& basis, const L& lhs, const R& rhs, bool samples = true) {
    for (const auto& k : basis) check_elem(Combination<Key>::basis(sr, k), lhs, rhs);
    if (!samples || basis.empty()) return;
    for (std::uint32_t i = 0; i < cfg.random_samples; ++i) check_elem(random_element(basis), lhs, rhs);
  }

  std::uint32_t n() const { return cfg.n_vars; }
  std::uint32_t degree() const { return cfg.max_degree; }
  /// Per-copy variable count for suites over T(V) and friends.
  std::uint32_t n_copy() const { return std::min<std::uint32_t>(cfg.n_vars, 2); }
  /// Inner-degree bound for nested inputs.
  std::uint32_t inner() const { return std::min<std::uint32_t>(cfg.max_degree, 2); }
  std::uint32_t outer() const { return cfg.nesting_depth; }
};

// --- enumeration --------------------------------------------------------------

inline std::vector<Gen> gens(std::uint32_t n) {
  std::vector<Gen> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(Gen{i});
  return out;
}

template <class K>
std::vector<Tagged<K>> copies(const std::vector<K>& vars, std::uint32_t count) {
  std::vector<Tagged<K>> out;
  for (std::uint32_t t = 0; t < count; ++t)
    for (const auto& v : vars) out.push_back(Tagged<K>{t, v});
  return out;
}

/// Monomials of degree <= max_degree: by degree, and within a degree in descending order.
template <class K>
std::vector<Monomial<K>> monomials(const std::vector<K>& vars, std::uint64_t max_degree) {
  std::vector<Monomial<K>> out{Monomial<K>{}}, layer{Monomial<K>{}};
  for (std::uint64_t d = 1; d <= max_degree; ++d) {
    std::set<Monomial<K>> next;
    for (const auto& m : layer)
      for (const auto& v : vars) next.insert(m * Monomial<K>::variable(v));
    layer.assign(next.rbegin(), next.rend());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

template <class T>
std::uint64_t weight(const T& key) {
  if constexpr (detail::is_monomial<T>::value)
    return key.degree();
  else
    return 1;
}

/// a ⊗ b with weight(a) + weight(b) <= bound, by total weight.
template <class A, class B>
std::vector<std::tuple<A, B>> pairs(const std::vector<A>& as, const std::vector<B>& bs, std::uint64_t bound) {
  std::vector<std::tuple<A, B>> out;
  for (std::uint64_t t = 0; t <= bound; ++t)
    for (const auto& a : as)
      for (const auto& b : bs)
        if (weight(a) + weight(b) == t) out.emplace_back(a, b);
  return out;
}

template <class A, class B, class C>
std::vector<std::tuple<A, B, C>> triples(const std::vector<A>& as, const std::vector<B>& bs, const std::vector<C>& cs,
                                         std::uint64_t bound) {
  std::vector<std::tuple<A, B, C>> out;
  for (std::uint64_t t = 0; t <= bound; ++t)
    for (const auto& a : as)
      for (const auto& b : bs)
        for (const auto& c : cs)
          if (weight(a) + weight(b) + weight(c) == t) out.emplace_back(a, b, c);
  return out;
}

/// S²(V) inputs: outer monomials (degree <= outer) over inner monomials (degree <= inner).
template <class K>
std::vector<Monomial<Monomial<K>>> nested(const std::vector<K>& vars, std::uint64_t inner, std::uint64_t outer) {
  return monomials(monomials(vars, inner), outer);
}

template <class K>
oracle::Exponents exponents_of(const Monomial<K>& m, const std::vector<K>& vars) {
  oracle::Exponents e(vars.size(), 0);
  for (const auto& [var, k] : m.factors())
    e.at(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), var) - vars.begin())) = k;
  return e;
}

// --- calculus maps honouring the configured mutation ----------------------------

inline auto derive_fn(const Ctx& c) {
  const Semiring sr = c.sr;
  const bool drop = c.cfg.mutation == Mutation::drop_power_coefficient;
  return [sr, drop](const auto& m) {
    if (!drop) return derive_map(sr)(m);
    using K = typename std::remove_cvref_t<decltype(m)>::Factor::first_type;
    DerivativeElement<K> out(sr);
    for (const auto& [var, e] : m.factors()) out.add_term({m.without_one(var), var}, sr.one());
    return out;
  };
}

inline auto lambda_fn(const Ctx& c) {
  const Semiring sr = c.sr;
  const bool missing = c.cfg.mutation == Mutation::lambda_missing_second;
  return [sr, missing](const auto& m) {
    if (missing) return symtan::apply(sym_map_fn(sr, projection(sr, 0))(m), injection(sr, 0));
    return lambda_map(sr)(m);
  };
}

// --- test algebras and helpers -----------------------------------------------------

struct NamedAlgebra {
  std::string name;
  StructureAlgebra algebra;
};

/// K, K[t]/t², K×K and K[t]/t³, those of rank <= max_rank.
std::vector<NamedAlgebra> test_algebras(const Semiring& sr, std::size_t max_rank);

Combination<Gen> coords(const Semiring& sr, const std::vector<std::pair<std::size_t, Scalar>>& entries);
std::string compact_json(const StructureAlgebra& a);
std::string matrix_text(const LinearMap& m);
bool same_entries(const LinearMap& a, const LinearMap& b);
LinearMap random_matrix(Ctx& c, const FreeModule& domain, const FreeModule& codomain);

struct LawEntry {
  LawInfo info;
  std::function<void(Ctx&)> run;
};

void register_symmetric_laws(std::vector<LawEntry>& out);
void register_tangent_laws(std::vector<LawEntry>& out);
void register_core_laws(std::vector<LawEntry>& out);

}  // namespace symtan::laws
