#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symtan/combination.hpp"

namespace symtan {

/**
 * A monomial over an ordered variable set K, stored as (variable, exponent)
 * pairs sorted by variable with no zero exponents. The empty monomial is 1.
 *
 * Ordering is graded-lexicographic: total degree first, then lexicographic
 * with the smallest variable key as the most significant (so for x < y in key
 * order: 1 < y < x < y^2 < xy < x^2). Monomials over monomials inherit this
 * order, which is what makes S(S(V)) canonical.
 */
template <class K>
class Monomial {
 public:
  using Factor = std::pair<K, std::uint32_t>;

  Monomial() = default;

  static Monomial variable(K var, std::uint32_t exponent = 1) {
    Monomial m;
    if (exponent > 0) {
      m.factors_.emplace_back(std::move(var), exponent);
      m.degree_ = exponent;
    }
    return m;
  }

  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& f : factors) {
      const std::uint32_t e = f.second;
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == f.first)
        m.factors_.back().second += e;
      else
        m.factors_.push_back(std::move(f));
      m.degree_ += e;
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t exponent(const K& var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, const K& v) { return f.first < v; });
    return (it != factors_.end() && it->first == var) ? it->second : 0;
  }

  /// This monomial with the exponent of `var` lowered by one; `var` must occur.
  Monomial without_one(const K& var) const {
    Monomial m = *this;
    for (auto it = m.factors_.begin(); it != m.factors_.end(); ++it) {
      if (it->first == var) {
        if (--it->second == 0) m.factors_.erase(it);
        --m.degree_;
        return m;
      }
    }
    throw std::logic_error("variable does not occur in monomial");
  }

  Monomial pow(std::uint32_t n) const {
    if (n == 0) return Monomial{};
    Monomial m = *this;
    for (auto& f : m.factors_) f.second *= n;
    m.degree_ *= n;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        m.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        m.factors_.push_back(*j++);
      } else {
        m.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second <=> j->second;
        continue;
      }
      // The monomial containing the earlier variable is the larger one.
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Element of S(M) where M has basis K.
template <class K>
using Polynomial = Combination<Monomial<K>>;

template <class K>
Polynomial<K> constant_polynomial(const Semiring& semiring, const Scalar& c) {
  return Polynomial<K>::term(semiring, Monomial<K>{}, c);
}

template <class K>
Polynomial<K> variable_polynomial(const Semiring& semiring, const K& var) {
  return Polynomial<K>::basis(semiring, Monomial<K>::variable(var));
}

template <class K>
Polynomial<K> multiply(const Polynomial<K>& p, const Polynomial<K>& q) {
  const Semiring& sr = p.semiring();
  Polynomial<K> out(sr);
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) out.add_term(mp * mq, sr.mul(cp, cq));
  return out;
}

template <class K>
Polynomial<K> power(const Polynomial<K>& p, std::uint64_t n) {
  Polynomial<K> result = constant_polynomial<K>(p.semiring(), p.semiring().one());
  Polynomial<K> base = p;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

/// Views a vector of M as a homogeneous linear polynomial in S(M).
template <class K>
Polynomial<K> linear_polynomial(const Combination<K>& v) {
  Polynomial<K> out(v.semiring());
  for (const auto& [k, c] : v.terms()) out.add_term(Monomial<K>::variable(k), c);
  return out;
}

/// Largest total degree among the terms; -1 for the zero polynomial.
template <class K>
std::int64_t degree(const Polynomial<K>& p) {
  std::int64_t d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.degree()));
  return d;
}

}  // namespace symtan
