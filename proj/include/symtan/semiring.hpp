#pragma once

// Exact scalars over a small family of commutative semirings selected at runtime.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symtan {

using BigInt = boost::multiprecision::cpp_int;

/// A carrier element. `infinite` is only ever set for the tropical zero.
struct Scalar {
  BigInt value{0};
  bool infinite = false;

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.value == b.value) return std::strong_ordering::equal;
    return a.value < b.value ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

enum class SemiringKind { naturals, integers, integers_mod, boolean, tropical };

/**
 * Descriptor of a commutative semiring together with its exact operations.
 *
 * Scalars are always kept canonical (residues in [0, m), booleans in {0, 1},
 * tropical zero as the distinguished infinite element), so structural equality
 * of Scalar coincides with equality in the semiring.
 *
 * The tropical semiring is min-plus over the naturals: add = min, mul = +,
 * zero = +inf, one = 0.
 */
class Semiring {
 public:
  /// Throws std::invalid_argument when the modulus is missing, superfluous or < 2.
  static Semiring make(SemiringKind kind, std::optional<std::uint64_t> modulus = std::nullopt);

  /// Selector grammar: `nat | int | bool | tropical | mod:<m>`.
  static Semiring parse(std::string_view selector);

  SemiringKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  std::string selector() const;

  bool has_negatives() const { return kind_ == SemiringKind::integers || kind_ == SemiringKind::integers_mod; }
  bool idempotent_addition() const { return kind_ == SemiringKind::boolean || kind_ == SemiringKind::tropical; }

  Scalar zero() const;
  Scalar one() const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const { return a == one(); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;

  /// n·r as n-fold addition, evaluated by doubling. Defined in every semiring.
  Scalar times_natural(const BigInt& n, const Scalar& r) const;
  /// The image of the natural number n, i.e. n·1.
  Scalar natural(const BigInt& n) const { return times_natural(n, one()); }

  /// Additive inverse; throws std::domain_error when the semiring has no negatives.
  Scalar negate(const Scalar& a) const;

  /// Canonical reduction of an integer into the carrier (integers and residues only).
  Scalar from_integer(const BigInt& v) const;

  /// Decimal rendering of a carrier element; the tropical zero renders as `inf`.
  std::string format(const Scalar& a) const;
  /// Inverse of format(); only canonical renderings are accepted.
  Scalar parse_scalar(std::string_view text) const;

  /// Number of carrier elements for finite semirings.
  std::optional<std::uint64_t> carrier_size() const;
  /// All carrier elements in increasing order; throws std::domain_error if infinite.
  std::vector<Scalar> carrier() const;

  /// Uniform draw from a 16-element window of the carrier (or the full finite carrier).
  Scalar random(std::mt19937_64& rng) const;

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  Semiring(SemiringKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  SemiringKind kind_ = SemiringKind::naturals;
  std::uint64_t modulus_ = 0;
};

/// Parses a strictly decimal natural-number literal; throws std::invalid_argument otherwise.
BigInt parse_natural(std::string_view text);

}  // namespace symtan
