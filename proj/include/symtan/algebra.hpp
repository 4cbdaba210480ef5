#pragma once

// Finite-rank commutative algebras given by structure constants, and the
// Weil-style extensions A[ε], A[ε,ε′], A[ε₁,ε₂].

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtan/combination.hpp"
#include "symtan/module.hpp"
#include "symtan/monomial.hpp"

namespace symtan {

/// Raised when structure constants violate an algebra law.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algebra file is malformed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructureAlgebra {
 public:
  /**
   * `table[i * rank + j]` is e_i · e_j. The result is validated (commutative,
   * associative, unital); throws AlgebraError with the first violation.
   */
  static StructureAlgebra make(FreeModule carrier, Combination<Gen> unit, std::vector<Combination<Gen>> table);
  /// As make() but without validation, for inspecting possibly invalid input.
  static StructureAlgebra unchecked(FreeModule carrier, Combination<Gen> unit, std::vector<Combination<Gen>> table);

  const FreeModule& carrier() const { return carrier_; }
  const Semiring& semiring() const { return carrier_.semiring(); }
  std::size_t rank() const { return carrier_.dim(); }
  const std::vector<std::string>& labels() const { return carrier_.labels(); }
  const Combination<Gen>& unit() const { return unit_; }
  const Combination<Gen>& product(std::size_t i, std::size_t j) const { return table_[i * rank() + j]; }

  Combination<Gen> multiply(const Combination<Gen>& x, const Combination<Gen>& y) const;
  /// Value of a monomial in the basis elements; the empty monomial is the unit.
  Combination<Gen> evaluate(const Monomial<Gen>& m) const;
  Combination<Gen> basis_vector(std::size_t i) const;

  /// Human-readable violations of the algebra laws, in a fixed checking order.
  std::vector<std::string> violations(std::size_t limit = 8) const;

  friend bool operator==(const StructureAlgebra&, const StructureAlgebra&) = default;

 private:
  StructureAlgebra(FreeModule carrier, Combination<Gen> unit, std::vector<Combination<Gen>> table);

  FreeModule carrier_;
  Combination<Gen> unit_;
  std::vector<Combination<Gen>> table_;
};

/// The rank-one algebra K with basis {"1"}.
StructureAlgebra unit_algebra(const Semiring& sr);

enum class WeilKind { T, T2, Tsq };

std::optional<WeilKind> parse_weil_kind(const std::string& text);

/**
 * A ⊗ W for the Weil algebra W of the given kind, with W-major basis blocks:
 *   T   : 1, eps              (eps² = 0)
 *   T2  : 1, eps, eps'        (all products of eps, eps' vanish)
 *   Tsq : 1, eps1, eps2, eps1*eps2  (eps1² = eps2² = 0)
 * Basis label of w ⊗ a is the label of a in the "1" block, w when a is
 * labelled "1", and w*a otherwise. Throws AlgebraError on a label collision.
 */
StructureAlgebra weil_extend(const StructureAlgebra& a, WeilKind kind);

/// JSON rendering: table keys "i,j" with i <= j, scalars as decimal strings, zero entries omitted.
std::string algebra_to_json(const StructureAlgebra& a);
/// Parses the JSON format without checking the algebra laws; throws FormatError.
StructureAlgebra algebra_from_json(const std::string& text);

}  // namespace symtan
