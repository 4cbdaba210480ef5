#pragma once

// Independent reference computations used to cross-check the engine.
//
// None of these call the polynomial, derivation or λ code: polynomials are
// dense exponent vectors in a std::map, and the finite-semiring brute force
// uses plain machine integers.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symtan/algebra.hpp"
#include "symtan/semiring.hpp"

namespace symtan::oracle {

using Exponents = std::vector<std::uint32_t>;

/// Polynomial in a fixed number of variables as exponent vector -> coefficient (zeros dropped).
struct Poly {
  std::size_t vars = 0;
  std::map<Exponents, Scalar> terms;
};

/// (p(x, εx) mod ε²) split into its constant and ε parts; p has 2n variables, copy 0 first.
std::pair<Poly, Poly> dual_number_lambda(const Semiring& sr, const Poly& p);

/// Nested polynomial: each outer variable is an inner monomial (token).
struct NestedPoly {
  std::vector<Exponents> tokens;
  std::map<Exponents, Scalar> terms;  // exponents over tokens
};

/// Flattens by substituting every token by its monomial and expanding naively.
Poly substitution_mu(const Semiring& sr, std::size_t vars, const NestedPoly& p);

/// Σ_i ∂p/∂x_i ⊗ x_i, differentiating one variable at a time; the factor n comes from n-fold addition.
std::map<std::pair<Exponents, std::uint32_t>, Scalar> power_rule_d(const Semiring& sr, const Poly& p);

/// Structure constants of the dual numbers over A, tabulated by explicit dual-number products of basis pairs.
struct DualTable {
  std::vector<std::vector<Scalar>> unit;                 // 2 blocks × rank
  std::vector<std::vector<std::vector<Scalar>>> table;   // table[i][j]: e_i·e_j as 2·rank coordinates
};
DualTable lift_vs_weil(const StructureAlgebra& a);

/// A morphism h : B -> A[ε₁,ε₂] equalizing T(p) and p;p;z, and its factor k : B -> A[ε,ε′].
struct EqualizerCase {
  StructureAlgebra domain;
  std::vector<std::vector<std::uint32_t>> h;  // rows × cols, entries as carrier indices
  std::vector<std::vector<std::uint32_t>> k;
};

/**
 * Enumerates every commutative algebra B of rank 1..max_rank over a finite
 * semiring (booleans or residues) and every linear h : B -> A[ε₁,ε₂]; keeps the
 * algebra morphisms that equalize, and factors each by coefficient extraction.
 * Throws std::domain_error for infinite semirings.
 */
std::vector<EqualizerCase> brute_equalizer(const StructureAlgebra& a, std::size_t max_rank);

/// As above, but with the domains B taken from the given list.
std::vector<EqualizerCase> brute_equalizer(const StructureAlgebra& a, const std::vector<StructureAlgebra>& domains);

}  // namespace symtan::oracle
