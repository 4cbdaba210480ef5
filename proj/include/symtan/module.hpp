#pragma once

// Free finitely generated semimodules with labelled bases and matrices between them.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symtan/combination.hpp"
#include "symtan/semiring.hpp"

namespace symtan {

class FreeModule {
 public:
  /// Throws std::invalid_argument on repeated labels.
  FreeModule(Semiring semiring, std::vector<std::string> labels);

  /// Module with basis labels prefix0, prefix1, ...
  static FreeModule numbered(Semiring semiring, std::size_t dim, const std::string& prefix = "e");

  const Semiring& semiring() const { return semiring_; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::size_t dim() const { return labels_->size(); }
  /// Index of a label; throws std::out_of_range when absent.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.semiring_ == b.semiring_ && (a.labels_ == b.labels_ || *a.labels_ == *b.labels_);
  }

 private:
  Semiring semiring_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

struct Vector {
  FreeModule space;
  Combination<Gen> coords;

  Vector(FreeModule s) : space(std::move(s)), coords(space.semiring()) {}
  Vector(FreeModule s, Combination<Gen> c);

  static Vector basis(const FreeModule& space, std::size_t i);

  friend bool operator==(const Vector&, const Vector&) = default;
};

class LinearMap {
 public:
  /// Zero map.
  LinearMap(FreeModule domain, FreeModule codomain);

  const FreeModule& domain() const { return domain_; }
  const FreeModule& codomain() const { return codomain_; }
  const Semiring& semiring() const { return domain_.semiring(); }

  /// Entry in row `row` (codomain index) and column `col` (domain index).
  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * domain_.dim() + col]; }
  void set(std::size_t row, std::size_t col, Scalar value) { entries_[row * domain_.dim() + col] = std::move(value); }

  /// Image of the col-th domain basis vector.
  Combination<Gen> column(std::size_t col) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  FreeModule domain_;
  FreeModule codomain_;
  std::vector<Scalar> entries_;
};

enum class ModuleOp { biproduct, tensor };

/// Biproduct labels are tag-prefixed ("0.x", "1.x"); tensor labels are "(v,w)" in V-major order.
FreeModule combine_modules(ModuleOp op, const FreeModule& v, const FreeModule& w);
/// n-ary biproduct V ⊕ ... ⊕ V with tags 0..copies-1.
FreeModule biproduct_power(const FreeModule& v, std::size_t copies);

enum class StructuralKind { identity, zero, injection, projection, symmetry };

/**
 * identity/zero take one space (zero takes two: domain, codomain); injection
 * and projection take the summands of a biproduct and an index; symmetry takes
 * the two tensor factors V, W and gives V⊗W -> W⊗V.
 */
LinearMap structural_map(StructuralKind kind, const std::vector<FreeModule>& spaces, std::size_t index = 0);

enum class MapOp { compose, add, tensor, biproduct };

/// compose is diagrammatic: f first, then g.
LinearMap combine_maps(MapOp op, const LinearMap& f, const LinearMap& g);

/// Block matrix [f_0 | f_1 | ...] stacked vertically: the map X -> ⊕ codomains with the given components.
LinearMap pair_into_biproduct(const std::vector<LinearMap>& components, const FreeModule& codomain);
/// Block matrix side by side: the copairing ⊕ domains -> Y.
LinearMap copair_from_biproduct(const std::vector<LinearMap>& components, const FreeModule& domain);

Vector apply_map(const LinearMap& f, const Vector& v);

/// Builds a map from the images of the domain basis vectors.
LinearMap map_from_columns(const FreeModule& domain, const FreeModule& codomain,
                           const std::vector<Combination<Gen>>& columns);

}  // namespace symtan
