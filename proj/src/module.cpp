#include "symtan/module.hpp"

#include <set>
#include <stdexcept>

namespace symtan {

namespace {

void require_same_semiring(const Semiring& a, const Semiring& b) {
  if (!(a == b)) throw std::invalid_argument("semiring mismatch: " + a.selector() + " vs " + b.selector());
}

}  // namespace

FreeModule::FreeModule(Semiring semiring, std::vector<std::string> labels) : semiring_(semiring) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("repeated basis label: " + l);
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FreeModule FreeModule::numbered(Semiring semiring, std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return FreeModule(semiring, std::move(labels));
}

std::size_t FreeModule::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return i;
  throw std::out_of_range("no basis label " + label);
}

Vector::Vector(FreeModule s, Combination<Gen> c) : space(std::move(s)), coords(std::move(c)) {
  require_same_semiring(space.semiring(), coords.semiring());
  for (const auto& [g, _] : coords.terms())
    if (g.index >= space.dim()) throw std::out_of_range("coordinate outside the basis");
}

Vector Vector::basis(const FreeModule& space, std::size_t i) {
  if (i >= space.dim()) throw std::out_of_range("basis index out of range");
  return Vector(space, Combination<Gen>::basis(space.semiring(), Gen{static_cast<std::uint32_t>(i)}));
}

LinearMap::LinearMap(FreeModule domain, FreeModule codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  require_same_semiring(domain_.semiring(), codomain_.semiring());
  entries_.assign(domain_.dim() * codomain_.dim(), domain_.semiring().zero());
}

Combination<Gen> LinearMap::column(std::size_t col) const {
  Combination<Gen> out(semiring());
  for (std::size_t r = 0; r < codomain_.dim(); ++r) out.add_term(Gen{static_cast<std::uint32_t>(r)}, at(r, col));
  return out;
}

FreeModule combine_modules(ModuleOp op, const FreeModule& v, const FreeModule& w) {
  require_same_semiring(v.semiring(), w.semiring());
  std::vector<std::string> labels;
  if (op == ModuleOp::biproduct) {
    for (const auto& l : v.labels()) labels.push_back("0." + l);
    for (const auto& l : w.labels()) labels.push_back("1." + l);
  } else {
    for (const auto& a : v.labels())
      for (const auto& b : w.labels()) labels.push_back("(" + a + "," + b + ")");
  }
  return FreeModule(v.semiring(), std::move(labels));
}

FreeModule biproduct_power(const FreeModule& v, std::size_t copies) {
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < copies; ++t)
    for (const auto& l : v.labels()) labels.push_back(std::to_string(t) + "." + l);
  return FreeModule(v.semiring(), std::move(labels));
}

LinearMap structural_map(StructuralKind kind, const std::vector<FreeModule>& spaces, std::size_t index) {
  if (spaces.empty()) throw std::invalid_argument("structural map needs at least one space");
  const Semiring sr = spaces.front().semiring();
  for (const auto& s : spaces) require_same_semiring(sr, s.semiring());

  switch (kind) {
    case StructuralKind::identity: {
      LinearMap m(spaces[0], spaces[0]);
      for (std::size_t i = 0; i < spaces[0].dim(); ++i) m.set(i, i, sr.one());
      return m;
    }
    case StructuralKind::zero:
      return LinearMap(spaces[0], spaces.size() > 1 ? spaces[1] : spaces[0]);
    case StructuralKind::injection:
    case StructuralKind::projection: {
      if (index >= spaces.size()) throw std::out_of_range("summand index out of range");
      FreeModule sum = spaces[0];
      if (spaces.size() == 2) {
        sum = combine_modules(ModuleOp::biproduct, spaces[0], spaces[1]);
      } else {
        std::vector<std::string> labels;
        for (std::size_t t = 0; t < spaces.size(); ++t)
          for (const auto& l : spaces[t].labels()) labels.push_back(std::to_string(t) + "." + l);
        sum = FreeModule(sr, std::move(labels));
      }
      std::size_t offset = 0;
      for (std::size_t t = 0; t < index; ++t) offset += spaces[t].dim();
      const FreeModule& part = spaces[index];
      LinearMap m = kind == StructuralKind::injection ? LinearMap(part, sum) : LinearMap(sum, part);
      for (std::size_t i = 0; i < part.dim(); ++i) {
        if (kind == StructuralKind::injection)
          m.set(offset + i, i, sr.one());
        else
          m.set(i, offset + i, sr.one());
      }
      return m;
    }
    case StructuralKind::symmetry: {
      if (spaces.size() != 2) throw std::invalid_argument("symmetry takes exactly two factor spaces");
      const FreeModule& v = spaces[0];
      const FreeModule& w = spaces[1];
      LinearMap m(combine_modules(ModuleOp::tensor, v, w), combine_modules(ModuleOp::tensor, w, v));
      for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) m.set(j * v.dim() + i, i * w.dim() + j, sr.one());
      return m;
    }
  }
  throw std::invalid_argument("unknown structural map");
}

LinearMap combine_maps(MapOp op, const LinearMap& f, const LinearMap& g) {
  require_same_semiring(f.semiring(), g.semiring());
  const Semiring& sr = f.semiring();
  switch (op) {
    case MapOp::compose: {
      if (!(f.codomain() == g.domain())) throw std::invalid_argument("compose: codomain of f differs from domain of g");
      LinearMap m(f.domain(), g.codomain());
      for (std::size_t r = 0; r < g.codomain().dim(); ++r)
        for (std::size_t c = 0; c < f.domain().dim(); ++c) {
          Scalar acc = sr.zero();
          for (std::size_t k = 0; k < f.codomain().dim(); ++k) acc = sr.add(acc, sr.mul(g.at(r, k), f.at(k, c)));
          m.set(r, c, std::move(acc));
        }
      return m;
    }
    case MapOp::add: {
      if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw std::invalid_argument("add: maps have different shapes");
      LinearMap m(f.domain(), f.codomain());
      for (std::size_t r = 0; r < f.codomain().dim(); ++r)
        for (std::size_t c = 0; c < f.domain().dim(); ++c) m.set(r, c, sr.add(f.at(r, c), g.at(r, c)));
      return m;
    }
    case MapOp::tensor: {
      LinearMap m(combine_modules(ModuleOp::tensor, f.domain(), g.domain()),
                  combine_modules(ModuleOp::tensor, f.codomain(), g.codomain()));
      const std::size_t gd = g.domain().dim(), gc = g.codomain().dim();
      for (std::size_t r1 = 0; r1 < f.codomain().dim(); ++r1)
        for (std::size_t c1 = 0; c1 < f.domain().dim(); ++c1)
          for (std::size_t r2 = 0; r2 < gc; ++r2)
            for (std::size_t c2 = 0; c2 < gd; ++c2) m.set(r1 * gc + r2, c1 * gd + c2, sr.mul(f.at(r1, c1), g.at(r2, c2)));
      return m;
    }
    case MapOp::biproduct: {
      LinearMap m(combine_modules(ModuleOp::biproduct, f.domain(), g.domain()),
                  combine_modules(ModuleOp::biproduct, f.codomain(), g.codomain()));
      const std::size_t fd = f.domain().dim(), fc = f.codomain().dim();
      for (std::size_t r = 0; r < fc; ++r)
        for (std::size_t c = 0; c < fd; ++c) m.set(r, c, f.at(r, c));
      for (std::size_t r = 0; r < g.codomain().dim(); ++r)
        for (std::size_t c = 0; c < g.domain().dim(); ++c) m.set(fc + r, fd + c, g.at(r, c));
      return m;
    }
  }
  throw std::invalid_argument("unknown map operation");
}

LinearMap pair_into_biproduct(const std::vector<LinearMap>& components, const FreeModule& codomain) {
  if (components.empty()) throw std::invalid_argument("pairing needs at least one component");
  LinearMap m(components.front().domain(), codomain);
  std::size_t offset = 0;
  for (const auto& f : components) {
    if (!(f.domain() == m.domain())) throw std::invalid_argument("pairing: components have different domains");
    for (std::size_t r = 0; r < f.codomain().dim(); ++r)
      for (std::size_t c = 0; c < f.domain().dim(); ++c) m.set(offset + r, c, f.at(r, c));
    offset += f.codomain().dim();
  }
  if (offset != codomain.dim()) throw std::invalid_argument("pairing: codomain dimension mismatch");
  return m;
}

LinearMap copair_from_biproduct(const std::vector<LinearMap>& components, const FreeModule& domain) {
  if (components.empty()) throw std::invalid_argument("copairing needs at least one component");
  LinearMap m(domain, components.front().codomain());
  std::size_t offset = 0;
  for (const auto& f : components) {
    if (!(f.codomain() == m.codomain())) throw std::invalid_argument("copairing: components have different codomains");
    for (std::size_t r = 0; r < f.codomain().dim(); ++r)
      for (std::size_t c = 0; c < f.domain().dim(); ++c) m.set(r, offset + c, f.at(r, c));
    offset += f.domain().dim();
  }
  if (offset != domain.dim()) throw std::invalid_argument("copairing: domain dimension mismatch");
  return m;
}

Vector apply_map(const LinearMap& f, const Vector& v) {
  if (!(f.domain() == v.space)) throw std::invalid_argument("apply: vector is not in the domain");
  Combination<Gen> out(f.semiring());
  for (const auto& [g, c] : v.coords.terms()) out.add_scaled(f.column(g.index), c);
  return Vector(f.codomain(), std::move(out));
}

LinearMap map_from_columns(const FreeModule& domain, const FreeModule& codomain,
                           const std::vector<Combination<Gen>>& columns) {
  if (columns.size() != domain.dim()) throw std::invalid_argument("one column per domain basis vector required");
  LinearMap m(domain, codomain);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [g, s] : columns[c].terms()) {
      if (g.index >= codomain.dim()) throw std::out_of_range("column entry outside the codomain");
      m.set(g.index, c, s);
    }
  return m;
}

}  // namespace symtan
