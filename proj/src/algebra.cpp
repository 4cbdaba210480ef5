#include "symtan/algebra.hpp"

#include <set>

#include <json.hpp>

namespace symtan {

namespace {

Gen gen(std::size_t i) { return Gen{static_cast<std::uint32_t>(i)}; }

struct WeilShape {
  std::vector<std::string> directions;
  // direction product table; -1 marks a vanishing product
  std::vector<std::vector<int>> product;
};

WeilShape weil_shape(WeilKind kind) {
  switch (kind) {
    case WeilKind::T: return {{"1", "eps"}, {{0, 1}, {1, -1}}};
    case WeilKind::T2: return {{"1", "eps", "eps'"}, {{0, 1, 2}, {1, -1, -1}, {2, -1, -1}}};
    case WeilKind::Tsq:
      return {{"1", "eps1", "eps2", "eps1*eps2"}, {{0, 1, 2, 3}, {1, -1, 3, -1}, {2, 3, -1, -1}, {3, -1, -1, -1}}};
  }
  throw std::invalid_argument("unknown Weil kind");
}

}  // namespace

StructureAlgebra::StructureAlgebra(FreeModule carrier, Combination<Gen> unit, std::vector<Combination<Gen>> table)
    : carrier_(std::move(carrier)), unit_(std::move(unit)), table_(std::move(table)) {}

StructureAlgebra StructureAlgebra::unchecked(FreeModule carrier, Combination<Gen> unit,
                                             std::vector<Combination<Gen>> table) {
  const std::size_t n = carrier.dim();
  if (table.size() != n * n) throw AlgebraError("structure table must have rank² entries");
  auto in_range = [n](const Combination<Gen>& v) {
    for (const auto& [g, _] : v.terms())
      if (g.index >= n) return false;
    return true;
  };
  if (!in_range(unit)) throw AlgebraError("unit has a coordinate outside the basis");
  for (const auto& t : table)
    if (!in_range(t)) throw AlgebraError("structure constant outside the basis");
  return StructureAlgebra(std::move(carrier), std::move(unit), std::move(table));
}

StructureAlgebra StructureAlgebra::make(FreeModule carrier, Combination<Gen> unit, std::vector<Combination<Gen>> table) {
  StructureAlgebra a = unchecked(std::move(carrier), std::move(unit), std::move(table));
  auto problems = a.violations(1);
  if (!problems.empty()) throw AlgebraError(problems.front());
  return a;
}

Combination<Gen> StructureAlgebra::basis_vector(std::size_t i) const {
  return Combination<Gen>::basis(semiring(), gen(i));
}

Combination<Gen> StructureAlgebra::multiply(const Combination<Gen>& x, const Combination<Gen>& y) const {
  const Semiring& sr = semiring();
  Combination<Gen> out(sr);
  for (const auto& [gi, ci] : x.terms())
    for (const auto& [gj, cj] : y.terms()) out.add_scaled(product(gi.index, gj.index), sr.mul(ci, cj));
  return out;
}

Combination<Gen> StructureAlgebra::evaluate(const Monomial<Gen>& m) const {
  Combination<Gen> out = unit_;
  for (const auto& [g, e] : m.factors())
    for (std::uint32_t k = 0; k < e; ++k) out = multiply(out, basis_vector(g.index));
  return out;
}

std::vector<std::string> StructureAlgebra::violations(std::size_t limit) const {
  std::vector<std::string> out;
  const std::size_t n = rank();
  const auto& l = labels();
  auto report = [&](std::string msg) {
    if (out.size() < limit) out.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!(multiply(unit_, basis_vector(i)) == basis_vector(i))) report("unit law fails at " + l[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(product(i, j) == product(j, i))) report("not commutative at (" + l[i] + ", " + l[j] + ")");
  for (std::size_t i = 0; i < n && out.size() < limit; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto left = multiply(product(i, j), basis_vector(k));
        auto right = multiply(basis_vector(i), product(j, k));
        if (!(left == right)) report("not associative at (" + l[i] + ", " + l[j] + ", " + l[k] + ")");
      }
  return out;
}

StructureAlgebra unit_algebra(const Semiring& sr) {
  FreeModule carrier(sr, {"1"});
  auto one = Combination<Gen>::basis(sr, gen(0));
  return StructureAlgebra::make(carrier, one, {one});
}

std::optional<WeilKind> parse_weil_kind(const std::string& text) {
  if (text == "T") return WeilKind::T;
  if (text == "T2") return WeilKind::T2;
  if (text == "Tsq") return WeilKind::Tsq;
  return std::nullopt;
}

StructureAlgebra weil_extend(const StructureAlgebra& a, WeilKind kind) {
  const WeilShape w = weil_shape(kind);
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rank(), m = w.directions.size();

  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& dir : w.directions)
    for (const auto& base : a.labels()) {
      std::string label = dir == "1" ? base : base == "1" ? dir : dir + "*" + base;
      if (!seen.insert(label).second) throw AlgebraError("label collision in Weil extension: " + label);
      labels.push_back(std::move(label));
    }
  FreeModule carrier(sr, std::move(labels));

  auto shift = [&](const Combination<Gen>& v, std::size_t block) {
    Combination<Gen> out(sr);
    for (const auto& [g, c] : v.terms()) out.add_term(gen(block * n + g.index), c);
    return out;
  };

  std::vector<Combination<Gen>> table(n * m * n * m, Combination<Gen>(sr));
  for (std::size_t wi = 0; wi < m; ++wi)
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t wj = 0; wj < m; ++wj)
        for (std::size_t aj = 0; aj < n; ++aj) {
          int block = w.product[wi][wj];
          if (block < 0) continue;
          table[(wi * n + ai) * (n * m) + (wj * n + aj)] = shift(a.product(ai, aj), static_cast<std::size_t>(block));
        }
  return StructureAlgebra::make(carrier, a.unit(), std::move(table));
}

std::string algebra_to_json(const StructureAlgebra& a) {
  using nlohmann::ordered_json;
  const Semiring& sr = a.semiring();
  const auto& labels = a.labels();
  auto vec = [&](const Combination<Gen>& v) {
    ordered_json out = ordered_json::object();
    for (const auto& [g, c] : v.terms()) out[labels[g.index]] = sr.format(c);
    return out;
  };
  ordered_json doc;
  doc["semiring"] = sr.selector();
  doc["basis"] = labels;
  doc["unit"] = vec(a.unit());
  ordered_json table = ordered_json::object();
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i; j < a.rank(); ++j)
      if (!a.product(i, j).is_zero()) table[std::to_string(i) + "," + std::to_string(j)] = vec(a.product(i, j));
  doc["table"] = std::move(table);
  return doc.dump(2) + "\n";
}

StructureAlgebra algebra_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("algebra file must be a JSON object");
  for (const char* key : {"semiring", "basis", "unit", "table"})
    if (!doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  for (const auto& [key, _] : doc.items())
    if (key != "semiring" && key != "basis" && key != "unit" && key != "table")
      throw FormatError("unknown field \"" + key + "\"");

  if (!doc["semiring"].is_string()) throw FormatError("\"semiring\" must be a string");
  Semiring sr = Semiring::make(SemiringKind::naturals);
  try {
    sr = Semiring::parse(doc["semiring"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  if (!doc["basis"].is_array() || doc["basis"].empty()) throw FormatError("\"basis\" must be a non-empty array");
  std::vector<std::string> labels;
  for (const auto& l : doc["basis"]) {
    if (!l.is_string()) throw FormatError("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::optional<FreeModule> carrier;
  try {
    carrier.emplace(sr, labels);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const std::size_t n = labels.size();

  auto read_vector = [&](const json& obj, const std::string& where) {
    if (!obj.is_object()) throw FormatError(where + " must be an object");
    Combination<Gen> v(sr);
    for (const auto& [label, value] : obj.items()) {
      std::size_t idx;
      try {
        idx = carrier->index_of(label);
      } catch (const std::out_of_range&) {
        throw FormatError(where + ": unknown basis label \"" + label + "\"");
      }
      if (!value.is_string()) throw FormatError(where + ": scalars must be decimal strings");
      try {
        v.add_term(gen(idx), sr.parse_scalar(value.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw FormatError(where + ": " + e.what());
      }
    }
    return v;
  };

  Combination<Gen> unit = read_vector(doc["unit"], "unit");
  if (!doc["table"].is_object()) throw FormatError("\"table\" must be an object");
  std::vector<Combination<Gen>> table(n * n, Combination<Gen>(sr));
  for (const auto& [key, value] : doc["table"].items()) {
    std::size_t comma = key.find(',');
    std::size_t i, j;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      BigInt bi = parse_natural(key.substr(0, comma)), bj = parse_natural(key.substr(comma + 1));
      if (bi >= n || bj >= n) throw std::invalid_argument(key);
      i = static_cast<std::size_t>(bi);
      j = static_cast<std::size_t>(bj);
    } catch (const std::invalid_argument&) {
      throw FormatError("table key \"" + key + "\" is not a pair of basis indices i,j");
    }
    if (i > j) throw FormatError("table key \"" + key + "\" must satisfy i <= j");
    auto v = read_vector(value, "table[" + key + "]");
    table[i * n + j] = v;
    table[j * n + i] = v;
  }
  try {
    return StructureAlgebra::unchecked(*carrier, std::move(unit), std::move(table));
  } catch (const AlgebraError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace symtan
