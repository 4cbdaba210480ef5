#include "symtan/oracles.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace symtan::oracle {

namespace {

void add_into(const Semiring& sr, std::map<Exponents, Scalar>& terms, const Exponents& e, const Scalar& c) {
  if (sr.is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second = sr.add(it->second, c);
    if (sr.is_zero(it->second)) terms.erase(it);
  }
}

Poly poly_mul(const Semiring& sr, const Poly& a, const Poly& b) {
  Poly out{a.vars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(a.vars);
      for (std::size_t i = 0; i < a.vars; ++i) e[i] = ea[i] + eb[i];
      add_into(sr, out.terms, e, sr.mul(ca, cb));
    }
  return out;
}

Poly poly_add(const Semiring& sr, Poly a, const Poly& b) {
  for (const auto& [e, c] : b.terms) add_into(sr, a.terms, e, c);
  return a;
}

Poly constant(const Semiring& sr, std::size_t vars, const Scalar& c) {
  Poly p{vars, {}};
  add_into(sr, p.terms, Exponents(vars, 0), c);
  return p;
}

Poly variable(const Semiring& sr, std::size_t vars, std::size_t i) {
  Exponents e(vars, 0);
  e[i] = 1;
  Poly p{vars, {}};
  add_into(sr, p.terms, e, sr.one());
  return p;
}

struct DualPoly {
  Poly value;
  Poly eps;
};

DualPoly dual_mul(const Semiring& sr, const DualPoly& a, const DualPoly& b) {
  return {poly_mul(sr, a.value, b.value), poly_add(sr, poly_mul(sr, a.value, b.eps), poly_mul(sr, a.eps, b.value))};
}

// Small-integer arithmetic on carrier indices of a finite semiring.
struct Finite {
  bool boolean;
  std::uint32_t size;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return boolean ? (a | b) : (a + b) % size; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return boolean ? (a & b) : (a * b) % size; }
};

using IntVec = std::vector<std::uint32_t>;

struct IntAlgebra {
  std::size_t rank;
  IntVec unit;
  std::vector<IntVec> table;  // rank*rank entries

  IntVec multiply(const Finite& f, const IntVec& x, const IntVec& y) const {
    IntVec out(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        std::uint32_t c = f.mul(x[i], y[j]);
        if (c == 0) continue;
        for (std::size_t k = 0; k < rank; ++k) out[k] = f.add(out[k], f.mul(c, table[i * rank + j][k]));
      }
    return out;
  }

  IntVec basis(std::size_t i) const {
    IntVec v(rank, 0);
    v[i] = 1;
    return v;
  }

  bool valid(const Finite& f) const {
    for (std::size_t i = 0; i < rank; ++i)
      if (multiply(f, unit, basis(i)) != basis(i)) return false;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t k = 0; k < rank; ++k)
          if (multiply(f, table[i * rank + j], basis(k)) != multiply(f, basis(i), table[j * rank + k])) return false;
    return true;
  }
};

std::uint32_t to_index(const Scalar& s) { return static_cast<std::uint32_t>(s.value); }

// A ⊗ W where W has basis 1, ε₁, ε₂, ε₁ε₂ encoded as bitmasks 0..3.
IntAlgebra second_order(const StructureAlgebra& a) {
  const std::size_t n = a.rank();
  IntAlgebra out{4 * n, IntVec(4 * n, 0), std::vector<IntVec>(16 * n * n, IntVec(4 * n, 0))};
  for (const auto& [g, c] : a.unit().terms()) out.unit[g.index] = to_index(c);
  for (std::uint32_t w1 = 0; w1 < 4; ++w1)
    for (std::uint32_t w2 = 0; w2 < 4; ++w2) {
      if ((w1 & w2) != 0) continue;
      const std::uint32_t w = w1 | w2;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& [g, c] : a.product(i, j).terms())
            out.table[(w1 * n + i) * 4 * n + (w2 * n + j)][w * n + g.index] = to_index(c);
    }
  return out;
}

StructureAlgebra to_structure(const Semiring& sr, const IntAlgebra& b) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.rank; ++i) labels.push_back("b" + std::to_string(i));
  auto vec = [&](const IntVec& v) {
    Combination<Gen> out(sr);
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(Gen{static_cast<std::uint32_t>(i)}, sr.carrier()[v[i]]);
    return out;
  };
  std::vector<Combination<Gen>> table;
  for (const auto& t : b.table) table.push_back(vec(t));
  return StructureAlgebra::make(FreeModule(sr, labels), vec(b.unit), std::move(table));
}

// Advances a little-endian counter; false after the last value.
bool next(IntVec& digits, std::uint32_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::pair<Poly, Poly> dual_number_lambda(const Semiring& sr, const Poly& p) {
  if (p.vars % 2 != 0) throw std::invalid_argument("dual-number oracle needs two copies of the variables");
  const std::size_t n = p.vars / 2;
  DualPoly total{Poly{n, {}}, Poly{n, {}}};
  for (const auto& [e, c] : p.terms) {
    DualPoly term{constant(sr, n, c), Poly{n, {}}};
    for (std::size_t i = 0; i < n; ++i) {
      const DualPoly x{variable(sr, n, i), Poly{n, {}}};
      const DualPoly y{Poly{n, {}}, variable(sr, n, i)};
      for (std::uint32_t k = 0; k < e[i]; ++k) term = dual_mul(sr, term, x);
      for (std::uint32_t k = 0; k < e[n + i]; ++k) term = dual_mul(sr, term, y);
    }
    total = {poly_add(sr, total.value, term.value), poly_add(sr, total.eps, term.eps)};
  }
  return {total.value, total.eps};
}

Poly substitution_mu(const Semiring& sr, std::size_t vars, const NestedPoly& p) {
  Poly out{vars, {}};
  for (const auto& [outer, c] : p.terms) {
    Exponents flat(vars, 0);
    for (std::size_t t = 0; t < p.tokens.size(); ++t)
      for (std::uint32_t k = 0; k < outer[t]; ++k)
        for (std::size_t i = 0; i < vars; ++i) flat[i] += p.tokens[t][i];
    add_into(sr, out.terms, flat, c);
  }
  return out;
}

std::map<std::pair<Exponents, std::uint32_t>, Scalar> power_rule_d(const Semiring& sr, const Poly& p) {
  std::map<std::pair<Exponents, std::uint32_t>, Scalar> out;
  for (std::size_t i = 0; i < p.vars; ++i) {
    for (const auto& [e, c] : p.terms) {
      if (e[i] == 0) continue;
      Exponents lowered = e;
      --lowered[i];
      Scalar coeff = sr.zero();
      for (std::uint32_t k = 0; k < e[i]; ++k) coeff = sr.add(coeff, c);
      auto key = std::make_pair(lowered, static_cast<std::uint32_t>(i));
      auto [it, inserted] = out.try_emplace(key, coeff);
      if (!inserted) it->second = sr.add(it->second, coeff);
      if (sr.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

DualTable lift_vs_weil(const StructureAlgebra& a) {
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rank();
  auto coords = [&](const Combination<Gen>& v) {
    std::vector<Scalar> out(n, sr.zero());
    for (const auto& [g, c] : v.terms()) out[g.index] = c;
    return out;
  };
  // A dual number is (value, eps) with coordinates in A.
  using Dual = std::pair<std::vector<Scalar>, std::vector<Scalar>>;
  auto mul_a = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(n, sr.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar c = sr.mul(x[i], y[j]);
        auto prod = coords(a.product(i, j));
        for (std::size_t k = 0; k < n; ++k) out[k] = sr.add(out[k], sr.mul(c, prod[k]));
      }
    return out;
  };
  auto add_a = [&](std::vector<Scalar> x, const std::vector<Scalar>& y) {
    for (std::size_t k = 0; k < n; ++k) x[k] = sr.add(x[k], y[k]);
    return x;
  };
  auto basis = [&](std::size_t idx) {
    Dual d{std::vector<Scalar>(n, sr.zero()), std::vector<Scalar>(n, sr.zero())};
    (idx < n ? d.first[idx] : d.second[idx - n]) = sr.one();
    return d;
  };
  auto flatten = [&](const Dual& d) {
    std::vector<Scalar> out = d.first;
    out.insert(out.end(), d.second.begin(), d.second.end());
    return out;
  };

  DualTable out;
  out.unit = {coords(a.unit()), std::vector<Scalar>(n, sr.zero())};
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::vector<std::vector<Scalar>> row;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      Dual x = basis(i), y = basis(j);
      Dual prod{mul_a(x.first, y.first), add_a(mul_a(x.first, y.second), mul_a(x.second, y.first))};
      row.push_back(flatten(prod));
    }
    out.table.push_back(std::move(row));
  }
  return out;
}

namespace {

Finite finite_of(const Semiring& sr) {
  if (!sr.carrier_size()) throw std::domain_error("brute-force equalizer needs a finite semiring");
  return Finite{sr.kind() == SemiringKind::boolean, static_cast<std::uint32_t>(*sr.carrier_size())};
}

// Every equalizing algebra morphism B -> A[ε₁,ε₂], appended to `out`.
void enumerate_morphisms(const Semiring& sr, const Finite& f, const StructureAlgebra& a, const IntAlgebra& b,
                         std::optional<StructureAlgebra> domain, std::vector<EqualizerCase>& out) {
  const IntAlgebra target = second_order(a);
  const std::size_t n = a.rank(), tn = target.rank, r = b.rank;
  IntVec h(tn * r, 0);  // column-major: h[col * tn + row]
  do {
    // Equalizing T(p) and p;p;z: T(p) keeps the inner-tag-0 blocks (1 and ε₂) while
    // p;p;z keeps only the 1 block, so the ε₂ coordinates must vanish.
    bool equalizes = true;
    for (std::size_t c = 0; c < r && equalizes; ++c)
      for (std::size_t k = 0; k < n; ++k)
        if (h[c * tn + 2 * n + k] != 0) equalizes = false;
    if (!equalizes) continue;

    auto column = [&](std::size_t c) { return IntVec(h.begin() + c * tn, h.begin() + (c + 1) * tn); };
    auto image = [&](const IntVec& v) {
      IntVec out_v(tn, 0);
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t row = 0; row < tn; ++row) out_v[row] = f.add(out_v[row], f.mul(v[c], h[c * tn + row]));
      return out_v;
    };
    if (image(b.unit) != target.unit) continue;
    bool morphism = true;
    for (std::size_t i = 0; i < r && morphism; ++i)
      for (std::size_t j = i; j < r && morphism; ++j)
        morphism = image(b.table[i * r + j]) == target.multiply(f, column(i), column(j));
    if (!morphism) continue;

    if (!domain) domain = to_structure(sr, b);
    EqualizerCase ec{*domain, std::vector<IntVec>(tn, IntVec(r)), std::vector<IntVec>(3 * n, IntVec(r))};
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t row = 0; row < tn; ++row) ec.h[row][c] = h[c * tn + row];
      for (std::size_t k = 0; k < n; ++k) {
        ec.k[k][c] = h[c * tn + k];                  // 1
        ec.k[n + k][c] = h[c * tn + n + k];          // ε  <- ε₁
        ec.k[2 * n + k][c] = h[c * tn + 3 * n + k];  // ε′ <- ε₁ε₂
      }
    }
    out.push_back(std::move(ec));
  } while (next(h, f.size));
}

IntAlgebra to_int(const StructureAlgebra& b) {
  const std::size_t r = b.rank();
  auto vec = [&](const Combination<Gen>& v) {
    IntVec out(r, 0);
    for (const auto& [g, c] : v.terms()) out[g.index] = to_index(c);
    return out;
  };
  IntAlgebra out{r, vec(b.unit()), {}};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.table.push_back(vec(b.product(i, j)));
  return out;
}

}  // namespace

std::vector<EqualizerCase> brute_equalizer(const StructureAlgebra& a, std::size_t max_rank) {
  const Semiring& sr = a.semiring();
  const Finite f = finite_of(sr);
  std::vector<EqualizerCase> out;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    const std::size_t pairs = r * (r + 1) / 2;
    IntVec entries((1 + pairs) * r, 0);  // unit, then c_ij for i <= j
    do {
      IntAlgebra b{r, IntVec(entries.begin(), entries.begin() + r), std::vector<IntVec>(r * r)};
      std::size_t slot = 1;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j, ++slot) {
          IntVec c(entries.begin() + slot * r, entries.begin() + (slot + 1) * r);
          b.table[i * r + j] = c;
          b.table[j * r + i] = c;
        }
      if (!b.valid(f)) continue;
      enumerate_morphisms(sr, f, a, b, std::nullopt, out);
    } while (next(entries, f.size));
  }
  return out;
}

std::vector<EqualizerCase> brute_equalizer(const StructureAlgebra& a, const std::vector<StructureAlgebra>& domains) {
  const Finite f = finite_of(a.semiring());
  std::vector<EqualizerCase> out;
  for (const auto& b : domains) enumerate_morphisms(a.semiring(), f, a, to_int(b), b, out);
  return out;
}

}  // namespace symtan::oracle
