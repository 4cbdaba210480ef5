#include "symtan/biproduct_tangent.hpp"

#include <stdexcept>

namespace symtan {

FreeModule tangent_power(const FreeModule& v, std::size_t n) { return biproduct_power(v, n + 1); }

FreeModule tangent_square(const FreeModule& v) { return tangent_power(tangent_power(v)); }

LinearMap bt_component(TangentKind kind, const FreeModule& v, std::size_t n, std::size_t i) {
  const Semiring& sr = v.semiring();
  const std::size_t d = v.dim();
  switch (kind) {
    case TangentKind::projection: {
      LinearMap m(tangent_power(v), v);
      for (std::size_t k = 0; k < d; ++k) m.set(k, k, sr.one());
      return m;
    }
    case TangentKind::zero: {
      LinearMap m(v, tangent_power(v));
      for (std::size_t k = 0; k < d; ++k) m.set(k, k, sr.one());
      return m;
    }
    case TangentKind::lift: {
      // T²V index of (outer, inner, k) is (2*outer + inner)*d + k.
      LinearMap m(tangent_power(v), tangent_square(v));
      for (std::size_t k = 0; k < d; ++k) {
        m.set(k, k, sr.one());
        m.set(3 * d + k, d + k, sr.one());
      }
      return m;
    }
    case TangentKind::flip: {
      LinearMap m(tangent_square(v), tangent_square(v));
      for (std::size_t outer = 0; outer < 2; ++outer)
        for (std::size_t inner = 0; inner < 2; ++inner)
          for (std::size_t k = 0; k < d; ++k) m.set((2 * inner + outer) * d + k, (2 * outer + inner) * d + k, sr.one());
      return m;
    }
    case TangentKind::sum: {
      LinearMap m(tangent_power(v, 2), tangent_power(v));
      for (std::size_t k = 0; k < d; ++k) {
        m.set(k, k, sr.one());
        m.set(d + k, d + k, sr.one());
        m.set(d + k, 2 * d + k, sr.one());
      }
      return m;
    }
    case TangentKind::rho: {
      if (n < 1 || i >= n) throw std::out_of_range("rho index out of range");
      LinearMap m(tangent_power(v, n), tangent_power(v));
      for (std::size_t k = 0; k < d; ++k) {
        m.set(k, k, sr.one());
        m.set(d + k, (i + 1) * d + k, sr.one());
      }
      return m;
    }
  }
  throw std::invalid_argument("unknown tangent component");
}

LinearMap bt_functor(const LinearMap& f, std::size_t n) {
  if (n == 0) return f;
  LinearMap m(tangent_power(f.domain(), n), tangent_power(f.codomain(), n));
  const std::size_t dd = f.domain().dim(), cd = f.codomain().dim();
  for (std::size_t b = 0; b <= n; ++b)
    for (std::size_t r = 0; r < cd; ++r)
      for (std::size_t c = 0; c < dd; ++c) m.set(b * cd + r, b * dd + c, f.at(r, c));
  return m;
}

LinearMap tangent_pullback_pair(const LinearMap& f, const LinearMap& g, const FreeModule& v) {
  const FreeModule t2 = tangent_square(v);
  if (!(f.codomain() == t2) || !(g.codomain() == t2) || !(f.domain() == g.domain()))
    throw std::invalid_argument("pairing: maps must share a domain and land in T²V");
  const LinearMap tp = bt_functor(bt_component(TangentKind::projection, v));
  if (!(combine_maps(MapOp::compose, f, tp) == combine_maps(MapOp::compose, g, tp)))
    throw std::invalid_argument("pairing: maps disagree after T(p)");

  const std::size_t d = v.dim();
  LinearMap m(f.domain(), tangent_power(tangent_power(v, 2)));
  for (std::size_t c = 0; c < f.domain().dim(); ++c)
    for (std::size_t outer = 0; outer < 2; ++outer)
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t base = (2 * outer) * d + k, tangent = (2 * outer + 1) * d + k;
        m.set((3 * outer) * d + k, c, f.at(base, c));
        m.set((3 * outer + 1) * d + k, c, f.at(tangent, c));
        m.set((3 * outer + 2) * d + k, c, g.at(tangent, c));
      }
  return m;
}

LinearMap vertical_lift_map(const FreeModule& v) {
  const FreeModule tv = tangent_power(v);
  auto then = [](const LinearMap& a, const LinearMap& b) { return combine_maps(MapOp::compose, a, b); };
  const LinearMap first = then(bt_component(TangentKind::rho, v, 2, 0), bt_component(TangentKind::zero, tv));
  const LinearMap second = then(bt_component(TangentKind::rho, v, 2, 1), bt_component(TangentKind::lift, v));
  const LinearMap paired = tangent_pullback_pair(first, second, v);
  return then(paired, bt_functor(bt_component(TangentKind::sum, v)));
}

bool equalizes_vertical_pair(const LinearMap& h, const FreeModule& v) {
  const FreeModule tv = tangent_power(v);
  auto then = [](const LinearMap& a, const LinearMap& b) { return combine_maps(MapOp::compose, a, b); };
  const LinearMap left = then(h, bt_functor(bt_component(TangentKind::projection, v)));
  const LinearMap right = then(then(then(h, bt_component(TangentKind::projection, tv)),
                                    bt_component(TangentKind::projection, v)),
                               bt_component(TangentKind::zero, v));
  return left == right;
}

std::optional<LinearMap> brute_force_left_inverse(const LinearMap& m) {
  const Semiring& sr = m.semiring();
  const std::vector<Scalar> carrier = sr.carrier();
  const std::size_t rows = m.domain().dim(), cols = m.codomain().dim();
  LinearMap inverse(m.codomain(), m.domain());

  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::size_t> digits(cols, 0);
    bool found = false;
    while (!found) {
      bool ok = true;
      for (std::size_t c = 0; c < rows && ok; ++c) {
        Scalar acc = sr.zero();
        for (std::size_t k = 0; k < cols; ++k) acc = sr.add(acc, sr.mul(carrier[digits[k]], m.at(k, c)));
        ok = acc == (c == r ? sr.one() : sr.zero());
      }
      if (ok) {
        for (std::size_t k = 0; k < cols; ++k) inverse.set(r, k, carrier[digits[k]]);
        found = true;
        break;
      }
      std::size_t pos = 0;
      while (pos < cols && ++digits[pos] == carrier.size()) digits[pos++] = 0;
      if (pos == cols) break;
    }
    if (!found) return std::nullopt;
  }
  return inverse;
}

}  // namespace symtan
