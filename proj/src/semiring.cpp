#include "symtan/semiring.hpp"

#include <limits>
#include <stdexcept>

namespace symtan {

namespace {

Scalar finite(BigInt v) { return Scalar{std::move(v), false}; }

BigInt reduce_mod(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

BigInt parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("expected a natural-number literal");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("not a natural-number literal: " + std::string(text));
  return BigInt(std::string(text));
}

Semiring Semiring::make(SemiringKind kind, std::optional<std::uint64_t> modulus) {
  if (kind == SemiringKind::integers_mod) {
    if (!modulus) throw std::invalid_argument("integers-mod-m requires a modulus");
    if (*modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    return Semiring(kind, *modulus);
  }
  if (modulus) throw std::invalid_argument("modulus is only meaningful for integers-mod-m");
  return Semiring(kind, 0);
}

Semiring Semiring::parse(std::string_view selector) {
  if (selector == "nat") return make(SemiringKind::naturals);
  if (selector == "int") return make(SemiringKind::integers);
  if (selector == "bool") return make(SemiringKind::boolean);
  if (selector == "tropical") return make(SemiringKind::tropical);
  if (selector.starts_with("mod:")) {
    BigInt m;
    try {
      m = parse_natural(selector.substr(4));
      if (selector.size() > 5 && selector[4] == '0') throw std::invalid_argument("leading zero");
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("invalid modulus in semiring selector: " + std::string(selector));
    }
    if (m > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("modulus too large: " + std::string(selector));
    return make(SemiringKind::integers_mod, static_cast<std::uint64_t>(m));
  }
  throw std::invalid_argument("unknown semiring: " + std::string(selector));
}

std::string Semiring::selector() const {
  switch (kind_) {
    case SemiringKind::naturals: return "nat";
    case SemiringKind::integers: return "int";
    case SemiringKind::integers_mod: return "mod:" + std::to_string(modulus_);
    case SemiringKind::boolean: return "bool";
    case SemiringKind::tropical: return "tropical";
  }
  return {};
}

Scalar Semiring::zero() const {
  if (kind_ == SemiringKind::tropical) return Scalar{0, true};
  return finite(0);
}

Scalar Semiring::one() const {
  if (kind_ == SemiringKind::tropical) return finite(0);
  return finite(1);
}

bool Semiring::is_zero(const Scalar& a) const { return a == zero(); }

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::naturals:
    case SemiringKind::integers: return finite(a.value + b.value);
    case SemiringKind::integers_mod: return finite(reduce_mod(a.value + b.value, modulus_));
    case SemiringKind::boolean: return finite((a.value != 0 || b.value != 0) ? 1 : 0);
    case SemiringKind::tropical:
      if (a.infinite) return b;
      if (b.infinite) return a;
      return finite(a.value < b.value ? a.value : b.value);
  }
  return zero();
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::naturals:
    case SemiringKind::integers: return finite(a.value * b.value);
    case SemiringKind::integers_mod: return finite(reduce_mod(a.value * b.value, modulus_));
    case SemiringKind::boolean: return finite((a.value != 0 && b.value != 0) ? 1 : 0);
    case SemiringKind::tropical:
      if (a.infinite || b.infinite) return zero();
      return finite(a.value + b.value);
  }
  return zero();
}

Scalar Semiring::times_natural(const BigInt& n, const Scalar& r) const {
  if (n < 0) throw std::invalid_argument("natural-number action needs n >= 0");
  Scalar acc = zero();
  Scalar power = r;
  BigInt k = n;
  while (k > 0) {
    if ((k & 1) != 0) acc = add(acc, power);
    k >>= 1;
    if (k > 0) power = add(power, power);
  }
  return acc;
}

Scalar Semiring::negate(const Scalar& a) const {
  switch (kind_) {
    case SemiringKind::integers: return finite(-a.value);
    case SemiringKind::integers_mod: return finite(reduce_mod(-a.value, modulus_));
    default: throw std::domain_error("negation unavailable in semiring " + selector());
  }
}

Scalar Semiring::from_integer(const BigInt& v) const {
  switch (kind_) {
    case SemiringKind::integers: return finite(v);
    case SemiringKind::integers_mod: return finite(reduce_mod(v, modulus_));
    default:
      if (v < 0) throw std::domain_error("negation unavailable in semiring " + selector());
      return natural(v);
  }
}

std::string Semiring::format(const Scalar& a) const {
  if (a.infinite) return "inf";
  return a.value.str();
}

Scalar Semiring::parse_scalar(std::string_view text) const {
  if (kind_ == SemiringKind::tropical && text == "inf") return zero();
  bool negative = !text.empty() && text.front() == '-';
  BigInt v = parse_natural(negative ? text.substr(1) : text);
  if (negative) {
    if (kind_ != SemiringKind::integers || v == 0)
      throw std::invalid_argument("not a canonical " + selector() + " scalar: " + std::string(text));
    v = -v;
  }
  if ((kind_ == SemiringKind::integers_mod && v >= modulus_) || (kind_ == SemiringKind::boolean && v > 1))
    throw std::invalid_argument("not a canonical " + selector() + " scalar: " + std::string(text));
  if (text.size() > 1 && text[negative ? 1 : 0] == '0')
    throw std::invalid_argument("leading zero in scalar: " + std::string(text));
  return finite(v);
}

std::optional<std::uint64_t> Semiring::carrier_size() const {
  if (kind_ == SemiringKind::boolean) return 2;
  if (kind_ == SemiringKind::integers_mod) return modulus_;
  return std::nullopt;
}

std::vector<Scalar> Semiring::carrier() const {
  auto size = carrier_size();
  if (!size) throw std::domain_error("carrier of " + selector() + " is infinite");
  std::vector<Scalar> out;
  out.reserve(*size);
  for (std::uint64_t i = 0; i < *size; ++i) out.push_back(finite(i));
  return out;
}

Scalar Semiring::random(std::mt19937_64& rng) const {
  switch (kind_) {
    case SemiringKind::naturals: return finite(std::uniform_int_distribution<int>(0, 15)(rng));
    case SemiringKind::integers: return finite(std::uniform_int_distribution<int>(-8, 7)(rng));
    case SemiringKind::integers_mod: {
      std::uint64_t top = modulus_ < 16 ? modulus_ - 1 : 15;
      return finite(std::uniform_int_distribution<std::uint64_t>(0, top)(rng));
    }
    case SemiringKind::boolean: return finite(std::uniform_int_distribution<int>(0, 1)(rng));
    case SemiringKind::tropical: {
      int v = std::uniform_int_distribution<int>(0, 15)(rng);
      return v == 15 ? zero() : finite(v);
    }
  }
  return zero();
}

}  // namespace symtan
