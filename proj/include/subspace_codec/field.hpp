#pragma once

// Finite field GF(q), q = p^r <= 2^16.
//
// Elements are integers in [0, q) holding the base-p digits of the polynomial
// basis coefficients (digit i = coefficient of x^i).  Multiplication goes
// through log/antilog tables built once at construction; addition is XOR for
// p = 2, modular for r = 1 and digit-wise otherwise.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace subspace_codec {

using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficient i of x^i; trailing zeros trimmed.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b (b nonzero).
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Parameters of GF(p^r).  `modulus` holds the r + 1 coefficients of the
/// monic defining polynomial, constant term first; it is {0, 1} (x) for r = 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Lexicographically smallest monic irreducible polynomial of degree r over
/// GF(p), comparing coefficients from the constant term upward.
inline std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  if (r == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    // Constant term is the most significant digit of the scan.
    detail::PrimePoly f(r + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = r; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[r] = 1;
    if (f[0] == 0) continue;
    if (detail::is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

class GaloisField {
 public:
  /// GF(q) with the canonical modulus.  Throws std::invalid_argument unless
  /// q is a prime power in [2, 2^16].
  static FieldPtr make(std::uint32_t q) {
    if (q < 2 || q > kMaxFieldOrder) throw std::invalid_argument("field order out of range: " + std::to_string(q));
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t r = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    if (rest != 1) throw std::invalid_argument("field order is not a prime power: " + std::to_string(q));
    return make(p, r, smallest_irreducible(p, r));
  }

  static FieldPtr make(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus) {
    return std::shared_ptr<const GaloisField>(new GaloisField(p, r, std::move(modulus)));
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return spec_.q; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.r; }
  Element primitive_element() const { return exp_[1]; }

  bool contains(Element a) const { return a < spec_.q; }

  Element add(Element a, Element b) const {
    if (spec_.p == 2) return a ^ b;
    if (spec_.r == 1) {
      const Element s = a + b;
      return s >= spec_.p ? s - spec_.p : s;
    }
    return digitwise(a, b, false);
  }

  Element sub(Element a, Element b) const {
    if (spec_.p == 2) return a ^ b;
    if (spec_.r == 1) return a >= b ? a - b : a + spec_.p - b;
    return digitwise(a, b, true);
  }

  Element neg(Element a) const { return sub(0, a); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(spec_.q - 1) - log_[a]];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = spec_.q - 1;
    return exp_[static_cast<std::size_t>(std::uint64_t(log_[a]) * (e % order) % order)];
  }

  friend bool operator==(const GaloisField& a, const GaloisField& b) { return a.spec_ == b.spec_; }

 private:
  GaloisField(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (r == 0) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
    }
    if (modulus.size() != r + 1 || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree r");
    for (auto c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (r > 1 && !detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");

    spec_ = FieldSpec{p, r, static_cast<std::uint32_t>(q), std::move(modulus)};
    pow_p_.resize(r);
    for (std::uint32_t i = 0, v = 1; i < r; ++i, v *= p) pow_p_[i] = v;
    build_tables();
  }

  Element digitwise(Element a, Element b, bool subtract) const {
    Element out = 0;
    for (std::uint32_t i = 0; i < spec_.r; ++i) {
      const std::uint32_t da = a % spec_.p, db = b % spec_.p;
      a /= spec_.p;
      b /= spec_.p;
      const std::uint32_t d = subtract ? (da + spec_.p - db) % spec_.p : (da + db) % spec_.p;
      out += d * pow_p_[i];
    }
    return out;
  }

  // Schoolbook product reduced by the modulus; only used to build tables.
  Element slow_mul(Element a, Element b) const {
    const std::uint32_t p = spec_.p, r = spec_.r;
    if (r == 1) return static_cast<Element>(std::uint64_t(a) * b % p);
    detail::PrimePoly pa(r), pb(r), prod(2 * r - 1, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    const auto rem = detail::poly_mod(prod, spec_.modulus, p);
    Element out = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) out += rem[i] * pow_p_[i];
    return out;
  }

  void build_tables() {
    const std::uint32_t q = spec_.q;
    const std::uint32_t order = q - 1;
    exp_.assign(2 * std::size_t(order) + 1, 0);
    log_.assign(q, 0);
    for (Element g = 1; g < q; ++g) {
      // g is primitive iff its powers run through all q - 1 nonzero elements.
      Element x = 1;
      std::uint32_t i = 0;
      bool primitive = true;
      for (; i < order; ++i) {
        if (i > 0 && x == 1) {
          primitive = false;
          break;
        }
        exp_[i] = x;
        x = slow_mul(x, g);
      }
      if (!primitive || x != 1) continue;
      for (i = 0; i < order; ++i) log_[exp_[i]] = i;
      for (i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
      return;
    }
    throw std::logic_error("no primitive element");
  }

  FieldSpec spec_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace subspace_codec
