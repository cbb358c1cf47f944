#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace superlab {

/// Coefficient field descriptor: characteristic 0 means the rationals,
/// otherwise a prime p < 2^31.
class FieldSpec {
public:
  explicit FieldSpec(std::uint64_t characteristic);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  bool operator==(const FieldSpec&) const = default;

private:
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// Exact rationals backed by GMP.
class RationalField {
public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  /// num/den; den must be nonzero.
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  std::string to_string(const Element& a) const { return a.get_str(); }
};

/// Residues modulo a word-size prime with Barrett reduction.
class PrimeField {
public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  Element from_integer(const mpz_class& v) const;
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return reduce(std::uint64_t(a) * b); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string to_string(Element a) const;

private:
  Element reduce(std::uint64_t x) const {
    // x < p^2 < 2^62; q underestimates x / p by at most one.
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<Element>(r >= p_ ? r - p_ : r);
  }

  std::uint32_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

}  // namespace superlab
