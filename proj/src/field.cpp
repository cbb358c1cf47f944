#include "superlab/field.hpp"

#include <limits>

#include "superlab/errors.hpp"

namespace superlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) {
  if (characteristic != 0) {
    if (characteristic >= (std::uint64_t(1) << 31))
      throw InputError("characteristic must be below 2^31");
    if (!is_prime(characteristic))
      throw InputError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  characteristic_ = static_cast<std::uint32_t>(characteristic);
}

RationalField::Element RationalField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) throw InputError("division by zero in rational literal");
  Element q(num, den);
  q.canonicalize();
  return q;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  return Element(1) / a;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (std::uint32_t(1) << 31) || !is_prime(p))
    throw InputError("modulus must be a prime below 2^31");
  barrett_ = std::numeric_limits<std::uint64_t>::max() / p;
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Element d = from_integer(den);
  if (d == 0) throw InputError("denominator vanishes modulo " + std::to_string(p_));
  return div(from_integer(num), d);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

std::string PrimeField::to_string(Element a) const {
  // Print the symmetric representative so small negatives read naturally.
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

}  // namespace superlab
