#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace superlab {

/// Hard limit on ring size, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. Storage is inline; only the
/// first `size()` slots are meaningful and the rest stay zero.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }

  /// this | other
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Degree in the index range [begin, end).
  unsigned partial_degree(std::size_t begin, std::size_t end) const;

  std::vector<unsigned> exponents() const;

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

  std::size_t hash() const;

  /// Renders with the given variable names, "1" for the unit monomial.
  std::string to_string(std::span<const std::string> names) const;

private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace superlab
