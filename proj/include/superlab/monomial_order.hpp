#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superlab/monomial.hpp"

namespace superlab {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// A global monomial order. Block elimination treats the first
/// `block_size` variables as the block to be eliminated: any monomial
/// involving them exceeds every monomial free of them. Inside and across
/// the blocks ties are broken by graded reverse lex.
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, WeightedGrevlex, BlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder weighted_grevlex(std::vector<unsigned> weights);
  static MonomialOrder block_elimination(std::size_t block_size);

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_size_; }
  const std::vector<unsigned>& weights() const { return weights_; }

  /// Throws ContextMismatch when the variable counts differ.
  Cmp compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }

  /// Stable identifier used as a cache key.
  std::string key() const;

  bool operator==(const MonomialOrder&) const = default;

private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t block_size_ = 0;
  std::vector<unsigned> weights_;
};

}  // namespace superlab
