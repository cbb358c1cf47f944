#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superlab/polynomial.hpp"

namespace superlab {

struct GroebnerOptions {
  /// Any S-pair whose lcm exceeds this total degree aborts the run with a
  /// ResourceError.
  unsigned max_degree = 60;
};

/// Reduced, monic, inter-reduced Gröbner basis for the order of its ring.
/// Generators are sorted by ascending leading monomial, so equal ideals
/// yield identical bases.
template <class F>
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> gens, std::size_t fingerprint)
      : ring_(std::move(ring)), gens_(std::move(gens)), fingerprint_(fingerprint) {}

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// Hash of the source generators and order.
  std::size_t fingerprint() const { return fingerprint_; }

  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  std::vector<Monomial> leading_monomials() const;

  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::size_t fingerprint_;
};

/// Full reduction of f by `divisors` (any list, not necessarily a basis).
template <class F>
Polynomial<F> reduce_fully(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors);

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return gb.normal_form(f);
}

template <class F>
struct Division {
  std::vector<Polynomial<F>> quotients;
  Polynomial<F> remainder;
};

/// Multivariate division: f = sum quotients[i] * divisors[i] + remainder.
template <class F>
Division<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors);

/// Buchberger with the normal selection strategy and Gebauer–Möller pair
/// pruning (coprime and chain criteria). All generators must share one
/// ring; its order is used.
template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                            const GroebnerOptions& opts = {});

/// Same, after moving the generators to `order`.
template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                            const MonomialOrder& order, const GroebnerOptions& opts = {});

/// Expresses f as sum q_i * gens_i. Returns nullopt when f is not in the
/// ideal. The recombination identity is verified before returning.
template <class F>
std::optional<std::vector<Polynomial<F>>> lift_membership(const Polynomial<F>& f,
                                                           std::span<const Polynomial<F>> gens,
                                                           const RingPtr<F>& ring,
                                                           const GroebnerOptions& opts = {});

template <class F>
struct Elimination {
  RingPtr<F> ring;  // remaining variables in their original relative order, grevlex
  std::vector<Polynomial<F>> generators;
  std::vector<std::size_t> kept;  // source index of each remaining variable
};

/// Generators of (gens) ∩ k[remaining variables], via a block-elimination
/// basis restricted to elements free of the killed variables.
template <class F>
Elimination<F> eliminate(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                         std::span<const std::size_t> kill, const GroebnerOptions& opts = {});

/// Checks Buchberger's criterion directly: every S-polynomial reduces to 0.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb);

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

}  // namespace superlab
