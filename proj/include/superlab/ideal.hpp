#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "superlab/groebner.hpp"

namespace superlab {

/// Ideal given by generators. Reduced Gröbner bases are memoized per
/// monomial order; copies share the memo table. Filling the table is
/// idempotent, so concurrent readers may race to compute the same basis.
template <class F>
class Ideal {
public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, GroebnerOptions opts = {});

  static Ideal zero(RingPtr<F> ring, GroebnerOptions opts = {}) { return Ideal(std::move(ring), {}, opts); }
  static Ideal unit(RingPtr<F> ring, GroebnerOptions opts = {});

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return opts_; }

  /// Basis for the ring's own order.
  const GroebnerBasis<F>& groebner() const;
  /// Basis for another order on the same variables.
  const GroebnerBasis<F>& groebner(const MonomialOrder& order) const;

  bool contains(const Polynomial<F>& f) const;
  Polynomial<F> normal_form(const Polynomial<F>& f) const { return groebner().normal_form(f); }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().is_zero_ideal(); }

  /// "(g1, g2, ...)" of the reduced basis.
  std::string to_string() const;

private:
  struct Memo {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis<F>>> bases;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  GroebnerOptions opts_;
  std::shared_ptr<Memo> memo_;
};

/// Ideal whose generators are the reduced basis of `gens`.
template <class F>
Ideal<F> interreduced(const Ideal<F>& I);

template <class F>
Ideal<F> sum(const Ideal<F>& I, const Ideal<F>& J);
template <class F>
Ideal<F> product(const Ideal<F>& I, const Ideal<F>& J);
/// power(I, 0) is the unit ideal.
template <class F>
Ideal<F> power(const Ideal<F>& I, unsigned n);
/// (t*I + (1-t)*J) ∩ k[x].
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J);

/// {g : g*f ∈ I}; f must be nonzero.
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& f);
/// {g : g*J ⊆ I}, the intersection of colons by the generators of J.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& I, const Ideal<F>& J);

template <class F>
struct Saturation {
  Ideal<F> ideal;
  /// Number of colon steps performed; the last one returned its input.
  unsigned exponent;
};

/// Iterated colon until stable.
template <class F>
Saturation<F> saturate(const Ideal<F>& I, const Polynomial<F>& f);
template <class F>
Saturation<F> saturate_ideal(const Ideal<F>& I, const Ideal<F>& J);

/// Semantic equality via mutual membership of generators.
template <class F>
bool equal(const Ideal<F>& I, const Ideal<F>& J);
/// I ⊆ J
template <class F>
bool is_subset(const Ideal<F>& I, const Ideal<F>& J);
template <class F>
bool contains(const Ideal<F>& I, const Polynomial<F>& f) {
  return I.contains(f);
}

/// dim_k k[x]/I, or nullopt when infinite (some variable has no pure
/// power among the leading monomials).
template <class F>
std::optional<std::uint64_t> colength(const Ideal<F>& I);

/// dim_k A/B for B ⊆ A, counted as the monomials of LT(A) outside LT(B).
/// Throws InfiniteDimension when the quotient is infinite-dimensional.
template <class F>
std::uint64_t relative_colength(const Ideal<F>& A, const Ideal<F>& B);

template <class F>
struct NzdResult {
  bool regular;
  /// Present iff !regular: g ∉ A with g*f ∈ A, the colon-basis element of
  /// smallest leading monomial outside A.
  std::optional<Polynomial<F>> witness;
};

/// Whether f is a nonzerodivisor on k[x]/A, decided by colon(A, f) = A.
template <class F>
NzdResult<F> is_nzd(const Polynomial<F>& f, const Ideal<F>& A);

// Monomial-ideal counting helpers, shared with the oracle and Hilbert code.

/// Whether some element of `gens` divides m.
bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> gens);

/// Number of monomials outside the monomial ideal generated by `gens`,
/// nullopt if infinite. Enumeration aborts past `cap`.
std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars,
                                                      std::uint64_t cap = 20'000'000);

/// Monomials in (upper) but not in (lower), assuming (lower) ⊆ (upper);
/// nullopt when infinitely many.
std::optional<std::vector<Monomial>> monomials_between(std::span<const Monomial> upper,
                                                       std::span<const Monomial> lower, std::size_t nvars,
                                                       std::uint64_t cap = 20'000'000);

}  // namespace superlab
