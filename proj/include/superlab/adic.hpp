#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "superlab/ideal.hpp"

namespace superlab {

enum class PresentationKind { Rees, AssociatedGraded };

/// Quotient of k[x; Y0..Yr] (x in degree 0, Y in degree 1) by `ideal`.
/// Y_i corresponds to h_i * t.
template <class F>
struct GradedPresentation {
  PresentationKind kind;
  RingPtr<F> ring;
  std::size_t nx;
  Ideal<F> ideal;
  Ideal<F> irrelevant;
};

/// I-adic order: `value`, or at least `value` when the cap was hit.
struct AdicOrder {
  unsigned value;
  bool at_least;
};

template <class F>
struct ElementData {
  Polynomial<F> f;
  unsigned s;
  /// Y-homogeneous of degree s in the graded ring; Y_i -> h_i gives f mod J.
  Polynomial<F> lift;
};

/// The pair (I, J) on k[x] with M = k[x]/J. Generators of I are kept in
/// the supplied order; chart i belongs to h_i. Powers I^n + J, the Rees
/// and associated graded presentations are memoized and shared by copies.
template <class F>
class AdicContext {
public:
  AdicContext(std::vector<Polynomial<F>> h, Ideal<F> J);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& h() const { return h_; }
  const Ideal<F>& I() const { return I_; }
  const Ideal<F>& J() const { return J_; }
  const GroebnerOptions& options() const { return J_.options(); }

  std::size_t nx() const { return ring_->nvars(); }
  std::size_t ny() const { return h_.size(); }
  /// k[x, Y0..Yr], grevlex.
  const RingPtr<F>& graded_ring() const { return graded_; }
  Polynomial<F> y(std::size_t i) const { return Polynomial<F>::variable(graded_, nx() + i); }
  /// k[x] -> k[x, Y].
  Polynomial<F> embed(const Polynomial<F>& p) const;

  /// I^n + J.
  const Ideal<F>& power(unsigned n) const;

  const GradedPresentation<F>& rees() const;
  const GradedPresentation<F>& graded() const;

  /// Same I, J replaced by J + (f).
  AdicContext modulo(const Polynomial<F>& f) const;

private:
  struct Cache;

  RingPtr<F> ring_;
  RingPtr<F> graded_;
  std::vector<Polynomial<F>> h_;
  Ideal<F> I_;
  Ideal<F> J_;
  std::shared_ptr<Cache> cache_;
};

/// Largest s <= cap with f in I^s + J. Throws InputError when f lies in J.
template <class F>
AdicOrder ord(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap = 30);

/// J : I^infinity, presenting M / Gamma_I(M).
template <class F>
Ideal<F> gamma(const AdicContext<F>& ctx);

template <class F>
const GradedPresentation<F>& rees_presentation(const AdicContext<F>& ctx) {
  return ctx.rees();
}

template <class F>
const GradedPresentation<F>& graded_presentation(const AdicContext<F>& ctx) {
  return ctx.graded();
}

/// Writes f over the products h^alpha (|alpha| = s) modulo J and maps each
/// product to Y^alpha. Throws ResourceError when ord hits the cap.
template <class F>
ElementData<F> rees_lift(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap = 30);

/// Products h^alpha with |alpha| = s, in the order used by rees_lift, with
/// the matching exponent vectors.
template <class F>
std::vector<std::pair<std::vector<unsigned>, Polynomial<F>>> standard_power_generators(const AdicContext<F>& ctx,
                                                                                      unsigned s);

/// dim_k of (k[x,Y]/A) in Y-degrees 0..n_hi, counted on standard monomials.
/// A must be Y-homogeneous; throws InfiniteDimension if a piece is infinite.
template <class F>
std::vector<std::uint64_t> y_graded_dims(const Ideal<F>& A, std::size_t nx, unsigned n_hi);

/// For Y-homogeneous lower ⊆ upper with finite-dimensional quotient: one past
/// the largest Y-degree where they differ (0 when equal). nullopt when the
/// quotient is infinite-dimensional.
template <class F>
std::optional<unsigned> y_degree_gap(const Ideal<F>& upper, const Ideal<F>& lower, std::size_t nx);

}  // namespace superlab
