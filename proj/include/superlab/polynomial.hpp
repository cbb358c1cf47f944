#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superlab/field.hpp"
#include "superlab/monomial.hpp"
#include "superlab/monomial_order.hpp"

namespace superlab {

/// Coefficient field plus an ordered list of variables and the monomial
/// order used for canonical term storage. Immutable and shared.
template <class F>
class Ring {
public:
  using Field = F;
  using Element = typename F::Element;

  Ring(F field, std::vector<std::string> names, MonomialOrder order);

  const F& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Structural equality: same characteristic, variables and order.
  bool same_as(const Ring& other) const;

private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(names), std::move(order));
}

/// Same field and variables as `ring`, different order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  return make_ring(ring->field(), ring->names(), std::move(order));
}

template <class F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

/// Sparse polynomial; terms are stored in descending order with respect to
/// the ring's monomial order and never carry a zero coefficient.
template <class F>
class Polynomial {
public:
  using Element = typename F::Element;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, Element c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial term(RingPtr<F> ring, Monomial m, Element c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermT> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coeff() const { return terms_.front().coeff; }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Coefficient of m (zero when absent).
  Element coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Element& c) const;
  Polynomial mul_term(const Monomial& m, const Element& c) const;
  /// this + c * m * other, one merge pass.
  Polynomial add_scaled(const Polynomial& other, const Element& c, const Monomial& m) const;
  Polynomial pow(unsigned n) const;
  /// Divide by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

  /// Carries the polynomial into `target`, sending variable i to variable
  /// index_map[i] of the target ring.
  Polynomial rebase(const RingPtr<F>& target, std::span<const std::size_t> index_map) const;
  /// Same variables, target ring differs only in order (or is identical).
  Polynomial reorder(const RingPtr<F>& target) const;
  /// Ring homomorphism sending variable i to images[i] (all in one ring).
  Polynomial substitute(const RingPtr<F>& target, std::span<const Polynomial> images) const;

  /// Degree in the variables [begin, end) of each term, if all agree.
  std::optional<unsigned> homogeneous_degree(std::size_t begin, std::size_t end) const;

  std::string to_string() const;

private:
  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

/// Throws ContextMismatch unless both live in structurally equal rings.
template <class F>
void require_same_ring(const Polynomial<F>& a, const Polynomial<F>& b);

/// Exact quotient a / b; throws InvariantViolation on a nonzero remainder.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b);

}  // namespace superlab
