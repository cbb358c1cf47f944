#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superlab/adic.hpp"
#include "superlab/errors.hpp"

namespace superlab {

/// The tail of a sequence is not (yet) polynomial inside the window.
class FitFailure : public ResourceError {
public:
  using ResourceError::ResourceError;
};

/// H(n) = dim I^n M / I^{n+1} M for n in [0, values.size()).
struct HilbertWindow {
  std::vector<std::uint64_t> values;
  /// Hash of the reduced bases of I and J.
  std::size_t fingerprint;
};

template <class F>
HilbertWindow hilbert_function(const AdicContext<F>& ctx, unsigned n_hi);

struct RecurrenceCheck {
  unsigned s;
  /// Whether f passed the superficiality check.
  bool applicable;
  HilbertWindow module;
  HilbertWindow quotient;
  /// Degrees n with H_{M/fM}(n) != H(n) - H(n-s).
  std::vector<unsigned> violating;
  /// First degree from which the recurrence holds to the window end.
  std::optional<unsigned> start;

  bool holds() const { return applicable && start.has_value(); }
};

template <class F>
RecurrenceCheck check_recurrence(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_hi,
                                 unsigned ord_cap = 30);

/// Polynomial through the tail of a sequence, read off from forward
/// differences. `degree` is empty for the eventually-zero sequence, which
/// then has multiplicity 0.
struct PolyFit {
  std::optional<unsigned> degree;
  /// The constant d-th difference: H(n) ~ e n^d / d!.
  mpz_class multiplicity;
  unsigned lo, hi;
  bool residual_zero;

  bool operator==(const PolyFit& o) const { return degree == o.degree && multiplicity == o.multiplicity; }
};

/// Fits values[lo..hi]; the next difference must vanish on at least two
/// entries. Throws FitFailure otherwise.
PolyFit fit_tail(const std::vector<std::uint64_t>& values, unsigned lo, unsigned hi);

struct FvSequence {
  /// "annihilator": 0 -> Ann_M(f) -> M -> M/Ann_M(f) -> 0, I-adic filtrations.
  /// "image": 0 -> fM -> M -> M/fM -> 0, fM filtered by f I^n M in degree n+s.
  std::string name;
  unsigned shift;
  /// ker(G(N) -> G(M)) and ker(G(M)/G(N) -> G(M/N)) per degree.
  std::vector<std::uint64_t> kernel_sub, kernel_quotient;
  PolyFit fit_sub, fit_quotient;
  bool agree;
};

struct FvReport {
  unsigned s;
  std::vector<FvSequence> sequences;
  bool agree;
};

template <class F>
FvReport fv_consequence(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_hi, unsigned ord_cap = 30);

}  // namespace superlab
