#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlab/blowup.hpp"
#include "superlab/errors.hpp"

namespace superlab {

/// Zero-divisor certificate attached to a failed check. `element` lives in
/// the ring named by `where` ("M", "G", "G(M/fM)" or "chart i").
template <class F>
struct Witness {
  std::string check;
  std::string where;
  Polynomial<F> element;
};

template <class F>
struct GradedCheck {
  bool verdict;
  std::optional<Polynomial<F>> witness;
  /// Degrees >= n0 carry no (Y)-torsion of G(M).
  unsigned n0;
};

template <class F>
struct KirbyCheck {
  bool injective;  // (i)
  bool isomorphic;  // (ii)
  std::optional<Polynomial<F>> witness_i;
  /// Element of the saturation of G(M/fM) outside that of G(M)/f G(M).
  std::optional<Polynomial<F>> witness_ii;
  /// Degrees >= n0 where the natural surjection is an isomorphism, when (ii).
  std::optional<unsigned> n0;
};

template <class F>
struct BlowupCheck {
  bool b, c, d_i, d_ii;
  std::vector<Witness<F>> witnesses;
  TransformPair<F> transforms;
};

template <class F>
struct SuperficialityReport {
  Polynomial<F> f;
  unsigned s;
  bool verdict_a, verdict_b, verdict_c, verdict_d_i, verdict_d_ii, verdict_kirby_i, verdict_kirby_ii;
  bool agreement;
  unsigned n0_graded;
  std::optional<unsigned> n0_kirby;
  /// max of the per-checker thresholds, for superficial f.
  std::optional<unsigned> n0_empirical;
  std::vector<Witness<F>> witnesses;
  /// Wall-clock milliseconds per checker.
  std::vector<std::pair<std::string, double>> timings_ms;

  bool superficial() const { return verdict_a; }
};

/// Checkers disagree: the equivalence theorems guarantee this never happens,
/// so it is always an implementation bug.
class AgreementViolation : public InvariantViolation {
public:
  using InvariantViolation::InvariantViolation;
};

/// f superficial iff its lift is regular on G(M) modulo (Y)-torsion.
template <class F>
GradedCheck<F> check_a_graded(const ElementData<F>& e, const AdicContext<F>& ctx);

template <class F>
KirbyCheck<F> check_kirby(const ElementData<F>& e, const AdicContext<F>& ctx);

template <class F>
BlowupCheck<F> check_bcd_blowup(TransformPair<F> tp, const AdicContext<F>& ctx);

/// Runs every checker and throws AgreementViolation when verdicts differ.
template <class F>
SuperficialityReport<F> check_all(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned ord_cap = 30);

template <class F>
struct FindResult {
  std::optional<SuperficialityReport<F>> report;
  std::vector<Polynomial<F>> tried;
};

/// Random combinations of the products h^alpha (|alpha| = s); coefficients
/// from -5..5 without 0 over Q, uniform over F_p. The first candidate of order s that
/// passes check_a_graded is returned with its full report.
template <class F>
FindResult<F> find_superficial(const AdicContext<F>& ctx, unsigned s, unsigned trials, std::uint64_t seed,
                               unsigned ord_cap = 30);

}  // namespace superlab
