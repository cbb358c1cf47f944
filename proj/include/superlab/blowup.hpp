#pragma once

#include <optional>
#include <vector>

#include "superlab/adic.hpp"

namespace superlab {

/// Affine chart Y_i = 1 of Proj of the Rees algebra of M.
template <class F>
struct Chart {
  std::size_t index;
  /// x-block followed by Y_j for j != i.
  RingPtr<F> ring;
  /// Rees ideal dehomogenized at Y_i.
  Ideal<F> ideal;
  /// h_i, the local equation of the exceptional divisor.
  Polynomial<F> exceptional;
};

/// Sends a polynomial of k[x, Y] to chart i by setting Y_i = 1.
template <class F>
Polynomial<F> dehomogenize(const Polynomial<F>& p, const AdicContext<F>& ctx, const Chart<F>& chart);

/// One chart per generator of I, in the supplied generator order.
template <class F>
std::vector<Chart<F>> charts(const AdicContext<F>& ctx);

template <class F>
struct ChartTransform {
  std::size_t index;
  /// F_i: the lift of f t^s with Y_i = 1.
  Polynomial<F> weak_equation;
  /// W_i = Ch_i + (F_i)
  Ideal<F> weak;
  /// St_i = W_i : h_i^infinity
  Ideal<F> strict;
  /// F_i regular on the chart (local Cartier condition).
  NzdResult<F> cartier;
  /// h_i regular on the chart.
  NzdResult<F> exceptional_regular;
  /// h_i regular modulo W_i.
  NzdResult<F> exceptional_on_weak;
  /// F_i regular modulo Ch_i + (h_i).
  NzdResult<F> weak_on_exceptional;
  bool weak_equals_strict;
};

template <class F>
struct TransformPair {
  ElementData<F> element;
  std::vector<Chart<F>> charts;
  std::vector<ChartTransform<F>> per_chart;
};

/// Throws InvariantViolation when equal(W_i, St_i) and the regularity of
/// h_i modulo W_i disagree on some chart.
template <class F>
TransformPair<F> transforms(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned ord_cap = 30);
template <class F>
TransformPair<F> transforms(ElementData<F> e, const AdicContext<F>& ctx);

/// Total transform Ch_i + (f) for reporting.
template <class F>
Ideal<F> total_transform(const TransformPair<F>& tp, std::size_t chart);

template <class F>
struct ChartVerdict {
  bool holds;
  /// First failing chart and its zero-divisor certificate.
  std::optional<std::size_t> chart;
  std::optional<Polynomial<F>> witness;
};

template <class F>
ChartVerdict<F> is_cartier(const TransformPair<F>& tp);

template <class F>
ChartVerdict<F> weak_equals_strict(const TransformPair<F>& tp);

}  // namespace superlab
