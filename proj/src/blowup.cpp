#include "superlab/blowup.hpp"

#include "superlab/errors.hpp"

namespace superlab {

namespace {

template <class F>
ChartVerdict<F> first_failure(const TransformPair<F>& tp, NzdResult<F> ChartTransform<F>::*field) {
  for (const auto& c : tp.per_chart) {
    const auto& r = c.*field;
    if (!r.regular) return {false, c.index, r.witness};
  }
  return {true, std::nullopt, std::nullopt};
}

}  // namespace

template <class F>
Polynomial<F> dehomogenize(const Polynomial<F>& p, const AdicContext<F>& ctx, const Chart<F>& chart) {
  const auto& R = chart.ring;
  std::vector<Polynomial<F>> images;
  for (std::size_t v = 0; v < ctx.nx(); ++v) images.push_back(Polynomial<F>::variable(R, v));
  std::size_t next = ctx.nx();
  for (std::size_t j = 0; j < ctx.ny(); ++j) {
    if (j == chart.index)
      images.push_back(Polynomial<F>::constant(R, R->field().one()));
    else
      images.push_back(Polynomial<F>::variable(R, next++));
  }
  return p.substitute(R, images);
}

template <class F>
std::vector<Chart<F>> charts(const AdicContext<F>& ctx) {
  const auto& rees = ctx.rees();
  std::vector<std::size_t> xmap(ctx.nx());
  for (std::size_t v = 0; v < xmap.size(); ++v) xmap[v] = v;
  std::vector<Chart<F>> out;
  for (std::size_t i = 0; i < ctx.ny(); ++i) {
    auto names = ctx.ring()->names();
    for (std::size_t j = 0; j < ctx.ny(); ++j)
      if (j != i) names.push_back("Y" + std::to_string(j));
    auto R = make_ring(ctx.ring()->field(), std::move(names));
    Chart<F> chart{i, R, Ideal<F>::zero(R, ctx.options()), ctx.h()[i].rebase(R, xmap)};
    std::vector<Polynomial<F>> gens;
    for (const auto& g : rees.ideal.groebner().generators()) gens.push_back(dehomogenize(g, ctx, chart));
    chart.ideal = interreduced(Ideal<F>(R, std::move(gens), ctx.options()));
    out.push_back(std::move(chart));
  }
  return out;
}

template <class F>
TransformPair<F> transforms(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned ord_cap) {
  return transforms(rees_lift(f, ctx, ord_cap), ctx);
}

template <class F>
TransformPair<F> transforms(ElementData<F> e, const AdicContext<F>& ctx) {
  TransformPair<F> tp{std::move(e), charts(ctx), {}};
  for (const auto& chart : tp.charts) {
    auto Fi = dehomogenize(tp.element.lift, ctx, chart);
    auto W = sum(chart.ideal, Ideal<F>(chart.ring, {Fi}, ctx.options()));
    auto St = saturate(W, chart.exceptional).ideal;
    auto with_h = sum(chart.ideal, Ideal<F>(chart.ring, {chart.exceptional}, ctx.options()));
    ChartTransform<F> ct{chart.index,
                         Fi,
                         W,
                         St,
                         is_nzd(Fi, chart.ideal),
                         is_nzd(chart.exceptional, chart.ideal),
                         is_nzd(chart.exceptional, W),
                         is_nzd(Fi, with_h),
                         equal(W, St)};
    if (ct.weak_equals_strict != ct.exceptional_on_weak.regular)
      throw InvariantViolation("chart " + std::to_string(chart.index) +
                               ": weak = strict disagrees with regularity of h on the weak transform");
    tp.per_chart.push_back(std::move(ct));
  }
  return tp;
}

template <class F>
Ideal<F> total_transform(const TransformPair<F>& tp, std::size_t chart) {
  const auto& c = tp.charts.at(chart);
  std::vector<std::size_t> xmap(tp.element.f.ring()->nvars());
  for (std::size_t v = 0; v < xmap.size(); ++v) xmap[v] = v;
  return sum(c.ideal, Ideal<F>(c.ring, {tp.element.f.rebase(c.ring, xmap)}, c.ideal.options()));
}

template <class F>
ChartVerdict<F> is_cartier(const TransformPair<F>& tp) {
  return first_failure(tp, &ChartTransform<F>::cartier);
}

template <class F>
ChartVerdict<F> weak_equals_strict(const TransformPair<F>& tp) {
  return first_failure(tp, &ChartTransform<F>::exceptional_on_weak);
}

#define SUPERLAB_INSTANTIATE(F)                                                                          \
  template Polynomial<F> dehomogenize<F>(const Polynomial<F>&, const AdicContext<F>&, const Chart<F>&); \
  template std::vector<Chart<F>> charts<F>(const AdicContext<F>&);                                       \
  template TransformPair<F> transforms<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned);        \
  template TransformPair<F> transforms<F>(ElementData<F>, const AdicContext<F>&);                        \
  template Ideal<F> total_transform<F>(const TransformPair<F>&, std::size_t);                            \
  template ChartVerdict<F> is_cartier<F>(const TransformPair<F>&);                                       \
  template ChartVerdict<F> weak_equals_strict<F>(const TransformPair<F>&);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
