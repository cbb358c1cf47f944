#include "superlab/superficial.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace superlab {

namespace {

template <class Fn>
auto timed(std::vector<std::pair<std::string, double>>& log, const char* name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  auto result = fn();
  std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
  log.emplace_back(name, dt.count());
  return result;
}

template <class F>
std::optional<Polynomial<F>> first_outside(const Ideal<F>& big, const Ideal<F>& small) {
  for (const auto& g : big.groebner().generators())
    if (!small.contains(g)) return g;
  return std::nullopt;
}

template <class F>
std::string describe(const SuperficialityReport<F>& r) {
  std::ostringstream os;
  os << "checkers disagree for f = " << r.f.to_string() << ": a=" << r.verdict_a << " b=" << r.verdict_b
     << " c=" << r.verdict_c << " d_i=" << r.verdict_d_i << " d_ii=" << r.verdict_d_ii
     << " kirby_i=" << r.verdict_kirby_i << " kirby_ii=" << r.verdict_kirby_ii;
  for (const auto& w : r.witnesses) os << "; " << w.check << " [" << w.where << "] " << w.element.to_string();
  return os.str();
}

template <class F>
typename F::Element random_element(std::mt19937_64& rng, const F& k) {
  if (k.characteristic() == 0) {
    long v = std::uniform_int_distribution<long>(-5, 4)(rng);
    return k.from_int(v >= 0 ? v + 1 : v);
  }
  return k.from_int(std::uniform_int_distribution<long>(0, long(k.characteristic()) - 1)(rng));
}

}  // namespace

template <class F>
GradedCheck<F> check_a_graded(const ElementData<F>& e, const AdicContext<F>& ctx) {
  const auto& g = ctx.graded();
  Ideal<F> sat = saturate_ideal(g.ideal, g.irrelevant).ideal;
  auto gap = y_degree_gap(sat, g.ideal, g.nx);
  if (!gap) throw InvariantViolation("(Y)-torsion of G(M) is infinite-dimensional");
  auto nzd = is_nzd(e.lift, sat);
  return {nzd.regular, nzd.witness, *gap};
}

template <class F>
KirbyCheck<F> check_kirby(const ElementData<F>& e, const AdicContext<F>& ctx) {
  KirbyCheck<F> out{};
  auto nzd = is_nzd(e.f, gamma(ctx));
  out.injective = nzd.regular;
  out.witness_i = nzd.witness;

  const auto& g = ctx.graded();
  Ideal<F> A = sum(g.ideal, Ideal<F>(g.ring, {e.lift}, ctx.options()));
  Ideal<F> J2 = sum(ctx.J(), Ideal<F>(ctx.ring(), {e.f}, ctx.options()));
  // M/fM = 0 makes G(M/fM) the zero ring.
  Ideal<F> B = J2.is_unit() ? Ideal<F>::unit(g.ring, ctx.options()) : AdicContext<F>(ctx.h(), J2).graded().ideal;
  B = Ideal<F>(g.ring, [&] {
    std::vector<Polynomial<F>> moved;
    for (const auto& p : B.generators()) moved.push_back(p.reorder(g.ring));
    return moved;
  }(), ctx.options());
  if (!is_subset(A, B)) throw InvariantViolation("G(M)/fG(M) does not surject onto G(M/fM)");
  Ideal<F> satA = saturate_ideal(A, g.irrelevant).ideal;
  Ideal<F> satB = saturate_ideal(B, g.irrelevant).ideal;
  out.isomorphic = equal(satA, satB);
  if (out.isomorphic) {
    auto gap = y_degree_gap(B, A, g.nx);
    if (!gap) throw InvariantViolation("kirby: equal saturations but infinite-dimensional cokernel");
    out.n0 = *gap;
  } else {
    out.witness_ii = first_outside(satB, satA);
  }
  return out;
}

template <class F>
BlowupCheck<F> check_bcd_blowup(TransformPair<F> tp, const AdicContext<F>&) {
  BlowupCheck<F> out{true, true, true, true, {}, std::move(tp)};
  auto note = [&](bool& flag, const char* check, const ChartTransform<F>& ct, const NzdResult<F>& r) {
    if (r.regular) return;
    if (flag) out.witnesses.push_back({check, "chart " + std::to_string(ct.index), *r.witness});
    flag = false;
  };
  for (const auto& ct : out.transforms.per_chart) {
    note(out.b, "b", ct, ct.exceptional_regular);
    note(out.b, "b", ct, ct.weak_on_exceptional);
    note(out.c, "c", ct, ct.cartier);
    note(out.c, "c", ct, ct.exceptional_on_weak);
    note(out.d_i, "d_i", ct, ct.cartier);
    note(out.d_ii, "d_ii", ct, ct.exceptional_on_weak);
  }
  return out;
}

template <class F>
SuperficialityReport<F> check_all(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned ord_cap) {
  SuperficialityReport<F> r{};
  r.f = f;
  auto& log = r.timings_ms;
  auto e = timed(log, "lift", [&] { return rees_lift(f, ctx, ord_cap); });
  r.s = e.s;

  auto a = timed(log, "graded", [&] { return check_a_graded(e, ctx); });
  r.verdict_a = a.verdict;
  r.n0_graded = a.n0;
  if (a.witness) r.witnesses.push_back({"a", "G", *a.witness});

  auto k = timed(log, "kirby", [&] { return check_kirby(e, ctx); });
  r.verdict_kirby_i = k.injective;
  r.verdict_kirby_ii = k.isomorphic;
  r.n0_kirby = k.n0;
  if (k.witness_i) r.witnesses.push_back({"kirby_i", "M", *k.witness_i});
  if (k.witness_ii) r.witnesses.push_back({"kirby_ii", "G(M/fM)", *k.witness_ii});

  auto bcd = timed(log, "blowup", [&] { return check_bcd_blowup(transforms(e, ctx), ctx); });
  r.verdict_b = bcd.b;
  r.verdict_c = bcd.c;
  r.verdict_d_i = bcd.d_i;
  r.verdict_d_ii = bcd.d_ii;
  r.witnesses.insert(r.witnesses.end(), bcd.witnesses.begin(), bcd.witnesses.end());

  if (r.verdict_a && r.n0_kirby) r.n0_empirical = std::max(r.n0_graded, *r.n0_kirby);
  const bool d = r.verdict_d_i && r.verdict_d_ii;
  const bool kirby = r.verdict_kirby_i && r.verdict_kirby_ii;
  r.agreement = r.verdict_a == r.verdict_b && r.verdict_b == r.verdict_c && r.verdict_c == d && d == kirby;
  if (!r.agreement) throw AgreementViolation(describe(r));
  return r;
}

template <class F>
FindResult<F> find_superficial(const AdicContext<F>& ctx, unsigned s, unsigned trials, std::uint64_t seed,
                               unsigned ord_cap) {
  if (trials < 1) throw InputError("find needs at least one trial");
  std::mt19937_64 rng(seed);
  auto products = standard_power_generators(ctx, s);
  const F& k = ctx.ring()->field();
  FindResult<F> out;
  for (unsigned t = 0; t < trials; ++t) {
    Polynomial<F> f(ctx.ring());
    for (const auto& [alpha, p] : products) f += p.scale(random_element(rng, k));
    out.tried.push_back(f);
    if (f.is_zero() || ctx.J().contains(f)) continue;
    auto o = ord(f, ctx, ord_cap);
    if (o.at_least || o.value != s) continue;
    auto e = rees_lift(f, ctx, ord_cap);
    if (!check_a_graded(e, ctx).verdict) continue;
    out.report = check_all(f, ctx, ord_cap);
    return out;
  }
  return out;
}

#define SUPERLAB_INSTANTIATE(F)                                                                             \
  template GradedCheck<F> check_a_graded<F>(const ElementData<F>&, const AdicContext<F>&);                  \
  template KirbyCheck<F> check_kirby<F>(const ElementData<F>&, const AdicContext<F>&);                      \
  template BlowupCheck<F> check_bcd_blowup<F>(TransformPair<F>, const AdicContext<F>&);                     \
  template SuperficialityReport<F> check_all<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned);     \
  template FindResult<F> find_superficial<F>(const AdicContext<F>&, unsigned, unsigned, std::uint64_t, unsigned);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
