#include "superlab/hilbert.hpp"

#include "superlab/errors.hpp"
#include "superlab/oracle.hpp"
#include "superlab/superficial.hpp"

namespace superlab {

namespace {

template <class F>
std::size_t fingerprint_of(const AdicContext<F>& ctx) {
  std::size_t a = ctx.I().groebner().fingerprint(), b = ctx.J().groebner().fingerprint();
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

template <class F>
unsigned exact_order(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap) {
  auto o = ord(f, ctx, cap);
  if (o.at_least) throw ResourceError("I-adic order exceeds the cap of " + std::to_string(cap));
  return o.value;
}

// dim image(G(N)_{n - shift} -> G(M)_n) with N filtered by I^m N + J.
template <class F>
std::vector<std::uint64_t> image_dims(const Ideal<F>& N, const AdicContext<F>& ctx, unsigned shift, unsigned n_hi) {
  std::vector<std::uint64_t> out(n_hi + 1, 0);
  Ideal<F> cur = N;
  for (unsigned n = shift; n <= n_hi; ++n) {
    const Ideal<F>& p1 = ctx.power(n + 1);
    out[n] = finite_colength(p1) - finite_colength(sum(cur, p1));
    cur = sum(product(ctx.I(), cur), ctx.J());
  }
  return out;
}

template <class F>
FvSequence sequence(std::string name, const Ideal<F>& N, unsigned shift, const AdicContext<F>& ctx, unsigned n_hi) {
  FvSequence out{std::move(name), shift, kernel_dims_graded_inclusion(N, ctx, 0, n_hi, shift), {}, {}, {}, false};
  const auto g = hilbert_function(ctx, n_hi).values;
  const auto q = hilbert_function(AdicContext<F>(ctx.h(), N), n_hi).values;
  const auto im = image_dims(N, ctx, shift, n_hi);
  for (unsigned n = 0; n <= n_hi; ++n) {
    if (g[n] < q[n] + im[n]) throw InvariantViolation("G(M) -> G(M/N) is not surjective in degree " + std::to_string(n));
    out.kernel_quotient.push_back(g[n] - q[n] - im[n]);
  }
  const unsigned lo = n_hi / 2;
  out.fit_sub = fit_tail(out.kernel_sub, lo, n_hi);
  out.fit_quotient = fit_tail(out.kernel_quotient, lo, n_hi);
  out.agree = out.fit_sub == out.fit_quotient;
  return out;
}

}  // namespace

template <class F>
HilbertWindow hilbert_function(const AdicContext<F>& ctx, unsigned n_hi) {
  HilbertWindow out{{}, fingerprint_of(ctx)};
  std::uint64_t prev = finite_colength(ctx.power(0));
  for (unsigned n = 0; n <= n_hi; ++n) {
    const std::uint64_t next = finite_colength(ctx.power(n + 1));
    out.values.push_back(next - prev);
    prev = next;
  }
  return out;
}

template <class F>
RecurrenceCheck check_recurrence(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_hi, unsigned ord_cap) {
  RecurrenceCheck out{};
  out.s = exact_order(f, ctx, ord_cap);
  out.applicable = check_a_graded(rees_lift(f, ctx), ctx).verdict;
  out.module = hilbert_function(ctx, n_hi);
  out.quotient = hilbert_function(ctx.modulo(f), n_hi);
  const auto& h = out.module.values;
  for (unsigned n = 0; n <= n_hi; ++n) {
    const std::int64_t expected = std::int64_t(h[n]) - (n >= out.s ? std::int64_t(h[n - out.s]) : 0);
    if (std::int64_t(out.quotient.values[n]) != expected) out.violating.push_back(n);
  }
  const unsigned first = out.violating.empty() ? 0 : out.violating.back() + 1;
  if (first <= n_hi) out.start = first;
  return out;
}

PolyFit fit_tail(const std::vector<std::uint64_t>& values, unsigned lo, unsigned hi) {
  if (hi >= values.size() || lo > hi) throw InputError("fit window outside the computed values");
  std::vector<std::vector<mpz_class>> diff(1);
  for (unsigned n = lo; n <= hi; ++n) diff[0].push_back(mpz_class(std::to_string(values[n])));

  PolyFit out{std::nullopt, 0, lo, hi, false};
  auto all_zero = [](const std::vector<mpz_class>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  };
  if (all_zero(diff[0])) {
    out.residual_zero = true;
    return out;
  }
  for (unsigned d = 0;; ++d) {
    const std::vector<mpz_class> cur = diff[d];
    if (cur.size() < 3)
      throw FitFailure("tail on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] is not polynomial; enlarge the window");
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
    diff.push_back(next);
    if (all_zero(next)) {
      out.degree = d;
      out.multiplicity = cur[0];
      break;
    }
  }
  // Rebuild from the Newton form and compare with every tail value.
  const unsigned d = *out.degree;
  out.residual_zero = true;
  for (unsigned n = lo; n <= hi; ++n) {
    mpz_class value = 0, binom = 1;
    const unsigned k = n - lo;
    for (unsigned j = 0; j <= d; ++j) {
      value += binom * diff[j][0];
      binom = binom * (k - j) / (j + 1);
    }
    if (value != diff[0][k]) out.residual_zero = false;
  }
  if (!out.residual_zero) throw InvariantViolation("Newton interpolation does not reproduce the tail");
  return out;
}

template <class F>
FvReport fv_consequence(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_hi, unsigned ord_cap) {
  FvReport out{exact_order(f, ctx, ord_cap), {}, true};
  Ideal<F> fi(ctx.ring(), {f}, ctx.options());
  out.sequences.push_back(sequence("annihilator", colon(ctx.J(), f), 0, ctx, n_hi));
  out.sequences.push_back(sequence("image", sum(ctx.J(), fi), out.s, ctx, n_hi));
  for (const auto& seq : out.sequences) out.agree = out.agree && seq.agree;
  return out;
}

#define SUPERLAB_INSTANTIATE(F)                                                                               \
  template HilbertWindow hilbert_function<F>(const AdicContext<F>&, unsigned);                                \
  template RecurrenceCheck check_recurrence<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned, unsigned); \
  template FvReport fv_consequence<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned, unsigned);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
