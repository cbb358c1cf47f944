#include "superlab/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "superlab/errors.hpp"

namespace superlab {

template <class F>
std::uint64_t finite_colength(const Ideal<F>& A) {
  auto c = colength(A);
  if (!c) throw InfiniteDimension("quotient by " + A.to_string() + " is infinite-dimensional");
  return *c;
}

template <class F>
GradedPieceBasis<F> piece_basis(const AdicContext<F>& ctx, unsigned n) {
  const Ideal<F>& upper = ctx.power(n);
  const Ideal<F>& lower = ctx.power(n + 1);
  finite_colength(lower);
  auto up = upper.groebner().leading_monomials();
  auto low = lower.groebner().leading_monomials();
  auto between = monomials_between(up, low, ctx.nx());
  if (!between) throw InfiniteDimension("graded piece " + std::to_string(n) + " is infinite-dimensional");
  const auto& order = ctx.ring()->order();
  std::sort(between->begin(), between->end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) == Cmp::GT; });

  GradedPieceBasis<F> out{n, std::move(*between), {}};
  const auto& gb = upper.groebner().generators();
  for (const auto& m : out.monomials) {
    auto it = std::find_if(gb.begin(), gb.end(), [&](const Polynomial<F>& g) { return g.leading_monomial().divides(m); });
    if (it == gb.end()) throw InvariantViolation("piece basis monomial outside the leading ideal");
    auto rep = lower.normal_form(it->mul_term(m / it->leading_monomial(), ctx.ring()->field().one()));
    if (rep.is_zero() || !(rep.leading_monomial() == m))
      throw InvariantViolation("piece representative lost its leading monomial");
    out.representatives.push_back(rep.monic());
  }
  return out;
}

template <class F>
MultMatrix<F> mult_matrix(const Polynomial<F>& f, unsigned s, const AdicContext<F>& ctx, unsigned n) {
  auto src = piece_basis(ctx, n);
  auto dst = piece_basis(ctx, n + s);
  const Ideal<F>& reduce_mod = ctx.power(n + s + 1);
  const F& k = ctx.ring()->field();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < dst.dim(); ++i) index.emplace(dst.monomials[i], i);

  MultMatrix<F> out{n, n + s, dst.dim(), src.dim(), Matrix<F>(dst.dim(), std::vector<typename F::Element>(src.dim(), k.zero()))};
  for (std::size_t j = 0; j < src.dim(); ++j) {
    auto v = reduce_mod.normal_form(f * src.representatives[j]);
    // Peel off leading terms against the monic target representatives.
    while (!v.is_zero()) {
      auto it = index.find(v.leading_monomial());
      if (it == index.end()) throw InvariantViolation("f times a piece element left I^{n+s} + J");
      const auto c = v.leading_coeff();
      out.entries[it->second][j] = c;
      v -= dst.representatives[it->second].scale(c);
    }
  }
  return out;
}

namespace {

template <class F>
unsigned order_of(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap) {
  auto o = ord(f, ctx, cap);
  if (o.at_least) throw ResourceError("I-adic order exceeds the cap of " + std::to_string(cap));
  return o.value;
}

template <class F>
std::uint64_t piece_dim(const AdicContext<F>& ctx, unsigned n) {
  return finite_colength(ctx.power(n + 1)) - finite_colength(ctx.power(n));
}

}  // namespace

template <class F>
std::vector<std::uint64_t> injectivity_scan(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_lo,
                                            unsigned n_hi, unsigned ord_cap) {
  const unsigned s = order_of(f, ctx, ord_cap);
  std::vector<std::uint64_t> out;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    auto m = mult_matrix(f, s, ctx, n);
    out.push_back(m.cols - rank(ctx.ring()->field(), m.entries));
  }
  return out;
}

template <class F>
std::vector<std::uint64_t> kirby_cokernel_scan(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned n_lo,
                                               unsigned n_hi, unsigned ord_cap) {
  const unsigned s = order_of(f, ctx, ord_cap);
  Ideal<F> J2 = sum(ctx.J(), Ideal<F>(ctx.ring(), {f}, ctx.options()));
  std::optional<AdicContext<F>> quotient;
  if (!J2.is_unit()) quotient.emplace(ctx.h(), J2);
  std::vector<std::uint64_t> out;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const std::uint64_t g = piece_dim(ctx, n);
    const std::uint64_t gq = quotient ? piece_dim(*quotient, n) : 0;
    std::uint64_t image = 0;
    if (n >= s) {
      auto m = mult_matrix(f, s, ctx, n - s);
      image = rank(ctx.ring()->field(), m.entries);
    }
    if (g < gq + image) throw InvariantViolation("negative Kirby defect in degree " + std::to_string(n));
    out.push_back(g - gq - image);
  }
  return out;
}

template <class F>
std::vector<std::uint64_t> kernel_dims_graded_inclusion(const Ideal<F>& N, const AdicContext<F>& ctx,
                                                        unsigned n_lo, unsigned n_hi, unsigned shift) {
  if (!is_subset(ctx.J(), N)) throw InputError("submodule ideal must contain J");
  if (!is_subset(N, ctx.power(shift))) throw InputError("submodule is not inside I^shift M");
  std::vector<std::uint64_t> out;
  Ideal<F> cur = interreduced(N);  // I^n N + J
  for (unsigned n = 0; n <= n_hi; ++n) {
    Ideal<F> next = sum(product(ctx.I(), cur), ctx.J());
    if (n >= n_lo) {
      const std::uint64_t source = relative_colength(cur, next);
      const Ideal<F>& p1 = ctx.power(n + shift + 1);
      const std::uint64_t image = finite_colength(p1) - finite_colength(sum(cur, p1));
      if (source < image) throw InvariantViolation("image larger than source in degree " + std::to_string(n));
      out.push_back(source - image);
    }
    cur = std::move(next);
  }
  return out;
}

#define SUPERLAB_INSTANTIATE(F)                                                                                \
  template std::uint64_t finite_colength<F>(const Ideal<F>&);                                                  \
  template GradedPieceBasis<F> piece_basis<F>(const AdicContext<F>&, unsigned);                                \
  template MultMatrix<F> mult_matrix<F>(const Polynomial<F>&, unsigned, const AdicContext<F>&, unsigned);      \
  template std::vector<std::uint64_t> injectivity_scan<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned, \
                                                          unsigned, unsigned);                                 \
  template std::vector<std::uint64_t> kirby_cokernel_scan<F>(const Polynomial<F>&, const AdicContext<F>&,      \
                                                             unsigned, unsigned, unsigned);                    \
  template std::vector<std::uint64_t> kernel_dims_graded_inclusion<F>(const Ideal<F>&, const AdicContext<F>&,  \
                                                                      unsigned, unsigned, unsigned);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
