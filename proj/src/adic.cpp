#include "superlab/adic.hpp"

#include <mutex>
#include <regex>

#include "superlab/errors.hpp"

namespace superlab {

template <class F>
struct AdicContext<F>::Cache {
  std::mutex mu;
  std::vector<std::shared_ptr<const Ideal<F>>> powers;
  std::shared_ptr<const GradedPresentation<F>> rees;
  std::shared_ptr<const GradedPresentation<F>> graded;
};

namespace {

bool is_reserved_name(const std::string& name) {
  static const std::regex y_name("Y[0-9]+");
  return name == "_t" || std::regex_match(name, y_name);
}

// Exponent vectors of total degree s over n slots, descending lex.
void multi_indices(std::size_t n, unsigned s, std::vector<unsigned>& cur, std::size_t pos,
                   std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == n) {
    cur[pos] = s;
    out.push_back(cur);
    return;
  }
  for (unsigned a = s + 1; a-- > 0;) {
    cur[pos] = a;
    multi_indices(n, s - a, cur, pos + 1, out);
  }
}

}  // namespace

template <class F>
AdicContext<F>::AdicContext(std::vector<Polynomial<F>> h, Ideal<F> J)
    : ring_(J.ring()), h_(std::move(h)), I_(J.ring(), {}, J.options()), J_(std::move(J)),
      cache_(std::make_shared<Cache>()) {
  if (h_.empty()) throw InputError("I needs at least one generator");
  for (const auto& name : ring_->names())
    if (is_reserved_name(name)) throw InputError("variable name '" + name + "' is reserved");
  for (const auto& g : h_) {
    if (!g.ring()->same_as(*ring_)) throw ContextMismatch("generator of I lives in another ring");
    if (g.is_zero()) throw InputError("generators of I must be nonzero");
    if (!ring_->field().is_zero(g.coeff(Monomial(ring_->nvars()))))
      throw InputError("generators of I must have zero constant term");
  }
  if (J_.is_unit()) throw InputError("J must be a proper ideal");
  I_ = Ideal<F>(ring_, h_, J_.options());

  auto names = ring_->names();
  for (std::size_t i = 0; i < h_.size(); ++i) names.push_back("Y" + std::to_string(i));
  graded_ = make_ring(ring_->field(), std::move(names));
}

template <class F>
Polynomial<F> AdicContext<F>::embed(const Polynomial<F>& p) const {
  std::vector<std::size_t> map(nx());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = v;
  return p.rebase(graded_, map);
}

template <class F>
const Ideal<F>& AdicContext<F>::power(unsigned n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->powers.empty()) cache_->powers.push_back(std::make_shared<const Ideal<F>>(Ideal<F>::unit(ring_, options())));
    if (n < cache_->powers.size()) return *cache_->powers[n];
  }
  const Ideal<F>& prev = power(n - 1);
  auto next = std::make_shared<const Ideal<F>>(sum(product(I_, prev), J_));
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->powers.size() == n) cache_->powers.push_back(std::move(next));
  return *cache_->powers[n];
}

template <class F>
const GradedPresentation<F>& AdicContext<F>::rees() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->rees) return *cache_->rees;
  }
  // k[_t, x, Y]: eliminate t from (Y_i - t*h_i) + J.
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), graded_->names().begin(), graded_->names().end());
  auto ext = make_ring(ring_->field(), names);
  std::vector<std::size_t> shift(nx());
  for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = v + 1;
  auto t = Polynomial<F>::variable(ext, 0);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < ny(); ++i)
    gens.push_back(Polynomial<F>::variable(ext, 1 + nx() + i) - t * h_[i].rebase(ext, shift));
  for (const auto& g : J_.groebner().generators()) gens.push_back(g.rebase(ext, shift));
  const std::size_t kill[] = {0};
  auto elim = eliminate<F>(gens, ext, kill, options());
  std::vector<Polynomial<F>> d;
  for (const auto& g : elim.generators) d.push_back(g.reorder(graded_));

  std::vector<Polynomial<F>> ys;
  for (std::size_t i = 0; i < ny(); ++i) ys.push_back(y(i));
  auto pres = std::make_shared<const GradedPresentation<F>>(GradedPresentation<F>{
      PresentationKind::Rees, graded_, nx(), Ideal<F>(graded_, std::move(d), options()),
      Ideal<F>(graded_, std::move(ys), options())});
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->rees) cache_->rees = std::move(pres);
  return *cache_->rees;
}

template <class F>
const GradedPresentation<F>& AdicContext<F>::graded() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->graded) return *cache_->graded;
  }
  const auto& r = rees();
  std::vector<Polynomial<F>> hs;
  for (const auto& g : h_) hs.push_back(embed(g));
  auto pres = std::make_shared<const GradedPresentation<F>>(GradedPresentation<F>{
      PresentationKind::AssociatedGraded, graded_, nx(), sum(r.ideal, Ideal<F>(graded_, std::move(hs), options())),
      r.irrelevant});
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->graded) cache_->graded = std::move(pres);
  return *cache_->graded;
}

template <class F>
AdicContext<F> AdicContext<F>::modulo(const Polynomial<F>& f) const {
  return AdicContext(h_, sum(J_, Ideal<F>(ring_, {f}, options())));
}

template <class F>
AdicOrder ord(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap) {
  if (cap < 1) throw InputError("ord cap must be at least 1");
  if (ctx.J().contains(f)) throw InputError("order undefined: f is zero in M");
  for (unsigned s = 1; s <= cap; ++s)
    if (!ctx.power(s).contains(f)) return {s - 1, false};
  return {cap, true};
}

template <class F>
Ideal<F> gamma(const AdicContext<F>& ctx) {
  return saturate_ideal(ctx.J(), ctx.I()).ideal;
}

template <class F>
std::vector<std::pair<std::vector<unsigned>, Polynomial<F>>> standard_power_generators(const AdicContext<F>& ctx,
                                                                                      unsigned s) {
  std::vector<std::vector<unsigned>> alphas;
  std::vector<unsigned> cur(ctx.ny(), 0);
  multi_indices(ctx.ny(), s, cur, 0, alphas);
  std::vector<std::pair<std::vector<unsigned>, Polynomial<F>>> out;
  for (auto& a : alphas) {
    auto p = Polynomial<F>::constant(ctx.ring(), ctx.ring()->field().one());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) p *= ctx.h()[i].pow(a[i]);
    out.emplace_back(std::move(a), std::move(p));
  }
  return out;
}

template <class F>
ElementData<F> rees_lift(const Polynomial<F>& f, const AdicContext<F>& ctx, unsigned cap) {
  AdicOrder o = ord(f, ctx, cap);
  if (o.at_least) throw ResourceError("I-adic order exceeds the cap of " + std::to_string(cap));
  const unsigned s = o.value;
  auto products = standard_power_generators(ctx, s);
  std::vector<Polynomial<F>> gens;
  for (const auto& [a, p] : products) gens.push_back(p);
  for (const auto& g : ctx.J().generators()) gens.push_back(g);
  auto q = lift_membership<F>(f, gens, ctx.ring(), ctx.options());
  if (!q) throw InvariantViolation("rees_lift: f is not in I^s + J although ord says so");

  Polynomial<F> lift(ctx.graded_ring());
  for (std::size_t k = 0; k < products.size(); ++k) {
    if ((*q)[k].is_zero()) continue;
    Monomial ya(ctx.nx() + ctx.ny());
    for (std::size_t i = 0; i < ctx.ny(); ++i) ya.set(ctx.nx() + i, products[k].first[i]);
    lift += ctx.embed((*q)[k]).mul_term(ya, ctx.ring()->field().one());
  }
  return {f, s, lift};
}

template <class F>
std::vector<std::uint64_t> y_graded_dims(const Ideal<F>& A, std::size_t nx, unsigned n_hi) {
  const std::size_t nvars = A.ring()->nvars();
  const std::size_t ny = nvars - nx;
  auto lms = A.groebner().leading_monomials();
  std::vector<std::uint64_t> dims;
  std::vector<std::vector<unsigned>> betas;
  for (unsigned n = 0; n <= n_hi; ++n) {
    betas.clear();
    std::vector<unsigned> cur(ny, 0);
    if (ny == 0) {
      if (n == 0) betas.push_back({});
    } else {
      multi_indices(ny, n, cur, 0, betas);
    }
    std::uint64_t total = 0;
    for (const auto& b : betas) {
      std::vector<Monomial> xs;
      for (const auto& m : lms) {
        bool fits = true;
        for (std::size_t i = 0; i < ny && fits; ++i) fits = m[nx + i] <= b[i];
        if (!fits) continue;
        Monomial xm(nx);
        for (std::size_t v = 0; v < nx; ++v) xm.set(v, m[v]);
        xs.push_back(xm);
      }
      auto c = count_standard_monomials(xs, nx);
      if (!c) throw InfiniteDimension("graded piece of degree " + std::to_string(n) + " is infinite-dimensional");
      total += *c;
    }
    dims.push_back(total);
  }
  return dims;
}

template <class F>
std::optional<unsigned> y_degree_gap(const Ideal<F>& upper, const Ideal<F>& lower, std::size_t nx) {
  auto up = upper.groebner().leading_monomials();
  auto low = lower.groebner().leading_monomials();
  auto between = monomials_between(up, low, upper.ring()->nvars());
  if (!between) return std::nullopt;
  unsigned top = 0;
  for (const auto& m : *between) {
    unsigned d = m.partial_degree(nx, m.size());
    top = std::max(top, d + 1);
  }
  return top;
}

#define SUPERLAB_INSTANTIATE(F)                                                                         \
  template class AdicContext<F>;                                                                        \
  template AdicOrder ord<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned);                     \
  template Ideal<F> gamma<F>(const AdicContext<F>&);                                                    \
  template std::vector<std::pair<std::vector<unsigned>, Polynomial<F>>> standard_power_generators<F>(   \
      const AdicContext<F>&, unsigned);                                                                 \
  template ElementData<F> rees_lift<F>(const Polynomial<F>&, const AdicContext<F>&, unsigned);          \
  template std::vector<std::uint64_t> y_graded_dims<F>(const Ideal<F>&, std::size_t, unsigned);         \
  template std::optional<unsigned> y_degree_gap<F>(const Ideal<F>&, const Ideal<F>&, std::size_t);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
