#include "superlab/ideal.hpp"

#include <deque>
#include <unordered_set>

#include "superlab/errors.hpp"

namespace superlab {

namespace {

constexpr unsigned kMaxSaturationSteps = 64;

template <class F>
Ideal<F> from_basis(const GroebnerBasis<F>& gb, const RingPtr<F>& ring, const GroebnerOptions& opts) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : gb.generators()) gens.push_back(g.reorder(ring));
  return Ideal<F>(ring, std::move(gens), opts);
}

template <class F>
void require_same(const Ideal<F>& I, const Ideal<F>& J) {
  if (!I.ring()->same_as(*J.ring())) throw ContextMismatch("ideals live in different rings");
}

// Monomial ideal (lower : m) has finite colength.
bool colon_is_artinian(const Monomial& m, std::span<const Monomial> lower, std::size_t nvars) {
  std::vector<bool> has_power(nvars, false);
  for (const auto& b : lower) {
    Monomial q = b.lcm(m) / m;
    if (q.is_one()) return true;
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (q[v] != 0) {
        ++support;
        var = v;
      }
    if (support == 1) has_power[var] = true;
  }
  for (bool b : has_power)
    if (!b) return false;
  return true;
}

}  // namespace

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, GroebnerOptions opts)
    : ring_(std::move(ring)), opts_(opts), memo_(std::make_shared<Memo>()) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) throw ContextMismatch("generator lives in another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <class F>
Ideal<F> Ideal<F>::unit(RingPtr<F> ring, GroebnerOptions opts) {
  auto one = Polynomial<F>::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {one}, opts);
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner() const {
  return groebner(ring_->order());
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner(const MonomialOrder& order) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->bases.find(key);
    if (it != memo_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger<F>(gens_, ring_, order, opts_));
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto [it, inserted] = memo_->bases.emplace(key, std::move(gb));
  return *it->second;
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const {
  return groebner().normal_form(f).is_zero();
}

template <class F>
std::string Ideal<F>::to_string() const {
  std::string s = "(";
  const auto& g = groebner().generators();
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].to_string();
  return s + ")";
}

template <class F>
Ideal<F> interreduced(const Ideal<F>& I) {
  return from_basis(I.groebner(), I.ring(), I.options());
}

template <class F>
Ideal<F> sum(const Ideal<F>& I, const Ideal<F>& J) {
  require_same(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return interreduced(Ideal<F>(I.ring(), std::move(gens), I.options()));
}

template <class F>
Ideal<F> product(const Ideal<F>& I, const Ideal<F>& J) {
  require_same(I, J);
  std::vector<Polynomial<F>> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return interreduced(Ideal<F>(I.ring(), std::move(gens), I.options()));
}

template <class F>
Ideal<F> power(const Ideal<F>& I, unsigned n) {
  Ideal<F> acc = Ideal<F>::unit(I.ring(), I.options());
  for (unsigned k = 0; k < n; ++k) acc = product(acc, interreduced(I));
  return acc;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
  require_same(I, J);
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal<F>::zero(ring, I.options());
  if (I.is_unit()) return interreduced(J);
  if (J.is_unit()) return interreduced(I);

  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  auto ext = make_ring(ring->field(), names);
  std::vector<std::size_t> shift(ring->nvars());
  for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = v + 1;
  auto t = Polynomial<F>::variable(ext, 0);
  auto one_minus_t = Polynomial<F>::constant(ext, ext->field().one()) - t;

  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.groebner().generators()) gens.push_back(t * g.rebase(ext, shift));
  for (const auto& g : J.groebner().generators()) gens.push_back(one_minus_t * g.rebase(ext, shift));
  const std::size_t kill[] = {0};
  auto elim = eliminate<F>(gens, ext, kill, I.options());
  std::vector<Polynomial<F>> out;
  for (const auto& g : elim.generators) out.push_back(g.reorder(ring));
  return interreduced(Ideal<F>(ring, std::move(out), I.options()));
}

template <class F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& f) {
  if (!f.ring()->same_as(*I.ring())) throw ContextMismatch("colon: element lives in another ring");
  if (f.is_zero()) throw InputError("colon by the zero element");
  if (f.is_unit() || I.is_unit() || I.is_zero()) return interreduced(I);
  Ideal<F> meet = intersect(I, Ideal<F>(I.ring(), {f}, I.options()));
  std::vector<Polynomial<F>> quot;
  for (const auto& g : meet.generators()) quot.push_back(exact_divide(g, f));
  return interreduced(Ideal<F>(I.ring(), std::move(quot), I.options()));
}

template <class F>
Ideal<F> colon_ideal(const Ideal<F>& I, const Ideal<F>& J) {
  require_same(I, J);
  const auto& js = J.groebner().generators();
  if (js.empty()) return Ideal<F>::unit(I.ring(), I.options());
  std::optional<Ideal<F>> acc;
  for (const auto& g : js) {
    Ideal<F> c = colon(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

template <class F>
Saturation<F> saturate(const Ideal<F>& I, const Polynomial<F>& f) {
  Ideal<F> cur = interreduced(I);
  for (unsigned k = 1; k <= kMaxSaturationSteps; ++k) {
    Ideal<F> next = colon(cur, f);
    if (equal(next, cur)) return {cur, k};
    cur = std::move(next);
  }
  throw ResourceError("saturation did not stabilize within the step guard");
}

template <class F>
Saturation<F> saturate_ideal(const Ideal<F>& I, const Ideal<F>& J) {
  Ideal<F> cur = interreduced(I);
  for (unsigned k = 1; k <= kMaxSaturationSteps; ++k) {
    Ideal<F> next = colon_ideal(cur, J);
    if (equal(next, cur)) return {cur, k};
    cur = std::move(next);
  }
  throw ResourceError("saturation did not stabilize within the step guard");
}

template <class F>
bool is_subset(const Ideal<F>& I, const Ideal<F>& J) {
  require_same(I, J);
  for (const auto& g : I.generators())
    if (!J.contains(g)) return false;
  return true;
}

template <class F>
bool equal(const Ideal<F>& I, const Ideal<F>& J) {
  return is_subset(I, J) && is_subset(J, I);
}

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars,
                                                      std::uint64_t cap) {
  if (in_monomial_ideal(Monomial(nvars), gens)) return 0;
  std::vector<bool> has_power(nvars, false);
  for (const auto& g : gens) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] != 0) {
        ++support;
        var = v;
      }
    if (support == 1) has_power[var] = true;
  }
  for (bool b : has_power)
    if (!b) return std::nullopt;
  // Standard monomials form an order ideal: walk it from 1, stepping to
  // m*x_v only from the representation with v >= last raised variable so
  // every monomial is visited once.
  std::uint64_t count = 0;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(nvars), 0}};
  while (!stack.empty()) {
    auto [m, from] = stack.back();
    stack.pop_back();
    if (++count > cap) throw ResourceError("standard-monomial enumeration exceeded its cap");
    for (std::size_t v = from; v < nvars; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (!in_monomial_ideal(next, gens)) stack.push_back({next, v});
    }
  }
  return count;
}

std::optional<std::vector<Monomial>> monomials_between(std::span<const Monomial> upper,
                                                       std::span<const Monomial> lower, std::size_t nvars,
                                                       std::uint64_t cap) {
  for (const auto& m : upper)
    if (!colon_is_artinian(m, lower, nvars)) return std::nullopt;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  for (const auto& m : upper)
    if (!in_monomial_ideal(m, lower) && seen.insert(m).second) queue.push_back(m);
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    if (seen.size() > cap) throw ResourceError("monomial enumeration exceeded its cap");
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (!in_monomial_ideal(next, lower) && seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Monomial>(seen.begin(), seen.end());
}

template <class F>
std::optional<std::uint64_t> colength(const Ideal<F>& I) {
  auto lms = I.groebner().leading_monomials();
  return count_standard_monomials(lms, I.ring()->nvars());
}

template <class F>
std::uint64_t relative_colength(const Ideal<F>& A, const Ideal<F>& B) {
  require_same(A, B);
  auto upper = A.groebner().leading_monomials();
  auto lower = B.groebner().leading_monomials();
  auto between = monomials_between(upper, lower, A.ring()->nvars());
  if (!between) throw InfiniteDimension("quotient of ideals is infinite-dimensional");
  return between->size();
}

template <class F>
NzdResult<F> is_nzd(const Polynomial<F>& f, const Ideal<F>& A) {
  if (f.is_zero()) throw InputError("nonzerodivisor test on the zero element");
  if (A.is_unit()) return {true, std::nullopt};
  Ideal<F> c = colon(A, f);
  // The colon basis is sorted by ascending leading monomial.
  for (const auto& g : c.groebner().generators())
    if (!A.contains(g)) return {false, g};
  return {true, std::nullopt};
}

#define SUPERLAB_INSTANTIATE(F)                                                         \
  template class Ideal<F>;                                                              \
  template Ideal<F> interreduced<F>(const Ideal<F>&);                                   \
  template Ideal<F> sum<F>(const Ideal<F>&, const Ideal<F>&);                           \
  template Ideal<F> product<F>(const Ideal<F>&, const Ideal<F>&);                       \
  template Ideal<F> power<F>(const Ideal<F>&, unsigned);                                \
  template Ideal<F> intersect<F>(const Ideal<F>&, const Ideal<F>&);                     \
  template Ideal<F> colon<F>(const Ideal<F>&, const Polynomial<F>&);                    \
  template Ideal<F> colon_ideal<F>(const Ideal<F>&, const Ideal<F>&);                   \
  template Saturation<F> saturate<F>(const Ideal<F>&, const Polynomial<F>&);            \
  template Saturation<F> saturate_ideal<F>(const Ideal<F>&, const Ideal<F>&);           \
  template bool is_subset<F>(const Ideal<F>&, const Ideal<F>&);                         \
  template bool equal<F>(const Ideal<F>&, const Ideal<F>&);                             \
  template std::optional<std::uint64_t> colength<F>(const Ideal<F>&);                   \
  template std::uint64_t relative_colength<F>(const Ideal<F>&, const Ideal<F>&);        \
  template NzdResult<F> is_nzd<F>(const Polynomial<F>&, const Ideal<F>&);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
