#include "superlab/groebner.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "superlab/errors.hpp"

namespace superlab {

namespace {

template <class F>
struct Tracked {
  Polynomial<F> p;
  std::vector<Polynomial<F>> cof;  // empty unless tracking
};

template <class F>
std::size_t fingerprint_of(std::span<const Polynomial<F>> gens, const Ring<F>& ring) {
  std::size_t h = std::hash<std::string>{}(ring.order().key());
  for (const auto& g : gens) h = h * 1000003u ^ std::hash<std::string>{}(g.to_string());
  return h;
}

// Reduces t in place by the elements of `basis` listed in `active`. With
// `tail` false only the leading term is driven irreducible.
template <class F>
void reduce_tracked(Tracked<F>& t, const std::vector<Tracked<F>>& basis,
                    const std::vector<std::size_t>& active, bool tail) {
  const F& k = t.p.field();
  std::size_t i = 0;
  while (i < t.p.size()) {
    const Monomial mono = t.p.terms()[i].mono;
    const std::size_t* hit = nullptr;
    for (const std::size_t& a : active) {
      if (basis[a].p.leading_monomial().divides(mono)) {
        hit = &a;
        break;
      }
    }
    if (!hit) {
      if (!tail) return;
      ++i;
      continue;
    }
    const Tracked<F>& g = basis[*hit];
    auto c = k.neg(k.div(t.p.terms()[i].coeff, g.p.leading_coeff()));
    Monomial m = mono / g.p.leading_monomial();
    t.p = t.p.add_scaled(g.p, c, m);
    for (std::size_t j = 0; j < t.cof.size(); ++j) t.cof[j] = t.cof[j].add_scaled(g.cof[j], c, m);
  }
}

template <class F>
void make_monic(Tracked<F>& t) {
  const F& k = t.p.field();
  if (t.p.is_zero() || k.is_one(t.p.leading_coeff())) return;
  auto inv = k.inv(t.p.leading_coeff());
  t.p = t.p.scale(inv);
  for (auto& c : t.cof) c = c.scale(inv);
}

template <class F>
class BuchbergerRun {
public:
  BuchbergerRun(const RingPtr<F>& ring, const GroebnerOptions& opts, bool track)
      : ring_(ring), opts_(opts), track_(track) {}

  void run(std::span<const Polynomial<F>> gens) {
    const std::size_t n = gens.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto& g = gens[idx];
      if (!g.ring()->same_as(*ring_)) throw ContextMismatch("generator lives in another ring");
      if (g.is_zero()) continue;
      if (static_cast<unsigned>(g.total_degree()) > opts_.max_degree)
        throw ResourceError("generator degree exceeds the Gröbner degree guard");
      Tracked<F> t{g, {}};
      if (track_) {
        t.cof.assign(n, Polynomial<F>(ring_));
        t.cof[idx] = Polynomial<F>::constant(ring_, ring_->field().one());
      }
      reduce_tracked(t, basis_, active_list(), true);
      if (t.p.is_zero()) continue;
      make_monic(t);
      add(std::move(t));
    }
    while (!pairs_.empty()) {
      std::size_t best = select_pair();
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (pr.lcm.degree() > opts_.max_degree)
        throw ResourceError("S-pair degree " + std::to_string(pr.lcm.degree()) +
                            " exceeds the Gröbner degree guard " + std::to_string(opts_.max_degree));
      Tracked<F> s = spoly(pr);
      reduce_tracked(s, basis_, active_list(), true);
      if (s.p.is_zero()) continue;
      make_monic(s);
      add(std::move(s));
    }
  }

  /// Reduced basis in ascending leading-monomial order.
  std::vector<Tracked<F>> reduced() const {
    std::vector<std::size_t> act = active_list();
    // Active leading monomials are pairwise non-dividing by construction,
    // so only tails need reducing.
    std::vector<Tracked<F>> out;
    for (std::size_t a : act) {
      std::vector<std::size_t> others;
      for (std::size_t b : act)
        if (b != a) others.push_back(b);
      Tracked<F> t = basis_[a];
      reduce_tracked(t, basis_, others, true);
      make_monic(t);
      out.push_back(std::move(t));
    }
    const auto& order = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Tracked<F>& x, const Tracked<F>& y) {
      return order.compare(x.p.leading_monomial(), y.p.leading_monomial()) == Cmp::LT;
    });
    if (!out.empty() && out.front().p.is_unit()) out.resize(1);
    return out;
  }

private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<std::size_t> active_list() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(i);
    return out;
  }

  std::size_t select_pair() const {
    const auto& order = ring_->order();
    std::size_t best = 0;
    for (std::size_t q = 1; q < pairs_.size(); ++q) {
      const Pair& a = pairs_[q];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = q;
        continue;
      }
      Cmp c = order.compare(a.lcm, b.lcm);
      if (c == Cmp::LT || (c == Cmp::EQ && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = q;
    }
    return best;
  }

  Tracked<F> spoly(const Pair& pr) const {
    const Tracked<F>& f = basis_[pr.i];
    const Tracked<F>& g = basis_[pr.j];
    const F& k = ring_->field();
    Monomial mf = pr.lcm / f.p.leading_monomial();
    Monomial mg = pr.lcm / g.p.leading_monomial();
    // Both are monic.
    Tracked<F> s;
    s.p = f.p.mul_term(mf, k.one()).add_scaled(g.p, k.neg(k.one()), mg);
    for (std::size_t j = 0; j < f.cof.size(); ++j)
      s.cof.push_back(f.cof[j].mul_term(mf, k.one()).add_scaled(g.cof[j], k.neg(k.one()), mg));
    return s;
  }

  // Gebauer–Möller update for the new element h.
  void add(Tracked<F> t) {
    const std::size_t h = basis_.size();
    basis_.push_back(std::move(t));
    active_.push_back(false);
    const Monomial& lh = basis_[h].p.leading_monomial();

    std::vector<Pair> cand;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) cand.push_back({g, h, lh.lcm(basis_[g].p.leading_monomial())});

    std::vector<Pair> kept;
    for (std::size_t q = 0; q < cand.size(); ++q) {
      const Pair& p = cand[q];
      bool keep = lh.coprime(basis_[p.i].p.leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t r = q + 1; r < cand.size() && keep; ++r)
          if (cand[r].lcm.divides(p.lcm)) keep = false;
        for (std::size_t r = 0; r < kept.size() && keep; ++r)
          if (kept[r].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lh.lcm(basis_[p.i].p.leading_monomial()) == p.lcm) &&
                  !(lh.lcm(basis_[p.j].p.leading_monomial()) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!lh.coprime(basis_[p.i].p.leading_monomial())) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lh.divides(basis_[g].p.leading_monomial())) active_[g] = false;
    active_[h] = true;
  }

  RingPtr<F> ring_;
  GroebnerOptions opts_;
  bool track_;
  std::vector<Tracked<F>> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

template <class F>
std::vector<Monomial> GroebnerBasis<F>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
  if (!f.ring()->same_as(*ring_)) throw ContextMismatch("normal form: polynomial and basis live in different rings");
  return reduce_fully<F>(f, gens_);
}

template <class F>
Polynomial<F> reduce_fully(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  std::vector<Tracked<F>> basis;
  std::vector<std::size_t> active;
  for (const auto& d : divisors) {
    require_same_ring(f, d);
    if (d.is_zero()) continue;
    active.push_back(basis.size());
    basis.push_back({d, {}});
  }
  Tracked<F> t{f, {}};
  reduce_tracked(t, basis, active, true);
  return t.p;
}

template <class F>
Division<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  // Quotients are tracked as cofactors of a single-slot representation.
  const auto& ring = f.ring();
  std::vector<Tracked<F>> basis;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    require_same_ring(f, divisors[i]);
    Tracked<F> t{divisors[i], std::vector<Polynomial<F>>(divisors.size(), Polynomial<F>(ring))};
    t.cof[i] = Polynomial<F>::constant(ring, ring->field().one());
    if (!divisors[i].is_zero()) active.push_back(i);
    basis.push_back(std::move(t));
  }
  // Track -q: reduction subtracts multiples, so negate at the end.
  Tracked<F> t{f, std::vector<Polynomial<F>>(divisors.size(), Polynomial<F>(ring))};
  reduce_tracked(t, basis, active, true);
  Division<F> d;
  d.remainder = t.p;
  for (auto& q : t.cof) d.quotients.push_back(-q);
  return d;
}

template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                            const GroebnerOptions& opts) {
  BuchbergerRun<F> run(ring, opts, false);
  run.run(gens);
  std::vector<Polynomial<F>> out;
  for (auto& t : run.reduced()) out.push_back(std::move(t.p));
  return GroebnerBasis<F>(ring, std::move(out), fingerprint_of<F>(gens, *ring));
}

template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                            const MonomialOrder& order, const GroebnerOptions& opts) {
  RingPtr<F> target = ring->order() == order ? ring : with_order(ring, order);
  std::vector<Polynomial<F>> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.reorder(target));
  return buchberger<F>(moved, target, opts);
}

template <class F>
std::optional<std::vector<Polynomial<F>>> lift_membership(const Polynomial<F>& f,
                                                           std::span<const Polynomial<F>> gens,
                                                           const RingPtr<F>& ring,
                                                           const GroebnerOptions& opts) {
  std::vector<Polynomial<F>> zero(gens.size(), Polynomial<F>(ring));
  if (f.is_zero()) return zero;
  BuchbergerRun<F> run(ring, opts, true);
  run.run(gens);
  auto gb = run.reduced();
  std::vector<Polynomial<F>> gb_polys;
  for (const auto& t : gb) gb_polys.push_back(t.p);
  Division<F> d = divide<F>(f, gb_polys);
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial<F>> q = zero;
  for (std::size_t k = 0; k < gb.size(); ++k)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (!d.quotients[k].is_zero() && !gb[k].cof[j].is_zero()) q[j] += d.quotients[k] * gb[k].cof[j];
  Polynomial<F> check(ring);
  for (std::size_t j = 0; j < gens.size(); ++j) check += q[j] * gens[j];
  if (!(check == f)) throw InvariantViolation("lift recombination failed");
  return q;
}

template <class F>
Elimination<F> eliminate(std::span<const Polynomial<F>> gens, const RingPtr<F>& ring,
                         std::span<const std::size_t> kill, const GroebnerOptions& opts) {
  const std::size_t n = ring->nvars();
  std::vector<bool> killed(n, false);
  for (std::size_t v : kill) {
    if (v >= n) throw ContextMismatch("elimination variable out of range");
    killed[v] = true;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> to_elim(n), kept;
  for (std::size_t v = 0; v < n; ++v)
    if (killed[v]) {
      to_elim[v] = names.size();
      names.push_back(ring->names()[v]);
    }
  const std::size_t block = names.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!killed[v]) {
      to_elim[v] = names.size();
      names.push_back(ring->names()[v]);
      kept.push_back(v);
    }
  auto elim_ring = make_ring(ring->field(), names, MonomialOrder::block_elimination(block));
  std::vector<Polynomial<F>> moved;
  for (const auto& g : gens) moved.push_back(g.rebase(elim_ring, to_elim));
  auto gb = buchberger<F>(moved, elim_ring, opts);

  std::vector<std::string> rest_names;
  for (std::size_t v : kept) rest_names.push_back(ring->names()[v]);
  Elimination<F> out{make_ring(ring->field(), rest_names), {}, kept};
  std::vector<std::size_t> back(n, n);  // elim-ring index -> rest index
  for (std::size_t r = 0; r < kept.size(); ++r) back[block + r] = r;
  for (const auto& g : gb.generators()) {
    if (g.leading_monomial().partial_degree(0, block) != 0) continue;
    // The block order puts killed variables first, so a killed-free leading
    // monomial means the whole polynomial is killed-free.
    out.generators.push_back(g.rebase(out.ring, back));
  }
  return out;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_same_ring(f, g);
  const F& k = f.field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  auto a = f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coeff()));
  return a.add_scaled(g, k.neg(k.inv(g.leading_coeff())), l / g.leading_monomial());
}

template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const auto& gens = gb.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gb.normal_form(s_polynomial(gens[i], gens[j])).is_zero()) return false;
  return true;
}

#define SUPERLAB_INSTANTIATE(F)                                                                          \
  template class GroebnerBasis<F>;                                                                       \
  template Polynomial<F> reduce_fully<F>(const Polynomial<F>&, std::span<const Polynomial<F>>);          \
  template Division<F> divide<F>(const Polynomial<F>&, std::span<const Polynomial<F>>);                  \
  template GroebnerBasis<F> buchberger<F>(std::span<const Polynomial<F>>, const RingPtr<F>&,             \
                                          const GroebnerOptions&);                                       \
  template GroebnerBasis<F> buchberger<F>(std::span<const Polynomial<F>>, const RingPtr<F>&,             \
                                          const MonomialOrder&, const GroebnerOptions&);                 \
  template std::optional<std::vector<Polynomial<F>>> lift_membership<F>(                                 \
      const Polynomial<F>&, std::span<const Polynomial<F>>, const RingPtr<F>&, const GroebnerOptions&);  \
  template Elimination<F> eliminate<F>(std::span<const Polynomial<F>>, const RingPtr<F>&,                \
                                       std::span<const std::size_t>, const GroebnerOptions&);            \
  template Polynomial<F> s_polynomial<F>(const Polynomial<F>&, const Polynomial<F>&);                    \
  template bool satisfies_buchberger_criterion<F>(const GroebnerBasis<F>&);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
