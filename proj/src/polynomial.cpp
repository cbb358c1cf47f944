#include "superlab/polynomial.hpp"

#include <algorithm>

#include "superlab/errors.hpp"

namespace superlab {

template <class F>
Ring<F>::Ring(F field, std::vector<std::string> names, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVars)
    throw ResourceError("ring has " + std::to_string(names_.size()) + " variables; at most " +
                        std::to_string(kMaxVars) + " are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
  if (order_.kind() == MonomialOrder::Kind::WeightedGrevlex && order_.weights().size() != names_.size())
    throw ContextMismatch("weight vector length differs from variable count");
}

template <class F>
std::optional<std::size_t> Ring<F>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

template <class F>
bool Ring<F>::same_as(const Ring& other) const {
  return this == &other || (field_.characteristic() == other.field_.characteristic() &&
                            names_ == other.names_ && order_ == other.order_);
}

template <class F>
void require_same_ring(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
    throw ContextMismatch("polynomials belong to different rings");
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, Element c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return term(ring, m, ring->field().one());
}

template <class F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, Monomial m, Element c) {
  if (m.size() != ring->nvars()) throw ContextMismatch("monomial size differs from ring");
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
  const auto& order = ring->order();
  const F& k = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const TermT& a, const TermT& b) { return order.compare(a.mono, b.mono) == Cmp::GT; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw ContextMismatch("monomial size differs from ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class F>
int Polynomial<F>::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

template <class F>
typename F::Element Polynomial<F>::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return field().zero();
}

template <class F>
Polynomial<F> Polynomial<F>::add_scaled(const Polynomial& other, const Element& c, const Monomial& m) const {
  require_same_ring(*this, other);
  const F& k = field();
  const auto& order = ring_->order();
  Polynomial r(ring_);
  if (k.is_zero(c)) {
    r.terms_ = terms_;
    return r;
  }
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae || b != be) {
    if (b == be) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    Cmp cmp = a == ae ? Cmp::LT : order.compare(a->mono, bm);
    if (cmp == Cmp::GT) {
      r.terms_.push_back(*a++);
    } else if (cmp == Cmp::LT) {
      r.terms_.push_back({bm, k.mul(c, b->coeff)});
      ++b;
    } else {
      Element s = k.add(a->coeff, k.mul(c, b->coeff));
      if (!k.is_zero(s)) r.terms_.push_back({std::move(bm), std::move(s)});
      ++a;
      ++b;
    }
  }
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& o) const {
  return add_scaled(o, field().one(), Monomial(ring_->nvars()));
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& o) const {
  return add_scaled(o, field().neg(field().one()), Monomial(ring_->nvars()));
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  return scale(field().neg(field().one()));
}

template <class F>
Polynomial<F> Polynomial<F>::scale(const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::mul_term(const Monomial& m, const Element& c) const {
  // Multiplication by a monomial preserves the order, so no re-sort.
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<TermT> prods;
  prods.reserve(size() * o.size());
  const F& k = field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prods));
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned n) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || field().is_one(leading_coeff())) return *this;
  return scale(field().inv(leading_coeff()));
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& o) const {
  require_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || !field().equal(terms_[i].coeff, o.terms_[i].coeff))
      return false;
  }
  return true;
}

template <class F>
Polynomial<F> Polynomial<F>::rebase(const RingPtr<F>& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->nvars()) throw ContextMismatch("index map size differs from ring");
  if (target->field().characteristic() != field().characteristic())
    throw ContextMismatch("rings have different coefficient fields");
  std::vector<TermT> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] >= target->nvars()) throw ContextMismatch("variable has no image in target ring");
      m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::reorder(const RingPtr<F>& target) const {
  if (target->names() != ring_->names()) throw ContextMismatch("reorder needs identical variables");
  if (target->order() == ring_->order()) {
    Polynomial r(target);
    r.terms_ = terms_;
    return r;
  }
  return from_terms(target, terms_);
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(const RingPtr<F>& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw ContextMismatch("need one image per variable");
  for (const auto& img : images)
    if (!img.ring()->same_as(*target)) throw ContextMismatch("substitution images live in another ring");
  // Powers of each image, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, target->field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<TermT> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
  }
  return from_terms(target, std::move(acc));
}

template <class F>
std::optional<unsigned> Polynomial<F>::homogeneous_degree(std::size_t begin, std::size_t end) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = terms_[0].mono.partial_degree(begin, end);
  for (const auto& t : terms_)
    if (t.mono.partial_degree(begin, end) != d) return std::nullopt;
  return d;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& k = field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = k.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.mono.to_string(ring_->names());
    }
  }
  return out;
}

template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const F& k = a.field();
  const auto inv_lc = k.inv(b.leading_coeff());
  Polynomial<F> rem = a;
  std::vector<Term<F>> quot;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!b.leading_monomial().divides(lm))
      throw InvariantViolation("exact division left a nonzero remainder");
    Monomial q = lm / b.leading_monomial();
    auto c = k.mul(rem.leading_coeff(), inv_lc);
    quot.push_back({q, c});
    rem = rem.add_scaled(b, k.neg(c), q);
  }
  return Polynomial<F>::from_terms(a.ring(), std::move(quot));
}

#define SUPERLAB_INSTANTIATE(F)                                                   \
  template class Ring<F>;                                                         \
  template class Polynomial<F>;                                                   \
  template void require_same_ring<F>(const Polynomial<F>&, const Polynomial<F>&); \
  template Polynomial<F> exact_divide<F>(const Polynomial<F>&, const Polynomial<F>&);

SUPERLAB_INSTANTIATE(RationalField)
SUPERLAB_INSTANTIATE(PrimeField)

}  // namespace superlab
