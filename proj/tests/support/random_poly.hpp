#pragma once

// Seeded generators for property tests.

#include <random>
#include <vector>

#include "superlab/polynomial.hpp"

namespace superlab::testing {

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Monomial m(nvars);
  unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) {
    std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

template <class F>
typename F::Element random_coeff(std::mt19937_64& rng, const F& k, long bound = 9) {
  std::uniform_int_distribution<long> c(-bound, bound);
  typename F::Element e;
  do {
    e = k.from_int(c(rng));
  } while (k.is_zero(e));
  return e;
}

template <class F>
Polynomial<F> random_poly(std::mt19937_64& rng, const RingPtr<F>& ring, unsigned max_terms, unsigned max_deg,
                          bool allow_constant = true) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::vector<Term<F>> terms;
  unsigned n = nterms(rng);
  for (unsigned i = 0; i < n; ++i) {
    Monomial m = random_monomial(rng, ring->nvars(), max_deg);
    if (!allow_constant && m.is_one()) continue;
    terms.push_back({m, random_coeff(rng, ring->field())});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

/// Homogeneous polynomial of total degree d with up to max_terms terms.
template <class F>
Polynomial<F> random_homogeneous(std::mt19937_64& rng, const RingPtr<F>& ring, unsigned d, unsigned max_terms,
                                 long coeff_bound = 9) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  Polynomial<F> p(ring);
  while (p.is_zero()) {
    std::vector<Term<F>> terms;
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
      Monomial m(ring->nvars());
      for (unsigned k = 0; k < d; ++k) {
        std::size_t v = var(rng);
        m.set(v, m[v] + 1);
      }
      terms.push_back({m, random_coeff(rng, ring->field(), coeff_bound)});
    }
    p = Polynomial<F>::from_terms(ring, std::move(terms));
  }
  return p;
}

}  // namespace superlab::testing
