#pragma once

// Fixtures and seeded random instances shared by the checker, oracle,
// Hilbert and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "superlab/adic.hpp"
#include "superlab/parser.hpp"
#include "support/random_poly.hpp"

namespace superlab::testing {

template <class F>
struct Instance {
  std::string label;
  AdicContext<F> ctx;
  Polynomial<F> f;
};

template <class F>
Instance<F> fixture(const F& k, std::string label, std::initializer_list<const char*> I,
                    std::initializer_list<const char*> J, const char* f) {
  auto R = make_ring(k, {"x", "y"});
  std::vector<Polynomial<F>> h, j;
  for (const char* t : I) h.push_back(parse_poly(t, R));
  for (const char* t : J) j.push_back(parse_poly(t, R));
  return {std::move(label), AdicContext<F>(std::move(h), Ideal<F>(R, std::move(j))), parse_poly(f, R)};
}

/// E1..E5 plus the second element on the node.
template <class F>
std::vector<Instance<F>> fixtures(const F& k) {
  return {
      fixture(k, "E1", {"x", "y"}, {}, "x"),
      fixture(k, "E2 f=x", {"x", "y"}, {"x*y"}, "x"),
      fixture(k, "E2 f=x+y", {"x", "y"}, {"x*y"}, "x + y"),
      fixture(k, "E3", {"x", "y"}, {"x^2", "x*y"}, "y"),
      fixture(k, "E4", {"x", "y"}, {}, "x^2 + y^3"),
      fixture(k, "E5", {"x", "y"}, {"x^2", "x*y"}, "x"),
  };
}

/// Homogeneous instance in 2 or 3 variables: I with 2-3 generators of
/// degree 1-2, J with at most 2 generators of degree 2-3, I + J of finite
/// colength. The element f is, by `kind` (0..2): a random combination of the
/// h_i; one h_i times a constant or linear form; a factor of a generator of J.
template <class F>
Instance<F> random_instance(std::mt19937_64& rng, const F& k, int kind, const std::string& label) {
  std::uniform_int_distribution<int> two_three(2, 3), one_two(1, 2), zero_two(0, 2);
  for (;;) {
    const std::size_t n = two_three(rng);
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto R = make_ring(k, names);
    std::vector<Polynomial<F>> h;
    const int ni = two_three(rng);
    for (int i = 0; i < ni; ++i) h.push_back(random_homogeneous(rng, R, one_two(rng), 3));
    std::vector<Polynomial<F>> jg;
    Polynomial<F> f(R);

    auto combination = [&](unsigned deg) {
      Polynomial<F> c(R);
      while (c.is_zero())
        for (const auto& g : h)
          if (g.total_degree() == int(deg)) c += g.scale(random_coeff(rng, k, 5));
      return c;
    };
    unsigned low = 2;
    for (const auto& g : h) low = std::min<unsigned>(low, g.total_degree());

    const int nj = kind == 2 ? 1 + zero_two(rng) % 2 : zero_two(rng);
    if (kind == 2) {
      f = combination(low);
      jg.push_back(f * random_homogeneous(rng, R, low == 1 ? one_two(rng) : 1, 3));
    }
    while (int(jg.size()) < nj) jg.push_back(random_homogeneous(rng, R, 1 + one_two(rng), 3));
    if (kind == 0) {
      f = combination(low);
    } else if (kind == 1) {
      std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
      f = h[pick(rng)];
      if (zero_two(rng) == 0)
        f = f.scale(random_coeff(rng, k, 5));
      else
        f = f * random_homogeneous(rng, R, 1, 2);
    }

    Ideal<F> J(R, jg);
    if (J.is_unit() || J.contains(f)) continue;
    auto both = jg;
    both.insert(both.end(), h.begin(), h.end());
    if (!colength(Ideal<F>(R, both))) continue;
    return {label, AdicContext<F>(std::move(h), std::move(J)), f};
  }
}

}  // namespace superlab::testing
