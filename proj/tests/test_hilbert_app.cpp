#include "doctest.h"

#include <random>

#include "superlab/hilbert.hpp"
#include "superlab/oracle.hpp"
#include "superlab/superficial.hpp"
#include "support/instances.hpp"

using namespace superlab;
using namespace superlab::testing;

namespace {

using QQ = RationalField;
using Dims = std::vector<std::uint64_t>;

Instance<QQ> named(const std::string& label) {
  for (auto& in : fixtures(QQ{}))
    if (in.label == label) return in;
  throw std::runtime_error("no fixture " + label);
}

Dims head(const HilbertWindow& w, std::size_t n) { return Dims(w.values.begin(), w.values.begin() + n); }

void check_sentinel(const PolyFit& fit) {
  CHECK_FALSE(fit.degree);
  CHECK(fit.multiplicity == 0);
}

}  // namespace

TEST_CASE("hilbert_function examples") {
  CHECK(head(hilbert_function(named("E1").ctx, 5), 6) == Dims{1, 2, 3, 4, 5, 6});
  CHECK(head(hilbert_function(named("E2 f=x").ctx, 5), 6) == Dims{1, 2, 2, 2, 2, 2});
  CHECK(head(hilbert_function(named("E3").ctx, 5), 6) == Dims{1, 2, 1, 1, 1, 1});
  CHECK(hilbert_function(named("E1").ctx, 12).values.size() == 13);

  auto line = fixture(QQ{}, "line", {"x"}, {}, "x");
  CHECK_THROWS_AS(hilbert_function(line.ctx, 2), InfiniteDimension);

  // Same (I, J), same fingerprint; different J, different fingerprint.
  CHECK(hilbert_function(named("E2 f=x").ctx, 1).fingerprint == hilbert_function(named("E2 f=x+y").ctx, 1).fingerprint);
  CHECK(hilbert_function(named("E2 f=x").ctx, 1).fingerprint != hilbert_function(named("E3").ctx, 1).fingerprint);
}

TEST_CASE("check_recurrence examples") {
  auto node = named("E2 f=x+y");
  auto r = check_recurrence(node.f, node.ctx, 12);
  CHECK(r.holds());
  CHECK(r.start == 0u);
  CHECK(head(r.quotient, 4) == Dims{1, 1, 0, 0});

  auto plane = named("E1");
  auto p = check_recurrence(plane.f, plane.ctx, 12);
  CHECK(p.holds());
  CHECK(p.start == 0u);
  CHECK(p.quotient.values == Dims(13, 1));

  auto cusp = named("E4");
  auto c = check_recurrence(cusp.f, cusp.ctx, 12);
  CHECK(c.s == 2);
  CHECK(c.holds());
  CHECK(c.start == 0u);
  CHECK(c.violating.empty());
  CHECK(head(c.quotient, 5) == Dims{1, 2, 2, 2, 2});

  auto bad = named("E2 f=x");
  auto b = check_recurrence(bad.f, bad.ctx, 8);
  CHECK_FALSE(b.applicable);
  CHECK_FALSE(b.holds());
  // H_{M/xM} = (1,1,1,...) against (1,2,2,...) - (0,1,2,2,...): off by one from degree 2.
  CHECK(b.violating == std::vector<unsigned>{2, 3, 4, 5, 6, 7, 8});

  auto e3 = named("E3");
  auto t = check_recurrence(e3.f, e3.ctx, 10);
  CHECK(t.holds());
  CHECK(t.violating == std::vector<unsigned>{2});
  CHECK(t.start == 3u);
}

TEST_CASE("fit_tail") {
  Dims odd, square, cubic, zero(8, 0), constant(8, 4);
  for (unsigned n = 0; n < 8; ++n) {
    odd.push_back(2 * n + 1);
    square.push_back(n * n);
    cubic.push_back(n * n * n + 3);
  }
  auto o = fit_tail(odd, 2, 7);
  CHECK(o.degree == 1u);
  CHECK(o.multiplicity == 2);
  CHECK(o.residual_zero);
  CHECK(fit_tail(square, 0, 7).degree == 2u);
  CHECK(fit_tail(square, 0, 7).multiplicity == 2);
  CHECK(fit_tail(cubic, 1, 7).multiplicity == 6);
  check_sentinel(fit_tail(zero, 4, 7));
  CHECK(fit_tail(constant, 4, 7).degree == 0u);
  CHECK(fit_tail(constant, 4, 7).multiplicity == 4);

  Dims powers;
  for (unsigned n = 0; n < 8; ++n) powers.push_back(std::uint64_t(1) << n);
  CHECK_THROWS_AS(fit_tail(powers, 0, 7), FitFailure);
  // A cubic needs five points to be certified.
  CHECK_THROWS_AS(fit_tail(cubic, 4, 7), FitFailure);
  CHECK_THROWS_AS(fit_tail(odd, 2, 9), InputError);
}

TEST_CASE("fv_consequence examples") {
  auto good = named("E2 f=x+y");
  auto g = fv_consequence(good.f, good.ctx, 10);
  CHECK(g.agree);
  REQUIRE(g.sequences.size() == 2);
  for (const auto& seq : g.sequences) {
    CAPTURE(seq.name);
    CHECK(seq.kernel_sub == Dims(11, 0));
    CHECK(seq.kernel_quotient == Dims(11, 0));
    check_sentinel(seq.fit_sub);
  }

  auto bad = named("E2 f=x");
  auto b = fv_consequence(bad.f, bad.ctx, 10);
  CHECK(b.agree);
  const auto& ann = b.sequences[0];
  CHECK(ann.name == "annihilator");
  CHECK(ann.fit_sub.degree == 0u);
  CHECK(ann.fit_sub.multiplicity == 1);
  CHECK(ann.fit_quotient == ann.fit_sub);

  auto e3 = named("E3");
  auto t = fv_consequence(e3.f, e3.ctx, 10);
  CHECK(t.agree);
  for (const auto& seq : t.sequences) {
    check_sentinel(seq.fit_sub);
    check_sentinel(seq.fit_quotient);
  }

  CHECK_THROWS_AS(fv_consequence(e3.f, e3.ctx, 3), FitFailure);
}

TEST_CASE("Hilbert function matches the oracle piece dimensions") {
  std::mt19937_64 rng(701);
  auto k = PrimeField(32003);
  std::vector<Instance<PrimeField>> all = fixtures(k);
  for (int i = 0; i < 30; ++i) all.push_back(random_instance(rng, k, i % 3, "R" + std::to_string(i)));
  for (const auto& in : all) {
    CAPTURE(in.label);
    auto h = hilbert_function(in.ctx, 7);
    for (unsigned n = 0; n <= 7; ++n) CHECK(h.values[n] == piece_basis(in.ctx, n).dim());
  }
}

TEST_CASE("recurrence holds past n0 for superficial elements") {
  std::mt19937_64 rng(702);
  auto k = PrimeField(32003);
  std::vector<Instance<PrimeField>> all = fixtures(k);
  for (int i = 0; i < 45; ++i) all.push_back(random_instance(rng, k, i % 3, "R" + std::to_string(i)));
  int checked = 0;
  for (const auto& in : all) {
    CAPTURE(in.label);
    auto r = check_all(in.f, in.ctx);
    if (!r.verdict_a) continue;
    auto rec = check_recurrence(in.f, in.ctx, 12);
    CHECK(rec.applicable);
    REQUIRE(rec.start);
    CHECK(*rec.start <= *r.n0_empirical + r.s);
    ++checked;
  }
  CHECK(checked > 15);
}

TEST_CASE("fv_consequence agrees on random instances") {
  std::mt19937_64 rng(703);
  auto k = PrimeField(32003);
  for (int i = 0; i < 20; ++i) {
    auto in = random_instance(rng, k, i % 3, "R" + std::to_string(i));
    CAPTURE(in.label);
    CAPTURE(in.f.to_string());
    auto r = fv_consequence(in.f, in.ctx, 12);
    CHECK(r.agree);
    for (const auto& seq : r.sequences) {
      CHECK(seq.fit_sub.residual_zero);
      CHECK(seq.fit_quotient.residual_zero);
    }
  }
}
