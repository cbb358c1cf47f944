#include "doctest.h"

#include <random>

#include "superlab/errors.hpp"
#include "superlab/parser.hpp"
#include "support/random_poly.hpp"

using namespace superlab;
using superlab::testing::random_monomial;
using superlab::testing::random_poly;

namespace {

RingPtr<RationalField> qq(std::vector<std::string> vars, MonomialOrder o = MonomialOrder::grevlex()) {
  return make_ring(RationalField{}, std::move(vars), std::move(o));
}

RingPtr<PrimeField> fp(std::uint32_t p, std::vector<std::string> vars) {
  return make_ring(PrimeField(p), std::move(vars));
}

}  // namespace

TEST_CASE("field spec validates primality") {
  CHECK(FieldSpec(0).is_rational());
  CHECK(FieldSpec(32003).characteristic() == 32003);
  CHECK_THROWS_AS(FieldSpec(32004), InputError);
  CHECK_THROWS_AS(FieldSpec(1), InputError);
  CHECK_THROWS_AS(FieldSpec(std::uint64_t(1) << 31), InputError);
}

TEST_CASE("prime field arithmetic matches plain modular arithmetic") {
  PrimeField k(2147483629u);  // largest prime below 2^31
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(0, 2147483628u);
  for (int i = 0; i < 10000; ++i) {
    std::uint32_t a = d(rng), b = d(rng);
    CHECK(k.mul(a, b) == (std::uint64_t(a) * b) % 2147483629u);
    if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
  }
}

TEST_CASE("parse_poly examples") {
  auto R = qq({"x", "y"});
  auto p = parse_poly("x^2 + y^3", R);
  CHECK(p.size() == 2);

  auto z = parse_poly("3*x - 3*x", R);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());

  // (x+y)^2 over F_2: the cross term 2xy vanishes.
  auto R2 = fp(2, {"x", "y"});
  CHECK(parse_poly("(x+y)^2", R2) == parse_poly("x^2 + y^2", R2));

  CHECK(parse_poly("1/2*x + 1/2*x", R) == parse_poly("x", R));
  CHECK(parse_poly("-x + y", R) == parse_poly("y - x", R));
}

TEST_CASE("parse_poly errors") {
  auto R = qq({"x", "y"});
  CHECK_THROWS_AS(parse_poly("2x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x y", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x + z", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", R), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + y", R), ParseError);
  CHECK_THROWS_AS(parse_poly("", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0", R), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", R), ParseError);

  auto R7 = fp(7, {"x"});
  CHECK_THROWS_AS(parse_poly("1/14*x", R7), ParseError);
  CHECK(parse_poly("1/2*x", R7) == parse_poly("4*x", R7));

  try {
    parse_poly("x + w", R);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("compare examples") {
  auto grevlex = MonomialOrder::grevlex();
  CHECK(grevlex.compare(Monomial{2, 1}, Monomial{1, 2}) == Cmp::GT);

  auto lex = MonomialOrder::lex();
  CHECK(lex.compare(Monomial{1, 0}, Monomial{0, 5}) == Cmp::GT);

  // variables (t, x): t beats any power of x.
  auto elim = MonomialOrder::block_elimination(1);
  CHECK(elim.compare(Monomial{1, 0}, Monomial{0, 100}) == Cmp::GT);

  CHECK_THROWS_AS(grevlex.compare(Monomial{1, 0}, Monomial{1, 0, 0}), ContextMismatch);
}

TEST_CASE("monomial orders are total, multiplicative well-orders") {
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                    MonomialOrder::weighted_grevlex({3, 1, 2, 5}),
                                    MonomialOrder::block_elimination(2)};
  std::mt19937_64 rng(11);
  for (const auto& o : orders) {
    CAPTURE(o.key());
    for (int i = 0; i < 1000; ++i) {
      Monomial a = random_monomial(rng, 4, 6), b = random_monomial(rng, 4, 6), n = random_monomial(rng, 4, 4);
      Cmp ab = o.compare(a, b), ba = o.compare(b, a);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
      CHECK((ab == Cmp::EQ) == (a == b));
      if (ab == Cmp::LT) CHECK(o.compare(a * n, b * n) == Cmp::LT);
      CHECK(o.compare(Monomial(4), a * n) != Cmp::GT);
      Monomial c = random_monomial(rng, 4, 6);
      if (ab == Cmp::LT && o.compare(b, c) == Cmp::LT) CHECK(o.compare(a, c) == Cmp::LT);
    }
  }
}

TEST_CASE("poly_arith examples") {
  auto R = qq({"x", "y"});
  auto x = parse_poly("x", R), y = parse_poly("y", R);
  CHECK((x + y) * (x - y) == parse_poly("x^2 - y^2", R));
  auto f = parse_poly("x^3 - 2*x*y + 7", R);
  CHECK(f + Polynomial<RationalField>(R) == f);
  // Oracle: repeated multiplication versus the expanded binomial.
  auto s = x + y;
  CHECK(s * s * s == parse_poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", R));
  CHECK(s.pow(3) == s * s * s);
}

TEST_CASE("arithmetic is exact over the rationals") {
  auto R = qq({"x"});
  auto p = parse_poly("1000000000000000000000000000000*x", R);
  auto sq = p * p;
  REQUIRE(sq.size() == 1);
  CHECK(sq.leading_coeff() == mpq_class("1000000000000000000000000000000000000000000000000000000000000"));
}

TEST_CASE("context mismatch is detected") {
  auto R = qq({"x", "y"});
  auto S = qq({"x", "z"});
  CHECK_THROWS_AS(parse_poly("x", R) + parse_poly("x", S), ContextMismatch);
}

template <class F>
void ring_axioms(const RingPtr<F>& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto zero = Polynomial<F>(R);
  auto one = Polynomial<F>::constant(R, R->field().one());
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(rng, R, 5, 4), b = random_poly(rng, R, 5, 4), c = random_poly(rng, R, 5, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    CHECK((a * zero).is_zero());
  }
}

TEST_CASE("ring axioms over Q and F_32003") {
  ring_axioms(qq({"x", "y", "z"}), 1);
  ring_axioms(fp(32003, {"x", "y", "z"}), 2);
  ring_axioms(make_ring(RationalField{}, {"a", "b"}, MonomialOrder::lex()), 3);
}

template <class F>
void round_trip(const RingPtr<F>& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i) {
    auto p = random_poly(rng, R, 6, 5);
    if (i % 3 == 0) p = p.scale(R->field().from_fraction(3, 7));
    auto text = p.to_string();
    CAPTURE(text);
    CHECK(parse_poly(text, R) == p);
  }
}

TEST_CASE("printing round-trips through the parser") {
  round_trip(qq({"x", "y", "z_1"}), 5);
  round_trip(fp(32003, {"x", "y"}), 6);
}

TEST_CASE("substitution is a ring homomorphism") {
  auto R = qq({"x", "y"});
  auto S = qq({"u", "v", "w"});
  std::vector<Polynomial<RationalField>> images{parse_poly("u*v - 1", S), parse_poly("w^2 + u", S)};
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, R, 4, 3), b = random_poly(rng, R, 4, 3);
    CHECK((a * b).substitute(S, images) == a.substitute(S, images) * b.substitute(S, images));
    CHECK((a + b).substitute(S, images) == a.substitute(S, images) + b.substitute(S, images));
  }
}

TEST_CASE("exact division") {
  auto R = qq({"x", "y"});
  auto a = parse_poly("x^2 - y^2", R), b = parse_poly("x + y", R);
  CHECK(exact_divide(a, b) == parse_poly("x - y", R));
  CHECK_THROWS_AS(exact_divide(parse_poly("x^2 + 1", R), b), InvariantViolation);
}
