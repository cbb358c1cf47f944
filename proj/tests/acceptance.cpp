// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "superlab/blowup.hpp"
#include "superlab/groebner.hpp"
#include "superlab/hilbert.hpp"
#include "superlab/oracle.hpp"
#include "superlab/superficial.hpp"
#include "support/instances.hpp"

using namespace superlab;
using namespace superlab::testing;

namespace {

using QQ = RationalField;
using FP = PrimeField;
using Dims = std::vector<std::uint64_t>;

constexpr unsigned kRandomInstances = 60;
constexpr unsigned kTail = 5;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// The instances of criterion 1 with their symbolic reports.
struct Corpus {
  std::vector<Instance<FP>> instances;
  std::vector<SuperficialityReport<FP>> reports;
};

Corpus& corpus() {
  static Corpus c;
  return c;
}

template <class F>
Instance<F> named(const F& k, const std::string& label) {
  for (auto& in : fixtures(k))
    if (in.label == label) return in;
  throw std::runtime_error("no fixture " + label);
}

std::string criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  auto& c = corpus();
  const FP k(32003);
  for (auto& in : fixtures(k))
    if (in.label != "E5") c.instances.push_back(in);
  std::mt19937_64 rng(20240601);
  for (unsigned i = 0; i < kRandomInstances; ++i)
    c.instances.push_back(random_instance(rng, k, int(i % 3), "R" + std::to_string(i)));
  unsigned yes = 0;
  for (const auto& in : c.instances) {
    try {
      c.reports.push_back(check_all(in.f, in.ctx));
    } catch (const AgreementViolation& e) {
      throw Failure{in.label + ": " + e.what()};
    }
    require(c.reports.back().agreement, in.label + " disagrees");
    yes += c.reports.back().verdict_a;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(secs < 300, "runtime " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << c.instances.size() << " instances (" << yes << " superficial), all agree, " << int(secs * 1000) << " ms";
  return out.str();
}

std::string criterion_2() {
  const QQ q;
  auto e1 = named(q, "E1");
  auto r1 = check_all(e1.f, e1.ctx);
  require(r1.verdict_a && r1.s == 1, "E1 superficial with s = 1");

  auto e2x = named(q, "E2 f=x");
  auto r2x = check_all(e2x.f, e2x.ctx);
  require(!r2x.verdict_a && !r2x.verdict_kirby_i, "E2 f=x not superficial, Kirby (i) fails");
  bool witness_y = false;
  for (const auto& w : r2x.witnesses)
    if (w.check == "kirby_i") witness_y = w.element == parse_poly("y", e2x.ctx.ring());
  require(witness_y, "E2 f=x Kirby (i) witness y");

  auto e2 = named(q, "E2 f=x+y");
  require(check_all(e2.f, e2.ctx).verdict_a, "E2 f=x+y superficial");
  auto rec2 = check_recurrence(e2.f, e2.ctx, 12);
  require(Dims(rec2.module.values.begin(), rec2.module.values.begin() + 4) == Dims{1, 2, 2, 2}, "E2 H_M");
  require(Dims(rec2.quotient.values.begin(), rec2.quotient.values.begin() + 4) == Dims{1, 1, 0, 0}, "E2 H_M/fM");
  require(rec2.holds() && rec2.start == 0u, "E2 recurrence from n = 0");

  auto e3 = named(q, "E3");
  require(check_all(e3.f, e3.ctx).verdict_a, "E3 superficial");
  require(injectivity_scan(e3.f, e3.ctx, 0, 8) == Dims{0, 1, 0, 0, 0, 0, 0, 0, 0}, "E3 kernel dims");
  require(equal(gamma(e3.ctx), Ideal<QQ>(e3.ctx.ring(), {parse_poly("x", e3.ctx.ring())})), "E3 Gamma_I(M) = (x)/J");

  auto e4 = named(q, "E4");
  auto r4 = check_all(e4.f, e4.ctx);
  require(r4.verdict_a && r4.s == 2, "E4 superficial with s = 2");
  auto tp4 = transforms(e4.f, e4.ctx);
  const auto& R1 = tp4.charts[1].ring;
  Ideal<QQ> expected(R1, {parse_poly("x - y*Y0", R1), parse_poly("Y0^2 + y", R1)});
  require(equal(tp4.per_chart[1].weak, expected), "E4 chart 1 weak transform (x - yY0, Y0^2 + y)");
  require(tp4.per_chart[1].weak_equals_strict && tp4.per_chart[1].cartier.regular, "E4 chart 1 weak = strict, Cartier");
  require(is_cartier(tp4).holds && weak_equals_strict(tp4).holds, "E4 Cartier and weak = strict globally");
  auto rec4 = check_recurrence(e4.f, e4.ctx, 12);
  require(rec4.holds() && rec4.start == 0u, "E4 recurrence exact on [0, 12]");

  auto e5 = named(q, "E5");
  require(!check_all(e5.f, e5.ctx).verdict_a, "E5 not superficial");
  auto tp5 = transforms(e5.f, e5.ctx);
  auto cart = is_cartier(tp5);
  require(!cart.holds && cart.chart == 1u, "E5 not Cartier, failing in chart 1");
  const auto& ch = tp5.charts[1];
  const auto y2 = parse_poly("y^2", ch.ring);
  const auto& F1 = tp5.per_chart[1].weak_equation;
  require(ch.ideal.contains(y2 * F1) && !ch.ideal.contains(y2), "E5 y^2 certifies the zero divisor in chart 1");
  require(ch.ideal.contains(*cart.witness * F1) && !ch.ideal.contains(*cart.witness), "E5 reported witness valid");
  return "E1-E5 verdicts, Hilbert data and chart data as expected (E5 reported witness " + cart.witness->to_string() +
         ", y^2 verified as a certificate)";
}

// The threshold from which a certificate applies: n0_empirical when f is
// superficial, the Kirby threshold when only (ii) holds.
std::optional<unsigned> tail_start(const SuperficialityReport<FP>& r) {
  if (r.n0_empirical) return r.n0_empirical;
  return r.n0_kirby;
}

std::string criterion_3() {
  auto& c = corpus();
  require(!c.reports.empty(), "criterion 1 produced no reports");
  unsigned scans = 0;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const auto& in = c.instances[i];
    const auto& r = c.reports[i];
    auto n0 = tail_start(r);
    if (r.verdict_a) {
      require(n0.has_value(), in.label + " has no threshold");
      require(injectivity_scan(in.f, in.ctx, *n0, *n0 + kTail) == Dims(kTail + 1, 0), in.label + " kernel in tail");
      ++scans;
    }
    if (r.verdict_kirby_ii) {
      require(n0.has_value(), in.label + " has no Kirby threshold");
      require(kirby_cokernel_scan(in.f, in.ctx, *n0, *n0 + kTail) == Dims(kTail + 1, 0), in.label + " defect in tail");
      ++scans;
    }
  }
  return std::to_string(scans) + " tail scans on [n0, n0+" + std::to_string(kTail) + "] all zero";
}

std::string criterion_4() {
  auto& c = corpus();
  require(!c.reports.empty(), "criterion 1 produced no reports");
  unsigned checked = 0;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const auto& in = c.instances[i];
    const auto& r = c.reports[i];
    if (!r.verdict_a) continue;
    // Exactness needs injectivity out of degree n - s as well.
    const unsigned lo = *r.n0_empirical + r.s, hi = lo + kTail;
    auto h = hilbert_function(in.ctx, hi).values;
    auto hq = hilbert_function(in.ctx.modulo(in.f), hi).values;
    for (unsigned n = lo; n <= hi; ++n)
      require(hq[n] + h[n - r.s] == h[n], in.label + " degree " + std::to_string(n));
    ++checked;
  }
  return std::to_string(checked) + " superficial instances exact on [n0+s, n0+s+" + std::to_string(kTail) + "]";
}

std::string criterion_5() {
  const QQ q;
  unsigned runs = 0;
  for (const char* label : {"E2 f=x", "E2 f=x+y", "E3"}) {
    auto in = named(q, label);
    auto r = fv_consequence(in.f, in.ctx, 12);
    require(r.agree, std::string(label) + " fits differ");
    ++runs;
  }
  std::mt19937_64 rng(20240605);
  const FP k(32003);
  for (int i = 0; i < 10; ++i) {
    auto in = random_instance(rng, k, i % 3, "F" + std::to_string(i));
    auto r = fv_consequence(in.f, in.ctx, 12);
    require(r.agree, in.label + " fits differ");
    ++runs;
  }
  return std::to_string(runs) + " instances, both sequences agree in degree and multiplicity";
}

// Counts monomials of total degree <= bound outside the monomial ideal.
std::uint64_t enumerate_standard(const std::vector<Monomial>& lead, std::size_t n, unsigned bound) {
  std::uint64_t count = 0;
  std::vector<unsigned> e(n, 0);
  for (;;) {
    unsigned deg = 0;
    for (unsigned v : e) deg += v;
    if (deg <= bound) {
      Monomial m{std::span<const unsigned>(e)};
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
    }
    std::size_t i = 0;
    while (i < n && ++e[i] > bound) e[i++] = 0;
    if (i == n) return count;
  }
}

template <class F>
unsigned engine_cases(const F& k, std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  auto R = make_ring(k, {"x", "y"});
  const auto x = Polynomial<F>::variable(R, 0), y = Polynomial<F>::variable(R, 1);
  auto nonzero = [&](unsigned terms, unsigned deg) {
    for (;;)
      if (auto p = random_poly(rng, R, terms, deg, false); !p.is_zero()) return p;
  };
  for (unsigned i = 0; i < cases; ++i) {
    const std::string tag = " case " + std::to_string(i);
    std::vector<Polynomial<F>> gens{nonzero(3, 3), nonzero(3, 3)};
    // Reduced-basis uniqueness under reordering and redundant generators.
    auto gb = buchberger<F>(gens, R);
    auto extra = gens;
    std::reverse(extra.begin(), extra.end());
    extra.push_back(gens[0] * random_poly(rng, R, 2, 2) + gens[1]);
    auto gb2 = buchberger<F>(extra, R);
    require(gb.generators() == gb2.generators(), "reduced basis not unique" + tag);

    // Colon and saturation identities.
    Ideal<F> I(R, gens), J(R, {nonzero(2, 2)});
    auto f = nonzero(2, 2);
    auto c = colon(I, f);
    require(is_subset(I, c), "I not inside I : f" + tag);
    for (const auto& g : c.generators()) require(I.contains(g * f), "colon element" + tag);
    auto meet = intersect(I, J);
    require(is_subset(meet, I) && is_subset(meet, J), "intersection" + tag);
    require(is_subset(product(I, J), meet), "product inside intersection" + tag);
    auto sat = saturate_ideal(I, J).ideal;
    require(equal(saturate_ideal(sat, J).ideal, sat), "saturation not idempotent" + tag);
    require(equal(colon_ideal(sat, J), sat), "saturation not stable under colon" + tag);

    // Colength against enumeration: adding (x, y)^6 keeps every standard
    // monomial in degree <= 5 < 10.
    std::vector<Polynomial<F>> fin = gens;
    for (unsigned a = 0; a <= 6; ++a) fin.push_back(x.pow(a) * y.pow(6 - a));
    Ideal<F> A(R, fin);
    auto lead = A.groebner().leading_monomials();
    auto col = colength(A);
    require(col.has_value() && *col == enumerate_standard(lead, 2, 10), "colength vs enumeration" + tag);
  }
  return cases;
}

std::string criterion_6() {
  const unsigned q = engine_cases(QQ{}, 606, 1000);
  const unsigned p = engine_cases(FP(32003), 607, 1000);
  return std::to_string(q) + " cases over Q and " + std::to_string(p) +
         " over F_32003: basis uniqueness, colon/saturation identities, colength enumeration";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"1 equivalence suite", criterion_1},   {"2 fixture verdicts", criterion_2},
      {"3 oracle cross-validation", criterion_3}, {"4 exact sequence", criterion_4},
      {"5 Flenner-Vogel consequence", criterion_5}, {"6 engine sanity", criterion_6}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::string status = "PASS", detail;
    try {
      detail = run();
    } catch (const Failure& f) {
      status = "FAIL", detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL", detail = std::string("exception: ") + e.what();
    }
    failed += status == "FAIL";
    std::printf("criterion %s: %s (%s)\n", name.c_str(), status.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
