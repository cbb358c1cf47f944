// superlab: superficial-element checks on k[x]/J with respect to an ideal I.
//
//   superlab <order|check|charts|hilbert|find|fv> SESSION.json [flags]
//
// Exit codes: 0 computed (whatever the verdict), 2 input error, 3 resource
// guard, 4 internal invariant violation.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "superlab/blowup.hpp"
#include "superlab/hilbert.hpp"
#include "superlab/oracle.hpp"
#include "superlab/parser.hpp"
#include "superlab/superficial.hpp"

using json = nlohmann::json;
using namespace superlab;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Session {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> I, J;
  std::optional<std::string> f;
  unsigned degree_bound = 12;
  unsigned ord_cap = 30;
  std::uint64_t seed = 0;
};

struct Options {
  std::string command;
  std::string session_path;
  std::string engine = "both";
  std::optional<unsigned> degree_bound, ord_cap;
  std::optional<std::uint64_t> seed;
  unsigned trials = 20;
  std::string out;
  bool quiet = false;
};

template <class T>
T field_as(const json& doc, const char* key, const char* what) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("session field '") + key + "' must be " + what);
  }
}

Session read_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open session file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("session is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("session must be a JSON object");
  static const std::set<std::string> known{"characteristic", "variables", "I", "J", "f", "degree_bound", "ord_cap", "seed"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) throw InputError("unknown session field '" + key + "'");
  for (const char* key : {"characteristic", "variables", "I"})
    if (!doc.contains(key)) throw InputError(std::string("session field '") + key + "' is required");

  Session s;
  const auto ch = field_as<std::int64_t>(doc, "characteristic", "a non-negative integer");
  if (ch < 0 || ch > std::int64_t(UINT32_MAX)) throw InputError("characteristic out of range");
  s.characteristic = std::uint32_t(ch);
  s.variables = field_as<std::vector<std::string>>(doc, "variables", "a list of strings");
  s.I = field_as<std::vector<std::string>>(doc, "I", "a list of strings");
  if (doc.contains("J")) s.J = field_as<std::vector<std::string>>(doc, "J", "a list of strings");
  if (doc.contains("f") && !doc["f"].is_null()) s.f = field_as<std::string>(doc, "f", "a string");
  auto small = [&](const char* key, unsigned hi) {
    const auto v = field_as<std::int64_t>(doc, key, "a non-negative integer");
    if (v < 0 || v > hi) throw InputError(std::string("session field '") + key + "' must lie in [0, " + std::to_string(hi) + "]");
    return unsigned(v);
  };
  if (doc.contains("degree_bound")) s.degree_bound = small("degree_bound", 200);
  if (doc.contains("ord_cap")) s.ord_cap = small("ord_cap", 1000);
  if (doc.contains("seed")) s.seed = field_as<std::uint64_t>(doc, "seed", "a non-negative integer");

  if (s.variables.empty()) throw InputError("at least one variable is required");
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> seen;
  for (const auto& v : s.variables) {
    if (!std::regex_match(v, ident)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  if (s.I.empty()) throw InputError("I needs at least one generator");
  return s;
}

json echo(const Session& s) {
  json j{{"characteristic", s.characteristic}, {"variables", s.variables}, {"I", s.I}, {"J", s.J},
         {"degree_bound", s.degree_bound},     {"ord_cap", s.ord_cap},     {"seed", s.seed}};
  j["f"] = s.f ? json(*s.f) : json(nullptr);
  return j;
}

json opt(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

template <class F>
json poly(const std::optional<Polynomial<F>>& p) {
  return p ? json(p->to_string()) : json(nullptr);
}

template <class F>
json gens(const Ideal<F>& A) {
  json out = json::array();
  for (const auto& g : A.groebner().generators()) out.push_back(g.to_string());
  return out;
}

template <class F>
json witnesses(const std::vector<Witness<F>>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back({{"check", w.check}, {"where", w.where}, {"element", w.element.to_string()}});
  return out;
}

json fit(const PolyFit& p) {
  return {{"degree", opt(p.degree)}, {"multiplicity", p.multiplicity.get_str()}, {"window", {p.lo, p.hi}},
          {"residual_zero", p.residual_zero}};
}

class Stopwatch {
public:
  explicit Stopwatch(bool quiet) : quiet_(quiet) {}
  template <class Fn>
  auto time(const std::string& label, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    if (!quiet_) std::fprintf(stderr, "superlab: %s took %.1f ms\n", label.c_str(), dt.count());
    return result;
  }

private:
  bool quiet_;
};

template <class F>
class Runner {
public:
  Runner(const F& k, const Session& s, const Options& o) : session_(s), opts_(o), clock_(o.quiet), ctx_(build(k, s)) {}

  json run(json& report) {
    const std::string& c = opts_.command;
    if (c == "order") return order();
    if (c == "check") return check(report);
    if (c == "charts") return charts();
    if (c == "hilbert") return hilbert();
    if (c == "find") return find(report);
    return fv();
  }

private:
  static AdicContext<F> build(const F& k, const Session& s) {
    auto R = make_ring(k, s.variables);
    std::vector<Polynomial<F>> h, j;
    for (const auto& t : s.I) h.push_back(parse_poly(t, R));
    for (const auto& t : s.J) j.push_back(parse_poly(t, R));
    return AdicContext<F>(std::move(h), Ideal<F>(R, std::move(j)));
  }

  unsigned bound() const { return session_.degree_bound; }
  unsigned cap() const { return session_.ord_cap; }

  Polynomial<F> f() const {
    if (!session_.f) throw InputError("command '" + opts_.command + "' needs the session field 'f'");
    return parse_poly(*session_.f, ctx_.ring());
  }

  unsigned exact_order(const Polynomial<F>& g) const {
    auto o = ord(g, ctx_, cap());
    if (o.at_least) throw ResourceError("I-adic order exceeds ord_cap = " + std::to_string(cap()));
    return o.value;
  }

  json order() {
    auto g = f();
    auto o = clock_.time("order", [&] { return ord(g, ctx_, cap()); });
    return {{"order", o.value}, {"at_least", o.at_least}};
  }

  static json symbolic(const SuperficialityReport<F>& r) {
    return {{"s", r.s},
            {"superficial", r.verdict_a},
            {"verdicts",
             {{"a", r.verdict_a},
              {"b", r.verdict_b},
              {"c", r.verdict_c},
              {"d_i", r.verdict_d_i},
              {"d_ii", r.verdict_d_ii},
              {"kirby_i", r.verdict_kirby_i},
              {"kirby_ii", r.verdict_kirby_ii}}},
            {"agreement", r.agreement},
            {"n0_graded", r.n0_graded},
            {"n0_kirby", opt(r.n0_kirby)}};
  }

  json check(json& report) {
    auto g = f();
    json out;
    std::optional<SuperficialityReport<F>> sym;
    if (opts_.engine != "oracle") {
      sym = clock_.time("check_all", [&] { return check_all(g, ctx_, cap()); });
      for (const auto& [name, ms] : sym->timings_ms)
        if (!opts_.quiet) std::fprintf(stderr, "superlab:   %s took %.1f ms\n", name.c_str(), ms);
      out["symbolic"] = symbolic(*sym);
      report["witnesses"] = witnesses(sym->witnesses);
      report["n0_empirical"] = opt(sym->n0_empirical);
    }
    if (opts_.engine != "symbolic") {
      const unsigned s = exact_order(g);
      auto kernels = clock_.time("injectivity_scan", [&] { return injectivity_scan(g, ctx_, 0, bound(), cap()); });
      auto defects = clock_.time("kirby_cokernel_scan", [&] { return kirby_cokernel_scan(g, ctx_, 0, bound(), cap()); });
      out["oracle"] = {{"s", s}, {"window", {0, bound()}}, {"kernel_dims", kernels}, {"defect_dims", defects}};
      if (sym) {
        // Symbolic certificates must be visible in the oracle's window.
        bool consistent = true;
        if (sym->n0_empirical)
          for (unsigned n = *sym->n0_empirical; n <= bound(); ++n) {
            if (sym->verdict_a && kernels[n] != 0) consistent = false;
            if (sym->verdict_kirby_ii && defects[n] != 0) consistent = false;
          }
        out["consistent"] = consistent;
        if (!consistent) throw InvariantViolation("oracle contradicts the symbolic certificate");
      }
    }
    return out;
  }

  json charts() {
    auto g = f();
    auto tp = clock_.time("transforms", [&] { return transforms(g, ctx_, cap()); });
    json list = json::array();
    for (std::size_t i = 0; i < tp.charts.size(); ++i) {
      const auto& ch = tp.charts[i];
      const auto& t = tp.per_chart[i];
      list.push_back({{"index", ch.index},
                      {"variables", ch.ring->names()},
                      {"ideal", gens(ch.ideal)},
                      {"exceptional", ch.exceptional.to_string()},
                      {"weak_equation", t.weak_equation.to_string()},
                      {"total", gens(total_transform(tp, i))},
                      {"weak", gens(t.weak)},
                      {"strict", gens(t.strict)},
                      {"cartier", t.cartier.regular},
                      {"weak_equals_strict", t.weak_equals_strict}});
    }
    auto verdict = [](const ChartVerdict<F>& v) {
      return json{{"holds", v.holds}, {"chart", v.chart ? json(*v.chart) : json(nullptr)}, {"witness", poly(v.witness)}};
    };
    return {{"s", tp.element.s},
            {"lift", tp.element.lift.to_string()},
            {"charts", list},
            {"is_cartier", verdict(is_cartier(tp))},
            {"weak_equals_strict", verdict(weak_equals_strict(tp))}};
  }

  json hilbert() {
    auto g = f();
    auto r = clock_.time("check_recurrence", [&] { return check_recurrence(g, ctx_, bound(), cap()); });
    return {{"s", r.s},
            {"H", r.module.values},
            {"H_quotient", r.quotient.values},
            {"recurrence",
             {{"applicable", r.applicable},
              {"holds", r.holds()},
              {"start", opt(r.start)},
              {"violating", r.violating}}}};
  }

  json find(json& report) {
    unsigned s;
    if (session_.f) {
      s = exact_order(f());
    } else {
      s = UINT32_MAX;
      for (const auto& h : ctx_.h()) s = std::min(s, exact_order(h));
    }
    const std::uint64_t seed = opts_.seed ? *opts_.seed : session_.seed;
    auto r = clock_.time("find_superficial",
                         [&] { return find_superficial(ctx_, s, opts_.trials, seed, cap()); });
    json tried = json::array();
    for (const auto& t : r.tried) tried.push_back(t.to_string());
    json out{{"s", s}, {"trials", opts_.trials}, {"tried", tried}, {"found", r.report.has_value()}};
    out["f"] = r.report ? json(r.report->f.to_string()) : json(nullptr);
    if (r.report) {
      out["symbolic"] = symbolic(*r.report);
      report["witnesses"] = witnesses(r.report->witnesses);
      report["n0_empirical"] = opt(r.report->n0_empirical);
    }
    return out;
  }

  json fv() {
    auto g = f();
    auto r = clock_.time("fv_consequence", [&] { return fv_consequence(g, ctx_, bound(), cap()); });
    json seqs = json::array();
    for (const auto& q : r.sequences)
      seqs.push_back({{"name", q.name},
                      {"shift", q.shift},
                      {"kernel_sub", q.kernel_sub},
                      {"kernel_quotient", q.kernel_quotient},
                      {"fit_sub", fit(q.fit_sub)},
                      {"fit_quotient", fit(q.fit_quotient)},
                      {"agree", q.agree}});
    return {{"s", r.s}, {"sequences", seqs}, {"agree", r.agree}};
  }

  Session session_;
  Options opts_;
  Stopwatch clock_;
  AdicContext<F> ctx_;
};

void emit(const json& report, const Options& o) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(o.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

int execute(const Options& o) {
  json report{{"command", o.command}, {"version", kVersion}, {"witnesses", json::array()}, {"n0_empirical", nullptr}};
  if (o.command == "check") report["engine"] = o.engine;
  int code = 0;
  std::string kind, message;
  try {
    Session s = read_session(o.session_path);
    if (o.degree_bound) s.degree_bound = *o.degree_bound;
    if (o.ord_cap) s.ord_cap = *o.ord_cap;
    if (o.seed) s.seed = *o.seed;
    report["session"] = echo(s);
    if (s.characteristic == 0) {
      Runner<RationalField> r(RationalField{}, s, o);
      report["results"] = r.run(report);
    } else {
      Runner<PrimeField> r(PrimeField(s.characteristic), s, o);
      report["results"] = r.run(report);
    }
  } catch (const AgreementViolation& e) {
    code = 4, kind = "agreement_violation", message = e.what();
  } catch (const InvariantViolation& e) {
    code = 4, kind = "invariant_violation", message = e.what();
  } catch (const ResourceError& e) {
    code = 3, kind = "resource_guard", message = e.what();
  } catch (const InputError& e) {
    code = 2, kind = "input_error", message = e.what();
  } catch (const ContextMismatch& e) {
    code = 4, kind = "invariant_violation", message = e.what();
  }
  report["exit_status"] = code;
  if (code != 0) {
    report["error"] = {{"kind", kind}, {"message", message}};
    report.erase("results");
    std::fprintf(stderr, "superlab: %s\n", message.c_str());
  }
  emit(report, o);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superficial-element checks for an ideal I on M = k[x]/J"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"order", "I-adic order of f in M"},
      {"check", "decide whether f is superficial, with every characterization"},
      {"charts", "blow-up charts, weak and strict transforms of f"},
      {"hilbert", "Hilbert functions of M and M/fM and the superficial recurrence"},
      {"find", "search for a superficial element among random combinations"},
      {"fv", "dimension and multiplicity check of the Flenner-Vogel cycle equality"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("session", o.session_path, "session JSON file")->required();
    sub->add_option("--degree-bound", o.degree_bound, "top degree of computed windows")->check(CLI::Range(0, 200));
    sub->add_option("--ord-cap", o.ord_cap, "largest I-adic order explored")->check(CLI::Range(0, 1000));
    sub->add_option("--seed", o.seed, "random seed for find");
    sub->add_option("--out", o.out, "write the report to this file atomically");
    sub->add_flag("--quiet", o.quiet, "suppress diagnostics on stderr");
    if (name == "check")
      sub->add_option("--engine", o.engine, "symbolic, oracle or both")
          ->check(CLI::IsMember({"symbolic", "oracle", "both"}));
    if (name == "find") sub->add_option("--trials", o.trials, "number of candidates")->check(CLI::Range(1, 100000));
    sub->callback([&o, name = name] { o.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return execute(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "superlab: %s\n", e.what());
    return 4;
  }
}
