#include "factorlab/suite.hpp"

#include <chrono>
#include <functional>

#include "factorlab/algebra.hpp"
#include "factorlab/error.hpp"
#include "factorlab/monoid_engine.hpp"
#include "factorlab/numerical_oracle.hpp"
#include "factorlab/property_lab.hpp"

namespace factorlab {

namespace {

std::string show(bool b) { return b ? "true" : "false"; }
std::string show(Truth t) { return to_string(t); }
std::string show(const Verdict& v) { return to_string(v.state); }
std::string show(const SetDescriptor& s) { return describe(s); }

std::string show_witness(const Witness& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    out += (i ? ", " : "") + w.elements[i].first + "=" + w.elements[i].second.str();
  return out + ")";
}

std::string show_listing(const std::vector<Factorization>& fs) {
  std::string out = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + fs[i].str();
  return out + "}";
}

std::string show_factorizations(const FactorizationSet& set) {
  std::string out = show_listing(set.listed);
  for (const auto& family : set.families)
    out += " + family(" + std::to_string(family.parts) + " parts in " + family.range.str() + ")";
  if (!set.complete) out += " (incomplete: " + set.note + ")";
  return out;
}

std::string show_divisors(const std::vector<unsigned long>& ds) {
  std::string out = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? ", " : "") + std::to_string(ds[i]);
  return out + "}";
}

Rational R(const char* text) { return Rational::parse(text); }

class Recorder {
 public:
  Recorder(ScenarioReport& report) : report_(report) {}

  void check(std::string name, std::string claim, const std::function<std::string()>& compute, std::string expected) {
    Check c{std::move(name), std::move(claim), "", std::move(expected), false};
    try {
      c.computed = compute();
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    c.pass = c.computed == c.expected;
    report_.checks.push_back(std::move(c));
  }

 private:
  ScenarioReport& report_;
};

struct Context {
  const SuiteOptions& options;
  MonoidSpec monoid(MonoidSpec spec) const {
    if (!options.inject_fault) return spec;
    if (auto* mixed = std::get_if<MixedSpec>(&spec)) {
      if (!mixed->finite.empty())
        mixed->finite.front() *= Rational(2);
      else if (!mixed->geometric.empty())
        mixed->geometric.front().c *= Rational(2);
    } else {
      std::get<IntervalSpec>(spec).t *= Rational(2);
    }
    return spec;
  }
};

void g_mixed(Recorder& r, const Context& ctx) {
  const Budget& b = ctx.options.budget;
  MonoidSpec m = ctx.monoid(make_mixed({R("1/3")}, {{R("1"), 2}}));
  r.check("atoms", "the only atom is 1/3", [&] { return show(atoms(m, b)); }, "{1/3}");
  r.check("is_atomic(1)", "1 is three copies of the atom 1/3", [&] {
    Verdict v = is_atomic(m, R("1"), b);
    return show(v) + (v.witness.factorizations.empty() ? "" : " " + v.witness.factorizations.front().str());
  }, "proved 3*(1/3)");
  r.check("divides(1/2, 1)", "1/2 divides 1", [&] { return show(divides(m, R("1/2"), R("1"), b)); }, "true");
  r.check("is_atomic(1/2)", "1/2 is not a sum of atoms", [&] { return show(is_atomic(m, R("1/2"), b)); },
          "refuted");
  r.check("atom_divisors(1/2)", "1/2 has no atom divisor", [&] { return show(atom_divisors(m, R("1/2"), b)); },
          "{}");
  r.check("atom_divisors(1/8)", "1/2^k has no atom divisor for k >= 1 (k = 3 instance)",
          [&] { return show(atom_divisors(m, R("1/8"), b)); }, "{}");
  r.check("atom_divisors(1) [k = 0 reading]",
          "at k = 0 the family element 1 does have the atom divisor 1/3, so the no-divisor claim is read "
          "for k >= 1",
          [&] { return show(atom_divisors(m, R("1"), b)); }, "{1/3}");
  PropertyProfile profile = classify(m, b);
  auto verdict = [&](Property p) { return show(profile.at(p)); };
  r.check("idf", "finitely many atom divisors per element", [&] { return verdict(Property::idf); }, "proved");
  r.check("ridf", "finitely many atom divisors per atomic element", [&] { return verdict(Property::ridf); },
          "proved");
  r.check("completely_atomic", "a divisor of an atomic element is not atomic", [&] {
    const Verdict& v = profile.at(Property::completely_atomic);
    return show(v) + " " + show_witness(v.witness);
  }, "refuted (t=1, d=1/2)");
  r.check("completely_atomic witness re-verifies", "each clause of the witness recomputed through the engine",
          [&] { return show(reverify(m, Property::completely_atomic, profile.at(Property::completely_atomic), b)); },
          "true");
  r.check("furstenberg", "1/2 is a nonzero element without atom divisors", [&] {
    const Verdict& v = profile.at(Property::furstenberg);
    return show(v) + " " + show_witness(v.witness);
  }, "refuted (q=1/2)");
  r.check("u_ff", "not completely atomic, so not U-FF", [&] { return verdict(Property::u_ff); }, "refuted");
  r.check("raw finite factorizations", "every atomic element has finitely many factorizations",
          [&] { return show(profile.raw_finite_factorizations); }, "proved");
  r.check("lattice", "no implication is violated", [&] { return std::to_string(check_lattice(profile).size()); },
          "0");
  r.check("archimedean(1/3, 1)", "least n with n/3 > 1",
          [&] { return archimedean_check(m, R("1/3"), R("1"), b).get_str(); }, "4");
}

void x6_mixed(Recorder& r, const Context& ctx) {
  const Budget& b = ctx.options.budget;
  MonoidSpec m = ctx.monoid(make_mixed({R("2")}, {{R("3"), 2}}));
  r.check("atoms", "2 is the only atom", [&] { return show(atoms(m, b)); }, "{2}");
  r.check("is_atom(2)", "2 is an atom", [&] { return show(is_atom(m, R("2"), b)); }, "true");
  r.check("divides(2, 3)", "2 does not divide 3", [&] { return show(divides(m, R("2"), R("3"), b)); }, "false");
  r.check("divides(3, 6)", "3 divides 6", [&] { return show(divides(m, R("3"), R("6"), b)); }, "true");
  r.check("is_atomic(6)", "6 = 2 + 2 + 2", [&] { return show(is_atomic(m, R("6"), b)); }, "proved");
  r.check("is_atomic(3)", "3 is not a sum of copies of 2", [&] { return show(is_atomic(m, R("3"), b)); },
          "refuted");
  r.check("factorizations(4)", "4 factors uniquely", [&] { return show_factorizations(factorizations(m, R("4"), b)); },
          "{2*2}");
  Verdict ca = witness_completely_atomic(m, b);
  r.check("completely_atomic", "3 divides the atomic element 6 but is not atomic",
          [&] { return show(ca) + " " + show_witness(ca.witness); }, "refuted (t=6, d=3)");
  r.check("completely_atomic witness re-verifies", "each clause of the witness recomputed through the engine",
          [&] { return show(reverify(m, Property::completely_atomic, ca, b)); }, "true");
  Verdict cf = witness_completely_furstenberg(m, b);
  r.check("completely_furstenberg", "3 divides 6 and has no atom divisor",
          [&] { return show(cf) + " " + show_witness(cf.witness); }, "refuted (t=6, d=3)");
  r.check("archimedean(3/2, 10)", "least n with 3n/2 > 10",
          [&] { return archimedean_check(m, R("3/2"), R("10"), b).get_str(); }, "7");
  r.check("lattice", "no implication is violated",
          [&] { return std::to_string(check_lattice(classify(m, b)).size()); }, "0");
}

void na_interval(Recorder& r, const Context& ctx) {
  const Budget& b = ctx.options.budget;
  MonoidSpec m = ctx.monoid(make_interval(R("1")));
  PropertyProfile profile = classify(m, b);
  auto verdict = [&](Property p) { return show(profile.at(p)); };
  r.check("atomic", "bounded below by t, so every element factors", [&] { return verdict(Property::atomic); },
          "proved");
  r.check("idf", "3 has an interval of atom divisors", [&] {
    const Verdict& v = profile.at(Property::idf);
    return show(v) + " " + show_witness(v.witness) + " " + (v.witness.family ? v.witness.family->str() : "none");
  }, "refuted (q=3) [1, 2)");
  r.check("atom_divisors(3)", "1 + r divides 3 for every r in [0, 1)", [&] { return show(atom_divisors(m, R("3"), b)); },
          "[1, 2)");
  r.check("ridf", "the atomic element 3 has infinitely many atom divisors", [&] { return verdict(Property::ridf); },
          "refuted");
  r.check("u_ff", "not RIDF, so not U-FF", [&] { return verdict(Property::u_ff); }, "refuted");
  r.check("completely_furstenberg", "every nonzero element has an atom divisor",
          [&] { return verdict(Property::completely_furstenberg); }, "proved");
  r.check("is_atom(3/2)", "elements of [1, 2) are atoms", [&] { return show(is_atom(m, R("3/2"), b)); }, "true");
  r.check("is_atom(2)", "2 = 1 + 1", [&] { return show(is_atom(m, R("2"), b)); }, "false");
  r.check("idf witness re-verifies", "sampled family members are atoms dividing 3",
          [&] { return show(reverify(m, Property::idf, profile.at(Property::idf), b)); }, "true");
  r.check("lattice", "no implication is violated", [&] { return std::to_string(check_lattice(profile).size()); },
          "0");
  r.check("archimedean(1, 5)", "least n with n > 5", [&] { return archimedean_check(m, R("1"), R("5"), b).get_str(); },
          "6");
}

void zxq(Recorder& r, const Context&) {
  DPlusMPoly x = make_dpm(DomainVariant::zxq, {R("0"), R("1")});
  DPlusMPoly two_plus_x = make_dpm(DomainVariant::zxq, {R("2"), R("1")});
  DpmClassification cx = dpm_classify(x);
  DpmClassification c2 = dpm_classify(two_plus_x);
  r.check("atomic(X)", "X has zero constant term, so it is not atomic", [&] { return show(cx.is_atomic); },
          "refuted");
  r.check("prime splits of X", "X = p * (X/p) with X/p a nonunit of the domain", [&] {
    std::string out;
    for (const auto& s : cx.prime_splits)
      out += (out.empty() ? "" : ", ") + std::to_string(s.p) + ":" + s.quotient.str() + ":" +
             show(s.quotient_in_domain && s.quotient_nonunit);
    return out;
  }, "2:1/2*X:true, 3:1/3*X:true, 5:1/5*X:true");
  r.check("cross-check(X)", "X splits off every divisor of 10^4", [&] { return show(cx.cross_check.consistent); },
          "true");
  r.check("atomic(2 + X)", "nonzero constant term", [&] { return show(c2.is_atomic); }, "proved");
  r.check("cross-check(2 + X)", "constant splits of 2 + X divide 2", [&] { return show(c2.cross_check.consistent); },
          "true");
  r.check("furstenberg(X)", "the prime 2 divides X", [&] { return show(cx.is_furstenberg) + " " + show_witness(cx.is_furstenberg.witness); },
          "proved (p=2)");
  r.check("furstenberg(2 + X)", "the prime 2 divides 2 + X",
          [&] { return show(c2.is_furstenberg) + " " + show_witness(c2.is_furstenberg.witness); }, "proved (p=2)");
  r.check("unit(X)", "X is not a unit", [&] { return show(cx.is_unit); }, "false");
}

void l19(Recorder& r, const Context&) {
  auto witness_summary = [](const L19Witness& w) {
    std::string out = to_string(w.state) + std::string(" g=") + w.g.str();
    for (const auto& c : w.checks) out += " " + c.name + ":" + show(c.pass);
    return out;
  };
  L19Witness first = l19_ca_witness(make_dpm(DomainVariant::l19, {R("0"), R("1/2"), R("1")}));
  r.check("witness for 1/2*X + X^2", "g = 4X^2 f is atomic, divisible by f, f not atomic",
          [&] { return witness_summary(first); },
          "proved g=2*X^3 + 4*X^4 g_in_domain:true g_atomic:true f_divides_g:true f_not_atomic:true");
  r.check("1/2*X + X^2 in the domain", "a non-integer X coefficient puts f outside Z + XZ + X^2 Q[X]",
          [&] { return show(first.f_in_domain); }, "false");
  r.check("witness for 1/2*X^2 + X^3", "in-domain instance of the same construction",
          [&] { return witness_summary(l19_ca_witness(make_dpm(DomainVariant::l19, {R("0"), R("0"), R("1/2"), R("1")}))); },
          "proved g=2*X^4 + 4*X^5 g_in_domain:true g_atomic:true f_divides_g:true f_not_atomic:true");
  r.check("witness for 1/3*X^2 + X^3", "g = 9X^2 f",
          [&] { return witness_summary(l19_ca_witness(make_dpm(DomainVariant::l19, {R("0"), R("0"), R("1/3"), R("1")}))); },
          "proved g=3*X^4 + 9*X^5 g_in_domain:true g_atomic:true f_divides_g:true f_not_atomic:true");
  r.check("witness for 2/3*X^2 + X^3", "1/a_m = 3/2 is not an integer; g starts with 3/2 and fails the criterion",
          [&] {
            return to_string(
                l19_ca_witness(make_dpm(DomainVariant::l19, {R("0"), R("0"), R("2/3"), R("1")})).state);
          },
          "unknown");
  r.check("atomic(1/2*X^2 + X^3)", "first nonzero coefficient 1/2 is not an integer", [&] {
    return show(dpm_classify(make_dpm(DomainVariant::l19, {R("0"), R("0"), R("1/2"), R("1")})).is_atomic);
  }, "refuted");
  r.check("atomic(X + X^2)", "first nonzero coefficient 1 is an integer", [&] {
    return show(dpm_classify(make_dpm(DomainVariant::l19, {R("0"), R("1"), R("1")})).is_atomic);
  }, "proved");
}

void gl_y23(Recorder& r, const Context&) {
  NumericalSemigroup s = make_semigroup({2, 3});
  BiPoly f = make_bipoly(s, {{1, 2, R("1")}, {0, 3, R("-1")}});
  BiPoly g = make_bipoly(s, {{1, 2, R("1")}, {0, 3, R("1")}});
  GlReport report = gl_product_check(f, g);
  r.check("primitive(Y^2*X - Y^3)", "2 - d and 3 - d are never both in S", [&] { return show(report.f.primitive); },
          "true");
  r.check("primitive(Y^2*X + Y^3)", "same exponents", [&] { return show(report.g.primitive); }, "true");
  r.check("product", "(Y^2 X - Y^3)(Y^2 X + Y^3)", [&] { return report.product_poly.str(); }, "Y^4*X^2 - Y^6");
  r.check("primitive(product)", "Y^2 divides both Y^4 and Y^6", [&] {
    return show(report.product.primitive) + " d=" +
           (report.product.certificate ? std::to_string(*report.product.certificate) : "none");
  }, "false d=2");
  r.check("gl counterexample", "primitive times primitive is not primitive", [&] { return show(report.counterexample); },
          "true");
  r.check("common divisors {4, 6}", "exponents d with 4 - d and 6 - d in S",
          [&] { return show_divisors(ns_common_divisors(s, {4, 6})); }, "{2, 4}");
  r.check("over <1>", "Y divides Y^2 and Y^3, so f is not primitive and the precondition fails", [&] {
    NumericalSemigroup one = make_semigroup({1});
    GlReport free = gl_product_check(make_bipoly(one, {{1, 2, R("1")}, {0, 3, R("-1")}}),
                                     make_bipoly(one, {{1, 2, R("1")}, {0, 3, R("1")}}));
    return show(free.preconditions_hold) + " " + show(free.counterexample);
  }, "false false");
}

void fg_sanity(Recorder& r, const Context& ctx) {
  const Budget& b = ctx.options.budget;
  MonoidSpec m = ctx.monoid(make_mixed({R("2"), R("3")}));
  r.check("engine vs oracle up to 20", "membership, atoms and factorization lists agree", [&] {
    OracleTables oracle = numerical_oracle(make_mixed({R("2"), R("3")}), 20);
    long mismatches = 0;
    SetDescriptor engine_atoms = atoms(m, b);
    if (!(engine_atoms == make_finite_set(oracle.atom_values()))) ++mismatches;
    for (long long x = 0; x <= oracle.bound; ++x) {
      Rational q = oracle.value(x);
      bool in = member(m, q, b).truth == Truth::yes;
      if (in != oracle.member[x]) ++mismatches;
      if (!in || x == 0 || !oracle.member[x]) continue;
      if (factorizations(m, q, b).listed != oracle.factorizations_of(x)) ++mismatches;
    }
    return std::to_string(mismatches) + " mismatches";
  }, "0 mismatches");
  PropertyProfile profile = classify(m, b);
  r.check("atomic", "finitely generated", [&] { return show(profile.at(Property::atomic)); }, "proved");
  r.check("ap", "2 divides 3 + 3 but not 3", [&] {
    const Verdict& v = profile.at(Property::ap);
    return show(v) + " " + show_witness(v.witness);
  }, "refuted (a=2, x=3, y=3)");
  r.check("u_uf", "6 = 2 + 2 + 2 = 3 + 3", [&] {
    const Verdict& v = profile.at(Property::u_uf);
    return show(v) + " " + show_listing(v.witness.factorizations);
  }, "refuted {3*2, 2*3}");
  r.check("u_ff", "finitely generated monoids are U-FF", [&] { return show(profile.at(Property::u_ff)); }, "proved");
  r.check("lattice", "no implication is violated", [&] { return std::to_string(check_lattice(profile).size()); },
          "0");
}

struct Entry {
  std::string id;
  std::string description;
  void (*run)(Recorder&, const Context&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"na-interval", "interval monoid {q >= 1} u {0}: atomic but neither RIDF nor U-FF", na_interval},
      {"g-mixed", "<1/3, 1/2^k> (q = 3, p = 2): IDF, not completely atomic, not Furstenberg", g_mixed},
      {"x6-mixed", "<2, 3/2^k>: 3 divides the atomic element 6 without being atomic", x6_mixed},
      {"zxq", "Z + XQ[X]: atomic iff the constant term is nonzero", zxq},
      {"l19", "Z + XZ + X^2 Q[X] (a_m = 1/2): f divides an atomic element without being atomic", l19},
      {"gl-y23", "D = Q[Y^2, Y^3]: a product of primitive polynomials that is not primitive", gl_y23},
      {"fg-sanity", "<2, 3>: engine against the brute-force oracle, plus AP and U-UF failures", fg_sanity},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& list_scenarios() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

ScenarioReport run_scenario(std::string_view id, const SuiteOptions& options) {
  for (const auto& entry : registry()) {
    if (entry.id != id) continue;
    ScenarioReport report;
    report.id = entry.id;
    report.description = entry.description;
    auto start = std::chrono::steady_clock::now();
    Recorder recorder(report);
    Context ctx{options};
    try {
      entry.run(recorder, ctx);
    } catch (const std::exception& e) {
      report.checks.push_back({"setup", "scenario inputs build", std::string("error: ") + e.what(), "ok", false});
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.pass = !report.checks.empty();
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
  }
  std::string valid;
  for (const auto& known : list_scenarios()) valid += (valid.empty() ? "" : ", ") + known;
  throw Error(ErrorCode::unknown_id, "unknown scenario '" + std::string(id) + "'; valid ids: " + valid);
}

SuiteReport run_all(const SuiteOptions& options) {
  SuiteReport out;
  out.pass = true;
  for (const auto& id : list_scenarios()) {
    out.scenarios.push_back(run_scenario(id, options));
    out.pass = out.pass && out.scenarios.back().pass;
  }
  return out;
}

}  // namespace factorlab
