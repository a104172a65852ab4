#include "factorlab/json_io.hpp"

#include "factorlab/error.hpp"

namespace factorlab::json_io {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw invalid_argument(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw invalid_argument("missing field '" + (where.empty() ? key : where + "." + key) + "'");
  return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

Rational signed_rational(const Json& j, const std::string& field) {
  if (!j.is_string()) throw parse_error(field + " must be a rational string such as \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), field + ": " + e.what());
  }
}

Rational nonnegative_rational(const Json& j, const std::string& field) {
  Rational q = signed_rational(j, field);
  if (q.sign() < 0) throw invalid_argument(field + " must be nonnegative, got " + q.str());
  return q;
}

unsigned long unsigned_field(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) throw invalid_argument(field + " must be a nonnegative integer");
  return j.get<unsigned long>();
}

// Geometric p may be written as a number or a decimal string.
std::uint64_t prime_field(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    Rational q = signed_rational(j, field);
    if (q.is_integer() && q.sign() > 0 && q.num().fits_ulong_p()) return q.num().get_ui();
  }
  throw invalid_argument(field + " must be a positive integer");
}

Json elements_json(const std::vector<std::pair<std::string, Rational>>& elements) {
  Json out = Json::object();
  for (const auto& [name, value] : elements) out[name] = value.str();
  return out;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_field(const Json& j, const std::string& field) { return nonnegative_rational(j, field); }

MonoidSpec spec_from_json(const Json& j) {
  const Json& kind = require(j, "kind", "");
  if (!kind.is_string()) throw invalid_argument("kind must be \"mixed\" or \"interval\"");
  std::string k = kind.get<std::string>();
  if (k == "interval") return make_interval(nonnegative_rational(require(j, "t", ""), "t"));
  if (k != "mixed") throw invalid_argument("kind must be \"mixed\" or \"interval\", got \"" + k + "\"");
  MixedSpec spec;
  if (auto it = j.find("finite"); it != j.end()) {
    if (!it->is_array()) throw invalid_argument("finite must be an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      spec.finite.push_back(nonnegative_rational((*it)[i], "finite[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("geometric"); it != j.end()) {
    if (!it->is_array()) throw invalid_argument("geometric must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "geometric[" + std::to_string(i) + "]";
      const Json& entry = (*it)[i];
      GeometricFamily family;
      family.c = nonnegative_rational(require(entry, "c", where), join(where, "c"));
      family.p = prime_field(require(entry, "p", where), join(where, "p"));
      spec.geometric.push_back(family);
    }
  }
  validate(spec);
  return spec;
}

Json to_json(const MonoidSpec& spec) {
  Json out;
  if (const auto* mixed = std::get_if<MixedSpec>(&spec)) {
    out["kind"] = "mixed";
    out["finite"] = Json::array();
    for (const auto& g : mixed->finite) out["finite"].push_back(g.str());
    out["geometric"] = Json::array();
    for (const auto& family : mixed->geometric) out["geometric"].push_back({{"c", family.c.str()}, {"p", family.p}});
  } else {
    out["kind"] = "interval";
    out["t"] = std::get<IntervalSpec>(spec).t.str();
  }
  return out;
}

Json budget_to_json(const Budget& budget) {
  return {{"max_k", budget.max_k}, {"max_coefficient", budget.max_coefficient}, {"max_candidates", budget.max_candidates}};
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Factorization& f) {
  Json parts = Json::array();
  for (const auto& part : f.parts) parts.push_back({{"atom", part.atom.str()}, {"multiplicity", part.multiplicity.get_str()}});
  return {{"text", f.str()}, {"parts", parts}};
}

Json to_json(const RationalInterval& interval) {
  return {{"lo", interval.lo.str()},
          {"hi", interval.hi.str()},
          {"lo_closed", interval.lo_closed},
          {"hi_closed", interval.hi_closed},
          {"text", interval.str()}};
}

Json to_json(const SetDescriptor& set) {
  if (const auto* finite = std::get_if<FiniteSet>(&set)) {
    Json elements = Json::array();
    for (const auto& q : finite->elements) elements.push_back(q.str());
    return {{"kind", "finite"}, {"elements", elements}};
  }
  if (const auto* family = std::get_if<InfiniteFamily>(&set)) return {{"kind", "interval"}, {"interval", to_json(family->interval)}};
  if (std::holds_alternative<EmptySet>(set)) return {{"kind", "empty"}};
  return {{"kind", "undetermined"}, {"reason", std::get<UndeterminedSet>(set).reason}};
}

Json to_json(const Membership& m) {
  Json out = {{"member", to_string(m.truth)}};
  if (m.certificate) {
    Json finite = Json::array();
    for (const auto& c : m.certificate->finite) finite.push_back(c.get_str());
    Json geometric = Json::array();
    for (const auto& t : m.certificate->geometric) geometric.push_back({{"m", t.m.get_str()}, {"k", t.k}});
    out["certificate"] = {{"finite", finite}, {"geometric", geometric}};
  }
  if (!m.note.empty()) out["note"] = m.note;
  return out;
}

Json to_json(const FactorizationSet& set) {
  Json listed = Json::array();
  for (const auto& f : set.listed) listed.push_back(to_json(f));
  Json families = Json::array();
  for (const auto& family : set.families)
    families.push_back({{"parts", family.parts}, {"range", to_json(family.range)}, {"total", family.total.str()}});
  Json out = {{"listed", listed}, {"families", families}, {"finite", set.finite()}, {"complete", set.complete}};
  if (!set.note.empty()) out["note"] = set.note;
  return out;
}

Json to_json(const Verdict& v) {
  Json witness = {{"elements", elements_json(v.witness.elements)}};
  if (!v.witness.factorizations.empty()) {
    witness["factorizations"] = Json::array();
    for (const auto& f : v.witness.factorizations) witness["factorizations"].push_back(to_json(f));
  }
  if (v.witness.family) witness["family"] = to_json(*v.witness.family);
  if (!v.witness.note.empty()) witness["note"] = v.witness.note;
  return {{"state", to_string(v.state)},
          {"witness", witness},
          {"method", to_string(v.method)},
          {"budget_used", {{"max_k", v.budget_used.max_k}, {"candidates", v.budget_used.candidates}}}};
}

Json verdict_to_json(Property property, const Verdict& v) {
  Json out = {{"property", to_string(property)}};
  out.update(to_json(v));
  return out;
}

Json to_json(const LatticeEdge& edge) { return {{"from", to_string(edge.from)}, {"to", to_string(edge.to)}}; }

Json to_json(const PropertyProfile& profile) {
  Json verdicts = Json::array();
  for (Property p : kAllProperties) verdicts.push_back(verdict_to_json(p, profile.at(p)));
  Json violations = Json::array();
  for (const auto& edge : check_lattice(profile)) violations.push_back(to_json(edge));
  return {{"spec", to_json(profile.spec)},
          {"budget", budget_to_json(profile.budget)},
          {"verdicts", verdicts},
          {"raw_finite_factorizations", to_json(profile.raw_finite_factorizations)},
          {"lattice_violations", violations}};
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw invalid_argument("semigroup must be a nonempty array of positive integers");
  std::vector<unsigned long> generators;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string field = "semigroup[" + std::to_string(i) + "]";
    unsigned long g = 0;
    if (j[i].is_string()) {
      Rational q = signed_rational(j[i], field);
      if (!q.is_integer() || q.sign() <= 0 || !q.num().fits_ulong_p())
        throw invalid_argument(field + " must be a positive integer");
      g = q.num().get_ui();
    } else {
      g = unsigned_field(j[i], field);
    }
    generators.push_back(g);
  }
  return make_semigroup(std::move(generators));
}

BiPoly bipoly_terms_from_json(const NumericalSemigroup& semigroup, const Json& terms, const std::string& field) {
  if (!terms.is_array()) throw invalid_argument(field + " must be an array of terms");
  std::vector<BiTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string where = field + "[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    out.push_back({unsigned_field(require(t, "xdeg", where), join(where, "xdeg")),
                   unsigned_field(require(t, "yexp", where), join(where, "yexp")),
                   signed_rational(require(t, "coeff", where), join(where, "coeff"))});
  }
  return make_bipoly(semigroup, out);
}

BiPoly bipoly_from_json(const Json& j) {
  NumericalSemigroup semigroup = semigroup_from_json(require(j, "semigroup", ""));
  return bipoly_terms_from_json(semigroup, require(j, "terms", ""), "terms");
}

Json to_json(const BiPoly& f) {
  Json semigroup = Json::array();
  for (unsigned long g : f.semigroup.generators) semigroup.push_back(std::to_string(g));
  Json terms = Json::array();
  for (const auto& t : bipoly_terms(f)) terms.push_back({{"xdeg", t.xdeg}, {"yexp", t.yexp}, {"coeff", t.coeff.str()}});
  return {{"semigroup", semigroup}, {"terms", terms}, {"text", f.str()}};
}

Json to_json(const Primitivity& p) {
  Json out = {{"primitive", p.primitive}, {"common_divisors", p.common_divisors}};
  out["certificate"] = p.certificate ? Json(*p.certificate) : Json(nullptr);
  return out;
}

Json to_json(const GlReport& report) {
  return {{"f", to_json(report.f)},
          {"g", to_json(report.g)},
          {"product", to_json(report.product_poly)},
          {"product_primitivity", to_json(report.product)},
          {"preconditions_hold", report.preconditions_hold},
          {"counterexample", report.counterexample},
          {"note", report.note}};
}

DPlusMPoly dpm_from_json(const Json& j) {
  const Json& variant = require(j, "variant", "");
  auto v = variant.is_string() ? domain_variant_from_string(variant.get<std::string>()) : std::nullopt;
  if (!v) throw invalid_argument("variant must be \"zxq\" or \"l19\"");
  const Json& coefficients = require(j, "coefficients", "");
  if (!coefficients.is_array()) throw invalid_argument("coefficients must be an array of rational strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.push_back(signed_rational(coefficients[i], "coefficients[" + std::to_string(i) + "]"));
  return make_dpm(*v, std::move(out));
}

Json to_json(const DPlusMPoly& f) {
  Json coefficients = Json::array();
  for (const auto& c : f.coefficients) coefficients.push_back(c.str());
  return {{"variant", to_string(f.variant)}, {"coefficients", coefficients}, {"text", f.str()}};
}

Json to_json(const DpmClassification& c) {
  Json splits = Json::array();
  for (const auto& s : c.prime_splits)
    splits.push_back({{"p", s.p},
                      {"quotient", to_json(s.quotient)},
                      {"quotient_in_domain", s.quotient_in_domain},
                      {"quotient_nonunit", s.quotient_nonunit}});
  return {{"is_unit", c.is_unit},
          {"is_atomic", to_json(c.is_atomic)},
          {"is_furstenberg", to_json(c.is_furstenberg)},
          {"prime_splits", splits},
          {"cross_check",
           {{"candidates", c.cross_check.candidates},
            {"splits", c.cross_check.splits},
            {"consistent", c.cross_check.consistent},
            {"note", c.cross_check.note}}}};
}

Json to_json(const L19Witness& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"state", to_string(w.state)},
          {"f", to_json(w.f)},
          {"f_in_domain", w.f_in_domain},
          {"m", w.m},
          {"a_m", w.a_m.str()},
          {"multiplier", to_json(w.multiplier)},
          {"g", to_json(w.g)},
          {"checks", checks},
          {"all_pass", w.all_pass()},
          {"note", w.note}};
}

Json to_json(const Check& c) {
  return {{"name", c.name}, {"claim", c.claim}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}};
}

Json to_json(const ScenarioReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"id", report.id}, {"description", report.description}, {"checks", checks}, {"pass", report.pass}};
}

Json to_json(const SuiteReport& report) {
  Json scenarios = Json::array();
  for (const auto& s : report.scenarios) scenarios.push_back(to_json(s));
  return {{"scenarios", scenarios}, {"pass", report.pass}};
}

}  // namespace factorlab::json_io
