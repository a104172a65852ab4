#pragma once

#include <string>

#include <json.hpp>

#include "factorlab/algebra.hpp"
#include "factorlab/monoid_engine.hpp"
#include "factorlab/monoid_spec.hpp"
#include "factorlab/property_lab.hpp"
#include "factorlab/suite.hpp"

namespace factorlab::json_io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; malformed input throws Error(parse_error).
Json parse(const std::string& text);

/// Nonnegative rational string at `field`.
Rational rational_field(const Json& j, const std::string& field);

MonoidSpec spec_from_json(const Json& j);
Json to_json(const MonoidSpec& spec);

Json budget_to_json(const Budget& budget);
Json to_json(const Rational& q);
Json to_json(const Factorization& f);
Json to_json(const SetDescriptor& set);
Json to_json(const RationalInterval& interval);
Json to_json(const Membership& m);
Json to_json(const FactorizationSet& set);
Json to_json(const Verdict& v);
Json verdict_to_json(Property property, const Verdict& v);
Json to_json(const PropertyProfile& profile);
Json to_json(const LatticeEdge& edge);

/// {"semigroup": ["2","3"], "terms": [{"xdeg": n, "yexp": m, "coeff": "q"}]}
BiPoly bipoly_from_json(const Json& j);
/// Terms only, for inputs that carry a shared semigroup.
BiPoly bipoly_terms_from_json(const NumericalSemigroup& semigroup, const Json& terms, const std::string& field);
NumericalSemigroup semigroup_from_json(const Json& j);
Json to_json(const BiPoly& f);
Json to_json(const Primitivity& p);
Json to_json(const GlReport& report);

/// {"variant": "zxq"|"l19", "coefficients": ["2", "1/2"]}; signed rationals.
DPlusMPoly dpm_from_json(const Json& j);
Json to_json(const DPlusMPoly& f);
Json to_json(const DpmClassification& c);
Json to_json(const L19Witness& w);

Json to_json(const Check& c);
/// Runtime is left out so reports are byte-identical across runs.
Json to_json(const ScenarioReport& report);
Json to_json(const SuiteReport& report);

}  // namespace factorlab::json_io
