#include "factorlab/factorlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "factorlab/error.hpp"
#include "factorlab/json_io.hpp"

struct fl_spec {
  factorlab::MonoidSpec spec;
};

namespace {

using factorlab::Budget;
using factorlab::Error;
using factorlab::ErrorCode;
using factorlab::Rational;
using factorlab::json_io::Json;
namespace jio = factorlab::json_io;

thread_local std::string last_error;

fl_status fail(fl_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

fl_status map_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error: return fail(FL_ERR_PARSE, e.what());
    case ErrorCode::invalid_argument: return fail(FL_ERR_INVALID, e.what());
    case ErrorCode::not_member: return fail(FL_ERR_NOT_MEMBER, e.what());
    case ErrorCode::unsupported: return fail(FL_ERR_UNSUPPORTED, e.what());
    case ErrorCode::unknown_id: return fail(FL_ERR_UNKNOWN_ID, e.what());
  }
  return fail(FL_ERR_INTERNAL, e.what());
}

// Runs body, which fills a JSON result, and converts exceptions to codes.
template <typename Body>
fl_status guarded(char** out_json, Body&& body) {
  if (out_json == nullptr) return fail(FL_ERR_INVALID, "output pointer is null");
  *out_json = nullptr;
  try {
    Json result = body();
    *out_json = copy_out(result.dump(2));
    if (*out_json == nullptr) return fail(FL_ERR_INTERNAL, "out of memory");
    last_error.clear();
    return FL_OK;
  } catch (const Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return fail(FL_ERR_INTERNAL, e.what());
  }
}

Budget to_budget(const fl_budget* budget) {
  if (budget == nullptr) {
    fl_budget defaults;
    if (fl_budget_default(&defaults) != FL_OK) throw factorlab::invalid_argument(last_error);
    return Budget{defaults.max_k, defaults.max_coefficient, defaults.max_candidates};
  }
  if (budget->max_k == 0 || budget->max_coefficient == 0 || budget->max_candidates == 0)
    throw factorlab::invalid_argument("budget fields must be positive");
  return Budget{budget->max_k, budget->max_coefficient, budget->max_candidates};
}

const factorlab::MonoidSpec& require_spec(const fl_spec* spec) {
  if (spec == nullptr) throw factorlab::invalid_argument("spec handle is null");
  return spec->spec;
}

Rational value_arg(const char* text, const char* name) {
  if (text == nullptr) throw factorlab::invalid_argument(std::string(name) + " is null");
  return jio::rational_field(Json(text), name);
}

Json parse_arg(const char* json) {
  if (json == nullptr) throw factorlab::invalid_argument("input JSON is null");
  return jio::parse(json);
}

}  // namespace

extern "C" {

const char* fl_version(void) { return "0.1.0"; }

const char* fl_status_name(fl_status status) {
  switch (status) {
    case FL_OK: return "ok";
    case FL_ERR_PARSE: return "parse error";
    case FL_ERR_INVALID: return "invalid argument";
    case FL_ERR_NOT_MEMBER: return "not a member";
    case FL_ERR_UNKNOWN_ID: return "unknown id";
    case FL_ERR_UNSUPPORTED: return "unsupported";
    case FL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fl_last_error(void) { return last_error.c_str(); }

void fl_string_free(char* text) { std::free(text); }

fl_status fl_budget_default(fl_budget* out) {
  if (out == nullptr) return fail(FL_ERR_INVALID, "output pointer is null");
  out->max_k = factorlab::kDefaultBudget.max_k;
  out->max_coefficient = factorlab::kDefaultBudget.max_coefficient;
  out->max_candidates = factorlab::kDefaultBudget.max_candidates;
  if (const char* env = std::getenv("FACTORLAB_BUDGET_K"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long k = std::strtoul(env, &end, 10);
    if (*end != '\0' || k == 0 || k > 100000 || env[0] == '-')
      return fail(FL_ERR_INVALID, "FACTORLAB_BUDGET_K must be a positive integer, got '" + std::string(env) + "'");
    out->max_k = static_cast<uint32_t>(k);
  }
  return FL_OK;
}

fl_status fl_spec_parse(const char* json, fl_spec** out) {
  if (out == nullptr) return fail(FL_ERR_INVALID, "output pointer is null");
  *out = nullptr;
  try {
    *out = new fl_spec{jio::spec_from_json(parse_arg(json))};
    last_error.clear();
    return FL_OK;
  } catch (const Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return fail(FL_ERR_INTERNAL, e.what());
  }
}

void fl_spec_free(fl_spec* spec) { delete spec; }

fl_status fl_spec_to_json(const fl_spec* spec, char** out_json) {
  return guarded(out_json, [&] { return jio::to_json(require_spec(spec)); });
}

fl_status fl_member(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational value = value_arg(q, "value");
    Json out = {{"value", value.str()}};
    out.update(jio::to_json(factorlab::member(require_spec(spec), value, to_budget(budget))));
    return out;
  });
}

fl_status fl_divides(const fl_spec* spec, const char* a, const char* b, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational x = value_arg(a, "a");
    Rational y = value_arg(b, "b");
    auto truth = factorlab::divides(require_spec(spec), x, y, to_budget(budget));
    return Json{{"a", x.str()}, {"b", y.str()}, {"divides", factorlab::to_string(truth)}};
  });
}

fl_status fl_is_atom(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational value = value_arg(q, "value");
    auto truth = factorlab::is_atom(require_spec(spec), value, to_budget(budget));
    return Json{{"value", value.str()}, {"is_atom", factorlab::to_string(truth)}};
  });
}

fl_status fl_atoms(const fl_spec* spec, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] { return Json{{"atoms", jio::to_json(factorlab::atoms(require_spec(spec), to_budget(budget)))}}; });
}

fl_status fl_is_atomic(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational value = value_arg(q, "value");
    Json out = {{"value", value.str()}};
    out.update(jio::to_json(factorlab::is_atomic(require_spec(spec), value, to_budget(budget))));
    return out;
  });
}

fl_status fl_factorizations(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational value = value_arg(q, "value");
    Json out = {{"value", value.str()}};
    out.update(jio::to_json(factorlab::factorizations(require_spec(spec), value, to_budget(budget))));
    return out;
  });
}

fl_status fl_atom_divisors(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational value = value_arg(q, "value");
    return Json{{"value", value.str()},
                {"atom_divisors", jio::to_json(factorlab::atom_divisors(require_spec(spec), value, to_budget(budget)))}};
  });
}

fl_status fl_classify(const fl_spec* spec, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] { return jio::to_json(factorlab::classify(require_spec(spec), to_budget(budget))); });
}

fl_status fl_archimedean(const fl_spec* spec, const char* a, const char* b, const fl_budget* budget, char** out_json) {
  return guarded(out_json, [&] {
    Rational x = value_arg(a, "a");
    Rational y = value_arg(b, "b");
    auto n = factorlab::archimedean_check(require_spec(spec), x, y, to_budget(budget));
    return Json{{"a", x.str()}, {"b", y.str()}, {"n", n.get_str()}};
  });
}

fl_status fl_primitive(const char* bipoly_json, char** out_json) {
  return guarded(out_json, [&] {
    auto f = jio::bipoly_from_json(parse_arg(bipoly_json));
    return Json{{"f", jio::to_json(f)}, {"primitivity", jio::to_json(factorlab::is_primitive(f))}};
  });
}

fl_status fl_gl_check(const char* json, char** out_json) {
  return guarded(out_json, [&] {
    Json input = parse_arg(json);
    if (!input.is_object() || !input.contains("semigroup") || !input.contains("f") || !input.contains("g"))
      throw factorlab::invalid_argument("gl-check input needs fields 'semigroup', 'f' and 'g'");
    auto semigroup = jio::semigroup_from_json(input["semigroup"]);
    auto f = jio::bipoly_terms_from_json(semigroup, input["f"], "f");
    auto g = jio::bipoly_terms_from_json(semigroup, input["g"], "g");
    Json out = {{"f_poly", jio::to_json(f)}, {"g_poly", jio::to_json(g)}};
    out.update(jio::to_json(factorlab::gl_product_check(f, g)));
    return out;
  });
}

fl_status fl_dpm_classify(const char* json, char** out_json) {
  return guarded(out_json, [&] {
    auto f = jio::dpm_from_json(parse_arg(json));
    Json out = {{"f", jio::to_json(f)}};
    out.update(jio::to_json(factorlab::dpm_classify(f)));
    return out;
  });
}

fl_status fl_l19_witness(const char* json, char** out_json) {
  return guarded(out_json, [&] { return jio::to_json(factorlab::l19_ca_witness(jio::dpm_from_json(parse_arg(json)))); });
}

fl_status fl_suite_list(char** out_json) {
  return guarded(out_json, [&] { return Json{{"scenarios", factorlab::list_scenarios()}}; });
}

fl_status fl_suite_run(const char* id, int inject_fault, const fl_budget* budget, char** out_json, int* out_pass) {
  return guarded(out_json, [&] {
    factorlab::SuiteOptions options;
    options.budget = to_budget(budget);
    options.inject_fault = inject_fault != 0;
    factorlab::SuiteReport report;
    if (id == nullptr) {
      report = factorlab::run_all(options);
    } else {
      report.scenarios.push_back(factorlab::run_scenario(id, options));
      report.pass = report.scenarios.back().pass;
    }
    if (out_pass != nullptr) *out_pass = report.pass ? 1 : 0;
    return jio::to_json(report);
  });
}

}  // extern "C"
