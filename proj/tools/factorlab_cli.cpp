// Command-line front end over the C API. Every command obtains a JSON
// result from the library and either prints it (--json) or renders text.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "factorlab/factorlab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::uint32_t max_k = 0;  // 0: library default (FACTORLAB_BUDGET_K or 64)
  std::uint64_t max_coefficient = 0;
  std::uint64_t max_candidates = 0;
  std::string spec_path;
  std::string input_path;
  std::string value;
  std::string a;
  std::string b;
  std::string id;
  bool all = false;
  bool inject_fault = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SpecHandle {
  fl_spec* spec = nullptr;
  ~SpecHandle() { fl_spec_free(spec); }
};

// Runs one library call, takes ownership of its JSON text and throws on
// failure.
template <typename Fn>
Json call(Fn&& fn) {
  char* text = nullptr;
  fl_status status = fn(&text);
  std::unique_ptr<char, void (*)(char*)> owned(text, fl_string_free);
  if (status != FL_OK) {
    std::string message = std::string(fl_status_name(status)) + ": " + fl_last_error();
    if (status == FL_ERR_INTERNAL) throw std::runtime_error(message);
    throw UsageError(message);
  }
  return Json::parse(owned.get());
}

fl_budget budget_from(const Options& o) {
  fl_budget b;
  if (fl_budget_default(&b) != FL_OK) throw UsageError(fl_last_error());
  if (o.max_k) b.max_k = o.max_k;
  if (o.max_coefficient) b.max_coefficient = o.max_coefficient;
  if (o.max_candidates) b.max_candidates = o.max_candidates;
  return b;
}

const char* require_arg(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value.c_str();
}

std::string render_set(const Json& set) {
  std::string kind = set["kind"];
  if (kind == "finite") {
    std::string out = "{";
    for (std::size_t i = 0; i < set["elements"].size(); ++i)
      out += (i ? ", " : "") + set["elements"][i].get<std::string>();
    return out + "}";
  }
  if (kind == "interval") return set["interval"]["text"].get<std::string>() + " (infinite)";
  if (kind == "empty") return "{}";
  return "undetermined: " + set["reason"].get<std::string>();
}

std::string render_witness(const Json& w) {
  std::string out;
  for (const auto& [name, value] : w["elements"].items()) out += (out.empty() ? "" : ", ") + name + "=" + value.get<std::string>();
  if (w.contains("factorizations"))
    for (const auto& f : w["factorizations"]) out += (out.empty() ? "" : "; ") + f["text"].get<std::string>();
  if (w.contains("family")) out += (out.empty() ? "" : "; ") + std::string("family ") + w["family"]["text"].get<std::string>();
  if (w.contains("note")) out += (out.empty() ? "" : "; ") + w["note"].get<std::string>();
  return out;
}

std::string render_verdict(const Json& v) {
  std::string witness = render_witness(v["witness"]);
  return v["state"].get<std::string>() + " [" + v["method"].get<std::string>() + "]" +
         (witness.empty() ? "" : "  " + witness);
}

void print_classify(const Json& profile) {
  for (const auto& v : profile["verdicts"]) {
    std::string name = v["property"];
    name.resize(std::max<std::size_t>(name.size(), 24), ' ');
    std::cout << name << render_verdict(v) << "\n";
  }
  std::cout << "raw finite factorizations: " << render_verdict(profile["raw_finite_factorizations"]) << "\n";
  std::cout << "lattice violations: " << profile["lattice_violations"].size() << "\n";
}

int run_monoid(const std::string& op, const Options& o) {
  SpecHandle handle;
  std::string text = read_file(require_arg(o.spec_path, "--spec"));
  if (fl_spec_parse(text.c_str(), &handle.spec) != FL_OK) throw UsageError(fl_last_error());
  fl_budget budget = budget_from(o);
  Json result;
  if (op == "member") {
    result = call([&](char** out) { return fl_member(handle.spec, require_arg(o.value, "--value"), &budget, out); });
  } else if (op == "divides") {
    result = call([&](char** out) { return fl_divides(handle.spec, require_arg(o.a, "--a"), require_arg(o.b, "--b"), &budget, out); });
  } else if (op == "atoms") {
    result = call([&](char** out) { return fl_atoms(handle.spec, &budget, out); });
  } else if (op == "is-atom") {
    result = call([&](char** out) { return fl_is_atom(handle.spec, require_arg(o.value, "--value"), &budget, out); });
  } else if (op == "is-atomic") {
    result = call([&](char** out) { return fl_is_atomic(handle.spec, require_arg(o.value, "--value"), &budget, out); });
  } else if (op == "factorizations") {
    result = call([&](char** out) { return fl_factorizations(handle.spec, require_arg(o.value, "--value"), &budget, out); });
  } else if (op == "atom-divisors") {
    result = call([&](char** out) { return fl_atom_divisors(handle.spec, require_arg(o.value, "--value"), &budget, out); });
  } else if (op == "classify") {
    result = call([&](char** out) { return fl_classify(handle.spec, &budget, out); });
  } else if (op == "archimedean") {
    result = call([&](char** out) { return fl_archimedean(handle.spec, require_arg(o.a, "--a"), require_arg(o.b, "--b"), &budget, out); });
  }
  if (o.json) {
    std::cout << result.dump(2) << "\n";
    return kExitOk;
  }
  if (op == "member") {
    std::cout << result["member"].get<std::string>() << "\n";
  } else if (op == "divides") {
    std::cout << result["divides"].get<std::string>() << "\n";
  } else if (op == "is-atom") {
    std::cout << result["is_atom"].get<std::string>() << "\n";
  } else if (op == "atoms") {
    std::cout << render_set(result["atoms"]) << "\n";
  } else if (op == "is-atomic") {
    std::cout << render_verdict(result) << "\n";
  } else if (op == "factorizations") {
    for (const auto& f : result["listed"]) std::cout << f["text"].get<std::string>() << "\n";
    for (const auto& family : result["families"])
      std::cout << family["parts"] << " parts from " << family["range"]["text"].get<std::string>() << " summing to "
                << family["total"].get<std::string>() << " (infinitely many)\n";
    if (!result["complete"].get<bool>()) std::cout << "incomplete: " << result["note"].get<std::string>() << "\n";
  } else if (op == "atom-divisors") {
    std::cout << render_set(result["atom_divisors"]) << "\n";
  } else if (op == "classify") {
    print_classify(result);
  } else if (op == "archimedean") {
    std::cout << result["n"].get<std::string>() << "\n";
  }
  return kExitOk;
}

void print_primitivity(const std::string& label, const Json& p) {
  std::cout << label << ": " << (p["primitive"].get<bool>() ? "primitive" : "not primitive");
  if (!p["certificate"].is_null()) std::cout << " (common divisor Y^" << p["certificate"] << ")";
  std::cout << "\n";
}

int run_algebra(const std::string& op, const Options& o) {
  std::string text = read_file(require_arg(o.input_path, "--input"));
  Json result;
  if (op == "primitive")
    result = call([&](char** out) { return fl_primitive(text.c_str(), out); });
  else if (op == "gl-check")
    result = call([&](char** out) { return fl_gl_check(text.c_str(), out); });
  else if (op == "dpm-classify")
    result = call([&](char** out) { return fl_dpm_classify(text.c_str(), out); });
  else if (op == "l19-witness")
    result = call([&](char** out) { return fl_l19_witness(text.c_str(), out); });
  if (o.json) {
    std::cout << result.dump(2) << "\n";
    return kExitOk;
  }
  if (op == "primitive") {
    print_primitivity(result["f"]["text"], result["primitivity"]);
  } else if (op == "gl-check") {
    print_primitivity("f = " + result["f_poly"]["text"].get<std::string>(), result["f"]);
    print_primitivity("g = " + result["g_poly"]["text"].get<std::string>(), result["g"]);
    print_primitivity("f*g = " + result["product"]["text"].get<std::string>(), result["product_primitivity"]);
    std::cout << "counterexample: " << (result["counterexample"].get<bool>() ? "true" : "false") << " ("
              << result["note"].get<std::string>() << ")\n";
  } else if (op == "dpm-classify") {
    std::cout << "f = " << result["f"]["text"].get<std::string>() << "\n";
    std::cout << "unit: " << (result["is_unit"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "atomic: " << render_verdict(result["is_atomic"]) << "\n";
    for (const auto& s : result["prime_splits"])
      std::cout << "  f = " << s["p"] << " * (" << s["quotient"]["text"].get<std::string>() << ")\n";
    std::cout << "furstenberg: " << render_verdict(result["is_furstenberg"]) << "\n";
    const auto& cross = result["cross_check"];
    std::cout << "cross-check: " << (cross["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << " ("
              << cross["splits"] << " splits of " << cross["candidates"] << " candidates)\n";
  } else if (op == "l19-witness") {
    std::cout << "state: " << result["state"].get<std::string>() << "\n";
    std::cout << "f = " << result["f"]["text"].get<std::string>()
              << (result["f_in_domain"].get<bool>() ? "" : " (outside the domain)") << "\n";
    std::cout << "g = " << result["g"]["text"].get<std::string>() << "\n";
    for (const auto& c : result["checks"])
      std::cout << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << " " << c["name"].get<std::string>() << ": "
                << c["detail"].get<std::string>() << "\n";
    std::cout << result["note"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int run_suite(const std::string& op, const Options& o) {
  if (op == "list") {
    Json result = call([&](char** out) { return fl_suite_list(out); });
    if (o.json)
      std::cout << result.dump(2) << "\n";
    else
      for (const auto& id : result["scenarios"]) std::cout << id.get<std::string>() << "\n";
    return kExitOk;
  }
  if (!o.all && o.id.empty()) throw UsageError("suite run needs --id ID or --all");
  fl_budget budget = budget_from(o);
  int pass = 0;
  Json result = call([&](char** out) {
    return fl_suite_run(o.all ? nullptr : o.id.c_str(), o.inject_fault ? 1 : 0, &budget, out, &pass);
  });
  if (o.json) {
    std::cout << result.dump(2) << "\n";
  } else {
    for (const auto& s : result["scenarios"]) {
      std::cout << (s["pass"].get<bool>() ? "PASS " : "FAIL ") << s["id"].get<std::string>() << " ("
                << s["checks"].size() << " checks)\n";
      for (const auto& c : s["checks"])
        if (!c["pass"].get<bool>())
          std::cout << "  " << c["name"].get<std::string>() << ": computed '" << c["computed"].get<std::string>()
                    << "', expected '" << c["expected"].get<std::string>() << "'\n";
    }
    std::cout << "suite: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization properties of Puiseux monoids and polynomial domains"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the JSON result instead of text");
  app.add_option("--max-k", o.max_k, "Largest geometric exponent tried (default 64, or FACTORLAB_BUDGET_K)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-coefficient", o.max_coefficient, "Largest multiplicity of one atom (default 1000000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-candidates", o.max_candidates, "Cap on enumeration work (default 2000000)")
      ->check(CLI::PositiveNumber);

  std::string op;
  auto* monoid = app.add_subcommand("monoid", "Queries on a monoid spec");
  monoid->add_option("op", op, "member|divides|atoms|is-atom|is-atomic|factorizations|atom-divisors|classify|archimedean")
      ->required()
      ->check(CLI::IsMember({"member", "divides", "atoms", "is-atom", "is-atomic", "factorizations", "atom-divisors",
                             "classify", "archimedean"}));
  monoid->add_option("--spec", o.spec_path, "Monoid spec JSON file")->required();
  monoid->add_option("--value", o.value, "Element, e.g. 3/2");
  monoid->add_option("--a", o.a, "First element");
  monoid->add_option("--b", o.b, "Second element");

  auto* algebra = app.add_subcommand("algebra", "Polynomial constructions");
  algebra->add_option("op", op, "primitive|gl-check|dpm-classify|l19-witness")
      ->required()
      ->check(CLI::IsMember({"primitive", "gl-check", "dpm-classify", "l19-witness"}));
  algebra->add_option("--input", o.input_path, "Polynomial JSON file")->required();

  auto* suite = app.add_subcommand("suite", "Scenario registry");
  suite->add_option("op", op, "list|run")->required()->check(CLI::IsMember({"list", "run"}));
  suite->add_option("--id", o.id, "Scenario id");
  suite->add_flag("--all", o.all, "Run every scenario");
  suite->add_flag("--inject-fault", o.inject_fault, "Perturb every monoid (mutation test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (monoid->parsed()) return run_monoid(op, o);
    if (algebra->parsed()) return run_algebra(op, o);
    return run_suite(op, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
