#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/monoid_spec.hpp"

namespace factorlab {

enum class VerdictState { proved, refuted, unknown };

/// How a verdict was reached. `criterion` marks answers taken from a
/// closed-form membership criterion rather than a search or an argument
/// over the whole family.
enum class Method { analytic, search, oracle, criterion };

struct Witness {
  /// Named elements, e.g. {"t", 6}, {"d", 3}.
  std::vector<std::pair<std::string, Rational>> elements;
  std::vector<Factorization> factorizations;
  std::optional<RationalInterval> family;
  std::string note;

  const Rational* find(std::string_view name) const;
};

struct BudgetUsed {
  std::uint32_t max_k = 0;
  std::uint64_t candidates = 0;
};

struct Verdict {
  VerdictState state = VerdictState::unknown;
  Witness witness;
  Method method = Method::search;
  BudgetUsed budget_used;

  bool proved() const { return state == VerdictState::proved; }
  bool refuted() const { return state == VerdictState::refuted; }
  bool unknown() const { return state == VerdictState::unknown; }
};

const char* to_string(VerdictState state);
const char* to_string(Method method);

inline const Rational* Witness::find(std::string_view name) const {
  for (const auto& [key, value] : elements)
    if (key == name) return &value;
  return nullptr;
}

inline const char* to_string(VerdictState state) {
  switch (state) {
    case VerdictState::proved: return "proved";
    case VerdictState::refuted: return "refuted";
    case VerdictState::unknown: return "unknown";
  }
  return "unknown";
}

inline const char* to_string(Method method) {
  switch (method) {
    case Method::analytic: return "analytic";
    case Method::search: return "search";
    case Method::oracle: return "oracle";
    case Method::criterion: return "criterion";
  }
  return "search";
}

}  // namespace factorlab
