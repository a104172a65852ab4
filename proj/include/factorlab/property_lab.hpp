#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "factorlab/monoid_engine.hpp"
#include "factorlab/monoid_spec.hpp"
#include "factorlab/verdict.hpp"

namespace factorlab {

enum class Property {
  antimatter,
  atomic,
  furstenberg,
  completely_furstenberg,
  completely_atomic,
  idf,
  ridf,
  u_uf,
  u_ff,
  ap,
};

inline constexpr std::array<Property, 10> kAllProperties = {
    Property::antimatter, Property::atomic,           Property::furstenberg, Property::completely_furstenberg,
    Property::completely_atomic, Property::idf,       Property::ridf,        Property::u_uf,
    Property::u_ff,       Property::ap,
};

const char* to_string(Property property);
std::optional<Property> property_from_string(std::string_view name);

struct PropertyProfile {
  MonoidSpec spec;
  Budget budget;
  std::map<Property, Verdict> verdicts;
  /// "Every atomic element has finitely many factorizations", decided by
  /// counting directly. Kept apart from u_ff, which is completely_atomic and
  /// ridf together; the two readings differ on monoids that are not
  /// completely atomic.
  Verdict raw_finite_factorizations;

  const Verdict& at(Property property) const { return verdicts.at(property); }
};

PropertyProfile classify(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

/// Refuted with (t, d): t atomic, d a nonzero divisor of t that is not atomic.
Verdict witness_completely_atomic(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

/// Refuted with (t, d): t has an atom divisor, d a nonzero divisor of t without one.
Verdict witness_completely_furstenberg(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

/// Completely atomic and every atomic element has exactly one factorization.
Verdict u_uf_check(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

/// Every atom prime. Refuted with (a, x, y): a | x + y, a does not divide x or y.
Verdict ap_check(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

struct LatticeEdge {
  Property from;
  Property to;
  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

/// Direct implications between the properties.
const std::vector<LatticeEdge>& lattice_edges();
/// Every implication (transitive closure of lattice_edges) whose antecedent
/// is Proved while the consequent is Refuted. Unknowns never violate.
std::vector<LatticeEdge> check_lattice(const PropertyProfile& profile);

/// Least n with n*a > b; then b is not in n*a + M.
mpz_class archimedean_check(const MonoidSpec& spec, const Rational& a, const Rational& b,
                            const Budget& budget = kDefaultBudget);

/// Recomputes every sub-claim of a Refuted verdict's witness through the
/// engine. Verdicts that are not Refuted re-verify trivially.
bool reverify(const MonoidSpec& spec, Property property, const Verdict& verdict,
              const Budget& budget = kDefaultBudget);

}  // namespace factorlab
