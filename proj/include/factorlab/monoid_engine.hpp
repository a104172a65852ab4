#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factorlab/monoid_spec.hpp"
#include "factorlab/verdict.hpp"

namespace factorlab {

/// Three-valued answer for decision procedures that may run out of budget.
enum class Truth { no, yes, undetermined };

const char* to_string(Truth truth);
inline Truth to_truth(bool value) { return value ? Truth::yes : Truth::no; }

/// Contribution m * c / p^k of one geometric family, k minimal.
struct GeometricTerm {
  mpz_class m;
  unsigned k = 0;
  friend bool operator==(const GeometricTerm&, const GeometricTerm&) = default;
};

/// Witness that an element lies in a Mixed monoid: one coefficient per
/// finite generator and one term per geometric family.
struct Representation {
  std::vector<mpz_class> finite;
  std::vector<GeometricTerm> geometric;

  Rational value(const MixedSpec& spec) const;
};

struct Membership {
  Truth truth = Truth::no;
  std::optional<Representation> certificate;  // Mixed specs, truth == yes
  std::string note;
};

/// The exponent k beyond which family `family` never needs to go when
/// representing q: any representation of q uses u_j = m/p^k with k at most
/// this value, from a p-adic valuation comparison of both sides.
unsigned geometric_exponent_bound(const MixedSpec& spec, std::size_t family, const Rational& q);

Membership member(const MonoidSpec& spec, const Rational& q, const Budget& budget = kDefaultBudget);

/// b - a in the monoid. Both arguments must be members.
Truth divides(const MonoidSpec& spec, const Rational& a, const Rational& b, const Budget& budget = kDefaultBudget);

/// Nonzero member admitting no split into two nonzero members.
Truth is_atom(const MonoidSpec& spec, const Rational& q, const Budget& budget = kDefaultBudget);

SetDescriptor atoms(const MonoidSpec& spec, const Budget& budget = kDefaultBudget);

/// Proved with one factorization as witness, or Refuted with a reason.
/// Zero is answered as the empty factorization with the note "unit".
Verdict is_atomic(const MonoidSpec& spec, const Rational& q, const Budget& budget = kDefaultBudget);

/// All multisets of exactly `parts` atoms drawn from `range` summing to `total`.
struct PartFamily {
  unsigned long parts = 0;
  RationalInterval range;
  Rational total;
  friend bool operator==(const PartFamily&, const PartFamily&) = default;
};

struct FactorizationSet {
  std::vector<Factorization> listed;  // lexicographic order of sorted parts
  std::vector<PartFamily> families;   // infinite families, by part count
  bool complete = true;
  std::string note;

  bool finite() const { return families.empty(); }
};

FactorizationSet factorizations(const MonoidSpec& spec, const Rational& q, const Budget& budget = kDefaultBudget);

SetDescriptor atom_divisors(const MonoidSpec& spec, const Rational& q, const Budget& budget = kDefaultBudget);

/// Every factorization of q over a finite, ascending atom list, in
/// lexicographic order. Returns nullopt when Budget::max_candidates is hit.
std::optional<std::vector<Factorization>> enumerate_factorizations(const std::vector<Rational>& atom_list,
                                                                   const Rational& q, const Budget& budget);

}  // namespace factorlab
