#pragma once

#include <vector>

#include "factorlab/monoid_spec.hpp"

namespace factorlab {

/// Brute-force tables for a finitely generated spec, computed on the
/// isomorphic numerical monoid obtained by clearing denominators. Used as
/// ground truth when testing the engine; shares no code with it.
struct OracleTables {
  mpz_class scale = 1;                  // lcm of generator denominators
  std::vector<long long> generators;    // scaled, sorted, distinct
  long long bound = 0;                  // scaled
  std::vector<bool> member;             // member[x]: x/scale lies in the monoid
  std::vector<long long> atoms;         // scaled, ascending
  /// factorizations[x]: coefficient vectors over `atoms`, lexicographic in
  /// the ascending part list.
  std::vector<std::vector<std::vector<long long>>> factorizations;

  Rational value(long long scaled) const;
  std::vector<Rational> atom_values() const;
  std::vector<Factorization> factorizations_of(long long scaled) const;
};

/// `bound` is in scaled units and must be at least the largest scaled
/// generator. Rejects specs with geometric or interval parts.
OracleTables numerical_oracle(const MonoidSpec& spec, long long bound);

}  // namespace factorlab
