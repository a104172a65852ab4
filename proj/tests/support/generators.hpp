#pragma once

// Seeded random generators for specs and elements.

#include <algorithm>
#include <random>
#include <vector>

#include "factorlab/monoid_spec.hpp"

namespace factorlab::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  return Rational(mpz_class(uniform(rng, 1, max_num)), mpz_class(uniform(rng, 1, max_den)));
}

/// Finitely generated spec: up to `max_gens` generators s/L with scaled
/// value s in [min_scaled, max_scaled] and L in {1, 2, 3, 4, 6}.
inline MixedSpec random_fg_spec(Rng& rng, int max_gens, long min_scaled, long max_scaled) {
  static constexpr long kScales[] = {1, 2, 3, 4, 6};
  long scale = kScales[uniform(rng, 0, 4)];
  MixedSpec spec;
  int n = static_cast<int>(uniform(rng, 1, max_gens));
  for (int i = 0; i < n; ++i) spec.finite.push_back(Rational(mpz_class(uniform(rng, min_scaled, max_scaled)), scale));
  return spec;
}

inline std::uint64_t random_prime(Rng& rng) {
  static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7};
  return kPrimes[uniform(rng, 0, 3)];
}

/// Mixed spec with 0-3 small finite generators and 0-`max_families`
/// geometric families over distinct primes.
inline MixedSpec random_mixed_spec(Rng& rng, int max_families = 1) {
  MixedSpec spec;
  int n = static_cast<int>(uniform(rng, 0, 3));
  for (int i = 0; i < n; ++i) spec.finite.push_back(random_rational(rng, 12, 6));
  int families = static_cast<int>(uniform(rng, 0, max_families));
  std::vector<std::uint64_t> used;
  for (int j = 0; j < families; ++j) {
    std::uint64_t p = random_prime(rng);
    if (std::find(used.begin(), used.end(), p) != used.end()) continue;
    used.push_back(p);
    spec.geometric.push_back({random_rational(rng, 12, 6), p});
  }
  if (spec.finite.empty() && spec.geometric.empty()) spec.finite.push_back(random_rational(rng, 12, 6));
  return spec;
}

/// Any supported spec: mostly Mixed, sometimes Interval.
inline MonoidSpec random_spec(Rng& rng, int max_families = 1) {
  if (uniform(rng, 0, 5) == 0) return IntervalSpec{random_rational(rng, 8, 4)};
  return random_mixed_spec(rng, max_families);
}

/// A random member: a small nonnegative combination of generators (Mixed)
/// or a rational >= t (Interval).
inline Rational random_member(Rng& rng, const MonoidSpec& spec) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec))
    return interval->t + Rational(mpz_class(uniform(rng, 0, 24)), mpz_class(uniform(rng, 1, 6)));
  const auto& mixed = std::get<MixedSpec>(spec);
  Rational q;
  for (const auto& g : mixed.finite) q += g * Rational(uniform(rng, 0, 3));
  for (const auto& family : mixed.geometric)
    q += family.element(static_cast<unsigned>(uniform(rng, 0, 4))) * Rational(uniform(rng, 0, 3));
  return q;
}

/// Rational in [0, max) with small denominator, not necessarily a member.
inline Rational random_value(Rng& rng, long max, long max_den) {
  long den = uniform(rng, 1, max_den);
  return Rational(mpz_class(uniform(rng, 0, max * den)), mpz_class(den));
}

}  // namespace factorlab::testing
