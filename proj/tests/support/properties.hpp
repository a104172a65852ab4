#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// runner. Each returns a Tally; callers choose the sample counts.

#include <sstream>
#include <string>

#include "factorlab/monoid_engine.hpp"
#include "factorlab/numerical_oracle.hpp"
#include "factorlab/property_lab.hpp"
#include "support/generators.hpp"

namespace factorlab::testing {

struct Tally {
  long samples = 0;
  long nontrivial = 0;  // samples whose antecedent held
  long violations = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (violations++ == 0) first_failure = what;
  }
  bool ok() const { return violations == 0; }
};

inline std::string show(const MonoidSpec& spec, const Rational& q) {
  std::ostringstream os;
  os << describe(spec) << " q=" << q;
  return os.str();
}

/// Scaled oracle bound for a finitely generated spec: twice the largest
/// generator plus twice the smallest, which keeps factorization lists short.
inline long long oracle_bound(const MixedSpec& spec) {
  mpz_class scale = 1;
  for (const auto& g : spec.finite) scale = lcm(scale, g.den());
  long long lo = 0, hi = 0;
  for (const auto& g : spec.finite) {
    long long s = (g * Rational(scale)).num().get_si();
    hi = std::max(hi, s);
    lo = lo == 0 ? s : std::min(lo, s);
  }
  return 2 * hi + 2 * lo + 20;
}

/// member, atoms and factorizations against the numerical oracle on every
/// value up to the bound.
inline void oracle_equivalence(const MixedSpec& spec, Tally& tally) {
  MonoidSpec m = spec;
  OracleTables oracle = numerical_oracle(m, oracle_bound(spec));
  ++tally.samples;
  SetDescriptor engine_atoms = atoms(m);
  if (engine_atoms != make_finite_set(oracle.atom_values()))
    tally.fail(describe(m) + " atoms " + describe(engine_atoms));
  for (long long x = 0; x <= oracle.bound; ++x) {
    Rational q = oracle.value(x);
    Membership got = member(m, q);
    if (got.truth != to_truth(oracle.member[x])) {
      tally.fail(show(m, q) + " member");
      continue;
    }
    if (x == 0 || !oracle.member[x]) continue;
    FactorizationSet fs = factorizations(m, q);
    if (!fs.complete || !fs.finite() || fs.listed != oracle.factorizations_of(x))
      tally.fail(show(m, q) + " factorizations");
  }
}

/// q - c/p^k in M implies q - c/p^(k+1) in M.
inline void monotonicity_sample(Rng& rng, Tally& tally) {
  MixedSpec spec = random_mixed_spec(rng);
  if (spec.geometric.empty()) spec.geometric.push_back({random_rational(rng, 12, 6), random_prime(rng)});
  MonoidSpec m = spec;
  const auto& family = spec.geometric[static_cast<std::size_t>(uniform(rng, 0, spec.geometric.size() - 1))];
  auto k = static_cast<unsigned>(uniform(rng, 0, 10));
  Rational q = random_member(rng, m);
  if (uniform(rng, 0, 1)) q += family.element(k);
  ++tally.samples;
  Rational first = q - family.element(k);
  if (first.sign() < 0 || member(m, first).truth != Truth::yes) return;
  ++tally.nontrivial;
  if (member(m, q - family.element(k + 1)).truth != Truth::yes)
    tally.fail(show(m, q) + " k=" + std::to_string(k));
}

/// divides(a, b) iff b - a is a member.
inline void duality_sample(Rng& rng, Tally& tally) {
  MonoidSpec spec = random_spec(rng);
  Rational a = random_member(rng, spec);
  Rational b = random_member(rng, spec);
  if (uniform(rng, 0, 1)) b += a;
  ++tally.samples;
  Truth lhs = divides(spec, a, b);
  Rational diff = b - a;
  Truth rhs = diff.sign() < 0 ? Truth::no : member(spec, diff).truth;
  if (lhs == Truth::yes) ++tally.nontrivial;
  if (lhs != rhs) tally.fail(show(spec, b) + " a=" + a.str());
}

/// Finite sets compare by size, families by their interval transported by
/// lambda, the rest by kind.
inline bool same_shape(const SetDescriptor& a, const SetDescriptor& b, const Rational& lambda) {
  if (a.index() != b.index()) return false;
  if (const auto* f = std::get_if<FiniteSet>(&a)) return f->elements.size() == std::get<FiniteSet>(b).elements.size();
  if (const auto* fa = std::get_if<InfiniteFamily>(&a)) {
    RationalInterval x = fa->interval;
    x.lo *= lambda;
    x.hi *= lambda;
    return x == std::get<InfiniteFamily>(b).interval;
  }
  return true;
}

/// member, is_atom, is_atomic, factorization counts and atom-divisor counts
/// are unchanged when the spec and the element are both scaled by lambda.
inline void scaling_sample(Rng& rng, Tally& tally, int elements = 4) {
  MonoidSpec spec = random_spec(rng);
  Rational lambda = random_rational(rng, 9, 9);
  MonoidSpec scaled = scale(spec, lambda);
  ++tally.samples;
  for (int i = 0; i < elements; ++i) {
    Rational q = uniform(rng, 0, 2) ? random_member(rng, spec) : random_value(rng, 6, 6);
    Rational lq = q * lambda;
    Truth in = member(spec, q).truth;
    if (in != member(scaled, lq).truth) {
      tally.fail(show(spec, q) + " member under lambda=" + lambda.str());
      continue;
    }
    if (in != Truth::yes || q.is_zero()) continue;
    ++tally.nontrivial;
    if (is_atom(spec, q) != is_atom(scaled, lq)) tally.fail(show(spec, q) + " is_atom");
    if (is_atomic(spec, q).state != is_atomic(scaled, lq).state) tally.fail(show(spec, q) + " is_atomic");
    FactorizationSet f1 = factorizations(spec, q), f2 = factorizations(scaled, lq);
    if (f1.listed.size() != f2.listed.size() || f1.families.size() != f2.families.size())
      tally.fail(show(spec, q) + " factorization count");
    if (!same_shape(atom_divisors(spec, q), atom_divisors(scaled, lq), lambda))
      tally.fail(show(spec, q) + " atom divisor count");
  }
}

/// classify never contradicts an implication, and every Refuted verdict's
/// witness survives recomputation.
inline void lattice_sample(Rng& rng, Tally& tally, bool check_witnesses = true) {
  MonoidSpec spec = random_spec(rng);
  PropertyProfile profile = classify(spec);
  ++tally.samples;
  auto violations = check_lattice(profile);
  if (!violations.empty())
    tally.fail(describe(spec) + " " + to_string(violations[0].from) + " => " + to_string(violations[0].to));
  if (!check_witnesses) return;
  for (const auto& [property, verdict] : profile.verdicts) {
    if (verdict.refuted()) ++tally.nontrivial;
    if (!reverify(spec, property, verdict)) tally.fail(describe(spec) + " witness for " + to_string(property));
  }
}

/// n = least integer with n*a > b, found by counting up; n - 1 must fail.
inline void archimedean_sample(Rng& rng, Tally& tally) {
  MonoidSpec spec = random_spec(rng);
  Rational a;
  while (a.is_zero()) a = random_member(rng, spec);
  Rational b = random_member(rng, spec) * Rational(uniform(rng, 1, 5));
  ++tally.samples;
  mpz_class n = archimedean_check(spec, a, b);
  mpz_class expected = 1;
  while (Rational(expected) * a <= b) ++expected;
  bool minimal = n >= 1 && Rational(n) * a > b && (n == 1 || Rational(mpz_class(n - 1)) * a <= b);
  if (n != expected || !minimal) tally.fail(show(spec, b) + " a=" + a.str() + " n=" + n.get_str());
}

}  // namespace factorlab::testing
