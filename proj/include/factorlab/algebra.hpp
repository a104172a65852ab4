#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "factorlab/monoid_spec.hpp"
#include "factorlab/verdict.hpp"

namespace factorlab {

/// Numerical monoid given by positive integer generators.
struct NumericalSemigroup {
  std::vector<unsigned long> generators;  // ascending, distinct

  bool contains(unsigned long e) const;  // 0 counts as a member
  MonoidSpec spec() const;
  std::string str() const;
  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
};

NumericalSemigroup make_semigroup(std::vector<unsigned long> generators);

/// Polynomial in Y over Q with exponents in a numerical monoid.
struct SemiPoly {
  std::map<unsigned long, Rational> terms;  // nonzero coefficients only

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  friend bool operator==(const SemiPoly&, const SemiPoly&) = default;
};

/// Polynomial in X whose coefficients are SemiPolys over one semigroup.
struct BiPoly {
  NumericalSemigroup semigroup;
  std::map<unsigned long, SemiPoly> terms;  // X-degree -> nonzero coefficient

  bool is_zero() const { return terms.empty(); }
  unsigned long degree() const;
  /// "Y^4*X^2 - Y^6" style rendering.
  std::string str() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;
};

struct BiTerm {
  unsigned long xdeg = 0;
  unsigned long yexp = 0;
  Rational coeff;
};

/// Sums repeated (xdeg, yexp) pairs and drops zeros. Rejects Y-exponents
/// outside the semigroup.
BiPoly make_bipoly(const NumericalSemigroup& semigroup, const std::vector<BiTerm>& terms);
std::vector<BiTerm> bipoly_terms(const BiPoly& f);

/// Nonzero d in S with e - d in S for every e in exps, ascending.
std::vector<unsigned long> ns_common_divisors(const NumericalSemigroup& semigroup,
                                              const std::vector<unsigned long>& exps);

BiPoly bipoly_mul(const BiPoly& f, const BiPoly& g);

struct Primitivity {
  bool primitive = false;
  std::vector<unsigned long> common_divisors;
  std::optional<unsigned long> certificate;  // least common divisor Y^d
};

/// Decided for monomial coefficients only; other inputs throw
/// Error(unsupported).
Primitivity is_primitive(const BiPoly& f);

struct GlReport {
  Primitivity f;
  Primitivity g;
  Primitivity product;
  BiPoly product_poly;
  bool preconditions_hold = false;  // f and g primitive
  bool counterexample = false;      // preconditions hold, product not primitive
  std::string note;
};

GlReport gl_product_check(const BiPoly& f, const BiPoly& g);

/// Z + XQ[X] and Z + XZ + X^2 Q[X].
enum class DomainVariant { zxq, l19 };

const char* to_string(DomainVariant variant);
std::optional<DomainVariant> domain_variant_from_string(std::string_view name);

/// Rational polynomial tagged with the domain it is meant to live in. The
/// coefficient list may violate the domain constraints; see domain_violation.
struct DPlusMPoly {
  DomainVariant variant = DomainVariant::zxq;
  std::vector<Rational> coefficients;  // index = degree, no trailing zeros

  bool is_zero() const { return coefficients.empty(); }
  Rational coefficient(std::size_t degree) const;
  std::string str() const;
  friend bool operator==(const DPlusMPoly&, const DPlusMPoly&) = default;
};

DPlusMPoly make_dpm(DomainVariant variant, std::vector<Rational> coefficients);
/// Description of the first violated constraint, if any.
std::optional<std::string> domain_violation(const DPlusMPoly& f);
DPlusMPoly dpm_mul(const DPlusMPoly& f, const DPlusMPoly& g);
DPlusMPoly dpm_scale(const DPlusMPoly& f, const Rational& c);

struct PrimeSplit {
  std::uint64_t p = 0;
  DPlusMPoly quotient;  // f / p
  bool quotient_in_domain = false;
  bool quotient_nonunit = false;
};

struct ConstantSplitCheck {
  std::uint64_t candidates = 0;  // constants n/m tried, m | 10^4
  std::uint64_t splits = 0;      // f = c * h with c, h nonunits of the domain
  bool consistent = true;        // agrees with the criterion
  std::string note;
};

struct DpmClassification {
  bool is_unit = false;
  Verdict is_atomic;
  Verdict is_furstenberg;
  std::vector<PrimeSplit> prime_splits;  // f = p * (f/p) for p in {2, 3, 5}
  ConstantSplitCheck cross_check;
};

/// Rejects zero and polynomials outside the domain.
DpmClassification dpm_classify(const DPlusMPoly& f);

struct WitnessCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct L19Witness {
  VerdictState state = VerdictState::unknown;  // proved when every check passes
  DPlusMPoly f;
  bool f_in_domain = false;
  unsigned long m = 0;  // degree of the first nonzero coefficient
  Rational a_m;
  DPlusMPoly multiplier;  // (1/a_m^2) X^2
  DPlusMPoly g;           // multiplier * f
  std::vector<WitnessCheck> checks;
  std::string note;

  bool all_pass() const;
};

/// For f with non-integer leading-order coefficient a_m, builds
/// g = (1/a_m^2) X^2 f and checks: g in the domain, g atomic, f | g, f not
/// atomic. f is read in Q[X]; whether it lies in the domain is reported
/// separately. Needs 1/a_m integral, otherwise the state is unknown.
L19Witness l19_ca_witness(const DPlusMPoly& f);

}  // namespace factorlab
