#include "factorlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "factorlab/error.hpp"
#include "factorlab/numerical_oracle.hpp"

namespace factorlab {

namespace {

std::string power(const char* var, unsigned long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// Appends "c*mono" to a sum, folding the sign into the separator.
void append_term(std::string& out, const Rational& c, const std::string& mono) {
  bool negative = c.sign() < 0;
  Rational mag = negative ? -c : c;
  if (out.empty())
    out = negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (mono.empty())
    out += mag.str();
  else if (mag == Rational(1))
    out += mono;
  else
    out += mag.str() + "*" + mono;
}

}  // namespace

bool NumericalSemigroup::contains(unsigned long e) const {
  if (e == 0) return true;
  long long bound = std::max<long long>(static_cast<long long>(e), static_cast<long long>(generators.back()));
  return numerical_oracle(spec(), bound).member[e];
}

MonoidSpec NumericalSemigroup::spec() const {
  MixedSpec out;
  for (unsigned long g : generators) out.finite.emplace_back(static_cast<long>(g));
  return out;
}

std::string NumericalSemigroup::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + std::to_string(generators[i]);
  return out + ">";
}

NumericalSemigroup make_semigroup(std::vector<unsigned long> generators) {
  if (generators.empty()) throw invalid_argument("semigroup needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == 0) throw invalid_argument("semigroup[" + std::to_string(i) + "] must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return NumericalSemigroup{std::move(generators)};
}

unsigned long BiPoly::degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }

std::string BiPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    for (auto jt = it->second.terms.rbegin(); jt != it->second.terms.rend(); ++jt) {
      std::string y = power("Y", jt->first);
      std::string x = power("X", it->first);
      append_term(out, jt->second, y.empty() ? x : (x.empty() ? y : y + "*" + x));
    }
  return out;
}

BiPoly make_bipoly(const NumericalSemigroup& semigroup, const std::vector<BiTerm>& terms) {
  BiPoly f{semigroup, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!semigroup.contains(t.yexp))
      throw invalid_argument("terms[" + std::to_string(i) + "].yexp " + std::to_string(t.yexp) + " is not in " +
                             semigroup.str());
    f.terms[t.xdeg].terms[t.yexp] += t.coeff;
  }
  for (auto it = f.terms.begin(); it != f.terms.end();) {
    auto& coeff = it->second.terms;
    std::erase_if(coeff, [](const auto& kv) { return kv.second.is_zero(); });
    it = coeff.empty() ? f.terms.erase(it) : std::next(it);
  }
  return f;
}

std::vector<BiTerm> bipoly_terms(const BiPoly& f) {
  std::vector<BiTerm> out;
  for (const auto& [xdeg, coeff] : f.terms)
    for (const auto& [yexp, c] : coeff.terms) out.push_back({xdeg, yexp, c});
  return out;
}

std::vector<unsigned long> ns_common_divisors(const NumericalSemigroup& semigroup,
                                              const std::vector<unsigned long>& exps) {
  if (exps.empty()) throw invalid_argument("exponent set must be nonempty");
  unsigned long top = *std::max_element(exps.begin(), exps.end());
  long long bound = std::max<long long>(static_cast<long long>(top), static_cast<long long>(semigroup.generators.back()));
  OracleTables tables = numerical_oracle(semigroup.spec(), bound);
  for (unsigned long e : exps)
    if (!tables.member[e]) throw invalid_argument("exponent " + std::to_string(e) + " is not in " + semigroup.str());
  unsigned long least = *std::min_element(exps.begin(), exps.end());
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= least; ++d) {
    if (!tables.member[d]) continue;
    if (std::all_of(exps.begin(), exps.end(), [&](unsigned long e) { return tables.member[e - d]; })) out.push_back(d);
  }
  return out;
}

BiPoly bipoly_mul(const BiPoly& f, const BiPoly& g) {
  if (!(f.semigroup == g.semigroup))
    throw invalid_argument("semigroups differ: " + f.semigroup.str() + " vs " + g.semigroup.str());
  std::vector<BiTerm> terms;
  for (const auto& a : bipoly_terms(f))
    for (const auto& b : bipoly_terms(g)) terms.push_back({a.xdeg + b.xdeg, a.yexp + b.yexp, a.coeff * b.coeff});
  return make_bipoly(f.semigroup, terms);
}

Primitivity is_primitive(const BiPoly& f) {
  if (f.is_zero()) throw invalid_argument("the zero polynomial has no content");
  std::vector<unsigned long> exps;
  for (const auto& [xdeg, coeff] : f.terms) {
    if (!coeff.is_monomial())
      throw Error(ErrorCode::unsupported, "coefficient of X^" + std::to_string(xdeg) +
                                              " is not a monomial in Y; primitivity is decided for monomial "
                                              "coefficients only");
    exps.push_back(coeff.terms.begin()->first);
  }
  Primitivity out;
  out.common_divisors = ns_common_divisors(f.semigroup, exps);
  out.primitive = out.common_divisors.empty();
  if (!out.primitive) out.certificate = out.common_divisors.front();
  return out;
}

GlReport gl_product_check(const BiPoly& f, const BiPoly& g) {
  GlReport report;
  report.f = is_primitive(f);
  report.g = is_primitive(g);
  report.product_poly = bipoly_mul(f, g);
  report.product = is_primitive(report.product_poly);
  report.preconditions_hold = report.f.primitive && report.g.primitive;
  report.counterexample = report.preconditions_hold && !report.product.primitive;
  if (!report.preconditions_hold)
    report.note = std::string("precondition fails: ") + (report.f.primitive ? "g" : "f") + " is not primitive";
  else if (report.counterexample)
    report.note = "product of primitive polynomials is not primitive";
  else
    report.note = "product is primitive";
  return report;
}

const char* to_string(DomainVariant variant) { return variant == DomainVariant::zxq ? "zxq" : "l19"; }

std::optional<DomainVariant> domain_variant_from_string(std::string_view name) {
  if (name == "zxq") return DomainVariant::zxq;
  if (name == "l19") return DomainVariant::l19;
  return std::nullopt;
}

Rational DPlusMPoly::coefficient(std::size_t degree) const {
  return degree < coefficients.size() ? coefficients[degree] : Rational();
}

std::string DPlusMPoly::str() const {
  if (coefficients.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coefficients.size(); ++d)
    if (!coefficients[d].is_zero()) append_term(out, coefficients[d], power("X", d));
  return out;
}

DPlusMPoly make_dpm(DomainVariant variant, std::vector<Rational> coefficients) {
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
  return DPlusMPoly{variant, std::move(coefficients)};
}

std::optional<std::string> domain_violation(const DPlusMPoly& f) {
  std::size_t integral = f.variant == DomainVariant::zxq ? 1 : 2;
  for (std::size_t d = 0; d < integral; ++d)
    if (!f.coefficient(d).is_integer())
      return "coefficients[" + std::to_string(d) + "] must be an integer in " + to_string(f.variant) + ", got " +
             f.coefficient(d).str();
  return std::nullopt;
}

DPlusMPoly dpm_mul(const DPlusMPoly& f, const DPlusMPoly& g) {
  if (f.is_zero() || g.is_zero()) return make_dpm(f.variant, {});
  std::vector<Rational> out(f.coefficients.size() + g.coefficients.size() - 1);
  for (std::size_t i = 0; i < f.coefficients.size(); ++i)
    for (std::size_t j = 0; j < g.coefficients.size(); ++j) out[i + j] += f.coefficients[i] * g.coefficients[j];
  return make_dpm(f.variant, std::move(out));
}

DPlusMPoly dpm_scale(const DPlusMPoly& f, const Rational& c) {
  std::vector<Rational> out = f.coefficients;
  for (auto& x : out) x *= c;
  return make_dpm(f.variant, std::move(out));
}

namespace {

bool dpm_is_unit(const DPlusMPoly& f) {
  return f.coefficients.size() == 1 && (f.coefficients[0] == Rational(1) || f.coefficients[0] == Rational(-1));
}

std::size_t first_nonzero(const DPlusMPoly& f) {
  std::size_t m = 0;
  while (f.coefficients[m].is_zero()) ++m;
  return m;
}

// Z + XQ[X]: atomic iff f(0) != 0. Z + XZ + X^2 Q[X]: atomic iff the
// lowest-order nonzero coefficient is an integer.
bool criterion_atomic(const DPlusMPoly& f) {
  if (f.variant == DomainVariant::zxq) return !f.coefficient(0).is_zero();
  return f.coefficients[first_nonzero(f)].is_integer();
}

// gcd of the coefficients constrained to be integers; an integer c > 0
// divides f in the domain iff it divides this value.
mpz_class constrained_gcd(const DPlusMPoly& f) {
  std::size_t integral = f.variant == DomainVariant::zxq ? 1 : 2;
  mpz_class g = 0;
  for (std::size_t d = 0; d < integral; ++d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.coefficient(d).num().get_mpz_t());
  return g;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Constant splits f = c * h, c = n/m with m | 10^4. A constant lies in
// either domain iff it is an integer. When the constrained coefficients are
// not all zero, every split constant must divide their gcd; for non-atomic
// f every m > 1 must split off.
ConstantSplitCheck constant_split_check(const DPlusMPoly& f, bool atomic) {
  constexpr long kDenominatorBound = 10000;
  ConstantSplitCheck check;
  std::vector<mpz_class> denominators = positive_divisors(mpz_class(kDenominatorBound));
  if (atomic) {
    mpz_class anchor = constrained_gcd(f);
    if (anchor == 0) {
      check.note = "every integer divides f; atomicity rests on the criterion alone";
      return check;
    }
    for (const auto& den : denominators)
      for (const auto& num : positive_divisors(anchor * den)) {
        ++check.candidates;
        Rational c(num, den);
        if (!c.is_integer() || c == Rational(1)) continue;
        DPlusMPoly h = dpm_scale(f, c.reciprocal());
        if (domain_violation(h) || dpm_is_unit(h)) continue;
        ++check.splits;
        if (anchor % c.num() != 0) check.consistent = false;
      }
    check.note = "every constant split divides " + anchor.get_str();
  } else {
    for (const auto& den : denominators) {
      if (den == 1) continue;
      ++check.candidates;
      DPlusMPoly h = dpm_scale(f, Rational(1) / Rational(den));
      if (!domain_violation(h) && !dpm_is_unit(h))
        ++check.splits;
      else
        check.consistent = false;
    }
    check.note = "f = m * (f/m) with f/m in the domain for every divisor m > 1 of 10^4";
  }
  return check;
}

}  // namespace

DpmClassification dpm_classify(const DPlusMPoly& f) {
  if (f.is_zero()) throw invalid_argument("coefficients: the zero polynomial is not classified");
  if (auto violation = domain_violation(f)) throw invalid_argument(*violation);
  DpmClassification out;
  out.is_unit = dpm_is_unit(f);
  auto& atomic = out.is_atomic;
  auto& furstenberg = out.is_furstenberg;
  atomic.method = Method::criterion;
  furstenberg.method = Method::criterion;
  if (out.is_unit) {
    atomic.state = VerdictState::proved;
    atomic.witness.note = "unit: empty product of atoms";
    furstenberg.state = VerdictState::refuted;
    furstenberg.witness.note = "units have no irreducible divisor";
    return out;
  }

  bool is_atomic = criterion_atomic(f);
  if (is_atomic) {
    atomic.state = VerdictState::proved;
    atomic.witness.note = "lowest-order nonzero coefficient is an integer";
  } else {
    atomic.state = VerdictState::refuted;
    atomic.witness.note = "f = p * (f/p) with f/p a nonunit of the domain, for every prime p; checked for 2, 3, 5";
    for (std::uint64_t p : {2, 3, 5}) {
      PrimeSplit split;
      split.p = p;
      split.quotient = dpm_scale(f, Rational(1) / Rational(static_cast<long>(p)));
      split.quotient_in_domain = !domain_violation(split.quotient);
      split.quotient_nonunit = !dpm_is_unit(split.quotient);
      out.prime_splits.push_back(std::move(split));
    }
  }
  out.cross_check = constant_split_check(f, is_atomic);

  // A prime p divides f in the domain iff f/p still satisfies the
  // integrality constraints; primes are atoms of both domains.
  furstenberg.state = VerdictState::proved;
  mpz_class constant = constrained_gcd(f);
  if (!is_atomic || constant == 0) {
    furstenberg.witness.elements.emplace_back("p", Rational(2));
    furstenberg.witness.note = "the prime 2 divides f";
    if (is_atomic) furstenberg.witness.note += "; f is also atomic";
  } else {
    std::optional<long> prime;
    for (long p = 2; constant > 1 && p <= 1000 && !prime; ++p) {
      if (!is_prime(static_cast<std::uint64_t>(p)) || constant % p != 0) continue;
      if (!domain_violation(dpm_scale(f, Rational(1) / Rational(p)))) prime = p;
    }
    if (prime) {
      furstenberg.witness.elements.emplace_back("p", Rational(*prime));
      furstenberg.witness.note = "the prime " + std::to_string(*prime) + " divides f";
    } else {
      furstenberg.witness.note = "f is atomic, so any atom of a factorization divides it";
    }
  }
  return out;
}

bool L19Witness::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

L19Witness l19_ca_witness(const DPlusMPoly& input) {
  if (input.variant != DomainVariant::l19) throw invalid_argument("variant must be l19");
  L19Witness w;
  w.f = make_dpm(DomainVariant::l19, input.coefficients);
  if (w.f.is_zero()) throw invalid_argument("coefficients: f must be nonzero");
  w.f_in_domain = !domain_violation(w.f);
  w.m = first_nonzero(w.f);
  w.a_m = w.f.coefficients[w.m];
  if (w.a_m.is_integer())
    throw invalid_argument("first nonzero coefficient " + w.a_m.str() + " is an integer; f is atomic");

  std::vector<Rational> multiplier(3);
  multiplier[2] = (w.a_m * w.a_m).reciprocal();
  w.multiplier = make_dpm(DomainVariant::l19, multiplier);
  w.g = dpm_mul(w.multiplier, w.f);

  auto add = [&](std::string name, bool pass, std::string detail) {
    w.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto g_violation = domain_violation(w.g);
  add("g_in_domain", !g_violation, g_violation ? *g_violation : "coefficients of 1 and X are integers");
  add("g_atomic", criterion_atomic(w.g),
      "lowest-order nonzero coefficient of g is " + w.g.coefficients[first_nonzero(w.g)].str());
  auto q_violation = domain_violation(w.multiplier);
  bool product_matches = dpm_mul(w.f, w.multiplier) == w.g;
  add("f_divides_g", !q_violation && product_matches,
      "g = (" + w.multiplier.str() + ") * f" + (q_violation ? "; quotient outside the domain" : ""));
  add("f_not_atomic", !criterion_atomic(w.f), "lowest-order nonzero coefficient of f is " + w.a_m.str());

  Rational inverse = w.a_m.reciprocal();
  if (!inverse.is_integer()) {
    w.state = VerdictState::unknown;
    w.note = "1/a_m = " + inverse.str() +
             " is not an integer: g then starts with a non-integer coefficient, so the construction does not "
             "give an atomic multiple";
  } else {
    w.state = w.all_pass() ? VerdictState::proved : VerdictState::refuted;
    w.note = w.all_pass() ? "f divides the atomic element g but is not atomic" : "a check failed";
  }
  if (!w.f_in_domain) w.note += "; f itself lies outside the domain (" + *domain_violation(w.f) + ")";
  return w;
}

}  // namespace factorlab
