#include "factorlab/monoid_engine.hpp"

#include <algorithm>
#include <limits>

#include "apery.hpp"
#include "factorlab/error.hpp"

namespace factorlab {

using detail::AperyTable;
using detail::BudgetExceeded;

const char* to_string(Truth truth) {
  switch (truth) {
    case Truth::no: return "false";
    case Truth::yes: return "true";
    case Truth::undetermined: return "undetermined";
  }
  return "undetermined";
}

Rational Representation::value(const MixedSpec& spec) const {
  Rational sum;
  for (std::size_t i = 0; i < finite.size() && i < spec.finite.size(); ++i)
    sum += spec.finite[i] * Rational(finite[i]);
  for (std::size_t j = 0; j < geometric.size() && j < spec.geometric.size(); ++j)
    sum += spec.geometric[j].element(geometric[j].k) * Rational(geometric[j].m);
  return sum;
}

namespace {

void require_nonnegative(const Rational& q, const char* what) {
  if (q.sign() < 0) throw invalid_argument(std::string(what) + " must be nonnegative, got " + q.str());
}

Error not_member(const Rational& q) {
  return Error(ErrorCode::not_member, q.str() + " is not an element of the monoid");
}

std::vector<Rational> distinct_sorted(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Membership in a Mixed monoid with each family j truncated at exponent
// exponents[j]; the truncated monoid is finitely generated.
std::optional<Representation> represent_truncated(const MixedSpec& spec, const std::vector<unsigned>& exponents,
                                                  const Rational& q, const Budget& budget) {
  std::vector<Rational> gens = spec.finite;
  for (std::size_t j = 0; j < spec.geometric.size(); ++j) gens.push_back(spec.geometric[j].element(exponents[j]));
  AperyTable table(gens, budget.max_candidates);
  auto coefficients = table.represent(q);
  if (!coefficients) return std::nullopt;

  Representation rep;
  rep.finite.assign(coefficients->begin(), coefficients->begin() + static_cast<long>(spec.finite.size()));
  for (std::size_t j = 0; j < spec.geometric.size(); ++j) {
    GeometricTerm term{(*coefficients)[spec.finite.size() + j], exponents[j]};
    mpz_class p = static_cast<unsigned long>(spec.geometric[j].p);
    if (term.m == 0) term.k = 0;
    while (term.k > 0 && term.m % p == 0) {
      term.m /= p;
      --term.k;
    }
    rep.geometric.push_back(term);
  }
  return rep;
}

Membership member_mixed(const MixedSpec& spec, const Rational& q, const Budget& budget) {
  Membership out;
  if (q.is_zero()) {
    out.truth = Truth::yes;
    out.certificate = Representation{std::vector<mpz_class>(spec.finite.size(), 0),
                                     std::vector<GeometricTerm>(spec.geometric.size())};
    return out;
  }
  bool capped = false;
  std::vector<unsigned> exponents;
  for (std::size_t j = 0; j < spec.geometric.size(); ++j) {
    unsigned k = geometric_exponent_bound(spec, j, q);
    if (spec.geometric.size() >= 2 && k > budget.max_k) {
      k = budget.max_k;
      capped = true;
    }
    exponents.push_back(k);
  }
  try {
    if (auto rep = represent_truncated(spec, exponents, q, budget)) {
      out.truth = Truth::yes;
      out.certificate = std::move(rep);
      return out;
    }
  } catch (const BudgetExceeded& e) {
    out.truth = Truth::undetermined;
    out.note = e.what();
    return out;
  }
  if (capped) {
    out.truth = Truth::undetermined;
    out.note = "geometric exponent budget " + std::to_string(budget.max_k) + " exhausted";
    return out;
  }
  out.truth = Truth::no;
  return out;
}

// Distinct finite generators strictly below q, ascending.
std::vector<Rational> finite_below(const MixedSpec& spec, const Rational& q) {
  std::vector<Rational> out;
  for (const auto& g : distinct_sorted(spec.finite))
    if (g < q) out.push_back(g);
  return out;
}

Truth is_atom_mixed(const MixedSpec& spec, const Rational& q, const Budget& budget) {
  bool undetermined = false;
  // A nonzero split q = x + y can always be rewritten so that x is a single
  // generator, so it suffices to subtract generators.
  for (const auto& g : finite_below(spec, q)) {
    Truth t = member_mixed(spec, q - g, budget).truth;
    if (t == Truth::yes) return Truth::no;
    if (t == Truth::undetermined) undetermined = true;
  }
  // Family j: some q - c/p^k lies in M iff q has a representation with a
  // positive j-part, whose exponent is bounded; one step past the bound
  // keeps the remainder nonzero.
  for (std::size_t j = 0; j < spec.geometric.size(); ++j) {
    unsigned k = geometric_exponent_bound(spec, j, q);
    bool capped = false;
    if (spec.geometric.size() >= 2 && k + 1 > budget.max_k) {
      k = budget.max_k == 0 ? 0 : budget.max_k - 1;
      capped = true;
    }
    Rational rest = q - spec.geometric[j].element(k + 1);
    if (rest.sign() <= 0) continue;
    Truth t = member_mixed(spec, rest, budget).truth;
    if (t == Truth::yes) return Truth::no;
    if (t == Truth::undetermined || capped) undetermined = true;
  }
  return undetermined ? Truth::undetermined : Truth::yes;
}

void require_member(const MonoidSpec& spec, const Rational& q, const Budget& budget, bool& undetermined) {
  Truth t = member(spec, q, budget).truth;
  if (t == Truth::no) throw not_member(q);
  if (t == Truth::undetermined) undetermined = true;
}

template <typename Int>
class FactorizationEnumerator {
 public:
  FactorizationEnumerator(std::vector<Int> atoms, Int target, std::uint64_t limit,
                          const std::vector<std::vector<bool>>* reach)
      : atoms_(std::move(atoms)), target_(target), limit_(limit), reach_(reach), counts_(atoms_.size(), 0) {}

  bool run() {
    if (atoms_.empty()) return true;
    return visit(0, target_);
  }

  const std::vector<std::vector<Int>>& results() const { return results_; }

 private:
  bool reachable(std::size_t index, const Int& rest) const {
    if (reach_ == nullptr) return true;
    return (*reach_)[index][static_cast<std::size_t>(to_index(rest))];
  }

  static long long to_index(const Int& value) {
    if constexpr (std::is_same_v<Int, mpz_class>)
      return value.get_si();
    else
      return static_cast<long long>(value);
  }

  bool visit(std::size_t index, Int rest) {
    const Int& atom = atoms_[index];
    if (index + 1 == atoms_.size()) {
      if (rest % atom != 0) return true;
      counts_[index] = rest / atom;
      results_.push_back(counts_);
      counts_[index] = 0;
      return results_.size() <= limit_;
    }
    Int copies = 0;
    for (Int used = 0; used <= rest; used += atom, copies += 1) {
      Int left = rest - used;
      if (!reachable(index + 1, left)) continue;
      counts_[index] = copies;
      if (!visit(index + 1, left)) return false;
    }
    counts_[index] = 0;
    return true;
  }

  std::vector<Int> atoms_;
  Int target_;
  std::uint64_t limit_;
  const std::vector<std::vector<bool>>* reach_;
  std::vector<Int> counts_;
  std::vector<std::vector<Int>> results_;
};

// reach[i][x]: x is a sum of atoms i..n-1.
std::vector<std::vector<bool>> suffix_reachability(const std::vector<long long>& atoms, long long target) {
  std::size_t n = atoms.size();
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(static_cast<std::size_t>(target) + 1, false));
  reach[n][0] = true;
  for (std::size_t i = n; i-- > 0;) {
    auto& row = reach[i];
    const auto& next = reach[i + 1];
    auto a = static_cast<std::size_t>(atoms[i]);
    for (std::size_t x = 0; x <= static_cast<std::size_t>(target); ++x)
      row[x] = next[x] || (x >= a && row[x - a]);
  }
  return reach;
}

}  // namespace

unsigned geometric_exponent_bound(const MixedSpec& spec, std::size_t family, const Rational& q) {
  const auto& fam = spec.geometric.at(family);
  long floor_valuation = std::numeric_limits<long>::max();
  if (!q.is_zero()) floor_valuation = padic_valuation(q, fam.p);
  for (const auto& g : spec.finite) floor_valuation = std::min(floor_valuation, padic_valuation(g, fam.p));
  for (std::size_t i = 0; i < spec.geometric.size(); ++i)
    if (i != family) floor_valuation = std::min(floor_valuation, padic_valuation(spec.geometric[i].c, fam.p));
  if (floor_valuation == std::numeric_limits<long>::max()) return 0;
  long bound = padic_valuation(fam.c, fam.p) - floor_valuation;
  return bound > 0 ? static_cast<unsigned>(bound) : 0U;
}

Membership member(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  require_nonnegative(q, "value");
  if (const auto* mixed = std::get_if<MixedSpec>(&spec)) return member_mixed(*mixed, q, budget);
  const auto& interval = std::get<IntervalSpec>(spec);
  Membership out;
  out.truth = to_truth(q.is_zero() || q >= interval.t);
  if (out.truth == Truth::yes) out.note = q.is_zero() ? "unit" : q.str() + " >= " + interval.t.str();
  return out;
}

Truth divides(const MonoidSpec& spec, const Rational& a, const Rational& b, const Budget& budget) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  bool undetermined = false;
  require_member(spec, a, budget, undetermined);
  require_member(spec, b, budget, undetermined);
  if (undetermined) return Truth::undetermined;
  Rational quotient = b - a;
  if (quotient.sign() < 0) return Truth::no;
  return member(spec, quotient, budget).truth;
}

Truth is_atom(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  require_nonnegative(q, "value");
  if (q.is_zero()) throw invalid_argument("0 is the unit; atoms are nonzero");
  bool undetermined = false;
  require_member(spec, q, budget, undetermined);
  if (undetermined) return Truth::undetermined;
  if (const auto* mixed = std::get_if<MixedSpec>(&spec)) return is_atom_mixed(*mixed, q, budget);
  const auto& t = std::get<IntervalSpec>(spec).t;
  return to_truth(q < t + t);
}

SetDescriptor atoms(const MonoidSpec& spec, const Budget& budget) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec))
    return InfiniteFamily{RationalInterval{interval->t, interval->t + interval->t, true, false}};
  const auto& mixed = std::get<MixedSpec>(spec);
  // Geometric elements c/p^k = p * c/p^(k+1) are never atoms, and every atom
  // belongs to every generating set, so only finite generators qualify.
  std::vector<Rational> found;
  for (const auto& g : distinct_sorted(mixed.finite)) {
    Truth t = is_atom_mixed(mixed, g, budget);
    if (t == Truth::undetermined) return UndeterminedSet{"atom test for " + g.str() + " exhausted the budget"};
    if (t == Truth::yes) found.push_back(g);
  }
  return make_finite_set(std::move(found));
}

Verdict is_atomic(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  require_nonnegative(q, "value");
  Verdict v;
  v.budget_used.max_k = budget.max_k;
  bool undetermined = false;
  require_member(spec, q, budget, undetermined);
  if (undetermined) {
    v.state = VerdictState::unknown;
    v.witness.note = "membership of " + q.str() + " undetermined within budget";
    return v;
  }
  v.witness.elements.emplace_back("q", q);
  if (q.is_zero()) {
    v.state = VerdictState::proved;
    v.method = Method::analytic;
    v.witness.factorizations.push_back(Factorization{});
    v.witness.note = "unit";
    return v;
  }
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    // n = floor(q/2t) + 1 equal parts q/n, each in [t, 2t).
    Rational two_t = interval->t + interval->t;
    mpz_class n = (q / two_t).floor() + 1;
    v.state = VerdictState::proved;
    v.method = Method::analytic;
    v.witness.factorizations.push_back(make_factorization({{q / Rational(n), n}}));
    v.witness.note = "every nonzero member splits into n equal parts in [t, 2t)";
    return v;
  }
  SetDescriptor atom_set = atoms(spec, budget);
  if (const auto* undet = std::get_if<UndeterminedSet>(&atom_set)) {
    v.state = VerdictState::unknown;
    v.witness.note = undet->reason;
    return v;
  }
  std::vector<Rational> atom_list;
  if (const auto* finite = std::get_if<FiniteSet>(&atom_set)) atom_list = finite->elements;
  v.method = Method::search;
  if (atom_list.empty()) {
    v.state = VerdictState::refuted;
    v.witness.note = "the monoid has no atoms";
    return v;
  }
  try {
    AperyTable table(atom_list, budget.max_candidates);
    if (auto coefficients = table.represent(q)) {
      std::vector<std::pair<Rational, mpz_class>> parts;
      for (std::size_t i = 0; i < atom_list.size(); ++i) parts.emplace_back(atom_list[i], (*coefficients)[i]);
      v.state = VerdictState::proved;
      v.witness.factorizations.push_back(make_factorization(parts));
      return v;
    }
    v.state = VerdictState::refuted;
    if (auto w = table.apery_element(q)) {
      v.witness.elements.emplace_back("least_atomic_in_class", *w);
      v.witness.note = "least sum of atoms congruent to q modulo the smallest atom exceeds q";
    } else {
      v.witness.note = "q is outside the group generated by the atoms";
    }
  } catch (const BudgetExceeded& e) {
    v.state = VerdictState::unknown;
    v.witness.note = e.what();
  }
  return v;
}

std::optional<std::vector<Factorization>> enumerate_factorizations(const std::vector<Rational>& atom_list,
                                                                   const Rational& q, const Budget& budget) {
  std::vector<Factorization> out;
  if (atom_list.empty()) return out;
  mpz_class scale = 1;
  for (const auto& a : atom_list) scale = lcm(scale, a.den());
  Rational scaled_q = q * Rational(scale);
  if (!scaled_q.is_integer()) return out;
  mpz_class target = scaled_q.num();
  std::vector<mpz_class> scaled_atoms;
  for (const auto& a : atom_list) scaled_atoms.push_back(a.num() * (scale / a.den()));
  if (target / scaled_atoms.front() > budget.max_coefficient) return std::nullopt;

  std::vector<std::vector<mpz_class>> counts;
  constexpr long long kReachLimit = 10'000'000;
  bool small = target.fits_slong_p() && target.get_si() <= kReachLimit;
  if (small) {
    std::vector<long long> atoms64;
    for (const auto& a : scaled_atoms) atoms64.push_back(a.fits_slong_p() ? a.get_si() : kReachLimit + 1);
    long long t = target.get_si();
    auto reach = suffix_reachability(atoms64, t);
    FactorizationEnumerator<long long> e(atoms64, t, budget.max_candidates, &reach);
    if (!e.run()) return std::nullopt;
    for (const auto& row : e.results()) {
      std::vector<mpz_class> r;
      for (long long c : row) r.emplace_back(static_cast<long>(c));
      counts.push_back(std::move(r));
    }
  } else {
    FactorizationEnumerator<mpz_class> e(scaled_atoms, target, budget.max_candidates, nullptr);
    if (!e.run()) return std::nullopt;
    counts = e.results();
  }
  for (const auto& row : counts) {
    std::vector<std::pair<Rational, mpz_class>> parts;
    for (std::size_t i = 0; i < atom_list.size(); ++i) parts.emplace_back(atom_list[i], row[i]);
    out.push_back(make_factorization(parts));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

FactorizationSet factorizations(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  require_nonnegative(q, "value");
  if (q.is_zero()) throw invalid_argument("0 is the unit; factorizations are of nonzero elements");
  FactorizationSet out;
  bool undetermined = false;
  require_member(spec, q, budget, undetermined);
  if (undetermined) {
    out.complete = false;
    out.note = "membership undetermined within budget";
    return out;
  }
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    // n parts in [t, 2t) sum to q iff n*t <= q < 2*n*t. One part is q
    // itself; q = n*t forces n equal parts t; otherwise the parts can be
    // perturbed continuously.
    const Rational& t = interval->t;
    mpz_class first = (q / (t + t)).floor() + 1;
    mpz_class last = (q / t).floor();
    RationalInterval range{t, t + t, true, false};
    for (mpz_class n = first; n <= last; ++n) {
      Rational total = t * Rational(n);
      if (n == 1)
        out.listed.push_back(make_factorization({{q, 1}}));
      else if (total == q)
        out.listed.push_back(make_factorization({{t, n}}));
      else
        out.families.push_back(PartFamily{n.get_ui(), range, q});
    }
    std::sort(out.listed.begin(), out.listed.end(), lex_less);
    return out;
  }
  SetDescriptor atom_set = atoms(spec, budget);
  if (const auto* undet = std::get_if<UndeterminedSet>(&atom_set)) {
    out.complete = false;
    out.note = undet->reason;
    return out;
  }
  std::vector<Rational> atom_list;
  if (const auto* finite = std::get_if<FiniteSet>(&atom_set)) atom_list = finite->elements;
  auto listed = enumerate_factorizations(atom_list, q, budget);
  if (!listed) {
    out.complete = false;
    out.note = "factorization count exceeds the candidate budget";
    return out;
  }
  out.listed = std::move(*listed);
  return out;
}

SetDescriptor atom_divisors(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  require_nonnegative(q, "value");
  if (q.is_zero()) throw invalid_argument("0 is the unit; atom divisors are of nonzero elements");
  bool undetermined = false;
  require_member(spec, q, budget, undetermined);
  if (undetermined) return UndeterminedSet{"membership undetermined within budget"};
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    // a in [t, 2t) divides q iff a == q or q - a >= t.
    const Rational& t = interval->t;
    Rational two_t = t + t;
    if (q < two_t) return make_finite_set({q});
    Rational top = q - t;
    if (top >= two_t) return InfiniteFamily{RationalInterval{t, two_t, true, false}};
    if (top == t) return make_finite_set({t});
    return InfiniteFamily{RationalInterval{t, top, true, true}};
  }
  SetDescriptor atom_set = atoms(spec, budget);
  if (std::holds_alternative<UndeterminedSet>(atom_set)) return atom_set;
  std::vector<Rational> found;
  if (const auto* finite = std::get_if<FiniteSet>(&atom_set)) {
    for (const auto& a : finite->elements) {
      if (a > q) break;
      Truth t = member(spec, q - a, budget).truth;
      if (t == Truth::undetermined) return UndeterminedSet{"membership of " + (q - a).str() + " undetermined"};
      if (t == Truth::yes) found.push_back(a);
    }
  }
  return make_finite_set(std::move(found));
}

}  // namespace factorlab
