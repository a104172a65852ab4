#include "factorlab/property_lab.hpp"

#include <algorithm>

#include "factorlab/error.hpp"

namespace factorlab {

const char* to_string(Property property) {
  switch (property) {
    case Property::antimatter: return "antimatter";
    case Property::atomic: return "atomic";
    case Property::furstenberg: return "furstenberg";
    case Property::completely_furstenberg: return "completely_furstenberg";
    case Property::completely_atomic: return "completely_atomic";
    case Property::idf: return "idf";
    case Property::ridf: return "ridf";
    case Property::u_uf: return "u_uf";
    case Property::u_ff: return "u_ff";
    case Property::ap: return "ap";
  }
  return "?";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (Property p : kAllProperties)
    if (name == to_string(p)) return p;
  return std::nullopt;
}

namespace {

Verdict make_verdict(VerdictState state, Method method, std::string note, const Budget& budget) {
  Verdict v;
  v.state = state;
  v.method = method;
  v.witness.note = std::move(note);
  v.budget_used.max_k = budget.max_k;
  return v;
}

Verdict proved(std::string note, const Budget& budget, Method method = Method::analytic) {
  return make_verdict(VerdictState::proved, method, std::move(note), budget);
}

Verdict unknown(std::string note, const Budget& budget) {
  return make_verdict(VerdictState::unknown, Method::search, std::move(note), budget);
}

struct AtomList {
  std::vector<Rational> atoms;
  bool determined = true;
  std::string reason;
};

AtomList atom_list(const MonoidSpec& spec, const Budget& budget) {
  AtomList out;
  SetDescriptor set = atoms(spec, budget);
  if (const auto* finite = std::get_if<FiniteSet>(&set)) out.atoms = finite->elements;
  if (const auto* undet = std::get_if<UndeterminedSet>(&set)) {
    out.determined = false;
    out.reason = undet->reason;
  }
  return out;
}

// Least common multiple in Q+: the least positive rational that is an
// integer multiple of both a and b.
Rational rational_lcm(const Rational& a, const Rational& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rational(lcm(a.num(), b.num()), g);
}

mpz_class scale_of(const std::vector<Rational>& values) {
  mpz_class s = 1;
  for (const auto& v : values) s = lcm(s, v.den());
  return s;
}

// Sums of atoms up to `limit` in increasing order, together with a
// saturating count (0, 1, 2 meaning "two or more") of their factorizations.
struct AtomicSweep {
  mpz_class scale;
  std::vector<long long> values;  // scaled, ascending, nonzero
  std::vector<int> counts;        // parallel to values
  bool truncated = false;

  Rational value(std::size_t i) const { return Rational(mpz_class(static_cast<long>(values[i])), scale); }
};

AtomicSweep sweep_atomic(const std::vector<Rational>& atoms, const Rational& limit, std::uint64_t max_count) {
  AtomicSweep sweep;
  sweep.scale = scale_of(atoms);
  mpz_class top = (limit * Rational(sweep.scale)).floor();
  if (top > max_count || !top.fits_slong_p()) {
    top = static_cast<unsigned long>(max_count);
    sweep.truncated = true;
  }
  long long x_max = top.get_si();
  std::vector<long long> scaled;
  for (const auto& a : atoms) {
    mpz_class s = a.num() * (sweep.scale / a.den());
    if (s.fits_slong_p() && s.get_si() <= x_max) scaled.push_back(s.get_si());
  }
  std::vector<int> count(static_cast<std::size_t>(x_max) + 1, 0);
  count[0] = 1;
  for (long long a : scaled)
    for (long long x = a; x <= x_max; ++x)
      count[x] = std::min(2, count[x] + count[x - a]);
  for (long long x = 1; x <= x_max; ++x)
    if (count[x] > 0) {
      sweep.values.push_back(x);
      sweep.counts.push_back(count[x]);
    }
  return sweep;
}

long min_valuation(const std::vector<Rational>& values, std::uint64_t p) {
  long v = padic_valuation(values.front(), p);
  for (const auto& x : values) v = std::min(v, padic_valuation(x, p));
  return v;
}

enum class DivisorTest { not_atomic, not_furstenberg };

// Searches atomic targets t (increasing) and, per family, d = c/p^k
// (increasing k) for a divisor d of t failing `test`. For a target t the
// k-range is complete: divisibility by c/p^k is monotone in k and settles
// by the exponent bound of t, and past the second bound every such d fails
// the test.
Verdict divisor_witness_search(const MixedSpec& mixed, const std::vector<Rational>& atom_values, DivisorTest test,
                               const Budget& budget) {
  const MonoidSpec spec = mixed;
  Verdict v = unknown("", budget);
  bool undetermined = false;
  Rational limit = rational_lcm(atom_values.front(), mixed.geometric.front().c);
  AtomicSweep sweep = sweep_atomic(atom_values, limit, budget.max_candidates);
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    Rational t = sweep.value(i);
    ++examined;
    for (std::size_t j = 0; j < mixed.geometric.size(); ++j) {
      const auto& family = mixed.geometric[j];
      long k_fail = 0;
      if (test == DivisorTest::not_atomic) {
        k_fail = padic_valuation(family.c, family.p) - min_valuation(atom_values, family.p) + 1;
      } else {
        while (!(family.element(static_cast<unsigned>(k_fail)) < atom_values.front())) ++k_fail;
      }
      long k_max = std::max<long>(static_cast<long>(geometric_exponent_bound(mixed, j, t)) + 1, k_fail);
      if (k_max > static_cast<long>(budget.max_k)) {
        k_max = budget.max_k;
        undetermined = true;
      }
      for (long k = 0; k <= k_max; ++k) {
        Rational d = family.element(static_cast<unsigned>(k));
        if (d > t) continue;
        Truth div = divides(spec, d, t, budget);
        if (div == Truth::undetermined) undetermined = true;
        if (div != Truth::yes) continue;
        bool fails = false;
        if (test == DivisorTest::not_atomic) {
          Verdict a = is_atomic(spec, d, budget);
          if (a.unknown()) undetermined = true;
          fails = a.refuted();
        } else {
          SetDescriptor divisors = atom_divisors(spec, d, budget);
          if (std::holds_alternative<UndeterminedSet>(divisors)) undetermined = true;
          fails = is_empty(divisors);
        }
        if (fails) {
          v.state = VerdictState::refuted;
          v.method = Method::search;
          v.witness.elements = {{"t", t}, {"d", d}};
          v.witness.note = test == DivisorTest::not_atomic ? "t is atomic, d divides t, d is not atomic"
                                                           : "t has an atom divisor, d divides t and has none";
          v.budget_used.max_k = static_cast<std::uint32_t>(k);
          v.budget_used.candidates = examined;
          return v;
        }
      }
    }
  }
  v.budget_used.candidates = examined;
  v.witness.note = undetermined || sweep.truncated ? "search exhausted the budget" : "no witness among searched targets";
  return v;
}

Verdict conjunction(const Verdict& a, const Verdict& b, const Budget& budget) {
  if (a.refuted()) return a;
  if (b.refuted()) return b;
  if (a.proved() && b.proved()) return proved("conjunction of both parts", budget, a.method);
  return unknown("a part is undetermined", budget);
}

Verdict interval_idf_refutation(const IntervalSpec& interval, const Budget& budget, bool require_atomic) {
  const MonoidSpec spec = interval;
  Rational q = interval.t * Rational(3);
  Verdict v = make_verdict(VerdictState::refuted, Method::analytic,
                           require_atomic ? "atomic element with infinitely many atom divisors"
                                          : "element with infinitely many atom divisors",
                           budget);
  v.witness.elements.emplace_back("q", q);
  SetDescriptor divisors = atom_divisors(spec, q, budget);
  if (const auto* family = std::get_if<InfiniteFamily>(&divisors)) v.witness.family = family->interval;
  return v;
}

Verdict antimatter_verdict(const MonoidSpec& spec, const AtomList& list, const Budget& budget) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    Verdict v = make_verdict(VerdictState::refuted, Method::analytic, "t is an atom", budget);
    v.witness.elements.emplace_back("atom", interval->t);
    return v;
  }
  if (!list.determined) return unknown(list.reason, budget);
  if (list.atoms.empty()) return proved("no finite generator is an atom", budget);
  Verdict v = make_verdict(VerdictState::refuted, Method::search, "smallest atom", budget);
  v.witness.elements.emplace_back("atom", list.atoms.front());
  return v;
}

Verdict atomic_verdict(const MonoidSpec& spec, const AtomList& list, const Budget& budget) {
  if (std::holds_alternative<IntervalSpec>(spec)) return proved("bounded below by t, hence bounded factorization", budget);
  const auto& mixed = std::get<MixedSpec>(spec);
  if (mixed.geometric.empty()) return proved("finitely generated, hence bounded factorization", budget);
  if (!list.determined) return unknown(list.reason, budget);
  // c/p^k with p-valuation below every atom's lies outside the atoms' span.
  const auto& family = mixed.geometric.front();
  long k = 0;
  if (!list.atoms.empty())
    k = std::max(0L, padic_valuation(family.c, family.p) - min_valuation(list.atoms, family.p) + 1);
  Rational q = family.element(static_cast<unsigned>(k));
  Verdict check = is_atomic(spec, q, budget);
  if (!check.refuted()) return unknown("expected non-atomic element " + q.str() + " was not refuted", budget);
  Verdict v = make_verdict(VerdictState::refuted, Method::analytic, "geometric element outside the atoms' span", budget);
  v.witness.elements.emplace_back("q", q);
  v.budget_used.max_k = static_cast<std::uint32_t>(k);
  return v;
}

Verdict furstenberg_verdict(const MonoidSpec& spec, const AtomList& list, const Budget& budget) {
  if (std::holds_alternative<IntervalSpec>(spec)) return proved("q in [t,2t) divides itself; q >= 2t has divisor t", budget);
  const auto& mixed = std::get<MixedSpec>(spec);
  if (mixed.geometric.empty()) return proved("atomic monoid", budget);
  if (!list.determined) return unknown(list.reason, budget);
  const auto& family = mixed.geometric.front();
  bool undetermined = false;
  for (unsigned k = 0; k <= budget.max_k; ++k) {
    Rational q = family.element(k);
    SetDescriptor divisors = atom_divisors(spec, q, budget);
    if (std::holds_alternative<UndeterminedSet>(divisors)) undetermined = true;
    if (is_empty(divisors)) {
      Verdict v = make_verdict(VerdictState::refuted, Method::search, "nonzero element without atom divisors", budget);
      v.witness.elements.emplace_back("q", q);
      v.budget_used.max_k = k;
      return v;
    }
  }
  return unknown(undetermined ? "atom divisor tests undetermined" : "exponent budget exhausted", budget);
}

Verdict idf_verdict(const MonoidSpec& spec, const AtomList& list, const Budget& budget, bool restricted) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) return interval_idf_refutation(*interval, budget, restricted);
  if (!list.determined) return unknown(list.reason, budget);
  return proved("finitely many atoms", budget);
}

Verdict raw_factorization_verdict(const MonoidSpec& spec, const AtomList& list, const Budget& budget) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    Rational q = interval->t * Rational(3);
    Verdict v = make_verdict(VerdictState::refuted, Method::analytic, "two-part factorizations of q form an interval",
                             budget);
    v.witness.elements.emplace_back("q", q);
    v.witness.family = RationalInterval{interval->t, interval->t + interval->t, false, false};
    return v;
  }
  if (!list.determined) return unknown(list.reason, budget);
  return proved("finitely many atoms, so finitely many factorizations of each element", budget);
}

bool divides_yes(const MonoidSpec& spec, const Rational& a, const Rational& b, const Budget& budget) {
  return divides(spec, a, b, budget) == Truth::yes;
}

bool divides_no(const MonoidSpec& spec, const Rational& a, const Rational& b, const Budget& budget) {
  return divides(spec, a, b, budget) == Truth::no;
}

bool has_atom_divisor(const MonoidSpec& spec, const Rational& q, const Budget& budget) {
  SetDescriptor divisors = atom_divisors(spec, q, budget);
  return std::holds_alternative<FiniteSet>(divisors) || std::holds_alternative<InfiniteFamily>(divisors);
}

bool verify_infinite_divisors(const MonoidSpec& spec, const Verdict& v, const Budget& budget, bool require_atomic) {
  const Rational* q = v.witness.find("q");
  if (q == nullptr || !v.witness.family) return false;
  if (require_atomic && !is_atomic(spec, *q, budget).proved()) return false;
  const auto& family = *v.witness.family;
  if (!(family.lo < family.hi)) return false;
  for (const auto& a : family.sample(5))
    if (is_atom(spec, a, budget) != Truth::yes || !divides_yes(spec, a, *q, budget)) return false;
  return true;
}

bool verify_pair(const MonoidSpec& spec, const Verdict& v, const Budget& budget, DivisorTest test) {
  const Rational* t = v.witness.find("t");
  const Rational* d = v.witness.find("d");
  if (t == nullptr || d == nullptr || d->is_zero()) return false;
  if (!divides_yes(spec, *d, *t, budget)) return false;
  if (test == DivisorTest::not_atomic) return is_atomic(spec, *t, budget).proved() && is_atomic(spec, *d, budget).refuted();
  return has_atom_divisor(spec, *t, budget) && is_empty(atom_divisors(spec, *d, budget));
}

bool verify_two_factorizations(const MonoidSpec& spec, const Verdict& v, const Budget& budget) {
  const Rational* q = v.witness.find("q");
  if (q == nullptr || v.witness.factorizations.size() < 2) return false;
  const auto& f = v.witness.factorizations[0];
  const auto& g = v.witness.factorizations[1];
  if (f == g || f.value() != *q || g.value() != *q) return false;
  for (const auto* fac : {&f, &g})
    for (const auto& part : fac->parts)
      if (is_atom(spec, part.atom, budget) != Truth::yes) return false;
  return true;
}

}  // namespace

Verdict witness_completely_atomic(const MonoidSpec& spec, const Budget& budget) {
  if (std::holds_alternative<IntervalSpec>(spec)) return proved("atomic monoid", budget);
  const auto& mixed = std::get<MixedSpec>(spec);
  if (mixed.geometric.empty()) return proved("finitely generated, hence atomic", budget);
  AtomList list = atom_list(spec, budget);
  if (!list.determined) return unknown(list.reason, budget);
  if (list.atoms.empty()) return proved("no atoms, so no atomic elements", budget);
  return divisor_witness_search(mixed, list.atoms, DivisorTest::not_atomic, budget);
}

Verdict witness_completely_furstenberg(const MonoidSpec& spec, const Budget& budget) {
  if (std::holds_alternative<IntervalSpec>(spec))
    return proved("every nonzero member has an atom divisor", budget);
  const auto& mixed = std::get<MixedSpec>(spec);
  if (mixed.geometric.empty()) return proved("finitely generated, hence atomic", budget);
  AtomList list = atom_list(spec, budget);
  if (!list.determined) return unknown(list.reason, budget);
  if (list.atoms.empty()) return proved("no atoms, so no Furstenberg elements", budget);
  return divisor_witness_search(mixed, list.atoms, DivisorTest::not_furstenberg, budget);
}

Verdict u_uf_check(const MonoidSpec& spec, const Budget& budget) {
  Verdict ca = witness_completely_atomic(spec, budget);
  if (ca.refuted()) {
    ca.witness.note = "not completely atomic: " + ca.witness.note;
    return ca;
  }
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    Rational t = interval->t;
    Rational q = t * Rational(3);
    Verdict v = make_verdict(VerdictState::refuted, Method::analytic, "two distinct factorizations", budget);
    v.witness.elements.emplace_back("q", q);
    v.witness.factorizations.push_back(make_factorization({{t, 3}}));
    v.witness.factorizations.push_back(make_factorization({{q / Rational(2), 2}}));
    return v;
  }
  AtomList list = atom_list(spec, budget);
  if (!list.determined) return unknown(list.reason, budget);
  if (list.atoms.size() <= 1) {
    if (ca.proved()) return proved("at most one atom, so factorizations are unique", budget);
    return unknown("completely atomic undetermined", budget);
  }
  Rational limit = rational_lcm(list.atoms[0], list.atoms[1]);
  AtomicSweep sweep = sweep_atomic(list.atoms, limit, budget.max_candidates);
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    if (sweep.counts[i] < 2) continue;
    Rational q = sweep.value(i);
    auto listed = enumerate_factorizations(list.atoms, q, budget);
    if (!listed || listed->size() < 2) break;
    Verdict v = make_verdict(VerdictState::refuted, Method::search, "least atomic element with two factorizations", budget);
    v.witness.elements.emplace_back("q", q);
    v.witness.factorizations = {(*listed)[0], (*listed)[1]};
    v.budget_used.candidates = i + 1;
    return v;
  }
  return unknown("uniqueness sweep exhausted the budget", budget);
}

Verdict ap_check(const MonoidSpec& spec, const Budget& budget) {
  if (const auto* interval = std::get_if<IntervalSpec>(&spec)) {
    Rational x = interval->t * Rational(3) / Rational(2);
    Verdict v = make_verdict(VerdictState::refuted, Method::analytic, "t divides x + y but neither summand", budget);
    v.witness.elements = {{"a", interval->t}, {"x", x}, {"y", x}};
    return v;
  }
  const auto& mixed = std::get<MixedSpec>(spec);
  AtomList list = atom_list(spec, budget);
  if (!list.determined) return unknown(list.reason, budget);
  if (list.atoms.empty()) return proved("no atoms", budget);
  if (mixed.geometric.empty() && list.atoms.size() == 1)
    return proved("generated by a single atom, isomorphic to the nonnegative integers", budget);

  // For an atom a and a member e that a does not divide, the least n with
  // a | n*e gives a | e + (n-1)e while a divides neither summand.
  std::vector<Rational> partners = list.atoms;
  constexpr unsigned kPartnerExponents = 8;
  for (const auto& family : mixed.geometric)
    for (unsigned k = 0; k <= std::min(budget.max_k, kPartnerExponents); ++k) partners.push_back(family.element(k));
  std::uint64_t examined = 0;
  bool undetermined = false;
  for (const auto& a : list.atoms) {
    for (const auto& e : partners) {
      if (e == a) continue;
      Truth base = divides(spec, a, e, budget);
      if (base == Truth::undetermined) undetermined = true;
      if (base != Truth::no) continue;
      Rational multiple = rational_lcm(a, e) / e;
      mpz_class n_limit = multiple.num();
      for (mpz_class n = 2; n <= n_limit; ++n) {
        if (++examined > budget.max_candidates) return unknown("candidate budget exhausted", budget);
        Truth t = divides(spec, a, e * Rational(n), budget);
        if (t == Truth::undetermined) {
          undetermined = true;
          break;
        }
        if (t == Truth::yes) {
          Verdict v = make_verdict(VerdictState::refuted, Method::search, "a divides x + y but neither summand", budget);
          v.witness.elements = {{"a", a}, {"x", e}, {"y", e * Rational(n - 1)}};
          v.budget_used.candidates = examined;
          return v;
        }
      }
    }
  }
  return unknown(undetermined ? "divisibility undetermined within budget" : "no witness in the searched pool", budget);
}

PropertyProfile classify(const MonoidSpec& spec, const Budget& budget) {
  validate(spec);
  PropertyProfile profile{spec, budget, {}, {}};
  AtomList list;
  if (std::holds_alternative<MixedSpec>(spec)) list = atom_list(spec, budget);
  auto& v = profile.verdicts;
  v[Property::antimatter] = antimatter_verdict(spec, list, budget);
  v[Property::atomic] = atomic_verdict(spec, list, budget);
  v[Property::furstenberg] = furstenberg_verdict(spec, list, budget);
  v[Property::completely_furstenberg] = witness_completely_furstenberg(spec, budget);
  v[Property::completely_atomic] = witness_completely_atomic(spec, budget);
  v[Property::idf] = idf_verdict(spec, list, budget, false);
  v[Property::ridf] = idf_verdict(spec, list, budget, true);
  v[Property::u_ff] = conjunction(v[Property::completely_atomic], v[Property::ridf], budget);
  v[Property::u_uf] = u_uf_check(spec, budget);
  v[Property::ap] = ap_check(spec, budget);
  profile.raw_finite_factorizations = raw_factorization_verdict(spec, list, budget);
  return profile;
}

const std::vector<LatticeEdge>& lattice_edges() {
  static const std::vector<LatticeEdge> edges = {
      {Property::atomic, Property::completely_atomic},
      {Property::completely_atomic, Property::completely_furstenberg},
      {Property::u_uf, Property::u_ff},
      {Property::u_ff, Property::completely_atomic},
      {Property::u_ff, Property::ridf},
      {Property::idf, Property::ridf},
      {Property::antimatter, Property::completely_atomic},
      {Property::ap, Property::u_uf},
      {Property::antimatter, Property::idf},
      {Property::antimatter, Property::ap},
  };
  return edges;
}

std::vector<LatticeEdge> check_lattice(const PropertyProfile& profile) {
  constexpr std::size_t n = kAllProperties.size();
  bool implies[n][n] = {};
  for (const auto& e : lattice_edges()) implies[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (implies[i][k] && implies[k][j]) implies[i][j] = true;

  std::vector<LatticeEdge> violations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!implies[i][j]) continue;
      auto from = profile.verdicts.find(static_cast<Property>(i));
      auto to = profile.verdicts.find(static_cast<Property>(j));
      if (from == profile.verdicts.end() || to == profile.verdicts.end()) continue;
      if (from->second.proved() && to->second.refuted())
        violations.push_back({static_cast<Property>(i), static_cast<Property>(j)});
    }
  return violations;
}

mpz_class archimedean_check(const MonoidSpec& spec, const Rational& a, const Rational& b, const Budget& budget) {
  if (a.sign() <= 0) throw invalid_argument("a must be a nonzero member");
  if (b.sign() < 0) throw invalid_argument("b must be nonnegative");
  for (const auto* x : {&a, &b})
    if (member(spec, *x, budget).truth == Truth::no)
      throw Error(ErrorCode::not_member, x->str() + " is not an element of the monoid");
  return (b / a).floor() + 1;
}

bool reverify(const MonoidSpec& spec, Property property, const Verdict& verdict, const Budget& budget) {
  if (!verdict.refuted()) return true;
  const auto& w = verdict.witness;
  switch (property) {
    case Property::antimatter: {
      const Rational* atom = w.find("atom");
      return atom != nullptr && is_atom(spec, *atom, budget) == Truth::yes;
    }
    case Property::atomic: {
      const Rational* q = w.find("q");
      return q != nullptr && is_atomic(spec, *q, budget).refuted();
    }
    case Property::furstenberg: {
      const Rational* q = w.find("q");
      return q != nullptr && !q->is_zero() && is_empty(atom_divisors(spec, *q, budget));
    }
    case Property::completely_furstenberg:
      return verify_pair(spec, verdict, budget, DivisorTest::not_furstenberg);
    case Property::completely_atomic:
      return verify_pair(spec, verdict, budget, DivisorTest::not_atomic);
    case Property::idf:
      return verify_infinite_divisors(spec, verdict, budget, false);
    case Property::ridf:
      return verify_infinite_divisors(spec, verdict, budget, true);
    case Property::u_ff:
      if (w.find("t") != nullptr) return verify_pair(spec, verdict, budget, DivisorTest::not_atomic);
      return verify_infinite_divisors(spec, verdict, budget, true);
    case Property::u_uf:
      if (w.find("t") != nullptr) return verify_pair(spec, verdict, budget, DivisorTest::not_atomic);
      return verify_two_factorizations(spec, verdict, budget);
    case Property::ap: {
      const Rational* a = w.find("a");
      const Rational* x = w.find("x");
      const Rational* y = w.find("y");
      if (a == nullptr || x == nullptr || y == nullptr) return false;
      return is_atom(spec, *a, budget) == Truth::yes && divides_yes(spec, *a, *x + *y, budget) &&
             divides_no(spec, *a, *x, budget) && divides_no(spec, *a, *y, budget);
    }
  }
  return false;
}

}  // namespace factorlab
