#include <gtest/gtest.h>

#include "factorlab/error.hpp"
#include "factorlab/property_lab.hpp"

namespace factorlab {
namespace {

Rational R(const char* s) { return Rational::parse(s); }

MonoidSpec g_spec() { return make_mixed({R("1/3")}, {{R("1"), 2}}); }
MonoidSpec x6_spec() { return make_mixed({R("2")}, {{R("3"), 2}}); }
MonoidSpec ns23() { return make_mixed({R("2"), R("3")}); }
MonoidSpec antimatter_spec() { return make_mixed({}, {{R("1"), 3}}); }

std::string states(const PropertyProfile& profile) {
  std::string out;
  for (Property p : kAllProperties) {
    out += std::string(to_string(p)) + "=" + to_string(profile.at(p).state) + " ";
  }
  return out;
}

TEST(PropertyNames, RoundTrip) {
  for (Property p : kAllProperties) EXPECT_EQ(property_from_string(to_string(p)), p);
  EXPECT_FALSE(property_from_string("bfm"));
}

TEST(Classify, NumericalSemigroupTwoThree) {
  PropertyProfile profile = classify(ns23());
  EXPECT_EQ(states(profile),
            "antimatter=refuted atomic=proved furstenberg=proved completely_furstenberg=proved "
            "completely_atomic=proved idf=proved ridf=proved u_uf=refuted u_ff=proved ap=refuted ");
  EXPECT_TRUE(profile.raw_finite_factorizations.proved());
  EXPECT_TRUE(check_lattice(profile).empty());
}

TEST(Classify, GeometricOnlyIsAntimatter) {
  PropertyProfile profile = classify(antimatter_spec());
  EXPECT_TRUE(profile.at(Property::antimatter).proved());
  EXPECT_TRUE(profile.at(Property::atomic).refuted());
  EXPECT_TRUE(profile.at(Property::furstenberg).refuted());
  EXPECT_TRUE(profile.at(Property::idf).proved());
  EXPECT_TRUE(profile.at(Property::ap).proved());
  EXPECT_TRUE(check_lattice(profile).empty());
}

TEST(Classify, ExampleWithOneAtomAndOneFamily) {
  PropertyProfile profile = classify(g_spec());
  EXPECT_TRUE(profile.at(Property::idf).proved());
  EXPECT_TRUE(profile.at(Property::ridf).proved());
  const Verdict& ca = profile.at(Property::completely_atomic);
  ASSERT_TRUE(ca.refuted());
  EXPECT_EQ(*ca.witness.find("t"), R("1"));
  EXPECT_EQ(*ca.witness.find("d"), R("1/2"));
  EXPECT_TRUE(reverify(g_spec(), Property::completely_atomic, ca));
  EXPECT_TRUE(profile.at(Property::u_ff).refuted());
  EXPECT_TRUE(profile.raw_finite_factorizations.proved());
}

TEST(Classify, IntervalMonoid) {
  MonoidSpec spec = make_interval(R("1"));
  PropertyProfile profile = classify(spec);
  EXPECT_TRUE(profile.at(Property::atomic).proved());
  const Verdict& idf = profile.at(Property::idf);
  ASSERT_TRUE(idf.refuted());
  EXPECT_EQ(*idf.witness.find("q"), R("3"));
  ASSERT_TRUE(idf.witness.family);
  EXPECT_EQ(idf.witness.family->str(), "[1, 2)");
  EXPECT_TRUE(reverify(spec, Property::idf, idf));
  EXPECT_TRUE(profile.at(Property::ridf).refuted());
  EXPECT_TRUE(profile.at(Property::u_ff).refuted());
  EXPECT_TRUE(check_lattice(profile).empty());
}

TEST(Witness, CompletelyAtomicOnX6) {
  Verdict v = witness_completely_atomic(x6_spec());
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(*v.witness.find("t"), R("6"));
  EXPECT_EQ(*v.witness.find("d"), R("3"));
  EXPECT_TRUE(reverify(x6_spec(), Property::completely_atomic, v));
}

TEST(Witness, CompletelyAtomicHoldsForFinitelyGenerated) {
  EXPECT_TRUE(witness_completely_atomic(ns23()).proved());
  EXPECT_TRUE(witness_completely_furstenberg(ns23()).proved());
}

TEST(Witness, ReverifyRejectsForgedWitnesses) {
  Verdict forged = witness_completely_atomic(x6_spec());
  forged.witness.elements = {{"t", R("6")}, {"d", R("2")}};  // 2 is an atom
  EXPECT_FALSE(reverify(x6_spec(), Property::completely_atomic, forged));
  forged.witness.elements = {{"t", R("6")}};
  EXPECT_FALSE(reverify(x6_spec(), Property::completely_atomic, forged));

  Verdict atomic = classify(g_spec()).at(Property::atomic);
  ASSERT_TRUE(atomic.refuted());
  atomic.witness.elements = {{"q", R("1")}};
  EXPECT_FALSE(reverify(g_spec(), Property::atomic, atomic));
}

TEST(UniqueFactorization, TwoThreeHasTwoFactorizationsOfSix) {
  Verdict v = u_uf_check(ns23());
  ASSERT_TRUE(v.refuted());
  ASSERT_EQ(v.witness.factorizations.size(), 2u);
  EXPECT_EQ(v.witness.factorizations[0].value(), v.witness.factorizations[1].value());
  EXPECT_NE(v.witness.factorizations[0], v.witness.factorizations[1]);
  EXPECT_TRUE(reverify(ns23(), Property::u_uf, v));
}

TEST(UniqueFactorization, SingleGeneratorIsFactorial) {
  MonoidSpec spec = make_mixed({R("5/7")});
  EXPECT_TRUE(u_uf_check(spec).proved());
  EXPECT_TRUE(ap_check(spec).proved());
}

TEST(AtomsPrime, TwoThreeRefutes) {
  Verdict v = ap_check(ns23());
  ASSERT_TRUE(v.refuted());
  const Rational* a = v.witness.find("a");
  const Rational* x = v.witness.find("x");
  const Rational* y = v.witness.find("y");
  ASSERT_TRUE(a && x && y);
  EXPECT_EQ(divides(ns23(), *a, *x + *y), Truth::yes);
  EXPECT_EQ(divides(ns23(), *a, *x), Truth::no);
  EXPECT_EQ(divides(ns23(), *a, *y), Truth::no);
  EXPECT_TRUE(reverify(ns23(), Property::ap, v));
}

TEST(Lattice, EdgesAreWellFormed) {
  const auto& edges = lattice_edges();
  EXPECT_EQ(edges.size(), 10u);
  for (const auto& e : edges) EXPECT_NE(e.from, e.to);
}

TEST(Lattice, DetectsPlantedViolationThroughClosure) {
  PropertyProfile profile = classify(ns23());
  // A contradiction planted on any direct edge must be reported.
  for (const auto& e : lattice_edges()) {
    PropertyProfile planted = profile;
    planted.verdicts[e.from].state = VerdictState::proved;
    planted.verdicts[e.to].state = VerdictState::refuted;
    auto found = check_lattice(planted);
    EXPECT_NE(std::find(found.begin(), found.end(), e), found.end())
        << to_string(e.from) << " => " << to_string(e.to);
  }
  PropertyProfile unknowns = profile;
  for (auto& [p, v] : unknowns.verdicts) v.state = VerdictState::unknown;
  EXPECT_TRUE(check_lattice(unknowns).empty());
}

TEST(Archimedean, ReferenceValues) {
  EXPECT_EQ(archimedean_check(x6_spec(), R("3/2"), R("10")), 7);
  EXPECT_EQ(archimedean_check(make_interval(R("1")), R("1"), R("5")), 6);
  EXPECT_EQ(archimedean_check(g_spec(), R("1/3"), R("1")), 4);
  EXPECT_EQ(archimedean_check(g_spec(), R("1/3"), R("0")), 1);
}

TEST(Archimedean, RejectsBadInput) {
  EXPECT_THROW(archimedean_check(x6_spec(), R("0"), R("10")), Error);
  EXPECT_THROW(archimedean_check(x6_spec(), R("1"), R("10")), Error);
  EXPECT_THROW(archimedean_check(x6_spec(), R("2"), R("1")), Error);
}

TEST(Budget, TinyCandidateBudgetNeverContradicts) {
  Budget tiny;
  tiny.max_candidates = 3;
  for (const MonoidSpec& spec : {g_spec(), x6_spec(), ns23(), make_interval(R("2"))}) {
    PropertyProfile small = classify(spec, tiny);
    PropertyProfile full = classify(spec);
    for (Property p : kAllProperties) {
      if (small.at(p).unknown()) continue;
      EXPECT_EQ(small.at(p).state, full.at(p).state) << describe(spec) << " " << to_string(p);
    }
    EXPECT_TRUE(check_lattice(small).empty());
  }
}

}  // namespace
}  // namespace factorlab
