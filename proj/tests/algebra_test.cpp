#include <gtest/gtest.h>

#include "factorlab/algebra.hpp"
#include "factorlab/error.hpp"

namespace factorlab {
namespace {

Rational R(const char* s) { return Rational::parse(s); }

NumericalSemigroup s23() { return make_semigroup({2, 3}); }

BiPoly y2x_plus(long sign) { return make_bipoly(s23(), {{1, 2, Rational(1)}, {0, 3, Rational(sign)}}); }

DPlusMPoly zxq(std::vector<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(R(s));
  return make_dpm(DomainVariant::zxq, c);
}

DPlusMPoly l19(std::vector<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(R(s));
  return make_dpm(DomainVariant::l19, c);
}

TEST(Semigroup, MembershipAndValidation) {
  NumericalSemigroup s = s23();
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  for (unsigned long e = 2; e < 30; ++e) EXPECT_TRUE(s.contains(e)) << e;
  EXPECT_EQ(make_semigroup({6, 4, 4}).generators, (std::vector<unsigned long>{4, 6}));
  EXPECT_THROW(make_semigroup({}), Error);
  EXPECT_THROW(make_semigroup({0, 2}), Error);
}

TEST(Semigroup, CommonDivisors) {
  EXPECT_EQ(ns_common_divisors(s23(), {4, 6}), (std::vector<unsigned long>{2, 4}));
  EXPECT_EQ(ns_common_divisors(s23(), {2, 3}), (std::vector<unsigned long>{}));
  EXPECT_EQ(ns_common_divisors(make_semigroup({1}), {2, 3}), (std::vector<unsigned long>{1, 2}));
}

TEST(BiPoly, ConstructionAndRendering) {
  EXPECT_EQ(y2x_plus(-1).str(), "Y^2*X - Y^3");
  EXPECT_EQ(y2x_plus(1).str(), "Y^2*X + Y^3");
  EXPECT_THROW(make_bipoly(s23(), {{0, 1, Rational(1)}}), Error);
  BiPoly cancelled = make_bipoly(s23(), {{1, 2, Rational(1)}, {1, 2, Rational(-1)}});
  EXPECT_TRUE(cancelled.is_zero());
}

TEST(BiPoly, ProductOfConjugates) {
  BiPoly product = bipoly_mul(y2x_plus(-1), y2x_plus(1));
  EXPECT_EQ(product.str(), "Y^4*X^2 - Y^6");
  EXPECT_EQ(product.degree(), 2u);
}

TEST(Primitivity, GaussLemmaFailsOverTwoThree) {
  Primitivity f = is_primitive(y2x_plus(-1));
  EXPECT_TRUE(f.primitive);
  EXPECT_TRUE(f.common_divisors.empty());
  GlReport report = gl_product_check(y2x_plus(-1), y2x_plus(1));
  EXPECT_TRUE(report.preconditions_hold);
  EXPECT_FALSE(report.product.primitive);
  ASSERT_TRUE(report.product.certificate);
  EXPECT_EQ(*report.product.certificate, 2u);
  EXPECT_TRUE(report.counterexample);
}

TEST(Primitivity, FullSemigroupHasNoCounterexample) {
  NumericalSemigroup n = make_semigroup({1});
  BiPoly f = make_bipoly(n, {{1, 2, Rational(1)}, {0, 3, Rational(-1)}});
  BiPoly g = make_bipoly(n, {{1, 2, Rational(1)}, {0, 3, Rational(1)}});
  GlReport report = gl_product_check(f, g);
  EXPECT_FALSE(report.preconditions_hold);
  EXPECT_FALSE(report.counterexample);
}

TEST(Primitivity, ConstantTermMakesPrimitive) {
  BiPoly f = make_bipoly(s23(), {{2, 4, Rational(1)}, {0, 0, Rational(3)}});
  EXPECT_TRUE(is_primitive(f).primitive);
}

TEST(Primitivity, NonMonomialCoefficientsAreUnsupported) {
  BiPoly f = make_bipoly(s23(), {{1, 2, Rational(1)}, {1, 3, Rational(1)}});
  try {
    is_primitive(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported);
  }
}

TEST(DPlusM, DomainMembership) {
  EXPECT_FALSE(domain_violation(zxq({"0", "1/2"})));
  EXPECT_TRUE(domain_violation(zxq({"1/2"})));
  EXPECT_FALSE(domain_violation(l19({"3", "2", "1/7"})));
  EXPECT_TRUE(domain_violation(l19({"0", "1/2", "1"})));
  EXPECT_EQ(zxq({"1", "0", "0"}).coefficients.size(), 1u);
  EXPECT_EQ(l19({"0", "1/2", "1"}).str(), "1/2*X + X^2");
}

TEST(DPlusM, ArithmeticInQX) {
  DPlusMPoly p = dpm_mul(zxq({"1", "1"}), zxq({"-1", "1"}));
  EXPECT_EQ(p, zxq({"-1", "0", "1"}));
  EXPECT_EQ(dpm_scale(zxq({"2", "4"}), R("1/2")), zxq({"1", "2"}));
}

TEST(DPlusM, ZxqClassification) {
  DpmClassification x = dpm_classify(zxq({"0", "1"}));
  EXPECT_FALSE(x.is_unit);
  EXPECT_TRUE(x.is_atomic.refuted());
  ASSERT_EQ(x.prime_splits.size(), 3u);
  for (const auto& split : x.prime_splits) {
    EXPECT_TRUE(split.quotient_in_domain) << split.p;
    EXPECT_TRUE(split.quotient_nonunit) << split.p;
    EXPECT_EQ(dpm_scale(split.quotient, Rational(static_cast<long>(split.p))), zxq({"0", "1"}));
  }
  EXPECT_TRUE(x.cross_check.consistent);
  EXPECT_TRUE(x.is_furstenberg.proved());

  DpmClassification two_plus_x = dpm_classify(zxq({"2", "1"}));
  EXPECT_TRUE(two_plus_x.is_atomic.proved());
  EXPECT_TRUE(two_plus_x.is_furstenberg.proved());
  EXPECT_TRUE(two_plus_x.cross_check.consistent);
  EXPECT_GT(two_plus_x.cross_check.candidates, 0u);

  DpmClassification unit = dpm_classify(zxq({"-1"}));
  EXPECT_TRUE(unit.is_unit);
  EXPECT_TRUE(unit.is_furstenberg.refuted());
}

TEST(DPlusM, ClassifyRejectsBadInput) {
  EXPECT_THROW(dpm_classify(zxq({})), Error);
  EXPECT_THROW(dpm_classify(zxq({"1/2", "1"})), Error);
}

TEST(DPlusM, L19Classification) {
  EXPECT_TRUE(dpm_classify(l19({"0", "1", "1"})).is_atomic.proved());
  EXPECT_TRUE(dpm_classify(l19({"0", "0", "1/2", "1"})).is_atomic.refuted());
  for (const auto& f : {l19({"0", "1", "1"}), l19({"0", "0", "1/2", "1"}), l19({"6", "0", "1/3"})})
    EXPECT_TRUE(dpm_classify(f).cross_check.consistent) << f.str();
}

TEST(L19Witness, ReferenceExample) {
  L19Witness w = l19_ca_witness(l19({"0", "1/2", "1"}));
  EXPECT_EQ(w.state, VerdictState::proved);
  EXPECT_FALSE(w.f_in_domain);
  EXPECT_EQ(w.m, 1u);
  EXPECT_EQ(w.a_m, R("1/2"));
  EXPECT_EQ(w.g.str(), "2*X^3 + 4*X^4");
  ASSERT_EQ(w.checks.size(), 4u);
  EXPECT_TRUE(w.all_pass());
  std::vector<std::string> names;
  for (const auto& c : w.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"g_in_domain", "g_atomic", "f_divides_g", "f_not_atomic"}));
}

TEST(L19Witness, InDomainInstance) {
  L19Witness w = l19_ca_witness(l19({"0", "0", "1/3", "1"}));
  EXPECT_TRUE(w.f_in_domain);
  EXPECT_TRUE(w.all_pass());
  EXPECT_EQ(w.g.str(), "3*X^4 + 9*X^5");
}

TEST(L19Witness, NonIntegralReciprocalIsUnknown) {
  L19Witness w = l19_ca_witness(l19({"0", "0", "2/3", "1"}));
  EXPECT_EQ(w.state, VerdictState::unknown);
  L19Witness low = l19_ca_witness(l19({"0", "2/3", "1"}));
  EXPECT_EQ(low.state, VerdictState::unknown);
  EXPECT_EQ(low.g.str(), "3/2*X^3 + 9/4*X^4");
  EXPECT_FALSE(low.all_pass());
  EXPECT_THROW(l19_ca_witness(l19({"0", "2", "1"})), Error);
}

}  // namespace
}  // namespace factorlab
