#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace factorlab {
namespace {

using testing::Rng;
using testing::Tally;

void expect_clean(const Tally& tally) {
  EXPECT_TRUE(tally.ok()) << tally.violations << " violations, first: " << tally.first_failure;
}

TEST(Invariants, GeometricMonotonicity) {
  Rng rng(31);
  Tally tally;
  for (int i = 0; i < 1000; ++i) testing::monotonicity_sample(rng, tally);
  expect_clean(tally);
  EXPECT_GT(tally.nontrivial, 300);
}

TEST(Invariants, DivisibilityMembershipDuality) {
  Rng rng(32);
  Tally tally;
  for (int i = 0; i < 1000; ++i) testing::duality_sample(rng, tally);
  expect_clean(tally);
  EXPECT_GT(tally.nontrivial, 300);
}

TEST(Invariants, ScalingInvariance) {
  Rng rng(33);
  Tally tally;
  for (int i = 0; i < 150; ++i) testing::scaling_sample(rng, tally);
  expect_clean(tally);
  EXPECT_GT(tally.nontrivial, 200);
}

TEST(Invariants, LatticeAndWitnessReverification) {
  Rng rng(34);
  Tally tally;
  for (int i = 0; i < 150; ++i) testing::lattice_sample(rng, tally);
  expect_clean(tally);
  EXPECT_GT(tally.nontrivial, 150);
}

TEST(Invariants, ArchimedeanMinimality) {
  Rng rng(35);
  Tally tally;
  for (int i = 0; i < 300; ++i) testing::archimedean_sample(rng, tally);
  expect_clean(tally);
}

TEST(Invariants, BudgetMonotonicity) {
  // A larger exponent budget never turns a decided membership answer into a
  // different one, and decides at least as much.
  Rng rng(36);
  Budget small;
  small.max_k = 3;
  for (int i = 0; i < 300; ++i) {
    MixedSpec spec = testing::random_mixed_spec(rng, 3);
    MonoidSpec m = spec;
    Rational q = testing::uniform(rng, 0, 1) ? testing::random_member(rng, m) : testing::random_value(rng, 8, 12);
    Truth tight = member(m, q, small).truth;
    Truth loose = member(m, q).truth;
    if (tight != Truth::undetermined) {
      EXPECT_EQ(tight, loose) << testing::show(m, q);
    }
  }
}

}  // namespace
}  // namespace factorlab
