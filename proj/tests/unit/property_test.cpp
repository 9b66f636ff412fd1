// Structural identities of the ab-index on small exhaustive and random posets.

#include <random>

#include <gtest/gtest.h>

#include "arrcd/flagenum.hpp"
#include "oracles.hpp"

namespace arrcd {
namespace {

void expect_structure(const QuasiGradedPoset& p) {
  const AbPolynomial psi = ab_index(p);
  ASSERT_EQ(coproduct(psi), testing::interval_coproduct(p));
  ASSERT_EQ(ab_index(p.dual()), psi.star());
  ASSERT_EQ(ab_index_via_flag(p), psi);
  ASSERT_EQ(testing::ab_index_by_chains(p), psi);
}

TEST(Properties, ExhaustiveSmallPosets) {
  const auto posets = testing::exhaustive_posets(6);
  EXPECT_GT(posets.size(), 50U);
  for (const auto& p : posets) {
    ASSERT_TRUE(p.valid());
    expect_structure(p);
  }
}

TEST(Properties, RandomWeightedPosets) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) expect_structure(testing::random_poset(rng));
}

TEST(Properties, AbIndexIsHomogeneousOfDegreeRankMinusOne) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const QuasiGradedPoset p = testing::random_poset(rng);
    const AbPolynomial psi = ab_index(p);
    ASSERT_TRUE(psi.is_homogeneous());
    if (!psi.is_zero()) ASSERT_EQ(psi.degrees().front(), p.rank() - 1);
  }
}

TEST(Properties, EulerianPosetsHaveCdIndex) {
  for (const auto& p : testing::exhaustive_posets(7)) {
    if (!p.eulerian_check().eulerian) continue;
    ASSERT_EQ(expand_cd(cd_index(p)), ab_index(p));
  }
}

}  // namespace
}  // namespace arrcd
