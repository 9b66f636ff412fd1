#include <gtest/gtest.h>

#include "arrcd/flagenum.hpp"
#include "arrcd/geometry.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace arrcd {
namespace {

using testing::hyperplane;

TEST(Geometry, GenericLinesLattice) {
  const IntersectionPoset p = intersection_lattice(testing::generic_hyperplanes(3, 2));
  const QuasiGradedPoset& q = p.poset();
  EXPECT_EQ(q.size(), 8U);
  EXPECT_EQ(q.id(q.bottom()), "R^2");
  EXPECT_EQ(q.id(q.top()), "empty");
  EXPECT_EQ(q.rank(), 3);
  EXPECT_EQ(q.rank(q.index("V{1,3}")), 2);
  EXPECT_EQ(p.kind(), CarrierKind::affine);
  EXPECT_TRUE(p.validate().empty());
  EXPECT_EQ(complement_euler(p), 7);
  // The empty top contributes (-1)^3 mu(R^2, empty) = 1 on top of the seven regions.
  EXPECT_EQ(zaslavsky_Z(q), 8);
}

TEST(Geometry, CentralLatticeHasUnchangedZaslavskyInvariant) {
  const IntersectionPoset p = intersection_lattice(testing::generic_central_hyperplanes(3, 2));
  const QuasiGradedPoset& q = p.poset();
  EXPECT_EQ(q.mobius(q.bottom(), q.top()), 0);
  EXPECT_EQ(zaslavsky_Z(q), 6);
}

TEST(Geometry, RegionOracle) {
  const std::vector<long> expected{2, 3, 4, 7, 6, 4, 6, 9, 11, 4, 8, 13};
  const auto fixtures = testing::planar_line_fixtures();
  ASSERT_EQ(fixtures.size(), expected.size());
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    EXPECT_EQ(region_count_oracle(fixtures[i].arrangement), expected[i]) << fixtures[i].name;
    EXPECT_EQ(complement_euler(intersection_lattice(fixtures[i].arrangement)), expected[i]) << fixtures[i].name;
  }
  EXPECT_EQ(region_count_oracle({2, {}}), 1);
}

TEST(Geometry, RepeatedSubspacesCollapse) {
  const IntersectionPoset p = intersection_lattice({2, {hyperplane({1, 0}, 0), hyperplane({3, 0}, 0)}});
  EXPECT_EQ(p.poset().size(), 3U);
  EXPECT_TRUE(p.poset().find("V{1,2}").has_value());
}

TEST(Geometry, InputValidation) {
  RationalMatrix zero(1, 2);
  EXPECT_THROW(intersection_lattice({2, {AffineSubspace(zero, {Rational(1)})}}), InconsistentSubspace);
  EXPECT_THROW(intersection_lattice({2, {AffineSubspace(zero, {Rational(0)})}}), ValidationError);
  EXPECT_THROW(intersection_lattice({3, {hyperplane({1, 0}, 0)}}), ValidationError);
  EXPECT_THROW(AffineSubspace(zero, {}), ValidationError);
  EXPECT_THROW(spherize({2, {hyperplane({1, 0}, 1)}}), NotCentral);
  EXPECT_THROW(region_count_oracle({3, {hyperplane({1, 0, 0}, 0)}}), ValidationError);
}

TEST(Geometry, SpherizeTwoGreatCircles) {
  const IntersectionPoset p = spherize({3, {hyperplane({1, 0, 0}, 0), hyperplane({0, 1, 0}, 0)}});
  const QuasiGradedPoset& q = p.poset();
  EXPECT_EQ(q.id(q.bottom()), "S^2");
  EXPECT_EQ(p.chi(q.index("V{1,2}")), 2);
  EXPECT_EQ(*p.dim(q.index("V{1,2}")), 0);
  EXPECT_EQ(p.chi(q.index("V{1}")), 0);
  EXPECT_EQ(complement_euler(p), 4);
}

TEST(Geometry, SpherizeMapsTheOriginToTheEmptyElement) {
  const IntersectionPoset p = spherize(testing::generic_central_hyperplanes(3, 3));
  const QuasiGradedPoset& q = p.poset();
  EXPECT_EQ(q.size(), 1U + 3U + 3U + 1U);
  EXPECT_EQ(q.rank(), 3);
  EXPECT_EQ(complement_euler(p), 8);
}

TEST(Geometry, SphericalZaslavskyAgreesWithComplement) {
  for (const auto& f : testing::central_fixtures()) {
    EXPECT_EQ(complement_euler(spherize(f.arrangement)), zaslavsky_Z(intersection_lattice(f.arrangement).poset()))
        << f.name;
  }
}

TEST(Geometry, TorifyCountsComponents) {
  const IntersectionPoset p = torify({2, {hyperplane({1, 1}, 0), hyperplane({1, -1}, 0)}});
  const QuasiGradedPoset& q = p.poset();
  const std::size_t points = q.index("V{1,2}");
  EXPECT_EQ(p.chi(points), 2);
  EXPECT_EQ(*p.components()[points], 2);
  EXPECT_EQ(*p.dim(points), 0);
  EXPECT_EQ(p.chi(q.bottom()), 0);
  EXPECT_EQ(q.id(q.bottom()), "T^2");

  const IntersectionPoset split = torify({2, {hyperplane({1, 1}, 0), hyperplane({1, -1}, 0)}}, {.per_component = true});
  EXPECT_EQ(split.poset().size(), q.size() + 1);
  EXPECT_TRUE(split.poset().find("V{1,2}#1").has_value());
  EXPECT_TRUE(split.poset().find("V{1,2}#2").has_value());
}

TEST(Geometry, TorifyRationalOffsetsAndDenominators) {
  RationalMatrix a(1, 2);
  a(0, 0) = Rational(1, 2);
  a(0, 1) = Rational(3, 4);
  // x/2 + 3y/4 = 1/8 is the circle 2x + 3y = 1/2.
  const IntersectionPoset p = torify({2, {AffineSubspace(a, {Rational(1, 8)})}});
  EXPECT_EQ(p.poset().size(), 3U);
  EXPECT_EQ(*p.components()[p.poset().index("V{1}")], 1);

  // x = 0 and x = 1 are the same circle on the torus.
  const IntersectionPoset same = torify({2, {hyperplane({1, 0}, 0), hyperplane({1, 0}, 1)}});
  EXPECT_TRUE(same.poset().find("V{1,2}").has_value());
  EXPECT_EQ(same.poset().size(), 3U);
}

TEST(Geometry, TorifyTwoPlanesInThreeTorus) {
  const IntersectionPoset p = torify({3, {hyperplane({1, 0, 0}, 0), hyperplane({1, 2, 0}, 0)}});
  const QuasiGradedPoset& q = p.poset();
  const std::size_t circles = q.index("V{1,2}");
  EXPECT_EQ(*p.dim(circles), 1);
  EXPECT_EQ(*p.components()[circles], 2);
  EXPECT_EQ(p.chi(circles), 0);
}

TEST(Geometry, TorifyComponentBound) {
  // The two circles meet in |det| = 48 points.
  const SubspaceArrangement arr{2, {hyperplane({1, 7}, 0), hyperplane({7, 1}, 0)}};
  EXPECT_THROW(torify(arr, {.max_components = 20}), ValidationError);
  EXPECT_EQ(torify(arr, {.max_components = 100}).chi(torify(arr).poset().index("V{1,2}")), 48);
}

TEST(Geometry, TorifyGroupsIntersectionPoints) {
  // 2x = 0 is the line x = 0, whose image is one circle; the diagonals meet twice.
  const IntersectionPoset p = torify({2, {hyperplane({2, 0}, 0), hyperplane({0, 1}, 0)}});
  EXPECT_EQ(*p.components()[p.poset().index("V{1}")], 1);
  const IntersectionPoset diagonals = torify({2, {hyperplane({1, 1}, 0), hyperplane({1, -1}, 0)}});
  EXPECT_TRUE(diagonals.validate().empty());
  const QuasiGradedPoset& q = diagonals.poset();
  EXPECT_EQ(*diagonals.components()[q.index("V{1}")], 1);
  EXPECT_EQ(*diagonals.components()[q.index("V{1,2}")], 2);
  EXPECT_EQ(diagonals.chi(q.index("V{1,2}")), 2);
}

}  // namespace
}  // namespace arrcd
