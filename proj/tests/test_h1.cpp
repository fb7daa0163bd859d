#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hcurve/h1.hpp"

using namespace hcurve;

namespace {

void expect_point(const H1Point& a, const H1Point& b, double tol = 1e-12) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

H1Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST(LeftTranslate, OriginIsIdentity) {
  const H1Point q{0.3, -1.2, 4.0};
  EXPECT_EQ(left_translate(kOrigin, q), q);
}

TEST(LeftTranslate, UnitVectors) { EXPECT_EQ(left_translate({1, 0, 0}, {0, 1, 0}), (H1Point{1, 1, -1})); }

TEST(LeftTranslate, InverseGivesOrigin) {
  const H1Point p{2.5, -0.7, 1.1};
  expect_point(left_translate(p, group_inverse(p)), kOrigin);
  expect_point(left_translate(group_inverse(p), p), kOrigin);
}

TEST(LeftTranslate, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const H1Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
    expect_point(left_translate(p, left_translate(q, r)), left_translate(left_translate(p, q), r), 1e-12);
  }
}

TEST(StandardFrame, OriginIsEuclideanBasis) {
  const auto f = standard_frame(kOrigin);
  EXPECT_EQ(f[0].euclidean(), (Vec3{1, 0, 0}));
  EXPECT_EQ(f[1].euclidean(), (Vec3{0, 1, 0}));
  EXPECT_EQ(f[2].euclidean(), (Vec3{0, 0, 1}));
}

TEST(StandardFrame, EuclideanCoordinatesAtPoint) {
  const auto f = standard_frame({2, 3, 7});
  EXPECT_EQ(f[0].euclidean(), (Vec3{1, 0, 3}));
  EXPECT_EQ(f[1].euclidean(), (Vec3{0, 1, -2}));
  EXPECT_EQ(f[2].euclidean(), (Vec3{0, 0, 1}));
  EXPECT_TRUE(f[0].horizontal());
  EXPECT_TRUE(f[1].horizontal());
  EXPECT_FALSE(f[2].horizontal());
}

TEST(StandardFrame, EuclideanRoundTrip) {
  const H1Point p{-1.5, 0.25, 3.0};
  const TangentVector v{0.3, -0.8, 1.7, p};
  const TangentVector w = TangentVector::from_euclidean(v.euclidean(), p);
  EXPECT_NEAR(w.a1, v.a1, 1e-15);
  EXPECT_NEAR(w.a2, v.a2, 1e-15);
  EXPECT_NEAR(w.a3, v.a3, 1e-15);
}

TEST(ApplyJ, BasisImages) {
  const TangentVector e1 = apply_J({1, 0, 0, kOrigin});
  EXPECT_EQ(e1.a1, 0.0);
  EXPECT_EQ(e1.a2, 1.0);
  EXPECT_EQ(e1.a3, 0.0);
  const TangentVector t = apply_J({0, 0, 1, kOrigin});
  EXPECT_EQ(t.a1, 0.0);
  EXPECT_EQ(t.a2, 0.0);
  EXPECT_EQ(t.a3, 0.0);
}

TEST(ApplyJ, SquareIsMinusIdentityOnContactPlane) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const TangentVector v{d(rng), d(rng), 0.0, random_point(rng)};
    const TangentVector jj = apply_J(apply_J(v));
    EXPECT_DOUBLE_EQ(jj.a1, -v.a1);
    EXPECT_DOUBLE_EQ(jj.a2, -v.a2);
    EXPECT_EQ(jj.a3, 0.0);
  }
}

TEST(PshApply, Identity) {
  const H1Point p{1.5, -2.0, 0.5};
  EXPECT_EQ(psh_apply(PshTransform::identity(), p), p);
}

TEST(PshApply, QuarterTurn) { expect_point(psh_apply(PshTransform{std::numbers::pi / 2, kOrigin}, H1Point{1, 0, 5}), {0, 1, 5}); }

TEST(PshApply, PureTranslationMatchesGroupLaw) { expect_point(psh_apply(PshTransform{0.0, {1, 0, 0}}, H1Point{0, 1, 0}), {1, 1, -1}); }

TEST(PshApply, InverseRecoversPoint) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const PshTransform g{a(rng), random_point(rng)};
    const H1Point p = random_point(rng);
    expect_point(psh_apply(inverse(g), psh_apply(g, p)), p, 1e-12);
  }
}

TEST(PshApply, CompositionMatchesSequentialApplication) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> a(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const PshTransform g{a(rng), random_point(rng)}, h{a(rng), random_point(rng)};
    const H1Point p = random_point(rng);
    expect_point(psh_apply(compose(g, h), p), psh_apply(g, psh_apply(h, p)), 1e-11);
  }
}

TEST(PshApply, PushForwardKeepsContactPlane) {
  // A horizontal vector at p maps to a horizontal vector at g(p).
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const PshTransform g{a(rng), random_point(rng)};
    const H1Point p = random_point(rng);
    const TangentVector v{a(rng), a(rng), 0.0, p};
    const Vec3 w = psh_push_vector(g, v.euclidean());
    const TangentVector wb = TangentVector::from_euclidean(w, psh_apply(g, p));
    EXPECT_NEAR(wb.a3, 0.0, 1e-12);
    EXPECT_NEAR(std::hypot(wb.a1, wb.a2), std::hypot(v.a1, v.a2), 1e-12);
  }
}
