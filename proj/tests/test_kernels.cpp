#include <gtest/gtest.h>

#include "hcurve/cesaro.hpp"
#include "hcurve/frenet.hpp"
#include "hcurve/kernels.hpp"

using namespace hcurve;

namespace {

HorizontalCurve sample_curve_for_kernels() {
  return reconstruct({ScalarFn::parse("1+0.3*sin(s)"), ScalarFn::parse("0.2*cos(s)")}, {{0.5, -0.2, 0.1}, 0.7}, 4);
}

}  // namespace

TEST(Kernels, InvariantsMatchReference) {
  const HorizontalCurve h = sample_curve_for_kernels();
  const auto grid = arc_grid(h, 777);
  const auto a = kernels::sample_invariants(h, grid);
  const auto b = kernels::reference::sample_invariants(h, grid);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].kappa, b[i].kappa);
    EXPECT_EQ(a[i].tau, b[i].tau);
  }
}

TEST(Kernels, FrameCoefficientsMatchReference) {
  const HorizontalCurve h = sample_curve_for_kernels();
  const auto grid = arc_grid(h, 501);
  EXPECT_EQ(kernels::sample_frame_coefficients(h, grid), kernels::reference::sample_frame_coefficients(h, grid));
}

TEST(Kernels, CesaroResidualsMatchReference) {
  const HorizontalCurve h = sample_curve_for_kernels();
  const auto grid = arc_grid(h, 301, 0.01);
  EXPECT_EQ(kernels::cesaro_residuals(h, grid, 1e-5), kernels::reference::cesaro_residuals(h, grid, 1e-5));
}

TEST(Kernels, MembershipDefectsMatchReference) {
  const PansuSphere p = pansu_sphere(1.0);
  const auto table = generator_table(p.surface, 500);
  const auto grid = arc_grid(p.curve, 400);
  const auto a = kernels::membership_defects(p.curve, p.surface, table, grid);
  const auto b = kernels::reference::membership_defects(p.curve, p.surface, table, grid);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].defect, b[i].defect);
    EXPECT_EQ(a[i].sigma, b[i].sigma);
  }
}

TEST(Kernels, EmptyGrid) {
  const HorizontalCurve h = sample_curve_for_kernels();
  EXPECT_TRUE(kernels::sample_invariants(h, {}).empty());
  EXPECT_TRUE(kernels::cesaro_residuals(h, {}, 1e-5).empty());
}
