#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../tests/support/random_curves.hpp"
#include "hcurve/cesaro.hpp"
#include "hcurve/curve.hpp"
#include "hcurve/errors.hpp"

using namespace hcurve;
using hcurve::testing::CurveFactory;

namespace {

ParamCurve analytic(const char* x, const char* y, const char* z, Interval iv) {
  return ParamCurve::analytic(ScalarFn::parse(x), ScalarFn::parse(y), ScalarFn::parse(z), iv);
}

void expect_vec(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

}  // namespace

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_horizontally_regular(analytic("s", "0", "0", {0, 1}), 1e-8));
  EXPECT_FALSE(is_horizontally_regular(analytic("0", "0", "s", {0, 1}), 1e-8));
  EXPECT_TRUE(is_horizontally_regular(analytic("cos(s)", "sin(s)", "s", {0, 6}), 1e-8));
}

TEST(Regularity, ReparamRejectsVerticalLine) {
  EXPECT_THROW(reparam_horizontal(analytic("0", "0", "s", {0, 1})), RegularityError);
}

TEST(KappaTau, Line) {
  const auto v = kappa_tau_arbitrary(analytic("s", "0", "0", {0, 1}), 0.5);
  EXPECT_EQ(v.kappa, 0.0);
  EXPECT_EQ(v.tau, 0.0);
}

TEST(KappaTau, PlanarCircle) {
  const double R = 2.5;
  const ParamCurve c = analytic("2.5*cos(s)", "2.5*sin(s)", "0", {0, 6});
  for (double u : {0.0, 1.0, 4.2}) {
    const auto v = kappa_tau_arbitrary(c, u);
    EXPECT_NEAR(v.kappa, 1.0 / R, 1e-14);
    EXPECT_NEAR(v.tau, R, 1e-14);
  }
}

TEST(KappaTau, HorizontalLiftOfCircle) {
  const ParamCurve c = analytic("3*cos(s/3)", "3*sin(s/3)", "-3*s", {0, 10});
  for (double u : {0.0, 2.0, 7.5}) {
    const auto v = kappa_tau_arbitrary(c, u);
    EXPECT_NEAR(v.kappa, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(v.tau, 0.0, 1e-14);
  }
}

TEST(KappaTau, DegenerateSpeedThrows) {
  EXPECT_THROW(kappa_tau_arbitrary(analytic("s^2", "0", "0", {-1, 1}), 0.0), RegularityError);
}

TEST(Reparam, ConstantSpeedTwo) {
  const HorizontalCurve h = reparam_horizontal(analytic("2*s", "0", "0", {0, 1}));
  EXPECT_NEAR(h.length(), 2.0, 1e-12);
  for (double s : {0.0, 0.3, 1.1, 2.0}) EXPECT_NEAR(h.param_at(s), s / 2.0, 1e-12);
}

TEST(Reparam, CircleOfRadiusTwo) {
  const HorizontalCurve h = reparam_horizontal(analytic("2*cos(s)", "2*sin(s)", "0", {0, 2 * std::numbers::pi}));
  EXPECT_NEAR(h.length(), 4 * std::numbers::pi, 1e-10);
}

TEST(Reparam, UnitSpeedPansuCurveIsIdentity) {
  const HorizontalCurve h = reparam_horizontal(pansu_geodesic(1.0));
  EXPECT_NEAR(h.length(), std::numbers::pi, 1e-10);
  for (double s : uniform_grid(h.domain(), 50)) EXPECT_NEAR(h.param_at(s), s, 1e-10);
}

TEST(Reparam, UnitContactSpeedAfterReparam) {
  const HorizontalCurve h = reparam_horizontal(analytic("s^2+s", "sin(s)", "s^3", {0, 2}));
  for (double s : arc_grid(h, 100)) {
    const Jet j = h.jet(s);
    EXPECT_NEAR(std::hypot(j.d1.x, j.d1.y), 1.0, 1e-8);
  }
}

TEST(Frame, LineAtTwo) {
  const HorizontalCurve h = reparam_horizontal(analytic("s", "0", "0", {0, 3}));
  const Frame f = frame_at(h, 2.0);
  expect_vec(f.t_euclidean(), {1, 0, 0}, 1e-12);
  expect_vec(f.n_euclidean(), {0, 1, -2}, 1e-12);
  expect_vec(f.b_euclidean(), {0, 0, 1}, 0.0);
}

TEST(Frame, HorizontalLiftAtStart) {
  const HorizontalCurve h = reparam_horizontal(analytic("cos(s)", "sin(s)", "-s", {0, 3}));
  const Frame f = frame_at(h, 0.0);
  expect_vec(f.t_euclidean(), {0, 1, -1}, 1e-12);
  EXPECT_NEAR(f.t.a1, 0.0, 1e-12);
  EXPECT_NEAR(f.t.a2, 1.0, 1e-12);
  EXPECT_NEAR(f.t.a3, 0.0, 1e-12);
}

TEST(Frame, InvariantsOnRandomCurves) {
  CurveFactory f(21);
  for (int i = 0; i < 20; ++i) {
    const HorizontalCurve h = reparam_horizontal(f.analytic_curve());
    for (double s : arc_grid(h, 30)) {
      const Frame fr = frame_at(h, s);
      const TangentVector jt = apply_J(fr.t);
      EXPECT_NEAR(fr.n.a1, jt.a1, 1e-14);
      EXPECT_NEAR(fr.n.a2, jt.a2, 1e-14);
      EXPECT_EQ(fr.t.a3, 0.0);
      EXPECT_EQ(fr.n.a3, 0.0);
      EXPECT_NEAR(std::hypot(fr.t.a1, fr.t.a2), 1.0, 1e-8);
      EXPECT_NEAR(fr.t.a1 * fr.n.a1 + fr.t.a2 * fr.n.a2, 0.0, 1e-14);
      expect_vec(fr.b_euclidean(), {0, 0, 1}, 0.0);
    }
  }
}

TEST(FrameCoefficients, LineIsParallelToTangent) {
  const HorizontalCurve h = reparam_horizontal(analytic("s", "0", "0", {0, 3}));
  for (double s : {0.0, 1.0, 2.5}) {
    const auto u = frame_coefficients(h, s);
    EXPECT_NEAR(u[0], s, 1e-12);
    EXPECT_NEAR(u[1], 0.0, 1e-12);
    EXPECT_NEAR(u[2], 0.0, 1e-12);
  }
}

TEST(FrameCoefficients, DistanceIdentities) {
  CurveFactory f(22);
  for (int i = 0; i < 20; ++i) {
    const HorizontalCurve h = reparam_horizontal(f.analytic_curve());
    for (double s : arc_grid(h, 25)) {
      const auto u = frame_coefficients(h, s);
      const H1Point p = h.point(s);
      EXPECT_NEAR(u[0] * u[0] + u[1] * u[1], p.x * p.x + p.y * p.y, 1e-10);
      EXPECT_EQ(u[2], p.z);
      EXPECT_NEAR(std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]), norm(p.vec()), 1e-10);
    }
  }
}

TEST(Cesaro, LineResidualVanishes) {
  const HorizontalCurve h = reparam_horizontal(analytic("s", "0", "0", {0, 3}));
  EXPECT_LT(verify_cesaro(h, arc_grid(h, 50, 0.1), 1e-5), 1e-9);
}

TEST(Cesaro, PansuCurve) {
  const HorizontalCurve h = reparam_horizontal(pansu_geodesic(1.0));
  EXPECT_LT(verify_cesaro(h, arc_grid(h, 200, 0.01), 1e-5), 1e-7);
}

TEST(Cesaro, RandomAnalyticCurves) {
  CurveFactory f(23);
  for (int i = 0; i < 10; ++i) {
    const HorizontalCurve h = reparam_horizontal(f.analytic_curve());
    EXPECT_LT(verify_cesaro(h, arc_grid(h, 100, 0.05), 1e-5), 1e-6);
  }
}

TEST(Properties, KappaIsPlaneCurvatureOfProjection) {
  CurveFactory f(24);
  for (int i = 0; i < 30; ++i) {
    const ParamCurve c = f.analytic_curve();
    const auto* e = c.expressions();
    for (double u : uniform_grid(c.domain(), 20)) {
      // Signed curvature of (x, y) from independently differentiated components.
      const ScalarFn dx = (*e)[0].differentiate(), dy = (*e)[1].differentiate();
      const ScalarFn ddx = dx.differentiate(), ddy = dy.differentiate();
      const double num = dx(u) * ddy(u) - dy(u) * ddx(u);
      const double plane = num / std::pow(dx(u) * dx(u) + dy(u) * dy(u), 1.5);
      EXPECT_NEAR(kappa_tau_arbitrary(c, u).kappa, plane, 1e-10);
    }
  }
}

TEST(Properties, TauVanishesIffHorizontal) {
  // (cos s, sin s, -s) is horizontal; adding a vertical drift makes T-component nonzero.
  const ParamCurve horizontal = analytic("cos(s)", "sin(s)", "-s", {0, 5});
  const ParamCurve drift = analytic("cos(s)", "sin(s)", "-s+0.1*s^2", {0, 5});
  for (double u : uniform_grid({0.1, 5}, 40)) {
    const Jet j = horizontal.jet(u);
    const TangentVector v = TangentVector::from_euclidean(j.d1, H1Point::from(j.pos));
    EXPECT_NEAR(v.a3, 0.0, 1e-14);
    EXPECT_NEAR(kappa_tau_arbitrary(horizontal, u).tau, 0.0, 1e-14);
    EXPECT_GT(std::fabs(kappa_tau_arbitrary(drift, u).tau), 1e-3);
  }
}

TEST(Properties, PshInvariance) {
  CurveFactory f(25);
  for (int i = 0; i < 50; ++i) {
    const ParamCurve c = f.analytic_curve();
    const ParamCurve g = c.transformed(f.transform());
    for (double u : uniform_grid(c.domain(), 20)) {
      const auto a = kappa_tau_arbitrary(c, u), b = kappa_tau_arbitrary(g, u);
      EXPECT_NEAR(a.kappa, b.kappa, 1e-9);
      EXPECT_NEAR(a.tau, b.tau, 1e-9);
    }
  }
}

TEST(Sampled, RejectsBadInput) {
  std::vector<CurveSample> rows = {{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 2, 0, 0}};
  EXPECT_THROW(ParamCurve::sampled(rows), ParameterError);
  rows.push_back({1.5, 3, 0, 0});
  EXPECT_THROW(ParamCurve::sampled(rows), ParameterError);
}

TEST(Sampled, CircleInvariants) {
  std::vector<CurveSample> rows;
  const double R = 1.5;
  for (double u : uniform_grid({0, 4}, 4000)) rows.push_back({u, R * std::cos(u), R * std::sin(u), 0.3 * u});
  const HorizontalCurve h = reparam_horizontal(ParamCurve::sampled(rows));
  EXPECT_NEAR(h.length(), 4 * R, 1e-8);
  for (double s : arc_grid(h, 20, 0.1)) {
    const auto v = kappa_tau(h, s);
    EXPECT_NEAR(v.kappa, 1.0 / R, 1e-6);
    EXPECT_NEAR(v.tau, (R * R + 0.3) / R, 1e-6);
  }
}

TEST(Remeasure, MatchesAnalyticInvariants) {
  const HorizontalCurve h = reparam_horizontal(analytic("3*cos(s/3)", "3*sin(s/3)", "-3*s+s", {0, 6}));
  for (const auto& m : remeasure_invariants(h)) {
    EXPECT_NEAR(m.kappa, 1.0 / 3.0, 1e-7);
    EXPECT_NEAR(m.tau, 1.0, 1e-7);
  }
}
