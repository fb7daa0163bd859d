#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hcurve/classify.hpp"
#include "hcurve/errors.hpp"
#include "hcurve/frenet.hpp"
#include "support/random_curves.hpp"

using namespace hcurve;

namespace {

constexpr double kPi = std::numbers::pi;

HorizontalCurve analytic(const char* x, const char* y, const char* z, Interval iv) {
  return reparam_horizontal(ParamCurve::analytic(ScalarFn::parse(x), ScalarFn::parse(y), ScalarFn::parse(z), iv));
}

}  // namespace

TEST(Classify, LineThroughOrigin) {
  const PositionClass c = classify_position(analytic("s+1", "2*s+2", "0", {0, 2}));
  EXPECT_EQ(c.tag, PositionTag::LineInXYPlane);
  EXPECT_NEAR(c.witness.at("heading"), std::atan2(2.0, 1.0), 1e-9);
  EXPECT_NEAR(c.witness.at("c1"), std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(c.witness.at("tau"), 0.0, 1e-9);
}

TEST(Classify, CircularHelix) {
  const PositionClass c = classify_position(analytic("sin(s)", "cos(s)", "1.5*s", {0, 4}));
  EXPECT_EQ(c.tag, PositionTag::CircularHelix);
  EXPECT_NEAR(c.witness.at("radius"), 1.0, 1e-9);
  EXPECT_NEAR(c.witness.at("c1"), 1.0, 1e-9);
  EXPECT_NEAR(c.witness.at("pitch"), 1.0, 1e-6);
  EXPECT_NEAR(c.witness.at("c3"), 1.0, 1e-12);
  EXPECT_NEAR(c.witness.at("c4"), 0.0, 1e-12);
}

TEST(Classify, VerticalPlane) {
  const PositionClass c = classify_position(analytic("2*(s+1)", "3*(s+1)", "s^2/2", {0, 1}));
  EXPECT_EQ(c.tag, PositionTag::VerticalPlaneCurve);
  EXPECT_NEAR(3 * c.witness.at("c2") - 2 * c.witness.at("c3"), 0.0, 1e-9);
  EXPECT_NEAR(c.witness.at("c1"), std::sqrt(13.0), 1e-9);
  EXPECT_NEAR(c.witness.at("z0"), 0.0, 1e-12);
}

TEST(Classify, PlanarCurve) {
  const PositionClass c = classify_position(analytic("2*cos(s)", "sin(s)", "0", {0, 2}));
  EXPECT_EQ(c.tag, PositionTag::PlanarCurveXY);
  EXPECT_NEAR(c.witness.at("x0"), 2.0, 1e-12);
  EXPECT_NEAR(c.witness.at("y0"), 0.0, 1e-12);
  EXPECT_NEAR(c.witness.at("heading"), kPi / 2, 1e-9);
}

TEST(Classify, GenericCurvesAreGeneral) {
  hcurve::testing::CurveFactory f(404);
  for (int i = 0; i < 5; ++i) {
    const HorizontalCurve h = reconstruct(f.invariants(true), f.pose(), f.uniform(2, 4));
    EXPECT_EQ(classify_position(h).tag, PositionTag::General);
  }
}

TEST(Classify, RejectsBadTolerance) {
  const HorizontalCurve h = analytic("s", "0", "0", {0, 1});
  EXPECT_THROW(classify_position(h, {0.0, 100}), ParameterError);
  EXPECT_THROW(classify_position(h, {0.2, 100}), ParameterError);
}

TEST(Canonical, LineAtQuarterTurn) {
  CanonicalParams p;
  p.values = {{"heading", kPi / 4}, {"c1", 0.5}, {"tau", 0.0}};
  const HorizontalCurve h = reparam_horizontal(make_canonical(PositionTag::LineInXYPlane, p, {0, 2}));
  const PositionClass c = classify_position(h);
  EXPECT_EQ(c.tag, PositionTag::LineInXYPlane);
  EXPECT_NEAR(c.witness.at("heading"), kPi / 4, 1e-9);
  EXPECT_NEAR(c.witness.at("c1"), 0.5, 1e-9);
}

TEST(Canonical, VerticalPlaneWithTorsion) {
  CanonicalParams p;
  p.values = {{"c1", 0.0}, {"c2", 1.0}, {"c3", 2.0}};
  p.tau = ScalarFn::constant(1);
  const ParamCurve c = make_canonical(PositionTag::VerticalPlaneCurve, p, {0, 1});
  for (double u : uniform_grid({0, 1}, 10)) {
    const Vec3 q = c.position(u);
    EXPECT_NEAR(2 * q.x - q.y, 0.0, 1e-15);
    EXPECT_NEAR(q.z, u, 1e-15);
  }
}

TEST(Canonical, HelixCurvature) {
  CanonicalParams p;
  p.values = {{"c1", 1.0}, {"c2", 0.0}, {"c3", 1.0}, {"c4", 0.0}};
  p.tau = ScalarFn::parse("0.2*cos(s)");
  const HorizontalCurve h = reparam_horizontal(make_canonical(PositionTag::CircularHelix, p, {0, 3}));
  for (double s : arc_grid(h, 10)) {
    const auto k = kappa_tau(h, s);
    EXPECT_NEAR(k.kappa, -1.0, 1e-9);
    EXPECT_NEAR(k.tau, 0.2 * std::cos(s), 1e-6);
  }
}

TEST(Canonical, Errors) {
  CanonicalParams p;
  EXPECT_THROW(make_canonical(PositionTag::LineInXYPlane, p, {0, 1}), ParameterError);
  EXPECT_THROW(make_canonical(PositionTag::General, p, {0, 1}), ParameterError);
  p.values = {{"c1", 1.0}, {"c2", 0.0}, {"c3", 2.0}, {"c4", 0.0}};
  EXPECT_THROW(make_canonical(PositionTag::CircularHelix, p, {0, 1}), ParameterError);
  p.values = {{"c1", 0.0}, {"c2", 0.0}, {"c3", 0.0}};
  EXPECT_THROW(make_canonical(PositionTag::VerticalPlaneCurve, p, {0, 1}), ParameterError);
  p.values = {{"heading", 0.0}, {"c1", 0.0}, {"tau", 0.0}};
  EXPECT_THROW(make_canonical(PositionTag::LineInXYPlane, p, {1, 1}), ParameterError);
}

TEST(Tags, NamesRoundTrip) {
  for (auto t : {PositionTag::LineInXYPlane, PositionTag::PlanarCurveXY, PositionTag::VerticalPlaneCurve,
                 PositionTag::CircularHelix, PositionTag::General})
    EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_FALSE(parse_tag("Helix").has_value());
}
