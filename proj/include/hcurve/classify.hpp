#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcurve/curve.hpp"

namespace hcurve {

enum class PositionTag { LineInXYPlane, PlanarCurveXY, VerticalPlaneCurve, CircularHelix, General };

const char* tag_name(PositionTag tag);
std::optional<PositionTag> parse_tag(std::string_view name);

struct PositionClass {
  PositionTag tag = PositionTag::General;
  std::map<std::string, double> witness;
  std::map<std::string, double> residuals;
  std::vector<PositionTag> candidates;  // planes that contain the position vector
};

struct ClassifyOptions {
  double tol = 1e-6;       // relative: lengths are compared against tol * diameter
  std::size_t grid = 1000;
};

/// Tests which of span{t,n}, span{t,b}, span{n,b} contains r(s) (frame coefficient
/// u3, u2 or u1 vanishing), then confirms by fitting the matching closed form.
///
/// Witnesses:
///   LineInXYPlane       heading, c1 (r = (s + c1) t - tau n), tau
///   PlanarCurveXY       x0, y0, heading
///   VerticalPlaneCurve  c1, c2, c3 (x = c2 (s + c1), y = c3 (s + c1)), z0
///   CircularHelix       radius, c1 = -1/kappa, c2 = z(0), c3 = y(0), c4 = x(0), pitch
///
/// Throws AmbiguousClassificationError when several planes match but no fit confirms.
PositionClass classify_position(const HorizontalCurve& h, const ClassifyOptions& opts = {});

struct CanonicalParams {
  std::map<std::string, double> values;
  ScalarFn kappa;  // PlanarCurveXY
  ScalarFn tau;    // VerticalPlaneCurve, CircularHelix
};

/// Closed-form representatives over the parameter interval iv:
///   LineInXYPlane       values heading, c1, tau: x = a u + a c1 + tau c, y = c u + c c1 - tau a, z = 0
///                       with (a, c) = (cos heading, sin heading)
///   PlanarCurveXY       values x0, y0, heading; kappa(u): integrated in the plane z = 0
///   VerticalPlaneCurve  values c1, c2, c3; tau(u): x = c2 (u + c1), y = c3 (u + c1), z = int_0^u tau
///   CircularHelix       values c1, c2, c3, c4 with c3^2 + c4^2 = c1^2; tau(u):
///                       x = c3 sin(u/c1) + c4 cos(u/c1), y = c3 cos(u/c1) - c4 sin(u/c1),
///                       z = c1 u + c2 + int_0^u tau
ParamCurve make_canonical(PositionTag tag, const CanonicalParams& params, Interval iv);

}  // namespace hcurve
