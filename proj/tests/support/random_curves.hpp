#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "hcurve/frenet.hpp"

namespace hcurve::testing {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "(%.17g)", v);
  return buf;
}

class CurveFactory {
 public:
  explicit CurveFactory(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// kappa = a + b sin(w s + p), bounded away from zero when nonvanishing = true.
  ScalarFn kappa(bool nonvanishing = false) {
    const double b = uniform(0.1, 0.6);
    const double a = nonvanishing ? (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(b + 0.3, b + 1.2)
                                  : uniform(-1.0, 1.0);
    return ScalarFn::parse(num(a) + "+" + num(b) + "*sin(" + num(uniform(0.3, 1.5)) + "*s+" +
                           num(uniform(0.0, 6.0)) + ")");
  }

  /// tau = a + b cos(w s) + c s / (1 + s^2).
  ScalarFn tau() {
    return ScalarFn::parse(num(uniform(-1.0, 1.0)) + "+" + num(uniform(-0.5, 0.5)) + "*cos(" +
                           num(uniform(0.2, 1.2)) + "*s)+" + num(uniform(-0.5, 0.5)) + "*s/(1+s^2)");
  }

  InvariantPair invariants(bool nonvanishing = false) { return {kappa(nonvanishing), tau()}; }

  InitialPose pose() {
    return {{uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0)}, uniform(-std::numbers::pi, std::numbers::pi)};
  }

  PshTransform transform() {
    return {uniform(-std::numbers::pi, std::numbers::pi), {uniform(-3.0, 3.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0)}};
  }

  /// Analytic horizontally regular curve with a trigonometric and polynomial mix.
  ParamCurve analytic_curve() {
    const double r = uniform(0.5, 2.0);
    const double w = uniform(0.5, 1.5);
    const ScalarFn x = ScalarFn::parse(num(r) + "*cos(" + num(w) + "*s)+" + num(uniform(-0.3, 0.3)) + "*s");
    const ScalarFn y = ScalarFn::parse(num(r) + "*sin(" + num(w) + "*s)+" + num(uniform(-0.3, 0.3)) + "*s^2/4");
    const ScalarFn z = ScalarFn::parse(num(uniform(-1.0, 1.0)) + "*s+" + num(uniform(-0.5, 0.5)) + "*sin(" +
                                       num(uniform(0.5, 2.0)) + "*s)");
    return ParamCurve::analytic(x, y, z, {0.0, uniform(1.0, 3.0)});
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hcurve::testing
