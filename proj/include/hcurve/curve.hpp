#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hcurve/expr.hpp"
#include "hcurve/h1.hpp"
#include "hcurve/numerics.hpp"
#include "hcurve/vec3.hpp"

namespace hcurve {

/// One row of a sampled curve: parameter and Euclidean position.
struct CurveSample {
  double u = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// A curve r(u) = (x(u), y(u), z(u)) over a parameter interval.
///
/// Analytic curves carry expressions and use their symbolic derivatives.
/// Sampled curves are resampled onto a uniform grid (if needed) and
/// differentiated with five-point stencils. Generated curves wrap an exact
/// jet supplied by the library (ODE solutions, transformed curves).
class ParamCurve {
 public:
  enum class Kind { Analytic, Sampled, Generated };
  using JetFn = std::function<Jet(double)>;

  static ParamCurve analytic(ScalarFn x, ScalarFn y, ScalarFn z, Interval domain);
  static ParamCurve sampled(std::span<const CurveSample> rows);
  static ParamCurve generated(JetFn jet, Interval domain);

  Jet jet(double u) const { return jet_(u); }
  Vec3 position(double u) const { return jet_(u).pos; }
  Interval domain() const { return domain_; }
  Kind kind() const { return kind_; }

  /// Component expressions for analytic curves; nullptr otherwise.
  const std::array<ScalarFn, 3>* expressions() const { return exprs_.get(); }

  /// Image under a pseudo-hermitian transformation.
  ParamCurve transformed(const PshTransform& g) const;

 private:
  ParamCurve(Kind kind, Interval domain, JetFn jet) : kind_(kind), domain_(domain), jet_(std::move(jet)) {}

  Kind kind_;
  Interval domain_;
  JetFn jet_;
  std::shared_ptr<const std::array<ScalarFn, 3>> exprs_;
};

/// Monotone map from horizontal arc-length s to the original parameter u.
class ArcLengthMap {
 public:
  ArcLengthMap(const ParamCurve& curve, double step);

  double total() const { return sigma_.total(); }
  /// sigma(u) = integral of sqrt(x'^2 + y'^2) from u_min to u.
  double sigma(double u) const { return sigma_(u); }
  /// Inverse of sigma, refined to |du| < 1e-12 (scaled by the interval).
  double param_at(double s) const;

 private:
  ParamCurve curve_;
  CumulativeIntegral sigma_;
};

/// A horizontally regular curve viewed through its horizontal arc-length s in [0, S].
class HorizontalCurve {
 public:
  /// Wraps a curve already parametrized by horizontal arc-length, s = u - u_min.
  static HorizontalCurve unit_speed(ParamCurve curve);

  double length() const { return length_; }
  Interval domain() const { return {0.0, length_}; }
  double param_at(double s) const;
  /// Derivatives are with respect to s.
  Jet jet(double s) const;
  H1Point point(double s) const { return H1Point::from(jet(s).pos); }
  const ParamCurve& base() const { return base_; }
  bool identity_map() const { return map_ == nullptr; }

  /// Image under a pseudo-hermitian transformation (arc-length is preserved).
  HorizontalCurve transformed(const PshTransform& g) const;

 private:
  friend HorizontalCurve reparam_horizontal(const ParamCurve&, double);
  HorizontalCurve(ParamCurve base, std::shared_ptr<const ArcLengthMap> map, double length)
      : base_(std::move(base)), map_(std::move(map)), length_(length) {}

  ParamCurve base_;
  std::shared_ptr<const ArcLengthMap> map_;
  double length_;
};

/// The moving frame (t, n, b) at a curve point, stored in left-invariant basis components.
struct Frame {
  TangentVector t;
  TangentVector n;
  TangentVector b;
  H1Point base;

  Vec3 t_euclidean() const { return t.euclidean(); }
  Vec3 n_euclidean() const { return n.euclidean(); }
  Vec3 b_euclidean() const { return b.euclidean(); }
};

struct InvariantPair {
  ScalarFn kappa;
  ScalarFn tau;
};

struct InvariantValues {
  double kappa = 0.0;
  double tau = 0.0;
};

/// Bounding-box diagonal of the curve sampled at `samples`+1 points.
double curve_diameter(const ParamCurve& c, std::size_t samples = 256);

/// Default regularity tolerance: 1e-8 times the curve diameter.
double default_regularity_tol(const ParamCurve& c);

bool is_horizontally_regular(const ParamCurve& c, double tol, std::size_t grid_points = 1000);

/// p-curvature and contact normality in an arbitrary parameter.
InvariantValues kappa_tau_arbitrary(const ParamCurve& c, double u, double tol = 1e-12);

/// Same, for a horizontal arc-length parametrized curve at s.
InvariantValues kappa_tau(const HorizontalCurve& h, double s);

/// Reparametrizes by horizontal arc-length. `step` is the u-spacing of the Simpson table.
HorizontalCurve reparam_horizontal(const ParamCurve& c, double step = 1e-3);

/// t = (x', y', x'y - xy'), n = Jt = (-y', x', -yy' - xx'), b = (0,0,1) in Euclidean coordinates.
Frame frame_at(const HorizontalCurve& h, double s);

/// Coefficients of r = u1 t + u2 n + u3 b: (xx' + yy', yx' - xy', z).
std::array<double, 3> frame_coefficients(const HorizontalCurve& h, double s);

/// Largest residual of u1' = k u2 - 1, u2' = -k u1, u3' = u2 - tau with u_i = -frame_coefficients,
/// derivatives by central differences of step h_fd.
double verify_cesaro(const HorizontalCurve& h, std::span<const double> grid, double h_fd = 1e-5);

/// Samples (s, x, y, z) on [0, S] at the given spacing (endpoint always included).
std::vector<CurveSample> sample_curve(const HorizontalCurve& h, double step);

struct InvariantSample {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Re-measures kappa and tau from positions alone: samples the curve at n+1 uniform
/// points, rebuilds it as a sampled curve and differentiates with five-point stencils.
/// The `skip` nodes at each end (one-sided stencils) are omitted.
std::vector<InvariantSample> remeasure_invariants(const HorizontalCurve& h, std::size_t n = 1000,
                                                  std::size_t skip = 2);

/// n+1 uniform points in [margin, S - margin].
std::vector<double> arc_grid(const HorizontalCurve& h, std::size_t n, double margin = 0.0);

}  // namespace hcurve
