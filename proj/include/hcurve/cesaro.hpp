#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcurve/curve.hpp"
#include "hcurve/frenet.hpp"

namespace hcurve {

/// Coefficients of the two homogeneous solutions C1 sin(theta) + C2 cos(theta)
/// and C3 sin(theta) + C4 cos(theta). They must satisfy delta = C2 C3 - C1 C4 != 0.
struct CesaroConstants {
  double C1 = 1.0;
  double C2 = 0.0;
  double C3 = 0.0;
  double C4 = 1.0;
  double delta() const { return C2 * C3 - C1 * C4; }
};

struct CesaroOptions {
  std::size_t panels = 10000;  // Simpson panels for every indefinite integral
};

/// Solution (u1, u2, u3) of u1' = k u2 - 1, u2' = -k u1, u3' = u2 - tau.
/// Every indefinite integral starts at the left end of the interval.
class CesaroSolution {
 public:
  double u1(double s) const;
  double u2(double s) const;
  double u3(double s) const;
  std::array<double, 3> operator()(double s) const { return {u1(s), u2(s), u3(s)}; }
  /// theta(s) = integral of kappa from the left endpoint.
  double theta(double s) const;
  /// Closed-form derivative of u1.
  double u1_prime(double s) const;

  Interval interval() const;
  bool zero_curvature() const;
  const InvariantPair& invariants() const;
  /// Symbolic u1 and u2 when kappa is constant and nonzero.
  const std::optional<std::array<ScalarFn, 2>>& expressions() const;

  struct Impl;

 private:
  friend CesaroSolution cesaro_closed_form(const InvariantPair&, const CesaroConstants&, std::array<double, 2>,
                                           Interval, double, const CesaroOptions&);
  friend CesaroSolution cesaro_zero_curvature(const ScalarFn&, double, double, double, Interval,
                                              const CesaroOptions&);
  explicit CesaroSolution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// General solution for kappa != 0 on the interval. Throws ZeroCurvatureError when kappa
/// vanishes or changes sign, ParameterError when delta = 0.
CesaroSolution cesaro_closed_form(const InvariantPair& inv, const CesaroConstants& c, std::array<double, 2> c5c6,
                                  Interval iv, double u3_start = 0.0, const CesaroOptions& opts = {});

/// kappa = 0: u1 = -s + c1, u2 = c2, u3 = integral of (c2 - tau) + c3.
CesaroSolution cesaro_zero_curvature(const ScalarFn& tau, double c1, double c2, double c3, Interval iv,
                                     const CesaroOptions& opts = {});

/// Max residual of the first-order system, derivatives by central differences of step h_fd.
double cesaro_system_residual(const CesaroSolution& sol, const InvariantPair& inv, std::span<const double> grid,
                              double h_fd = 1e-5);

struct SecondOrderResiduals {
  double u1 = 0.0;  // u1'' - (k'/k) u1' + k^2 u1 - k'/k
  double u2 = 0.0;  // u2'' - (k'/k) u2' + k^2 u2 - k
};

/// Residuals of the two second-order equations with fourth-order central differences.
SecondOrderResiduals second_order_residuals(const CesaroSolution& sol, const InvariantPair& inv,
                                            std::span<const double> grid, double h_fd = 1e-3);

/// Same, with exact symbolic derivatives; requires sol.expressions().
SecondOrderResiduals second_order_residuals_symbolic(const CesaroSolution& sol, const InvariantPair& inv,
                                                     std::span<const double> grid);

/// A profile function with up to two derivatives. Expression-backed profiles use symbolic
/// derivatives; closure-backed ones fall back to central differences when a derivative is missing.
class Profile {
 public:
  using Fn = std::function<double(double)>;

  Profile();  // zero
  explicit Profile(ScalarFn f);
  Profile(Fn f, Fn d1, Fn d2, std::string description);

  /// order in [0, 2].
  double operator()(double s, int order = 0) const;
  const std::optional<ScalarFn>& expression() const { return expr_; }
  std::string text() const;

 private:
  std::optional<ScalarFn> expr_;
  Fn f_, d1_, d2_;
  std::string description_;
};

/// X(s, t) = (g(s) cos t, g(s) sin t, f(s)), s in range.
struct SurfaceOfRevolution {
  Profile g;
  Profile f;
  Profile g_squared;
  Interval range;

  /// g_squared is derived symbolically as g*g.
  static SurfaceOfRevolution from_expressions(const ScalarFn& g, const ScalarFn& f, Interval range);
};

struct MembershipOptions {
  std::size_t curve_samples = 1000;
  std::size_t profile_samples = 2000;
};

struct MembershipReport {
  bool member = false;
  double max_defect = 0.0;  // largest meridian-plane distance to the generator
  double worst_s = 0.0;     // curve arc-length where it occurs
};

/// Distance in the meridian half-plane from (rho, z) to the generator, and the
/// minimizing profile parameter (grid search plus golden-section refinement).
struct GeneratorFoot {
  double defect = 0.0;
  double sigma = 0.0;
};

/// Generator samples used by nearest-point searches.
struct GeneratorTable {
  std::vector<double> sigma, g, f;
};
GeneratorTable generator_table(const SurfaceOfRevolution& surf, std::size_t samples);
GeneratorFoot nearest_on_generator(const SurfaceOfRevolution& surf, const GeneratorTable& table, double rho,
                                   double z);

MembershipReport surface_membership(const HorizontalCurve& h, const SurfaceOfRevolution& surf, double tol,
                                    const MembershipOptions& opts = {});

struct NecessaryConditionResiduals {
  double first = 0.0;   // f' - tau - ((g^2)''/2 - 1)/k
  double second = 0.0;  // f'' - tau' + k (g^2)'/2
};

/// Surface and curve share the parameter s. Throws ZeroCurvatureError if kappa = 0 on the grid.
NecessaryConditionResiduals check_necessary_conditions(const SurfaceOfRevolution& surf, const InvariantPair& inv,
                                                       std::span<const double> grid);

/// Constant nonzero kappa:
///   g^2 = (-C1 cos(ks) + C2 sin(ks) + C3g)/k,
///   f   = int tau + (C1 sin(ks) + C2 cos(ks))/(2k) - s/k + C3f.
/// Throws NegativeRadicandError when g^2 < 0 somewhere on the interval.
SurfaceOfRevolution generate_surface_constant_kappa(double kappa, const ScalarFn& tau, double C1, double C2,
                                                    double C3g, double C3f, Interval iv);

/// Constant tau, nonconstant kappa != 0: g^2 = g2_start - 2 int u1, f = f_start + int((-u1' - 1)/k + tau).
SurfaceOfRevolution generate_surface_constant_tau(const InvariantPair& inv, const CesaroConstants& c,
                                                  std::array<double, 2> c5c6, Interval iv, double g2_start = 0.0,
                                                  double f_start = 0.0, const CesaroOptions& opts = {});

/// Generator g^2 = u1^2 + u2^2, f = -u3 of a Cesaro solution.
SurfaceOfRevolution surface_from_cesaro(const CesaroSolution& sol);

/// u1 = -(g^2)'/2, u2 = -f' + tau, u3 = -f at profile parameter s.
std::array<double, 3> surface_cesaro_coefficients(const SurfaceOfRevolution& surf, const InvariantPair& inv, double s);

/// u1^2 + u2^2 - g^2 at s: the radial stretch constant of the converse statement.
double radial_stretch(const SurfaceOfRevolution& surf, const InvariantPair& inv, double s);

/// Pose whose frame coefficients are -(u1, u2, u3) for the given heading.
InitialPose pose_from_coefficients(const std::array<double, 3>& u, double heading = 0.0);

/// Reconstructs the curve with invariants inv (in the surface parameter) starting at profile
/// parameter s0 with the frame coefficients the surface prescribes there.
HorizontalCurve curve_on_surface(const SurfaceOfRevolution& surf, const InvariantPair& inv, double s0, double length,
                                 double step = 1e-3, double heading = 0.0);

struct GapSample {
  double s = 0.0;
  double kappa_first = 0.0;   // (2R^2 sin^2 s - R^2 + 1)/(R sin s)
  double kappa_second = 0.0;  // 1/(R sin s)
  double gap = 0.0;
};

/// Mismatch of the two kappa values a horizontal curve on the sphere of radius R would need.
std::vector<GapSample> sphere_horizontal_gap(double R, std::span<const double> grid);

/// F(x, y) of the upper half of the Pansu sphere.
double pansu_graph(double lambda, double x, double y);

/// The generating geodesic x = sin(2ls)/(2l), y = (1 - cos(2ls))/(2l),
/// z = sin(2ls)/(4l^2) - s/(2l) + pi/(4l^2) on [0, pi/l], as expressions.
ParamCurve pansu_geodesic(double lambda);

/// g = cos(l s)/l, f = (sin(-2ls) - 2ls)/(4l^2) on [-pi/(2l), pi/(2l)].
SurfaceOfRevolution pansu_profile(double lambda);

struct PansuCertificate {
  double graph_defect = 0.0;  // max first-order distance to the graphs of +-F along the curve
  MembershipReport membership;
  double kappa_deviation = 0.0;
  double tau_deviation = 0.0;
  H1Point start;
  H1Point end;
  bool ok = false;
};

struct PansuSphere {
  SurfaceOfRevolution surface;
  HorizontalCurve curve;
  PansuCertificate certificate;
};

/// Builds the profile, reconstructs the geodesic (kappa = 2 lambda, tau = 0) from the north pole
/// and certifies it against the graph, the surface and its invariants.
PansuSphere pansu_sphere(double lambda, double step = 1e-3);

}  // namespace hcurve
