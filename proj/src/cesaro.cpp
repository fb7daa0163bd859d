#include "hcurve/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hcurve/errors.hpp"
#include "hcurve/kernels.hpp"

namespace hcurve {

namespace {

constexpr double kZeroKappa = 1e-12;

std::string lit(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "(%.17g)", v);
  return buf;
}

std::size_t panel_count(const CesaroOptions& opts) { return std::max<std::size_t>(opts.panels, 2); }

// Rejects kappa that vanishes or changes sign on the node grid.
void require_nonzero_kappa(const ScalarFn& kappa, Interval iv, std::size_t panels) {
  double prev = 0.0;
  const auto grid = uniform_grid(iv, panels);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = kappa(grid[i]);
    if (std::fabs(k) < kZeroKappa) throw ZeroCurvatureError("kappa vanishes", grid[i]);
    if (i > 0 && (k > 0.0) != (prev > 0.0)) throw ZeroCurvatureError("kappa changes sign", grid[i]);
    prev = k;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CesaroSolution

struct CesaroSolution::Impl {
  Interval iv;
  InvariantPair inv;
  bool zero = false;
  CesaroConstants c;
  double A = 0.0, B = 0.0, delta = 0.0;
  double c1 = 0.0, c2 = 0.0;  // kappa = 0 branch
  double u3_start = 0.0;
  bool const_kappa = false;
  double kappa0 = 0.0;
  std::optional<CumulativeIntegral> theta, I1, I2, u3_int;
  std::optional<std::array<ScalarFn, 2>> exprs;

  double theta_at(double s) const {
    if (zero) return 0.0;
    if (const_kappa) return kappa0 * (s - iv.lo);
    return (*theta)(s);
  }
  double i1(double s) const { return I1 ? (*I1)(s) : 0.0; }
  double i2(double s) const { return I2 ? (*I2)(s) : 0.0; }

  double u1(double s) const {
    if (zero) return -s + c1;
    const double t = theta_at(s);
    const double sn = std::sin(t), cs = std::cos(t);
    const double P = c.C1 * sn + c.C2 * cs;
    const double Q = c.C3 * sn + c.C4 * cs;
    return A * sn + B * cs + Q * i1(s) - P * i2(s);
  }

  // u2 - 1/kappa; u1' = kappa * w.
  double w(double s) const {
    const double t = theta_at(s);
    const double sn = std::sin(t), cs = std::cos(t);
    return A * cs - B * sn + (c.C3 * cs - c.C4 * sn) * i1(s) - (c.C1 * cs - c.C2 * sn) * i2(s);
  }

  double u2(double s) const {
    if (zero) return c2;
    return w(s) + 1.0 / inv.kappa(s);
  }

  double u1_prime(double s) const {
    if (zero) return -1.0;
    return inv.kappa(s) * w(s);
  }

  double u3(double s) const { return u3_start + (*u3_int)(s); }
};

double CesaroSolution::u1(double s) const { return impl_->u1(s); }
double CesaroSolution::u2(double s) const { return impl_->u2(s); }
double CesaroSolution::u3(double s) const { return impl_->u3(s); }
double CesaroSolution::theta(double s) const { return impl_->theta_at(s); }
double CesaroSolution::u1_prime(double s) const { return impl_->u1_prime(s); }
Interval CesaroSolution::interval() const { return impl_->iv; }
bool CesaroSolution::zero_curvature() const { return impl_->zero; }
const InvariantPair& CesaroSolution::invariants() const { return impl_->inv; }
const std::optional<std::array<ScalarFn, 2>>& CesaroSolution::expressions() const { return impl_->exprs; }

CesaroSolution cesaro_closed_form(const InvariantPair& inv, const CesaroConstants& c, std::array<double, 2> c5c6,
                                  Interval iv, double u3_start, const CesaroOptions& opts) {
  if (!(iv.hi > iv.lo)) throw ParameterError("interval must be nondegenerate");
  const double delta = c.delta();
  if (delta == 0.0) throw ParameterError("constants must satisfy C2*C3 != C1*C4");
  const std::size_t panels = panel_count(opts);
  require_nonzero_kappa(inv.kappa, iv, panels);

  auto impl = std::make_shared<CesaroSolution::Impl>();
  auto* p = impl.get();
  p->iv = iv;
  p->inv = inv;
  p->c = c;
  p->delta = delta;
  p->A = c.C1 * c5c6[0] + c.C3 * c5c6[1];
  p->B = c.C2 * c5c6[0] + c.C4 * c5c6[1];
  p->u3_start = u3_start;

  if (inv.kappa.is_constant()) {
    p->const_kappa = true;
    p->kappa0 = inv.kappa(iv.lo);
    const std::string theta = "(" + lit(p->kappa0) + "*(s-" + lit(iv.lo) + "))";
    const std::string sn = "sin" + theta, cs = "cos" + theta;
    p->exprs = std::array<ScalarFn, 2>{
        ScalarFn::parse(lit(p->A) + "*" + sn + "+" + lit(p->B) + "*" + cs),
        ScalarFn::parse(lit(p->A) + "*" + cs + "-" + lit(p->B) + "*" + sn + "+1/" + lit(p->kappa0))};
  } else {
    p->theta.emplace([p](double s) { return p->inv.kappa(s); }, iv, panels);
    p->I1.emplace(
        [p](double s) {
          const double t = p->theta_at(s);
          const double k = p->inv.kappa(s);
          return (p->c.C1 * std::sin(t) + p->c.C2 * std::cos(t)) * p->inv.kappa(s, 1) / (k * k * p->delta);
        },
        iv, panels);
    p->I2.emplace(
        [p](double s) {
          const double t = p->theta_at(s);
          const double k = p->inv.kappa(s);
          return (p->c.C3 * std::sin(t) + p->c.C4 * std::cos(t)) * p->inv.kappa(s, 1) / (k * k * p->delta);
        },
        iv, panels);
  }
  p->u3_int.emplace([p](double s) { return p->u2(s) - p->inv.tau(s); }, iv, panels);
  return CesaroSolution(std::move(impl));
}

CesaroSolution cesaro_zero_curvature(const ScalarFn& tau, double c1, double c2, double c3, Interval iv,
                                     const CesaroOptions& opts) {
  if (!(iv.hi > iv.lo)) throw ParameterError("interval must be nondegenerate");
  auto impl = std::make_shared<CesaroSolution::Impl>();
  auto* p = impl.get();
  p->iv = iv;
  p->inv = {ScalarFn::constant(0.0), tau};
  p->zero = true;
  p->c1 = c1;
  p->c2 = c2;
  p->u3_start = c3;
  p->u3_int.emplace([p](double s) { return p->c2 - p->inv.tau(s); }, iv, panel_count(opts));
  return CesaroSolution(std::move(impl));
}

double cesaro_system_residual(const CesaroSolution& sol, const InvariantPair& inv, std::span<const double> grid,
                              double h_fd) {
  double worst = 0.0;
  const auto u1 = [&](double s) { return sol.u1(s); };
  const auto u2 = [&](double s) { return sol.u2(s); };
  const auto u3 = [&](double s) { return sol.u3(s); };
  for (double s : grid) {
    const double k = inv.kappa(s);
    const double a = sol.u1(s), b = sol.u2(s);
    worst = std::max({worst, std::fabs(central_diff(u1, s, h_fd) - (k * b - 1.0)),
                      std::fabs(central_diff(u2, s, h_fd) + k * a),
                      std::fabs(central_diff(u3, s, h_fd) - (b - inv.tau(s)))});
  }
  return worst;
}

namespace {

SecondOrderResiduals second_order_from(const InvariantPair& inv, std::span<const double> grid,
                                       const std::function<std::array<double, 6>(double)>& derivs) {
  SecondOrderResiduals r;
  for (double s : grid) {
    const double k = inv.kappa(s);
    if (std::fabs(k) < kZeroKappa) throw ZeroCurvatureError("kappa vanishes", s);
    const double q = inv.kappa(s, 1) / k;
    const auto d = derivs(s);  // u1, u1', u1'', u2, u2', u2''
    r.u1 = std::max(r.u1, std::fabs(d[2] - q * d[1] + k * k * d[0] - q));
    r.u2 = std::max(r.u2, std::fabs(d[5] - q * d[4] + k * k * d[3] - k));
  }
  return r;
}

}  // namespace

SecondOrderResiduals second_order_residuals(const CesaroSolution& sol, const InvariantPair& inv,
                                            std::span<const double> grid, double h_fd) {
  const auto u1 = [&](double s) { return sol.u1(s); };
  const auto u2 = [&](double s) { return sol.u2(s); };
  return second_order_from(inv, grid, [&](double s) {
    return std::array<double, 6>{sol.u1(s),
                                 central_diff4(u1, s, h_fd),
                                 central_diff4_2(u1, s, h_fd),
                                 sol.u2(s),
                                 central_diff4(u2, s, h_fd),
                                 central_diff4_2(u2, s, h_fd)};
  });
}

SecondOrderResiduals second_order_residuals_symbolic(const CesaroSolution& sol, const InvariantPair& inv,
                                                     std::span<const double> grid) {
  if (!sol.expressions()) throw ParameterError("solution has no symbolic form");
  const auto& e = *sol.expressions();
  return second_order_from(inv, grid, [&](double s) {
    return std::array<double, 6>{e[0](s), e[0](s, 1), e[0](s, 2), e[1](s), e[1](s, 1), e[1](s, 2)};
  });
}

// ---------------------------------------------------------------------------
// Profiles and surfaces

Profile::Profile() : Profile(ScalarFn()) {}

Profile::Profile(ScalarFn f) : expr_(std::move(f)) {}

Profile::Profile(Fn f, Fn d1, Fn d2, std::string description)
    : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)), description_(std::move(description)) {}

double Profile::operator()(double s, int order) const {
  if (order < 0 || order > 2) throw ParameterError("profile derivative order must be in [0, 2]");
  if (expr_) return (*expr_)(s, order);
  constexpr double h = 1e-3;
  switch (order) {
    case 0:
      return f_(s);
    case 1:
      return d1_ ? d1_(s) : central_diff4(f_, s, h);
    default:
      if (d2_) return d2_(s);
      return d1_ ? central_diff4(d1_, s, h) : central_diff4_2(f_, s, h);
  }
}

std::string Profile::text() const { return expr_ ? expr_->text() : description_; }

SurfaceOfRevolution SurfaceOfRevolution::from_expressions(const ScalarFn& g, const ScalarFn& f, Interval range) {
  if (!(range.hi > range.lo)) throw ParameterError("surface range must be nondegenerate");
  ScalarFn g2(expr::binary(expr::BinOp::Mul, g.root(), g.root()));
  return {Profile(g), Profile(f), Profile(g2), range};
}

GeneratorTable generator_table(const SurfaceOfRevolution& surf, std::size_t samples) {
  GeneratorTable t;
  t.sigma = uniform_grid(surf.range, std::max<std::size_t>(samples, 2));
  t.g.reserve(t.sigma.size());
  t.f.reserve(t.sigma.size());
  for (double s : t.sigma) {
    t.g.push_back(surf.g(s));
    t.f.push_back(surf.f(s));
  }
  return t;
}

GeneratorFoot nearest_on_generator(const SurfaceOfRevolution& surf, const GeneratorTable& table, double rho,
                                   double z) {
  const auto dist2 = [&](double g, double f) { return (rho - g) * (rho - g) + (z - f) * (z - f); };
  const std::size_t n = table.sigma.size();
  std::vector<double> d(n);
  double best_d = std::numeric_limits<double>::infinity();
  double chord = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = dist2(table.g[j], table.f[j]);
    best_d = std::min(best_d, d[j]);
    if (j > 0) chord = std::max(chord, std::hypot(table.g[j] - table.g[j - 1], table.f[j] - table.f[j - 1]));
  }
  const auto D = [&](double s) { return dist2(surf.g(s), surf.f(s)); };
  const auto refine = [&](std::size_t j) {
    double a = table.sigma[j > 0 ? j - 1 : 0];
    double b = table.sigma[std::min(j + 1, n - 1)];
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = D(x1), f2 = D(x2);
    for (int it = 0; it < 100 && (b - a) > 1e-15 * std::max(1.0, std::fabs(a)); ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = D(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = D(x2);
      }
    }
    GeneratorFoot foot{std::sqrt(d[j]), table.sigma[j]};
    if (std::min(f1, f2) < d[j]) foot = {std::sqrt(std::min(f1, f2)), f1 < f2 ? x1 : x2};
    return foot;
  };

  // Any local minimum of the sampled distance within one chord of the best may hide the true foot.
  const double reach = std::sqrt(best_d) + chord;
  GeneratorFoot best{std::numeric_limits<double>::infinity(), table.sigma.front()};
  for (std::size_t j = 0; j < n; ++j) {
    const bool local = (j == 0 || d[j] <= d[j - 1]) && (j + 1 == n || d[j] <= d[j + 1]);
    if (!local || std::sqrt(d[j]) > reach) continue;
    const GeneratorFoot f = refine(j);
    if (f.defect < best.defect) best = f;
  }
  return best;
}

MembershipReport surface_membership(const HorizontalCurve& h, const SurfaceOfRevolution& surf, double tol,
                                    const MembershipOptions& opts) {
  if (!(tol > 0.0)) throw ParameterError("membership tolerance must be positive");
  const auto table = generator_table(surf, opts.profile_samples);
  const auto grid = arc_grid(h, std::max<std::size_t>(opts.curve_samples, 1));
  const auto feet = kernels::membership_defects(h, surf, table, grid);
  MembershipReport r;
  for (std::size_t i = 0; i < feet.size(); ++i) {
    if (feet[i].defect > r.max_defect || i == 0) {
      r.max_defect = feet[i].defect;
      r.worst_s = grid[i];
    }
  }
  r.member = r.max_defect < tol;
  return r;
}

NecessaryConditionResiduals check_necessary_conditions(const SurfaceOfRevolution& surf, const InvariantPair& inv,
                                                       std::span<const double> grid) {
  NecessaryConditionResiduals r;
  for (double s : grid) {
    const double k = inv.kappa(s);
    if (std::fabs(k) < kZeroKappa) throw ZeroCurvatureError("kappa vanishes", s);
    const double first = surf.f(s, 1) - inv.tau(s) - (0.5 * surf.g_squared(s, 2) - 1.0) / k;
    const double second = surf.f(s, 2) - inv.tau(s, 1) + 0.5 * k * surf.g_squared(s, 1);
    r.first = std::max(r.first, std::fabs(first));
    r.second = std::max(r.second, std::fabs(second));
  }
  return r;
}

SurfaceOfRevolution generate_surface_constant_kappa(double kappa, const ScalarFn& tau, double C1, double C2,
                                                    double C3g, double C3f, Interval iv) {
  if (std::fabs(kappa) < kZeroKappa) throw ZeroCurvatureError("kappa must be nonzero", iv.lo);
  if (!(iv.hi > iv.lo)) throw ParameterError("interval must be nondegenerate");
  const std::string k = lit(kappa);
  const std::string ks = "(" + k + "*s)";
  const ScalarFn radicand =
      ScalarFn::parse("(" + lit(-C1) + "*cos" + ks + "+" + lit(C2) + "*sin" + ks + "+" + lit(C3g) + ")/" + k);

  const double scale = std::max((std::fabs(C1) + std::fabs(C2) + std::fabs(C3g)) / std::fabs(kappa), 1e-300);
  for (double s : uniform_grid(iv, 4000)) {
    if (radicand(s) < -1e-12 * scale) throw NegativeRadicandError("g^2 is negative", s);
  }
  const ScalarFn g(expr::call(expr::Func::Sqrt, expr::call(expr::Func::Abs, radicand.root())));

  const std::string trig = "(" + lit(C1) + "*sin" + ks + "+" + lit(C2) + "*cos" + ks + ")/(2*" + k + ")-s/" + k +
                           "+" + lit(C3f);
  SurfaceOfRevolution surf{Profile(g), Profile(), Profile(radicand), iv};
  if (tau.is_constant()) {
    surf.f = Profile(ScalarFn::parse(lit(tau(iv.lo)) + "*(s-" + lit(iv.lo) + ")+" + trig));
  } else {
    const ScalarFn rest = ScalarFn::parse(trig);
    auto tau_int = std::make_shared<const CumulativeIntegral>([tau](double s) { return tau(s); }, iv, 10000);
    surf.f = Profile([tau_int, rest](double s) { return (*tau_int)(s) + rest(s); },
                     [tau, rest](double s) { return tau(s) + rest(s, 1); },
                     [tau, rest](double s) { return tau(s, 1) + rest(s, 2); },
                     "integral(" + tau.text() + ") + " + rest.text());
  }
  return surf;
}

SurfaceOfRevolution generate_surface_constant_tau(const InvariantPair& inv, const CesaroConstants& c,
                                                  std::array<double, 2> c5c6, Interval iv, double g2_start,
                                                  double f_start, const CesaroOptions& opts) {
  if (!inv.tau.is_constant()) throw ParameterError("tau must be constant");
  const CesaroSolution sol = cesaro_closed_form(inv, c, c5c6, iv, 0.0, opts);
  const std::size_t panels = panel_count(opts);

  auto g2_int = std::make_shared<const CumulativeIntegral>([sol](double s) { return sol.u1(s); }, iv, panels);
  const auto g2 = [g2_int, g2_start](double s) { return g2_start - 2.0 * (*g2_int)(s); };

  double scale = std::fabs(g2_start);
  for (double v : g2_int->table()) scale = std::max(scale, 2.0 * std::fabs(v));
  const auto table = g2_int->table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double v = g2_start - 2.0 * table[i];
    if (v < -1e-12 * std::max(scale, 1e-300)) {
      double at = iv.lo + g2_int->step() * static_cast<double>(i);
      if (i > 0) {
        const double prev = g2_start - 2.0 * table[i - 1];
        at -= g2_int->step() * v / (v - prev);  // linear estimate of the crossing
      }
      throw NegativeRadicandError("g^2 = g2_start - 2 int u1 becomes negative", at);
    }
  }

  const auto df = [sol, inv](double s) { return (-sol.u1_prime(s) - 1.0) / inv.kappa(s) + inv.tau(s); };
  auto f_int = std::make_shared<const CumulativeIntegral>(df, iv, panels);

  SurfaceOfRevolution surf;
  surf.range = iv;
  surf.g_squared = Profile(g2, [sol](double s) { return -2.0 * sol.u1(s); },
                           [sol](double s) { return -2.0 * sol.u1_prime(s); }, "g2_start - 2 integral(u1)");
  surf.g = Profile([g2](double s) { return std::sqrt(std::max(0.0, g2(s))); }, {}, {}, "sqrt(g^2)");
  surf.f = Profile([f_int, f_start](double s) { return f_start + (*f_int)(s); }, df, {},
                   "f_start + integral((-u1' - 1)/kappa + tau)");
  return surf;
}

SurfaceOfRevolution surface_from_cesaro(const CesaroSolution& sol) {
  SurfaceOfRevolution surf;
  surf.range = sol.interval();
  const auto g2 = [sol](double s) {
    const double a = sol.u1(s), b = sol.u2(s);
    return a * a + b * b;
  };
  surf.g_squared = Profile(g2, [sol](double s) { return -2.0 * sol.u1(s); },
                           [sol](double s) { return -2.0 * sol.u1_prime(s); }, "u1^2 + u2^2");
  surf.g = Profile([g2](double s) { return std::sqrt(g2(s)); }, {}, {}, "sqrt(u1^2 + u2^2)");
  surf.f = Profile([sol](double s) { return -sol.u3(s); },
                   [sol](double s) { return -(sol.u2(s) - sol.invariants().tau(s)); }, {}, "-u3");
  return surf;
}

std::array<double, 3> surface_cesaro_coefficients(const SurfaceOfRevolution& surf, const InvariantPair& inv,
                                                  double s) {
  return {-0.5 * surf.g_squared(s, 1), -surf.f(s, 1) + inv.tau(s), -surf.f(s)};
}

double radial_stretch(const SurfaceOfRevolution& surf, const InvariantPair& inv, double s) {
  const auto u = surface_cesaro_coefficients(surf, inv, s);
  return u[0] * u[0] + u[1] * u[1] - surf.g_squared(s);
}

InitialPose pose_from_coefficients(const std::array<double, 3>& u, double heading) {
  const double c = std::cos(heading), sn = std::sin(heading);
  return {{-u[0] * c + u[1] * sn, -u[0] * sn - u[1] * c, -u[2]}, heading};
}

HorizontalCurve curve_on_surface(const SurfaceOfRevolution& surf, const InvariantPair& inv, double s0, double length,
                                 double step, double heading) {
  const InitialPose pose = pose_from_coefficients(surface_cesaro_coefficients(surf, inv, s0), heading);
  return reconstruct({inv.kappa.shifted(s0), inv.tau.shifted(s0)}, pose, length, step);
}

std::vector<GapSample> sphere_horizontal_gap(double R, std::span<const double> grid) {
  if (!(R > 0.0)) throw ParameterError("sphere radius must be positive");
  std::vector<GapSample> out;
  out.reserve(grid.size());
  for (double s : grid) {
    if (!(s > 0.0 && s < std::numbers::pi)) throw ParameterError("sphere parameter must lie in (0, pi)");
    const double sn = std::sin(s);
    const double k1 = (2.0 * R * R * sn * sn - R * R + 1.0) / (R * sn);
    const double k2 = 1.0 / (R * sn);
    out.push_back({s, k1, k2, std::fabs(k1 - k2)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pansu sphere

double pansu_graph(double lambda, double x, double y) {
  const double t = std::clamp(lambda * std::hypot(x, y), 0.0, 1.0);
  return (t * std::sqrt(1.0 - t * t) + std::acos(t)) / (2.0 * lambda * lambda);
}

ParamCurve pansu_geodesic(double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive");
  const std::string l = lit(lambda);
  const std::string arg = "(2*" + l + "*s)";
  return ParamCurve::analytic(
      ScalarFn::parse("sin" + arg + "/(2*" + l + ")"),
      ScalarFn::parse("-cos" + arg + "/(2*" + l + ")+1/(2*" + l + ")"),
      ScalarFn::parse("sin" + arg + "/(4*" + l + "^2)-s/(2*" + l + ")+pi/(4*" + l + "^2)"),
      {0.0, std::numbers::pi / lambda});
}

SurfaceOfRevolution pansu_profile(double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive");
  const std::string l = lit(lambda);
  const double half = std::numbers::pi / (2.0 * lambda);
  return SurfaceOfRevolution::from_expressions(
      ScalarFn::parse("cos(" + l + "*s)/" + l),
      ScalarFn::parse("(sin(-2*" + l + "*s)-2*" + l + "*s)/(4*" + l + "^2)"), {-half, half});
}

PansuSphere pansu_sphere(double lambda, double step) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive");
  const double pole = std::numbers::pi / (4.0 * lambda * lambda);
  const InvariantPair inv{ScalarFn::constant(2.0 * lambda), ScalarFn::constant(0.0)};
  PansuSphere out{pansu_profile(lambda), reconstruct(inv, {{0.0, 0.0, pole}, 0.0}, std::numbers::pi / lambda, step),
                  {}};
  auto& cert = out.certificate;
  for (double s : arc_grid(out.curve, 1000)) {
    const H1Point p = out.curve.point(s);
    const double F = pansu_graph(lambda, p.x, p.y);
    const double rho = std::hypot(p.x, p.y);
    const double t = std::min(lambda * rho, 1.0);
    // First-order distance to the graph: F has infinite slope at the rim rho = 1/lambda.
    const double slope = t * t / (lambda * std::sqrt(std::max(1.0 - t * t, 0.0)));
    const double vertical = std::min(std::fabs(p.z - F), std::fabs(p.z + F));
    const double normal = std::isfinite(slope) ? vertical / std::sqrt(1.0 + slope * slope) : 0.0;
    cert.graph_defect = std::max({cert.graph_defect, normal, rho - 1.0 / lambda});
  }
  cert.membership = surface_membership(out.curve, out.surface, 1e-6);
  for (const auto& m : remeasure_invariants(out.curve)) {
    cert.kappa_deviation = std::max(cert.kappa_deviation, std::fabs(m.kappa - 2.0 * lambda));
    cert.tau_deviation = std::max(cert.tau_deviation, std::fabs(m.tau));
  }
  cert.start = out.curve.point(0.0);
  cert.end = out.curve.point(out.curve.length());
  cert.ok = cert.graph_defect < 1e-8 && cert.membership.member && cert.kappa_deviation < 1e-9 &&
            cert.tau_deviation < 1e-9;
  return out;
}

}  // namespace hcurve
