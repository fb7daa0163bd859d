#include "hcurve/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>

#include "hcurve/errors.hpp"
#include "hcurve/frenet.hpp"
#include "hcurve/kernels.hpp"

namespace hcurve {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& s, const std::vector<double>& v) {
  const double n = static_cast<double>(s.size());
  const double ms = std::accumulate(s.begin(), s.end(), 0.0) / n;
  const double mv = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sxx += (s[i] - ms) * (s[i] - ms);
    sxy += (s[i] - ms) * (v[i] - mv);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = mv - f.slope * ms;
  for (std::size_t i = 0; i < s.size(); ++i)
    f.max_residual = std::max(f.max_residual, std::fabs(v[i] - (f.slope * s[i] + f.intercept)));
  return f;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double spread(const std::vector<double>& v) {
  const double m = mean(v);
  double d = 0.0;
  for (double x : v) d = std::max(d, std::fabs(x - m));
  return d;
}

// Samples shared by all fits.
struct Samples {
  std::vector<double> s, x, y, z, u1, u2, u3, kappa, tau;
  double diameter = 0.0;
};

struct Verdict {
  bool confirmed = false;
  std::map<std::string, double> witness;
  std::map<std::string, double> residuals;
};

Verdict confirm_line(const Samples& d, double thr, double tol) {
  Verdict v;
  const LineFit fx = fit_line(d.s, d.x);
  const LineFit fy = fit_line(d.s, d.y);
  v.residuals["line_fit"] = std::max(fx.max_residual, fy.max_residual);
  v.residuals["max_abs_z"] = max_abs(d.z);
  v.residuals["tau_spread"] = spread(d.tau);
  v.residuals["kappa_diameter"] = max_abs(d.kappa) * d.diameter;
  v.confirmed = v.residuals["line_fit"] < thr && v.residuals["max_abs_z"] < thr && v.residuals["tau_spread"] < thr &&
                v.residuals["kappa_diameter"] < tol;
  v.witness["heading"] = std::atan2(fy.slope, fx.slope);
  v.witness["c1"] = d.u1.front() - d.s.front();
  v.witness["tau"] = mean(d.tau);
  return v;
}

Verdict confirm_planar(const Samples& d, const HorizontalCurve& h, double thr, double tol) {
  Verdict v;
  v.residuals["max_abs_z"] = max_abs(d.z);
  double u2_tau = 0.0;
  for (std::size_t i = 0; i < d.s.size(); ++i) u2_tau = std::max(u2_tau, std::fabs(d.u2[i] + d.tau[i]));
  v.residuals["u2_plus_tau"] = u2_tau;
  v.residuals["kappa_diameter"] = max_abs(d.kappa) * d.diameter;
  v.confirmed = v.residuals["max_abs_z"] < thr && u2_tau < thr && v.residuals["kappa_diameter"] >= tol;
  v.witness["x0"] = d.x.front();
  v.witness["y0"] = d.y.front();
  v.witness["heading"] = heading_at(h, d.s.front());
  return v;
}

Verdict confirm_vertical(const Samples& d, const HorizontalCurve& h, double thr, double tol) {
  Verdict v;
  const double heading = heading_at(h, d.s.front());
  const double c2 = std::cos(heading), c3 = std::sin(heading);
  double cross = 0.0;
  for (std::size_t i = 0; i < d.s.size(); ++i) cross = std::max(cross, std::fabs(c3 * d.x[i] - c2 * d.y[i]));
  v.residuals["plane_distance"] = cross;
  v.residuals["kappa_diameter"] = max_abs(d.kappa) * d.diameter;
  v.confirmed = cross < thr && v.residuals["kappa_diameter"] < tol;
  v.witness["c1"] = d.u1.front() - d.s.front();
  v.witness["c2"] = c2;
  v.witness["c3"] = c3;
  v.witness["z0"] = d.z.front();
  return v;
}

Verdict confirm_helix(const Samples& d, const HorizontalCurve& h, double thr, double tol) {
  Verdict v;
  std::vector<double> rho(d.s.size());
  for (std::size_t i = 0; i < d.s.size(); ++i) rho[i] = std::hypot(d.x[i], d.y[i]);
  const double radius = mean(rho);
  const double kappa = mean(d.kappa);
  v.residuals["radius_spread"] = spread(rho);
  v.residuals["kappa_spread_diameter"] = spread(d.kappa) * d.diameter;
  if (std::fabs(kappa) * d.diameter < tol) {
    v.residuals["kappa_diameter"] = std::fabs(kappa) * d.diameter;
    return v;
  }
  const double c1 = -1.0 / kappa;

  // z - int tau = c1 s + c2.
  const CumulativeIntegral tau_int([&h](double s) { return kappa_tau(h, s).tau; }, h.domain(),
                                   std::max<std::size_t>(2000, d.s.size()));
  std::vector<double> lifted(d.s.size());
  for (std::size_t i = 0; i < d.s.size(); ++i) lifted[i] = d.z[i] - tau_int(d.s[i]);
  const LineFit fz = fit_line(d.s, lifted);
  v.residuals["pitch_fit"] = fz.max_residual;
  v.residuals["radius_vs_c1"] = std::fabs(std::fabs(c1) - radius);
  v.confirmed = v.residuals["radius_spread"] < thr && v.residuals["kappa_spread_diameter"] < tol &&
                fz.max_residual < thr && std::fabs(fz.slope - c1) < thr && v.residuals["radius_vs_c1"] < thr;
  v.witness["radius"] = radius;
  v.witness["c1"] = c1;
  v.witness["c2"] = fz.intercept;
  v.witness["c3"] = d.y.front();
  v.witness["c4"] = d.x.front();
  v.witness["pitch"] = fz.slope;
  return v;
}

double required(const CanonicalParams& p, const char* name) {
  const auto it = p.values.find(name);
  if (it == p.values.end()) throw ParameterError(std::string("missing canonical parameter ") + name);
  if (!std::isfinite(it->second)) throw ParameterError(std::string("canonical parameter ") + name + " is not finite");
  return it->second;
}

std::string lit(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "(%.17g)", v);
  return buf;
}

// z = base(u) + int_0^u tau as a jet component triple (value, d1, d2).
struct Lift {
  ScalarFn tau;
  std::shared_ptr<const CumulativeIntegral> integral;
  double offset = 0.0;  // int_0^lo tau

  Lift(const ScalarFn& t, Interval iv)
      : tau(t),
        integral(std::make_shared<const CumulativeIntegral>([t](double u) { return t(u); }, iv, 10000)),
        offset(iv.lo == 0.0 ? 0.0 : simpson([t](double u) { return t(u); }, 0.0, iv.lo, 10000)) {}

  std::array<double, 3> operator()(double u) const { return {offset + (*integral)(u), tau(u), tau(u, 1)}; }
};

ParamCurve with_lifted_z(const ScalarFn& x, const ScalarFn& y, const ScalarFn& z_base, const ScalarFn& tau,
                         Interval iv) {
  if (tau.is_constant()) {
    const ScalarFn z(expr::binary(expr::BinOp::Add, z_base.root(),
                                  expr::binary(expr::BinOp::Mul, expr::constant(tau(0.0)), expr::variable())));
    return ParamCurve::analytic(x, y, z, iv);
  }
  const Lift lift(tau, iv);
  return ParamCurve::generated(
      [x, y, z_base, lift](double u) {
        const auto zl = lift(u);
        return Jet{{x(u), y(u), z_base(u) + zl[0]},
                   {x(u, 1), y(u, 1), z_base(u, 1) + zl[1]},
                   {x(u, 2), y(u, 2), z_base(u, 2) + zl[2]}};
      },
      iv);
}

}  // namespace

const char* tag_name(PositionTag tag) {
  switch (tag) {
    case PositionTag::LineInXYPlane:
      return "LineInXYPlane";
    case PositionTag::PlanarCurveXY:
      return "PlanarCurveXY";
    case PositionTag::VerticalPlaneCurve:
      return "VerticalPlaneCurve";
    case PositionTag::CircularHelix:
      return "CircularHelix";
    case PositionTag::General:
      return "General";
  }
  return "General";
}

std::optional<PositionTag> parse_tag(std::string_view name) {
  for (auto t : {PositionTag::LineInXYPlane, PositionTag::PlanarCurveXY, PositionTag::VerticalPlaneCurve,
                 PositionTag::CircularHelix, PositionTag::General})
    if (name == tag_name(t)) return t;
  return std::nullopt;
}

PositionClass classify_position(const HorizontalCurve& h, const ClassifyOptions& opts) {
  if (!(opts.tol > 0.0)) throw ParameterError("classification tolerance must be positive");
  Samples d;
  d.diameter = curve_diameter(h.base());
  const double scale = d.diameter > 0.0 ? d.diameter : 1.0;
  const double thr = opts.tol * scale;
  if (h.length() < 10.0 * thr) throw ParameterError("curve too short to classify at this tolerance");

  d.s = arc_grid(h, std::max<std::size_t>(opts.grid, 8));
  const auto coeffs = kernels::sample_frame_coefficients(h, d.s);
  const auto inv = kernels::sample_invariants(h, d.s);
  for (std::size_t i = 0; i < d.s.size(); ++i) {
    const H1Point p = h.point(d.s[i]);
    d.x.push_back(p.x);
    d.y.push_back(p.y);
    d.z.push_back(p.z);
    d.u1.push_back(coeffs[i][0]);
    d.u2.push_back(coeffs[i][1]);
    d.u3.push_back(coeffs[i][2]);
    d.kappa.push_back(inv[i].kappa);
    d.tau.push_back(inv[i].tau);
  }

  PositionClass out;
  out.residuals["max_abs_u1"] = max_abs(d.u1);
  out.residuals["max_abs_u2"] = max_abs(d.u2);
  out.residuals["max_abs_u3"] = max_abs(d.u3);
  out.residuals["threshold"] = thr;

  if (out.residuals["max_abs_u3"] < thr) {
    const bool flat = max_abs(d.kappa) * scale < opts.tol;
    out.candidates.push_back(flat ? PositionTag::LineInXYPlane : PositionTag::PlanarCurveXY);
  }
  if (out.residuals["max_abs_u2"] < thr) out.candidates.push_back(PositionTag::VerticalPlaneCurve);
  if (out.residuals["max_abs_u1"] < thr) out.candidates.push_back(PositionTag::CircularHelix);

  for (PositionTag tag : out.candidates) {
    Verdict v;
    switch (tag) {
      case PositionTag::LineInXYPlane:
        v = confirm_line(d, thr, opts.tol);
        break;
      case PositionTag::PlanarCurveXY:
        v = confirm_planar(d, h, thr, opts.tol);
        break;
      case PositionTag::VerticalPlaneCurve:
        v = confirm_vertical(d, h, thr, opts.tol);
        break;
      case PositionTag::CircularHelix:
        v = confirm_helix(d, h, thr, opts.tol);
        break;
      case PositionTag::General:
        break;
    }
    for (const auto& [k, r] : v.residuals) out.residuals[k] = r;
    if (v.confirmed) {
      out.tag = tag;
      out.witness = std::move(v.witness);
      return out;
    }
  }
  if (out.candidates.size() > 1) {
    std::vector<std::string> names;
    for (auto t : out.candidates) names.emplace_back(tag_name(t));
    throw AmbiguousClassificationError("several frame planes contain the curve but no closed form fits", names);
  }
  out.tag = PositionTag::General;
  return out;
}

ParamCurve make_canonical(PositionTag tag, const CanonicalParams& p, Interval iv) {
  if (!(iv.hi > iv.lo)) throw ParameterError("canonical interval must be nondegenerate");
  switch (tag) {
    case PositionTag::LineInXYPlane: {
      const double heading = required(p, "heading"), c1 = required(p, "c1"), tau = required(p, "tau");
      const double a = std::cos(heading), c = std::sin(heading);
      return ParamCurve::analytic(ScalarFn::parse(lit(a) + "*s+" + lit(a * c1 + tau * c)),
                                  ScalarFn::parse(lit(c) + "*s+" + lit(c * c1 - tau * a)), ScalarFn::constant(0.0),
                                  iv);
    }
    case PositionTag::PlanarCurveXY: {
      const double x0 = required(p, "x0"), y0 = required(p, "y0"), heading = required(p, "heading");
      for (double u : uniform_grid(iv, 1000))
        if (p.kappa(u) == 0.0) throw ParameterError("planar canonical curve needs kappa != 0");
      const HorizontalCurve planar = reconstruct({p.kappa.shifted(iv.lo), ScalarFn::constant(0.0)},
                                                 {{x0, y0, 0.0}, heading}, iv.length(), 1e-3);
      return ParamCurve::generated(
          [planar, lo = iv.lo](double u) {
            Jet j = planar.jet(u - lo);
            j.pos.z = j.d1.z = j.d2.z = 0.0;
            return j;
          },
          iv);
    }
    case PositionTag::VerticalPlaneCurve: {
      const double c1 = required(p, "c1"), c2 = required(p, "c2"), c3 = required(p, "c3");
      if (c2 == 0.0 && c3 == 0.0) throw ParameterError("vertical plane needs (c2, c3) != (0, 0)");
      return with_lifted_z(ScalarFn::parse(lit(c2) + "*(s+" + lit(c1) + ")"),
                           ScalarFn::parse(lit(c3) + "*(s+" + lit(c1) + ")"), ScalarFn::constant(0.0), p.tau, iv);
    }
    case PositionTag::CircularHelix: {
      const double c1 = required(p, "c1"), c2 = required(p, "c2"), c3 = required(p, "c3"), c4 = required(p, "c4");
      if (c1 == 0.0) throw ParameterError("helix needs c1 != 0");
      if (std::fabs(c3 * c3 + c4 * c4 - c1 * c1) > 1e-9 * c1 * c1)
        throw ParameterError("helix needs c3^2 + c4^2 = c1^2 (unit horizontal speed)");
      const std::string arg = "(s/" + lit(c1) + ")";
      return with_lifted_z(ScalarFn::parse(lit(c3) + "*sin" + arg + "+" + lit(c4) + "*cos" + arg),
                           ScalarFn::parse(lit(c3) + "*cos" + arg + "-" + lit(c4) + "*sin" + arg),
                           ScalarFn::parse(lit(c1) + "*s+" + lit(c2)), p.tau, iv);
    }
    case PositionTag::General:
      break;
  }
  throw ParameterError("no canonical form for General");
}

}  // namespace hcurve
