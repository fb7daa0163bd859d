#include "hcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hcurve/errors.hpp"

namespace hcurve {

namespace {

// Uniformly spaced samples with nodal derivatives from five-point stencils.
struct SampledData {
  double u0 = 0.0;
  double h = 1.0;
  std::vector<Vec3> pos, d1, d2;

  std::size_t size() const { return pos.size(); }

  double node(std::size_t i) const { return u0 + h * static_cast<double>(i); }

  std::size_t window_start(double u, std::size_t width) const {
    const auto n = static_cast<std::ptrdiff_t>(size());
    const auto w = static_cast<std::ptrdiff_t>(width);
    auto k = static_cast<std::ptrdiff_t>(std::floor((u - u0) / h)) - (w - 1) / 2;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, n - w));
  }

  Jet eval(double u) const {
    const std::size_t w = std::min<std::size_t>(4, size());
    const std::size_t start = window_start(u, w);
    double xs[5];
    for (std::size_t j = 0; j < w; ++j) xs[j] = node(start + j);
    const auto wt = fd_weights(u, std::span<const double>(xs, w), 0);
    Jet out;
    for (std::size_t j = 0; j < w; ++j) {
      out.pos += wt[0][j] * pos[start + j];
      out.d1 += wt[0][j] * d1[start + j];
      out.d2 += wt[0][j] * d2[start + j];
    }
    return out;
  }
};

Vec3 interpolate_rows(std::span<const CurveSample> rows, double u) {
  const std::size_t n = rows.size();
  const std::size_t w = std::min<std::size_t>(4, n);
  auto it = std::upper_bound(rows.begin(), rows.end(), u, [](double v, const CurveSample& r) { return v < r.u; });
  auto k = static_cast<std::ptrdiff_t>(it - rows.begin()) - static_cast<std::ptrdiff_t>(w / 2);
  const auto start = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(n - w)));
  double xs[4];
  for (std::size_t j = 0; j < w; ++j) xs[j] = rows[start + j].u;
  const auto wt = fd_weights(u, std::span<const double>(xs, w), 0);
  Vec3 p;
  for (std::size_t j = 0; j < w; ++j) {
    const auto& r = rows[start + j];
    p += wt[0][j] * Vec3{r.x, r.y, r.z};
  }
  return p;
}

std::shared_ptr<const SampledData> build_sampled(std::span<const CurveSample> rows) {
  const std::size_t n = rows.size();
  if (n < 4) throw ParameterError("sampled curve needs at least 4 points");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rows[i];
    if (!std::isfinite(r.u) || !std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z))
      throw ParameterError("sampled curve contains a non-finite value at row " + std::to_string(i));
    if (i > 0 && !(r.u > rows[i - 1].u))
      throw ParameterError("sample parameters must be strictly increasing (row " + std::to_string(i) + ")");
  }

  auto data = std::make_shared<SampledData>();
  data->u0 = rows.front().u;
  const double span = rows.back().u - rows.front().u;
  data->h = span / static_cast<double>(n - 1);

  bool uniform = true;
  for (std::size_t i = 0; i < n && uniform; ++i)
    uniform = std::fabs(rows[i].u - data->node(i)) <= 1e-9 * span;

  data->pos.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->pos[i] = uniform ? Vec3{rows[i].x, rows[i].y, rows[i].z} : interpolate_rows(rows, data->node(i));
  }

  data->d1.resize(n);
  data->d2.resize(n);
  const std::size_t w = std::min<std::size_t>(5, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto start = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(w / 2), 0, static_cast<std::ptrdiff_t>(n - w)));
    double xs[5];
    for (std::size_t j = 0; j < w; ++j) xs[j] = data->node(start + j);
    const auto wt = fd_weights(data->node(i), std::span<const double>(xs, w), 2);
    Vec3 a, b;
    for (std::size_t j = 0; j < w; ++j) {
      a += wt[1][j] * data->pos[start + j];
      b += wt[2][j] * data->pos[start + j];
    }
    data->d1[i] = a;
    data->d2[i] = b;
  }
  return data;
}

double contact_speed(const Vec3& d1) { return std::hypot(d1.x, d1.y); }

}  // namespace

// ---------------------------------------------------------------------------
// ParamCurve

ParamCurve ParamCurve::analytic(ScalarFn x, ScalarFn y, ScalarFn z, Interval domain) {
  if (!(domain.hi > domain.lo)) throw ParameterError("curve parameter interval must be nondegenerate");
  auto exprs = std::make_shared<const std::array<ScalarFn, 3>>(std::array<ScalarFn, 3>{x, y, z});
  ParamCurve c(Kind::Analytic, domain, [exprs](double u) {
    const auto& e = *exprs;
    return Jet{{e[0](u), e[1](u), e[2](u)}, {e[0](u, 1), e[1](u, 1), e[2](u, 1)}, {e[0](u, 2), e[1](u, 2), e[2](u, 2)}};
  });
  c.exprs_ = std::move(exprs);
  return c;
}

ParamCurve ParamCurve::sampled(std::span<const CurveSample> rows) {
  auto data = build_sampled(rows);
  const Interval domain{rows.front().u, rows.back().u};
  return ParamCurve(Kind::Sampled, domain, [data](double u) { return data->eval(u); });
}

ParamCurve ParamCurve::generated(JetFn jet, Interval domain) {
  if (!(domain.hi > domain.lo)) throw ParameterError("curve parameter interval must be nondegenerate");
  return ParamCurve(Kind::Generated, domain, std::move(jet));
}

ParamCurve ParamCurve::transformed(const PshTransform& g) const {
  return ParamCurve(Kind::Generated, domain_, [inner = jet_, g](double u) { return psh_apply(g, inner(u)); });
}

// ---------------------------------------------------------------------------
// Arc length

ArcLengthMap::ArcLengthMap(const ParamCurve& curve, double step)
    : curve_(curve),
      sigma_([c = curve](double u) { return contact_speed(c.jet(u).d1); }, curve.domain(),
             static_cast<std::size_t>(std::max(4.0, std::ceil(curve.domain().length() / step)))) {}

double ArcLengthMap::param_at(double s) const {
  const auto table = sigma_.table();
  const Interval iv = sigma_.interval();
  const double h = sigma_.step();
  const double u_tol = 1e-13 * std::max(1.0, std::max(std::fabs(iv.lo), std::fabs(iv.hi)));

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double u;
  if (s <= 0.0) {
    if (s == 0.0) return iv.lo;
    hi = iv.lo;
    u = iv.lo + s / contact_speed(curve_.jet(iv.lo).d1);
  } else if (s >= table.back()) {
    if (s == table.back()) return iv.hi;
    lo = iv.hi;
    u = iv.hi + (s - table.back()) / contact_speed(curve_.jet(iv.hi).d1);
  } else {
    const auto k = static_cast<std::size_t>(std::upper_bound(table.begin(), table.end(), s) - table.begin());
    lo = iv.lo + h * static_cast<double>(k - 1);
    hi = iv.lo + h * static_cast<double>(k);
    const double frac = (s - table[k - 1]) / (table[k] - table[k - 1]);
    u = lo + frac * (hi - lo);
  }

  for (int it = 0; it < 60; ++it) {
    const double f = sigma_(u) - s;
    if (f == 0.0) return u;
    if (f > 0.0) {
      hi = std::min(hi, u);
    } else {
      lo = std::max(lo, u);
    }
    const double speed = contact_speed(curve_.jet(u).d1);
    double next = u - f / speed;
    if (!(next > lo && next < hi) && std::isfinite(lo) && std::isfinite(hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - u) < u_tol) return next;
    u = next;
  }
  return u;
}

// ---------------------------------------------------------------------------
// HorizontalCurve

HorizontalCurve HorizontalCurve::unit_speed(ParamCurve curve) {
  const double length = curve.domain().length();
  return HorizontalCurve(std::move(curve), nullptr, length);
}

double HorizontalCurve::param_at(double s) const {
  return map_ ? map_->param_at(s) : base_.domain().lo + s;
}

Jet HorizontalCurve::jet(double s) const {
  if (!map_) return base_.jet(base_.domain().lo + s);
  const Jet j = base_.jet(map_->param_at(s));
  const double speed = contact_speed(j.d1);
  const double dspeed = (j.d1.x * j.d2.x + j.d1.y * j.d2.y) / speed;
  const Vec3 d1 = j.d1 * (1.0 / speed);
  // r_ss = r_uu / v^2 - r_u v' / v^3
  const Vec3 d2 = j.d2 * (1.0 / (speed * speed)) - d1 * (dspeed / (speed * speed));
  return {j.pos, d1, d2};
}

HorizontalCurve HorizontalCurve::transformed(const PshTransform& g) const {
  return HorizontalCurve(base_.transformed(g), map_, length_);
}

HorizontalCurve reparam_horizontal(const ParamCurve& c, double step) {
  if (!(step > 0.0)) throw ParameterError("reparametrization step must be positive");
  const double tol = default_regularity_tol(c);
  const auto n = static_cast<std::size_t>(std::max(4.0, std::ceil(c.domain().length() / step)));
  for (double u : uniform_grid(c.domain(), n)) {
    if (contact_speed(c.jet(u).d1) <= tol) throw RegularityError("contact part of the velocity vanishes", u);
  }
  auto map = std::make_shared<const ArcLengthMap>(c, step);
  const double length = map->total();
  return HorizontalCurve(c, std::move(map), length);
}

// ---------------------------------------------------------------------------
// Invariants

double curve_diameter(const ParamCurve& c, std::size_t samples) {
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -lo;
  for (double u : uniform_grid(c.domain(), samples)) {
    const Vec3 p = c.position(u);
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return norm(hi - lo);
}

double default_regularity_tol(const ParamCurve& c) {
  const double d = curve_diameter(c);
  return 1e-8 * (d > 0.0 ? d : 1.0);
}

bool is_horizontally_regular(const ParamCurve& c, double tol, std::size_t grid_points) {
  if (!(tol > 0.0)) throw ParameterError("regularity tolerance must be positive");
  double min_speed = std::numeric_limits<double>::infinity();
  for (double u : uniform_grid(c.domain(), grid_points)) min_speed = std::min(min_speed, contact_speed(c.jet(u).d1));
  return min_speed > tol;
}

InvariantValues kappa_tau_arbitrary(const ParamCurve& c, double u, double tol) {
  const Jet j = c.jet(u);
  const double sp2 = j.d1.x * j.d1.x + j.d1.y * j.d1.y;
  if (sp2 < tol * tol) throw RegularityError("degenerate contact speed", u);
  const double sp = std::sqrt(sp2);
  const double kappa = (j.d1.x * j.d2.y - j.d2.x * j.d1.y) / (sp2 * sp);
  const double tau = (j.pos.x * j.d1.y - j.d1.x * j.pos.y + j.d1.z) / sp;
  return {kappa, tau};
}

InvariantValues kappa_tau(const HorizontalCurve& h, double s) { return kappa_tau_arbitrary(h.base(), h.param_at(s)); }

Frame frame_at(const HorizontalCurve& h, double s) {
  const Jet j = h.jet(s);
  const H1Point p = H1Point::from(j.pos);
  return {TangentVector{j.d1.x, j.d1.y, 0.0, p}, TangentVector{-j.d1.y, j.d1.x, 0.0, p},
          TangentVector{0.0, 0.0, 1.0, p}, p};
}

std::array<double, 3> frame_coefficients(const HorizontalCurve& h, double s) {
  const Jet j = h.jet(s);
  const Vec3& r = j.pos;
  const Vec3& d = j.d1;
  return {r.x * d.x + r.y * d.y, r.y * d.x - r.x * d.y, r.z};
}

double verify_cesaro(const HorizontalCurve& h, std::span<const double> grid, double h_fd) {
  double worst = 0.0;
  for (double s : grid) {
    const auto up = frame_coefficients(h, s + h_fd);
    const auto dn = frame_coefficients(h, s - h_fd);
    const auto mid = frame_coefficients(h, s);
    const auto [kappa, tau] = kappa_tau(h, s);
    // u_i = -coefficient_i
    const double du1 = -(up[0] - dn[0]) / (2.0 * h_fd);
    const double du2 = -(up[1] - dn[1]) / (2.0 * h_fd);
    const double du3 = -(up[2] - dn[2]) / (2.0 * h_fd);
    const double u1 = -mid[0];
    const double u2 = -mid[1];
    worst = std::max({worst, std::fabs(du1 - (kappa * u2 - 1.0)), std::fabs(du2 + kappa * u1),
                      std::fabs(du3 - (u2 - tau))});
  }
  return worst;
}

std::vector<CurveSample> sample_curve(const HorizontalCurve& h, double step) {
  if (!(step > 0.0)) throw ParameterError("sampling step must be positive");
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(h.length() / step - 1e-9)));
  std::vector<CurveSample> out;
  out.reserve(n + 1);
  for (double s : uniform_grid(h.domain(), n)) {
    const Vec3 p = h.jet(s).pos;
    out.push_back({s, p.x, p.y, p.z});
  }
  return out;
}

std::vector<InvariantSample> remeasure_invariants(const HorizontalCurve& h, std::size_t n, std::size_t skip) {
  if (n < 4 + 2 * skip) throw ParameterError("too few samples for re-measurement");
  std::vector<CurveSample> rows;
  rows.reserve(n + 1);
  for (double s : uniform_grid(h.domain(), n)) {
    const Vec3 p = h.jet(s).pos;
    rows.push_back({s, p.x, p.y, p.z});
  }
  const ParamCurve sampled = ParamCurve::sampled(rows);
  std::vector<InvariantSample> out;
  out.reserve(n + 1 - 2 * skip);
  for (std::size_t i = skip; i + skip <= n; ++i) {
    const auto v = kappa_tau_arbitrary(sampled, rows[i].u);
    out.push_back({rows[i].u, v.kappa, v.tau});
  }
  return out;
}

std::vector<double> arc_grid(const HorizontalCurve& h, std::size_t n, double margin) {
  return uniform_grid({margin, h.length() - margin}, n);
}

}  // namespace hcurve
