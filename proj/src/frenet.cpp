#include "hcurve/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "hcurve/errors.hpp"

namespace hcurve {

namespace {

ReducedState axpy(const ReducedState& a, double k, const ReducedState& d) {
  return {a.x + k * d.x, a.y + k * d.y, a.z + k * d.z, a.phi + k * d.phi};
}

bool finite(const ReducedState& s) {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z) && std::isfinite(s.phi);
}

struct Reconstruction {
  InvariantPair inv;
  double h = 0.0;
  std::vector<ReducedState> nodes;

  ReducedState at(double s) const {
    const auto last = static_cast<std::ptrdiff_t>(nodes.size() - 1);
    auto k = static_cast<std::ptrdiff_t>(std::floor(s / h));
    k = std::clamp<std::ptrdiff_t>(k, 0, last);
    const double sk = h * static_cast<double>(k);
    const auto& node = nodes[static_cast<std::size_t>(k)];
    if (s == sk) return node;
    return rk4_step(inv, sk, node, s - sk);
  }

  Jet jet(double s) const {
    const ReducedState st = at(s);
    const double kappa = inv.kappa(s);
    const double tau = inv.tau(s);
    const double dtau = inv.tau(s, 1);
    const double c = std::cos(st.phi);
    const double sn = std::sin(st.phi);
    return {{st.x, st.y, st.z},
            {c, sn, tau + st.y * c - st.x * sn},
            {-kappa * sn, kappa * c, dtau - kappa * (st.x * c + st.y * sn)}};
  }
};

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

ReducedState reduced_rhs(const ReducedState& st, double kappa, double tau) {
  const double c = std::cos(st.phi);
  const double s = std::sin(st.phi);
  return {c, s, tau + st.y * c - st.x * s, kappa};
}

ReducedState rk4_step(const InvariantPair& inv, double s, const ReducedState& st, double h) {
  const double mid = s + 0.5 * h;
  const double end = s + h;
  const ReducedState k1 = reduced_rhs(st, inv.kappa(s), inv.tau(s));
  const ReducedState k2 = reduced_rhs(axpy(st, 0.5 * h, k1), inv.kappa(mid), inv.tau(mid));
  const ReducedState k3 = reduced_rhs(axpy(st, 0.5 * h, k2), inv.kappa(mid), inv.tau(mid));
  const ReducedState k4 = reduced_rhs(axpy(st, h, k3), inv.kappa(end), inv.tau(end));
  return {st.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          st.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          st.z + h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
          st.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi)};
}

std::vector<ReducedState> integrate_reduced(const InvariantPair& inv, const InitialPose& pose, double length,
                                            double step) {
  if (!(length > 0.0) || !std::isfinite(length)) throw ParameterError("reconstruction length must be positive");
  if (!(step > 0.0)) throw ParameterError("integration step must be positive");
  if (!std::isfinite(pose.heading)) throw ParameterError("initial heading must be finite");
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(length / step - 1e-9)));
  const double h = length / static_cast<double>(n);

  std::vector<ReducedState> out;
  out.reserve(n + 1);
  out.push_back({pose.point.x, pose.point.y, pose.point.z, pose.heading});
  for (std::size_t k = 0; k < n; ++k) {
    const ReducedState next = rk4_step(inv, h * static_cast<double>(k), out.back(), h);
    if (!finite(next)) throw DomainError("non-finite state during integration", h * static_cast<double>(k + 1));
    out.push_back(next);
  }
  return out;
}

HorizontalCurve reconstruct(const InvariantPair& inv, const InitialPose& pose, double length, double step) {
  auto data = std::make_shared<Reconstruction>();
  data->inv = inv;
  data->nodes = integrate_reduced(inv, pose, length, step);
  data->h = length / static_cast<double>(data->nodes.size() - 1);
  // Checked once here so that later evaluations of tau' cannot fail unexpectedly.
  for (std::size_t k = 0; k < data->nodes.size(); ++k) (void)inv.tau(data->h * static_cast<double>(k), 1);
  std::shared_ptr<const Reconstruction> frozen = std::move(data);
  return HorizontalCurve::unit_speed(
      ParamCurve::generated([frozen](double s) { return frozen->jet(s); }, {0.0, length}));
}

double heading_at(const HorizontalCurve& h, double s) {
  const Jet j = h.jet(s);
  return std::atan2(j.d1.y, j.d1.x);
}

Alignment find_psh_alignment(const HorizontalCurve& a, const HorizontalCurve& b, const AlignmentOptions& opts) {
  const double S = a.length();
  if (std::fabs(S - b.length()) > 1e-9 * std::max(1.0, S))
    throw ParameterError("curves must share the arc-length domain");

  const auto grid = uniform_grid({0.0, S}, opts.grid);
  double inv_gap = 0.0;
  for (double s : grid) {
    const auto ia = kappa_tau(a, s);
    const auto ib = kappa_tau(b, s);
    inv_gap = std::max({inv_gap, std::fabs(ia.kappa - ib.kappa), std::fabs(ia.tau - ib.tau)});
  }
  if (inv_gap > opts.invariant_tol) throw MisalignmentError("invariants differ", inv_gap);

  PshTransform g;
  g.angle = wrap_angle(heading_at(b, 0.0) - heading_at(a, 0.0));
  const H1Point q = rotate_z(a.point(0.0), g.angle);
  g.shift = left_translate(b.point(0.0), group_inverse(q));

  double sup = 0.0;
  for (double s : grid) sup = std::max(sup, distance(psh_apply(g, a.point(s)).vec(), b.point(s).vec()));
  if (!(sup < opts.tol)) throw MisalignmentError("transformed curve does not match", sup);
  return {g, sup};
}

}  // namespace hcurve
