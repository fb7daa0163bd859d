#include "hcurve/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <memory>

#include "hcurve/errors.hpp"
#include "hcurve/kernels.hpp"

namespace hcurve {

namespace {

BertrandBranch select_branch(const HorizontalCurve& h, double zero_kappa) {
  const auto grid = arc_grid(h, 1000);
  const auto inv = kernels::sample_invariants(h, grid);
  double max_k = 0.0;
  double min_k = std::numeric_limits<double>::infinity();
  bool pos = false, neg = false;
  for (const auto& v : inv) {
    max_k = std::max(max_k, std::fabs(v.kappa));
    min_k = std::min(min_k, std::fabs(v.kappa));
    pos = pos || v.kappa > 0.0;
    neg = neg || v.kappa < 0.0;
  }
  if (max_k < zero_kappa) return BertrandBranch::ZeroCurvature;
  if (min_k < zero_kappa || (pos && neg))
    throw BranchMismatchError("kappa vanishes on part of the interval only (min |kappa| = " + std::to_string(min_k) +
                              ", max |kappa| = " + std::to_string(max_k) + ")");
  return BertrandBranch::Curved;
}

}  // namespace

BertrandMate bertrand_mate(const HorizontalCurve& h, const BertrandSpec& spec, const BertrandOptions& opts) {
  if (!(opts.step > 0.0)) throw ParameterError("mate sampling step must be positive");
  const BertrandBranch branch = select_branch(h, opts.zero_kappa);
  const Interval iv = h.domain();

  std::function<std::array<double, 3>(double)> offsets;
  std::shared_ptr<const CumulativeIntegral> theta, u3;
  if (branch == BertrandBranch::ZeroCurvature) {
    if (!spec.g) throw ParameterError("the zero-curvature branch needs the vertical offset g");
    if (spec.tau_bar) throw ParameterError("tau_bar is determined by g when kappa = 0");
    const ScalarFn g = *spec.g;
    offsets = [c1 = spec.c1, c2 = spec.c2, g](double s) { return std::array<double, 3>{c1, c2, g(s)}; };
  } else {
    if (spec.g) throw ParameterError("g applies only to the zero-curvature branch");
    theta = std::make_shared<const CumulativeIntegral>([h](double s) { return kappa_tau(h, s).kappa; }, iv,
                                                       opts.panels);
    const auto u2 = [theta, c1 = spec.c1, c2 = spec.c2](double s) {
      const double t = (*theta)(s);
      return c1 * std::cos(t) - c2 * std::sin(t);
    };
    std::function<double(double)> integrand;
    if (spec.tau_bar) {
      integrand = [h, u2, tb = *spec.tau_bar](double s) { return 2.0 * u2(s) - kappa_tau(h, s).tau + tb(s); };
    } else {
      integrand = [u2](double s) { return 2.0 * u2(s); };
    }
    u3 = std::make_shared<const CumulativeIntegral>(integrand, iv, opts.panels);
    offsets = [theta, u3, u2, c1 = spec.c1, c2 = spec.c2](double s) {
      const double t = (*theta)(s);
      return std::array<double, 3>{c1 * std::sin(t) + c2 * std::cos(t), u2(s), (*u3)(s)};
    };
  }

  BertrandMate mate{h, branch, spec.c1, spec.c2, {}, {}};
  const auto n = static_cast<std::size_t>(std::max(8.0, std::ceil(iv.length() / opts.step - 1e-9)));
  const auto grid = uniform_grid(iv, n);
  mate.samples.resize(grid.size());
  mate.offsets.resize(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      const double s = grid[k];
      const Jet j = h.jet(s);
      const auto u = offsets(s);
      // u1 t + u2 n + u3 T in basis components; r + v equals the group product r * v.
      const H1Point v{u[0] * j.d1.x - u[1] * j.d1.y, u[0] * j.d1.y + u[1] * j.d1.x, u[2]};
      const H1Point p = left_translate(H1Point::from(j.pos), v);
      mate.samples[k] = {s, p.x, p.y, p.z};
      mate.offsets[k] = u;
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  mate.curve = reparam_horizontal(ParamCurve::sampled(mate.samples), opts.step);
  return mate;
}

MateDistance mate_distance(const HorizontalCurve& h, const BertrandMate& mate, std::span<const double> grid) {
  MateDistance d;
  d.expected = std::hypot(mate.c1, mate.c2);
  if (grid.empty()) return d;
  double sum = 0.0;
  for (double s : grid) {
    const H1Point p = h.point(s);
    const H1Point q = mate.curve.point(s);
    const double contact = std::hypot(q.x - p.x, q.y - p.y);
    sum += contact;
    d.max_deviation = std::max(d.max_deviation, std::fabs(contact - d.expected));
    d.max_euclidean = std::max(d.max_euclidean, distance(p.vec(), q.vec()));
    // The b-offset u3 is the third group coordinate of p^{-1} q.
    d.max_vertical = std::max(d.max_vertical, std::fabs(left_translate(group_inverse(p), q).z));
  }
  d.mean = sum / static_cast<double>(grid.size());
  return d;
}

FrameRelationReport check_frame_relation(const HorizontalCurve& a, const HorizontalCurve& b, double tol,
                                         std::span<const double> grid) {
  FrameRelationReport r;
  for (double s : grid) {
    const Frame fa = frame_at(a, s);
    const Frame fb = frame_at(b, s);
    const double dn = std::hypot(fb.n.a1 - fa.n.a1, fb.n.a2 - fa.n.a2, fb.n.a3 - fa.n.a3);
    r.normal_residual = std::max(r.normal_residual, dn);
  }
  r.relation = r.normal_residual < tol ? FrameRelation::NormalAligned : FrameRelation::None;
  return r;
}

PairingResiduals pairing_residuals(const HorizontalCurve& a, const HorizontalCurve& b, std::span<const double> grid) {
  PairingResiduals r;
  for (double s : grid) {
    const Frame fa = frame_at(a, s);
    const Frame fb = frame_at(b, s);
    // t_bar - g n with the least-squares g = <t_bar, n>.
    const double g = fb.t.a1 * fa.n.a1 + fb.t.a2 * fa.n.a2 + fb.t.a3 * fa.n.a3;
    r.tangent_normal = std::max(
        r.tangent_normal, std::hypot(fb.t.a1 - g * fa.n.a1, fb.t.a2 - g * fa.n.a2, fb.t.a3 - g * fa.n.a3));
    // n_bar - g b with g = <n_bar, b>: what remains is the contact part of n_bar.
    r.binormal_normal = std::max(r.binormal_normal, std::hypot(fb.n.a1, fb.n.a2));
  }
  return r;
}

}  // namespace hcurve
