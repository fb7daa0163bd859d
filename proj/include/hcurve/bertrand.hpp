#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hcurve/curve.hpp"

namespace hcurve {

/// Offsets of a Bertrand mate r_bar = r + u1 t + u2 n + u3 b.
///   kappa = 0:  u1 = c1, u2 = c2, u3 = g(s)                         (g required)
///   kappa != 0: u1 = c1 sin(th) + c2 cos(th), u2 = c1 cos(th) - c2 sin(th),
///               u3 = int_0^s (2 u2 - tau + tau_bar), th = int_0^s kappa  (tau_bar defaults to tau)
/// The mate's contact normality is tau + u3' - 2 u2, so it equals tau_bar in the curved branch
/// and tau + g' - 2 c2 in the zero-curvature branch.
struct BertrandSpec {
  double c1 = 0.0;
  double c2 = 0.0;
  std::optional<ScalarFn> tau_bar;
  std::optional<ScalarFn> g;
};

enum class BertrandBranch { ZeroCurvature, Curved };

struct BertrandOptions {
  double zero_kappa = 1e-8;  // max|kappa| below this selects the zero-curvature branch
  double step = 1e-3;        // mate sampling step
  std::size_t panels = 10000;
};

struct BertrandMate {
  HorizontalCurve curve;
  BertrandBranch branch = BertrandBranch::Curved;
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<CurveSample> samples;             // mate positions at s_k
  std::vector<std::array<double, 3>> offsets;   // (u1, u2, u3) at s_k
};

/// Throws BranchMismatchError when kappa vanishes on part of the interval only,
/// ParameterError when the branch's required function is missing.
BertrandMate bertrand_mate(const HorizontalCurve& h, const BertrandSpec& spec, const BertrandOptions& opts = {});

struct MateDistance {
  double expected = 0.0;       // sqrt(c1^2 + c2^2)
  double mean = 0.0;           // mean contact-plane distance
  double max_deviation = 0.0;  // max |contact distance - expected|
  double max_euclidean = 0.0;  // full Euclidean distance, includes the vertical offset
  double max_vertical = 0.0;   // max |u3| (the b-offset)
};

/// Distances between r(s) and r_bar(s). The contact-plane distance is the length of the
/// horizontal offset u1 t + u2 n, which is constant for every mate.
MateDistance mate_distance(const HorizontalCurve& h, const BertrandMate& mate, std::span<const double> grid);

enum class FrameRelation { NormalAligned, None };

struct FrameRelationReport {
  FrameRelation relation = FrameRelation::None;
  double normal_residual = 0.0;  // max |n_bar - n| in basis components
};

/// Frames are compared in left-invariant basis components at equal s.
FrameRelationReport check_frame_relation(const HorizontalCurve& a, const HorizontalCurve& b, double tol,
                                         std::span<const double> grid);

struct PairingResiduals {
  double tangent_normal = 0.0;   // max_s min_g |t_bar - g n|
  double binormal_normal = 0.0;  // max_s min_g |n_bar - g b|
};

/// Best pointwise fits of the two impossible pairings (t_bar = g n, n_bar = g b).
PairingResiduals pairing_residuals(const HorizontalCurve& a, const HorizontalCurve& b, std::span<const double> grid);

}  // namespace hcurve
