#pragma once

#include <cstddef>
#include <vector>

#include "hcurve/curve.hpp"

namespace hcurve {

/// Starting point and heading (angle of t against e1) of a reconstruction.
struct InitialPose {
  H1Point point;
  double heading = 0.0;
};

/// (x, y, z, phi): position plus heading of the unit contact tangent.
struct ReducedState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double phi = 0.0;
};

/// Right-hand side of the reduced Frenet system
///   x' = cos phi, y' = sin phi, z' = tau + y cos phi - x sin phi, phi' = kappa.
ReducedState reduced_rhs(const ReducedState& st, double kappa, double tau);

/// One classical RK4 step of size h starting at arc-length s.
ReducedState rk4_step(const InvariantPair& inv, double s, const ReducedState& st, double h);

/// Fixed-step RK4 states at s_k = k * S / n, n = ceil(S / step).
std::vector<ReducedState> integrate_reduced(const InvariantPair& inv, const InitialPose& pose, double length,
                                            double step);

/// The unique horizontally regular curve with the given invariants and pose.
/// Off-grid evaluations take a partial RK4 step from the preceding node.
HorizontalCurve reconstruct(const InvariantPair& inv, const InitialPose& pose, double length, double step = 1e-3);

struct AlignmentOptions {
  double tol = 1e-6;            // sup-distance acceptance
  double invariant_tol = 1e-6;  // max |dkappa|, |dtau| before searching
  std::size_t grid = 200;
};

struct Alignment {
  PshTransform transform;
  double sup_distance = 0.0;
};

/// Finds g in PSH(1) with g(a) = b. Throws MisalignmentError when the invariants
/// differ or the transformed curve misses b by more than tol.
Alignment find_psh_alignment(const HorizontalCurve& a, const HorizontalCurve& b, const AlignmentOptions& opts = {});

/// Heading of the unit contact tangent at s, in (-pi, pi].
double heading_at(const HorizontalCurve& h, double s);

}  // namespace hcurve
