#pragma once

#include <array>

#include "hcurve/vec3.hpp"

namespace hcurve {

/// A point of the first Heisenberg group, in Euclidean coordinates of R^3.
struct H1Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 vec() const { return {x, y, z}; }
  static constexpr H1Point from(const Vec3& v) { return {v.x, v.y, v.z}; }
  friend constexpr bool operator==(const H1Point&, const H1Point&) = default;
};

inline constexpr H1Point kOrigin{};

/// Left translation L_p(q) = (a+x, b+y, c+z+ya-xb) for p = (x,y,z), q = (a,b,c).
/// Equivalently the group product p * q.
constexpr H1Point left_translate(const H1Point& p, const H1Point& q) {
  return {q.x + p.x, q.y + p.y, q.z + p.z + p.y * q.x - p.x * q.y};
}

constexpr H1Point group_inverse(const H1Point& p) { return {-p.x, -p.y, -p.z}; }

/// Tangent vector at `base`, stored in the left-invariant basis (e1, e2, T).
struct TangentVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  H1Point base;

  /// Euclidean components a1 e1(p) + a2 e2(p) + a3 T.
  constexpr Vec3 euclidean() const { return {a1, a2, a3 + a1 * base.y - a2 * base.x}; }
  constexpr bool horizontal() const { return a3 == 0.0; }

  /// Inverse of euclidean(): basis components of a Euclidean vector at p.
  static constexpr TangentVector from_euclidean(const Vec3& v, const H1Point& p) {
    return {v.x, v.y, v.z - v.x * p.y + v.y * p.x, p};
  }
};

/// e1 = (1,0,y), e2 = (0,1,-x), T = (0,0,1) at p.
std::array<TangentVector, 3> standard_frame(const H1Point& p);

/// J e1 = e2, J e2 = -e1, J T = 0.
constexpr TangentVector apply_J(const TangentVector& v) { return {-v.a2, v.a1, 0.0, v.base}; }

/// Element of PSH(1) = U(1) x| T(1): rotate (x, y) about the z-axis by `angle`, then left-translate by `shift`.
struct PshTransform {
  double angle = 0.0;
  H1Point shift;

  static constexpr PshTransform identity() { return {}; }
};

/// Rotation about the z-axis; an automorphism of the group law.
H1Point rotate_z(const H1Point& p, double angle);

H1Point psh_apply(const PshTransform& g, const H1Point& p);

/// Pushes a Euclidean tangent vector forward by the differential of g (the map is affine).
Vec3 psh_push_vector(const PshTransform& g, const Vec3& v);

/// Applies g to a curve jet: position affinely, derivatives through the linear part.
Jet psh_apply(const PshTransform& g, const Jet& j);

/// compose(outer, inner) acts as outer(inner(p)).
PshTransform compose(const PshTransform& outer, const PshTransform& inner);

PshTransform inverse(const PshTransform& g);

}  // namespace hcurve
