#include "hcurve/h1.hpp"

#include <cmath>

namespace hcurve {

std::array<TangentVector, 3> standard_frame(const H1Point& p) {
  return {TangentVector{1.0, 0.0, 0.0, p}, TangentVector{0.0, 1.0, 0.0, p},
          TangentVector{0.0, 0.0, 1.0, p}};
}

H1Point rotate_z(const H1Point& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

H1Point psh_apply(const PshTransform& g, const H1Point& p) {
  return left_translate(g.shift, rotate_z(p, g.angle));
}

Vec3 psh_push_vector(const PshTransform& g, const Vec3& v) {
  const double c = std::cos(g.angle);
  const double s = std::sin(g.angle);
  const double rx = c * v.x - s * v.y;
  const double ry = s * v.x + c * v.y;
  return {rx, ry, v.z + g.shift.y * rx - g.shift.x * ry};
}

Jet psh_apply(const PshTransform& g, const Jet& j) {
  return {psh_apply(g, H1Point::from(j.pos)).vec(), psh_push_vector(g, j.d1), psh_push_vector(g, j.d2)};
}

PshTransform compose(const PshTransform& outer, const PshTransform& inner) {
  // R_b(L_s(q)) = R_b(s) * R_b(q) because rotations preserve the group law.
  return {outer.angle + inner.angle, left_translate(outer.shift, rotate_z(inner.shift, outer.angle))};
}

PshTransform inverse(const PshTransform& g) {
  return {-g.angle, rotate_z(group_inverse(g.shift), -g.angle)};
}

}  // namespace hcurve
