#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace gmr {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

inline bool is_unit(const Vec3& v, double tol = 1e-9) {
  return std::abs(v.norm() - 1.0) <= tol;
}

/// Deterministic unit vector orthogonal to a unit axis: take the world axis
/// least aligned with it, project out the parallel part, normalize.
inline Vec3 canonical_perp(const Vec3& axis) {
  const Vec3 candidates[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  int best = 0;
  double bestAbs = std::abs(axis.dot(candidates[0]));
  for (int i = 1; i < 3; ++i) {
    const double a = std::abs(axis.dot(candidates[i]));
    if (a < bestAbs) {
      bestAbs = a;
      best = i;
    }
  }
  const Vec3 projected = candidates[best] - axis.dot(candidates[best]) * axis;
  return projected.normalized();
}

/// In-plane basis {e1, e2} with e1 = canonical_perp(axis), e2 = axis x e1.
/// Serialized plane paths and circle angles use this basis so a document
/// alone reconstructs 3D points.
struct PlaneBasis {
  Vec3 e1;
  Vec3 e2;
};

inline PlaneBasis basis_for_axis(const Vec3& axis) {
  PlaneBasis b;
  b.e1 = canonical_perp(axis);
  b.e2 = axis.cross(b.e1);
  return b;
}

}  // namespace gmr
