#pragma once

#include <optional>
#include <vector>

#include "quatloc/companion.hpp"
#include "quatloc/roots.hpp"

namespace quatloc {

/// Closed ball in H: |q - center| <= radius.
struct Ball {
  Quaternion center;
  double radius = 0.0;

  bool contains(const Quaternion& q, double tol = 0.0) const {
    return norm(q - center) <= radius + tol;
  }
};

struct BallUnion {
  std::vector<Ball> balls;

  bool contains(const Quaternion& q, double tol = 0.0) const {
    for (const Ball& b : balls)
      if (b.contains(q, tol)) return true;
    return false;
  }
};

/// One ball per row: centered on the diagonal entry with the off-diagonal
/// row sum of norms as radius. Every left eigenvalue of the matrix lies in
/// the union.
BallUnion gershgorin_balls(const QMatrix& a);

/// Smallest origin-centered radius covering the union:
/// max over balls of |center| + radius.
double enclosing_radius(const BallUnion& u);

/// Left eigenvalues of the form base + factor * u over all unit pure
/// imaginary u; produced when the underlying quadratic has a spherical
/// solution family.
struct SphericalEigenFamily {
  Quaternion base;
  Quaternion factor;

  Quaternion sample(const Quaternion& unit_pure) const { return base + factor * unit_pure; }
};

struct Eigen2x2 {
  std::vector<Quaternion> isolated;
  std::optional<SphericalEigenFamily> family;
};

/// All left eigenvalues of a 2x2 quaternion matrix. Triangular matrices read
/// off the diagonal; otherwise [[a,b],[c,d]] with b != 0 reduces to the
/// unilateral quadratic t^2 + b^-1(a-d) t - b^-1 c = 0 and maps solutions t
/// to eigenvalues a + b t (spherical t families stay symbolic).
Eigen2x2 left_eigenvalues_2x2(const QMatrix& a);

}  // namespace quatloc
