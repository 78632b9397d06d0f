#include "quatloc/gershgorin.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatloc {

BallUnion gershgorin_balls(const QMatrix& a) {
  const int n = a.dim();
  BallUnion u;
  u.balls.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double rho = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) rho += norm(a.at(i, j));
    u.balls.push_back({a.at(i, i), rho});
  }
  return u;
}

double enclosing_radius(const BallUnion& u) {
  double r = 0.0;
  for (const Ball& b : u.balls) r = std::max(r, norm(b.center) + b.radius);
  return r;
}

Eigen2x2 left_eigenvalues_2x2(const QMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("left_eigenvalues_2x2 requires a 2x2 matrix");
  const Quaternion a = m.at(0, 0);
  const Quaternion b = m.at(0, 1);
  const Quaternion c = m.at(1, 0);
  const Quaternion d = m.at(1, 1);

  Eigen2x2 out;
  if (b.is_zero()) {
    out.isolated.push_back(a);
    if (!approx_equal(a, d, 0.0)) out.isolated.push_back(d);
    return out;
  }

  const Quaternion binv = inverse(b);
  for (const ZeroRecord& rec : solve_quadratic(binv * (a - d), -(binv * c))) {
    if (rec.kind == ZeroKind::Isolated) {
      out.isolated.push_back(a + b * rec.value);
    } else {
      out.family = SphericalEigenFamily{a + rec.cls.real_part * b, rec.cls.imag_norm * b};
    }
  }
  return out;
}

}  // namespace quatloc
