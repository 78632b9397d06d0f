#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "quatloc/gershgorin.hpp"
#include "quatloc/verify.hpp"

using namespace quatloc;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
const Quaternion ONE = Quaternion::one();

QMatrix mat2(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
  QMatrix m(2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 0, c);
  m.set(1, 1, d);
  return m;
}

Quaternion random_quat(SplitMix64& rng, double scale) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
          rng.uniform(-scale, scale)};
}

bool setwise_match(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Quaternion& x : a) {
    bool found = false;
    for (size_t i = 0; i < b.size(); ++i) {
      if (!used[i] && approx_equal(x, b[i], tol)) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("balls of a diagonal matrix have radius zero") {
  const BallUnion u = gershgorin_balls(mat2(I, Quaternion::zero(), Quaternion::zero(), J));
  REQUIRE(u.balls.size() == 2);
  CHECK(approx_equal(u.balls[0].center, I, 0.0));
  CHECK(u.balls[0].radius == 0.0);
  CHECK(approx_equal(u.balls[1].center, J, 0.0));
  CHECK(u.balls[1].radius == 0.0);
}

TEST_CASE("balls of the companion example") {
  // Cg of q^2 + q(-(i+j)) + k
  const BallUnion u = gershgorin_balls(mat2(Quaternion::zero(), -K, ONE, I + J));
  CHECK(approx_equal(u.balls[0].center, Quaternion::zero(), 0.0));
  CHECK(u.balls[0].radius == doctest::Approx(1.0));
  CHECK(approx_equal(u.balls[1].center, I + J, 0.0));
  CHECK(u.balls[1].radius == doctest::Approx(1.0));

  // Cf of q^2 + a1 q + a0: first row gives {0, 1}, second {-a1, |a0|}
  const Quaternion a0(2, 0, -1, 0), a1(0, 1, 0, 3);
  const BallUnion v = gershgorin_balls(mat2(Quaternion::zero(), ONE, -a0, -a1));
  CHECK(approx_equal(v.balls[0].center, Quaternion::zero(), 0.0));
  CHECK(v.balls[0].radius == doctest::Approx(1.0));
  CHECK(approx_equal(v.balls[1].center, -a1, 0.0));
  CHECK(v.balls[1].radius == doctest::Approx(norm(a0)).epsilon(1e-15));
}

TEST_CASE("membership") {
  const Ball unit{Quaternion::zero(), 1.0};
  CHECK(unit.contains(J, 0.0));
  CHECK(!unit.contains(ONE + I, 0.0));
  const Ball point{I, 0.0};
  CHECK(point.contains(I, 0.0));
  // decisive within 1e-12 of the boundary
  CHECK(unit.contains(Quaternion(1.0 - 1e-10, 0, 0, 0), 0.0));
  CHECK(!unit.contains(Quaternion(1.0 + 1e-10, 0, 0, 0), 0.0));
}

TEST_CASE("enclosing radius") {
  CHECK(enclosing_radius({{Ball{Quaternion::zero(), 1.0}}}) == doctest::Approx(1.0));
  CHECK(enclosing_radius({{Ball{Quaternion::zero(), 1.0}, Ball{I + J, 1.0}}}) ==
        doctest::Approx(std::sqrt(2.0) + 1.0));
  CHECK(enclosing_radius({{Ball{I, 0.0}, Ball{J, 0.0}}}) == doctest::Approx(1.0));
}

TEST_CASE("enclosing radius grows monotonically with added balls") {
  SplitMix64 rng(30);
  BallUnion u;
  double last = 0.0;
  for (int it = 0; it < 40; ++it) {
    u.balls.push_back({random_quat(rng, 4.0), std::abs(rng.uniform(0, 3))});
    const double r = enclosing_radius(u);
    CHECK(r >= last);
    last = r;
  }
}

TEST_CASE("2x2 left eigenvalues: triangular and real cases") {
  const Eigen2x2 diag = left_eigenvalues_2x2(mat2(I, Quaternion::zero(), Quaternion::zero(), J));
  REQUIRE(diag.isolated.size() == 2);
  CHECK(setwise_match(diag.isolated, {I, J}, 0.0));

  const Eigen2x2 swap = left_eigenvalues_2x2(mat2(Quaternion::zero(), ONE, ONE, Quaternion::zero()));
  REQUIRE(swap.isolated.size() == 2);
  CHECK(setwise_match(swap.isolated, {ONE, -ONE}, 1e-12));

  // lower triangular with a repeated diagonal entry collapses to one value
  const Eigen2x2 rep = left_eigenvalues_2x2(mat2(I, Quaternion::zero(), ONE, I));
  REQUIRE(rep.isolated.size() == 1);
  CHECK(approx_equal(rep.isolated[0], I, 0.0));
}

TEST_CASE("2x2 left eigenvalues: the companion of the running example") {
  // Cf of q^2 - (i+j)q + k; its only left eigenvalue is the zero j
  const Eigen2x2 r = left_eigenvalues_2x2(mat2(Quaternion::zero(), ONE, -K, I + J));
  REQUIRE(r.isolated.size() == 1);
  CHECK(!r.family.has_value());
  CHECK(approx_equal(r.isolated[0], J, 1e-12));
}

TEST_CASE("2x2 left eigenvalues: spherical family") {
  // [[0,1],[-1,0]]: t^2 + 1 = 0, eigenvalues are every unit pure imaginary
  const Eigen2x2 r = left_eigenvalues_2x2(mat2(Quaternion::zero(), ONE, -ONE, Quaternion::zero()));
  REQUIRE(r.family.has_value());
  const BallUnion u = gershgorin_balls(mat2(Quaternion::zero(), ONE, -ONE, Quaternion::zero()));
  for (const Quaternion& dir : spherical_probe_directions()) {
    const Quaternion lambda = r.family->sample(dir);
    CHECK(norm(lambda) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u.contains(lambda, 1e-9));
  }
}

TEST_CASE("left eigenvalues sit inside the ball union (random 2x2)") {
  SplitMix64 rng(31);
  int isolated_seen = 0;
  for (int it = 0; it < 200; ++it) {
    const QMatrix m = mat2(random_quat(rng, 5.0), random_quat(rng, 5.0), random_quat(rng, 5.0),
                           random_quat(rng, 5.0));
    const BallUnion u = gershgorin_balls(m);
    const Eigen2x2 r = left_eigenvalues_2x2(m);
    for (const Quaternion& lambda : r.isolated) {
      ++isolated_seen;
      CHECK(u.contains(lambda, 1e-9));
    }
    if (r.family)
      for (const Quaternion& dir : spherical_probe_directions())
        CHECK(u.contains(r.family->sample(dir), 1e-9));
  }
  CHECK(isolated_seen > 200);  // random matrices give isolated eigenvalues
}

TEST_CASE("companion eigenvalues agree with the quadratic solver") {
  SplitMix64 rng(32);
  for (int it = 0; it < 100; ++it) {
    const Quaternion a0 = random_quat(rng, 4.0);
    const Quaternion a1 = random_quat(rng, 4.0);
    const QMatrix cf = mat2(Quaternion::zero(), ONE, -a0, -a1);
    const Eigen2x2 eig = left_eigenvalues_2x2(cf);
    std::vector<Quaternion> expected;
    for (const ZeroRecord& rec : solve_quadratic(a1, a0)) {
      REQUIRE(rec.kind == ZeroKind::Isolated);
      expected.push_back(rec.value);
    }
    CHECK(setwise_match(eig.isolated, expected, 1e-8));
  }
}

TEST_CASE("dimension check") {
  QMatrix m(3);
  CHECK_THROWS_AS(left_eigenvalues_2x2(m), std::invalid_argument);
}
