#pragma once

#include <cassert>
#include <cmath>
#include <string>
#include <string_view>

namespace quatloc {

/// Quaternion w + x*i + y*j + z*k over double.
///
/// Plain value type; every operation is a pure function. Components must be
/// finite: debug builds assert at construction, release builds treat it as a
/// documented contract. There is no exact operator==; comparisons go through
/// approx_equal with a caller-supplied tolerance.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {
    assert(is_finite());
  }
  constexpr explicit Quaternion(double real) : Quaternion(real, 0.0, 0.0, 0.0) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return Quaternion(1.0, 0.0, 0.0, 0.0); }
  static constexpr Quaternion unit_i() { return Quaternion(0.0, 1.0, 0.0, 0.0); }
  static constexpr Quaternion unit_j() { return Quaternion(0.0, 0.0, 1.0, 0.0); }
  static constexpr Quaternion unit_k() { return Quaternion(0.0, 0.0, 0.0, 1.0); }

  constexpr bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
  constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
  /// True when the three imaginary components are exactly zero.
  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product; non-commutative (i*j = k, j*i = -k).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm_squared(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Norm of the imaginary part sqrt(x^2 + y^2 + z^2).
inline double vec_norm(const Quaternion& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// q^-1 = conj(q) / |q|^2. Throws std::domain_error on q = 0.
Quaternion inverse(const Quaternion& q);

/// Conjugacy-class invariants: two quaternions are similar (p^-1 q p = q')
/// exactly when their (real part, imaginary norm) pairs coincide.
struct SimilarityClass {
  double real_part = 0.0;
  double imag_norm = 0.0;  // >= 0
};

inline SimilarityClass similarity_invariants(const Quaternion& q) {
  return {q.w, vec_norm(q)};
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
         std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

/// Renders "a+bi+cj+dk" with minus signs absorbed, e.g. "1-2i+0j+3k".
std::string to_string(const Quaternion& q, int precision = 9);

/// Parses the rendering grammar above (whitespace allowed between tokens).
/// Throws std::invalid_argument on malformed or non-finite input.
Quaternion parse_quaternion(std::string_view text);

}  // namespace quatloc
