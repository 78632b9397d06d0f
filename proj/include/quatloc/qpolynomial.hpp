#pragma once

#include <optional>
#include <vector>

#include "quatloc/quaternion.hpp"

namespace quatloc {

/// Which side the coefficients sit on:
///   Left : f(q) = a_n q^n + ... + a_1 q + a_0
///   Right: g(q) = q^n a_n + ... + q a_1 + a_0
/// Evaluation results differ between the two; every operation that depends on
/// the convention checks it.
enum class CoeffSide { Left, Right };

inline const char* side_name(CoeffSide s) { return s == CoeffSide::Left ? "left" : "right"; }

/// Unilateral quaternionic polynomial. Coefficients are stored ascending by
/// degree (a_0 first); the leading coefficient must be nonzero.
class QPolynomial {
 public:
  QPolynomial(std::vector<Quaternion> coeffs, CoeffSide side);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  CoeffSide side() const { return side_; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  const Quaternion& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  const Quaternion& leading() const { return coeffs_.back(); }
  /// Exact check: leading coefficient is the unit 1.
  bool is_monic() const { return leading().w == 1.0 && leading().is_real(); }

  /// Left side: sum a_k q^k (power multiplied on the right of the
  /// coefficient); right side: sum q^k a_k. Powers by iterated Hamilton
  /// product.
  Quaternion evaluate(const Quaternion& q) const;

  /// Largest coefficient norm, a convenient scale for tolerances.
  double coefficient_scale() const;

 private:
  std::vector<Quaternion> coeffs_;
  CoeffSide side_;
};

/// Non-commutative convolution c_g = sum_{a+b=g} p1_a * p2_b (order
/// preserved). Both factors must share a side; mixing is rejected.
QPolynomial multiply(const QPolynomial& p1, const QPolynomial& p2);

/// Scales the polynomial so the leading coefficient becomes exactly 1:
/// left polynomials are pre-multiplied by inverse(a_n), right polynomials
/// post-multiplied. The zero set is unchanged either way.
QPolynomial normalize_monic(const QPolynomial& p);

/// Largest index r < n with a nonzero coefficient, or nullopt for q^n.
/// Requires an exact structural zero above r; near-zeros do not count.
/// Pre: monic, degree >= 1.
std::optional<int> lacunary_profile(const QPolynomial& p);

/// Opposite-side polynomial with conjugated coefficients. q is a zero of the
/// result exactly when conjugate(q) is a zero of the input, so the two zero
/// sets are mutual conjugates.
QPolynomial mirror_convention(const QPolynomial& p);

}  // namespace quatloc
