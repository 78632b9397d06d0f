#pragma once

#include <array>
#include <string>
#include <vector>

#include "quatloc/qpolynomial.hpp"

namespace quatloc {

/// Real-coefficient polynomial, ascending by degree, nonzero leading
/// coefficient. Used for the degree-2n companion polynomial F of a monic
/// quaternionic polynomial.
struct RealPolynomial {
  std::vector<double> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// One similarity class of complex roots of a real polynomial, reported with
/// im >= 0 (conjugate pairs merged). multiplicity counts the roots clustered
/// at (re, im): for im > 0 only the upper-half copies, for im = 0 the whole
/// real cluster.
struct RootClass {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
};

struct ComplexRootsResult {
  std::vector<RootClass> classes;
  bool converged = true;
};

/// F(z) = sum_m b_m z^m with b_m = sum_k conj(a_k) a_{m-k}. The pairwise
/// accumulation makes the imaginary parts cancel exactly; a residue signals
/// an arithmetic bug and throws std::logic_error. Every zero of p lies in
/// the similarity class of some complex root of F. Pre: p monic, left side.
RealPolynomial companion_polynomial(const QPolynomial& p);

/// All complex roots by Aberth-Ehrlich simultaneous iteration with
/// deterministic initial guesses, clustered into conjugate-merged classes.
/// Cluster centers of multiple roots are refined on the (m-1)-th derivative,
/// which restores full accuracy where plain iteration stalls.
ComplexRootsResult complex_roots(const RealPolynomial& f);

enum class ZeroKind { Isolated, Spherical };

/// A zero of a quaternionic polynomial: either one isolated point or a whole
/// similarity class (2-sphere) of zeros. residual is |p(z)| at the reported
/// point (for spheres: the max over the 8 validation directions). A
/// non-empty note marks a recovery or convergence problem; ok mirrors it.
struct ZeroRecord {
  ZeroKind kind = ZeroKind::Isolated;
  Quaternion value;      // isolated zeros
  SimilarityClass cls;   // class invariants (also filled for isolated zeros)
  double residual = 0.0;
  int class_multiplicity = 1;
  std::string note;
  bool ok = true;
};

/// Fixed unit pure-imaginary directions used to validate spherical zeros.
const std::array<Quaternion, 8>& spherical_probe_directions();

/// Class recovery: for a class (re, im) with im > 0 write candidates as
/// q = re + im*u with u a unit pure imaginary; evaluation splits as P + Q*u
/// with P, Q depending only on the class. Q != 0 pins u = -Q^-1 P (isolated),
/// P = Q = 0 makes the whole class zeros (spherical). Real classes are
/// checked by direct evaluation. Pre: p monic, left side; classes computed
/// from companion_polynomial(p).
std::vector<ZeroRecord> recover_zeros(const QPolynomial& p, const ComplexRootsResult& classes);

/// Complete zero set of p (any side; right-side input is routed through
/// mirror_convention and the results conjugated back). Normalizes internally;
/// requires degree >= 1. Records are sorted by (real part, imaginary norm).
std::vector<ZeroRecord> find_zeros(const QPolynomial& p);

/// Closed-form zero set of q^2 + b q + c (left side) via the reduction to
/// real equations on (2 Re q, |q|^2); independent of the Aberth path, so it
/// can cross-check find_zeros at degree 2.
std::vector<ZeroRecord> solve_quadratic(const Quaternion& b, const Quaternion& c);

namespace detail {
/// Real roots of x^3 + c2 x^2 + c1 x + c0, closed form plus a Newton polish.
std::vector<double> solve_cubic_real(double c2, double c1, double c0);
}  // namespace detail

}  // namespace quatloc
