#pragma once

#include <span>
#include <string>
#include <vector>

#include "quatloc/qpolynomial.hpp"

namespace quatloc {

/// Square quaternion matrix, row-major. Built once and then treated as an
/// immutable value.
class QMatrix {
 public:
  explicit QMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}
  QMatrix(int n, std::vector<Quaternion> entries);

  int dim() const { return n_; }
  const Quaternion& at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, const Quaternion& v) { entries_[index(i, j)] = v; }

 private:
  size_t index(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_;
  std::vector<Quaternion> entries_;
};

/// The four companion layouts:
///   Cf: left coefficients, superdiagonal 1s, bottom row (-a_0 ... -a_{n-1})
///   Cg: right coefficients, subdiagonal 1s, last column (-a_0 ... -a_{n-1})
///   Cp/Ch: the lacunary variants of Cf/Cg; the trailing interior
///   coefficients are structurally zero, so the numeric layout coincides
///   with Cf/Cg. They are total even at r = n-1.
enum class CompanionKind { Cf, Cg, Cp, Ch };

/// Builds the companion matrix whose left spectrum is the zero set of p.
/// p must be monic and the kind must match p's coefficient side
/// (Cf/Cp for left, Cg/Ch for right).
QMatrix build_companion(const QPolynomial& p, CompanionKind kind);

/// D^-1 C D for D = diag(d), d real and positive; entry (i,j) becomes
/// C(i,j) * d_j / d_i. Scales must all be strictly positive (real diagonal
/// entries commute with quaternion entries, which is what keeps the zero set
/// fixed).
QMatrix diagonal_similarity(const QMatrix& c, std::span<const double> d);

/// Preset diagonals used by the bound derivations.
/// weighted_transform: (alpha_1, ..., alpha_{n-1}, 1)
std::vector<double> weighted_transform(std::span<const double> alphas);
/// geometric_transform: (1/l^{n-1}, 1/l^{n-2}, ..., 1/l, 1)
std::vector<double> geometric_transform(int n, double l);
/// lacunary_p_transform: same shape as geometric_transform
std::vector<double> lacunary_p_transform(int n, double lambda);
/// lacunary_h_transform: (lambda^{n-1}, lambda^{n-2}, ..., lambda, 1)
std::vector<double> lacunary_h_transform(int n, double lambda);

/// Aligned text grid for --dump-matrix style output.
std::string render_matrix(const QMatrix& m, int precision = 6);

}  // namespace quatloc
