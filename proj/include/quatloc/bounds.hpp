#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quatloc/qpolynomial.hpp"

namespace quatloc {

enum class BoundMethod { Cauchy, Weighted, Ratio, Fujiwara, LacunarySum, LacunaryMax };

std::string_view method_name(BoundMethod m);
std::optional<BoundMethod> parse_method(std::string_view name);

/// Result of one inclusion-radius formula. When a method does not apply to
/// the given polynomial (rather than the input being invalid) the result is
/// returned with applicable=false and the reason in note; radius stays 0 so
/// serialized fields remain finite.
struct BoundResult {
  BoundMethod method = BoundMethod::Cauchy;
  std::string params;
  double radius = 0.0;
  bool applicable = true;
  std::string note;
};

/// radius = 1 + max |a_i| over the non-leading coefficients. Works on either
/// convention since only coefficient norms enter. Pre: monic, degree >= 1.
BoundResult cauchy_bound(const QPolynomial& p);

/// Weighted row-sum radius for right-side polynomials:
/// max over i = 0..n-1 of (alpha_i + |a_i|) / alpha_{i+1} with alpha_n = 1
/// and the caller supplying alpha_1..alpha_{n-1} (all positive). The i = 0
/// term enters as (1 + |a_0|) / alpha_1 so that the all-ones weight vector
/// reproduces cauchy_bound exactly.
BoundResult weighted_bound(const QPolynomial& p, std::span<const double> alpha);

/// max{|a_0|/|a_1|, 2|a_1|/|a_2|, ..., 2|a_{n-1}|} for right-side
/// polynomials; requires every interior coefficient nonzero, otherwise
/// applicable=false. Degree 1 degenerates to 2|a_0| (noted).
BoundResult ratio_bound(const QPolynomial& p);

/// max over j = 1..n of (|a_{n-j}| / lambda_j)^(1/j) for left-side
/// polynomials; the lambda_j must be positive and sum to 1 within 1e-12.
BoundResult fujiwara_bound(const QPolynomial& p, std::span<const double> lambda);

/// Lacunary sum radius for left-side polynomials with profile r:
/// lambda = (max_{j<=r} |a_j|)^(1/n), radius = lambda + lambda^2 + ... +
/// lambda^(r+1). Profile NONE (p = q^n) gives radius 0.
BoundResult lacunary_sum_bound(const QPolynomial& p);

/// Lacunary max radius for right-side polynomials:
/// radius = lambda + max(lambda^2, lambda^(r+1)).
BoundResult lacunary_max_bound(const QPolynomial& p);

/// The dyadic weight vector 2^-1, 2^-2, ..., 2^-(n-1), 2^-(n-1); sums to 1
/// exactly in binary floating point.
std::vector<double> dyadic_lambda(int n);

struct BoundPresets {
  std::optional<std::vector<double>> alpha;   // weighted weights; default all ones
  std::optional<std::vector<double>> lambda;  // fujiwara weights; default dyadic
  bool coefficient_alpha = true;  // add a weighted row with alpha_i = |a_i| when defined
};

/// Evaluates every requested method (all six when methods is empty).
/// Methods stated for the other convention are computed on
/// mirror_convention(p) -- coefficient norms are conjugation invariant, so
/// the radius is unchanged -- and the bridge is noted.
std::vector<BoundResult> all_bounds(const QPolynomial& p, const BoundPresets& presets = {},
                                    std::span<const BoundMethod> methods = {});

}  // namespace quatloc
