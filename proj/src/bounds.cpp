#include "quatloc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace quatloc {

std::string_view method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::Cauchy: return "cauchy";
    case BoundMethod::Weighted: return "weighted";
    case BoundMethod::Ratio: return "ratio";
    case BoundMethod::Fujiwara: return "fujiwara";
    case BoundMethod::LacunarySum: return "lacunary_sum";
    case BoundMethod::LacunaryMax: return "lacunary_max";
  }
  return "?";
}

std::optional<BoundMethod> parse_method(std::string_view name) {
  for (BoundMethod m : {BoundMethod::Cauchy, BoundMethod::Weighted, BoundMethod::Ratio,
                        BoundMethod::Fujiwara, BoundMethod::LacunarySum, BoundMethod::LacunaryMax})
    if (name == method_name(m)) return m;
  return std::nullopt;
}

namespace {

void require_monic(const QPolynomial& p, const char* who) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument(std::string(who) + " requires a monic polynomial of degree >= 1");
}

void require_side(const QPolynomial& p, CoeffSide side, const char* who) {
  if (p.side() != side)
    throw std::invalid_argument(std::string(who) + " is stated for the " +
                                side_name(side) + " convention");
}

std::string fmt_reals(std::span<const double> v) {
  std::string out;
  char buf[40];
  for (size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%g", v[i]);
    if (i) out += ';';
    out += buf;
  }
  return out;
}

}  // namespace

BoundResult cauchy_bound(const QPolynomial& p) {
  require_monic(p, "cauchy_bound");
  double worst = 0.0;
  for (int i = 0; i < p.degree(); ++i) worst = std::max(worst, norm(p.coeff(i)));
  return {BoundMethod::Cauchy, "", 1.0 + worst, true, ""};
}

BoundResult weighted_bound(const QPolynomial& p, std::span<const double> alpha) {
  require_monic(p, "weighted_bound");
  require_side(p, CoeffSide::Right, "weighted_bound");
  const int n = p.degree();
  if (static_cast<int>(alpha.size()) != n - 1)
    throw std::invalid_argument("weighted_bound needs n-1 weights");
  for (double a : alpha)
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("weights must be positive");

  auto alpha_at = [&](int i) {  // alpha_0 = 1 (see header), alpha_n = 1
    if (i == 0 || i == n) return 1.0;
    return alpha[static_cast<size_t>(i - 1)];
  };
  double radius = 0.0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, (alpha_at(i) + norm(p.coeff(i))) / alpha_at(i + 1));
  return {BoundMethod::Weighted, "alpha=" + fmt_reals(alpha), radius, true, ""};
}

BoundResult ratio_bound(const QPolynomial& p) {
  require_monic(p, "ratio_bound");
  require_side(p, CoeffSide::Right, "ratio_bound");
  const int n = p.degree();
  if (n == 1)
    return {BoundMethod::Ratio, "", 2.0 * norm(p.coeff(0)), true,
            "degenerate n=1 form 2|a_0|"};
  for (int i = 1; i < n; ++i)
    if (p.coeff(i).is_zero())
      return {BoundMethod::Ratio, "", 0.0, false, "zero interior coefficient"};
  double radius = norm(p.coeff(0)) / norm(p.coeff(1));
  for (int i = 1; i < n; ++i) {
    const double next = i + 1 == n ? 1.0 : norm(p.coeff(i + 1));
    radius = std::max(radius, 2.0 * norm(p.coeff(i)) / next);
  }
  return {BoundMethod::Ratio, "", radius, true, ""};
}

BoundResult fujiwara_bound(const QPolynomial& p, std::span<const double> lambda) {
  require_monic(p, "fujiwara_bound");
  require_side(p, CoeffSide::Left, "fujiwara_bound");
  const int n = p.degree();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("fujiwara_bound needs n weights");
  double sum = 0.0;
  for (double l : lambda) {
    if (!(l > 0.0) || !std::isfinite(l)) throw std::invalid_argument("weights must be positive");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("fujiwara weights must sum to 1");
  double radius = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double num = norm(p.coeff(n - j)) / lambda[static_cast<size_t>(j - 1)];
    radius = std::max(radius, j == 1 ? num : std::pow(num, 1.0 / j));
  }
  return {BoundMethod::Fujiwara, "lambda=" + fmt_reals(lambda), radius, true, ""};
}

namespace {

struct LacunaryData {
  int r = 0;
  double lambda = 0.0;
  bool trivial = false;  // p = q^n
};

LacunaryData lacunary_data(const QPolynomial& p) {
  const std::optional<int> profile = lacunary_profile(p);
  if (!profile) return {0, 0.0, true};
  double worst = 0.0;
  for (int j = 0; j <= *profile; ++j) worst = std::max(worst, norm(p.coeff(j)));
  return {*profile, std::pow(worst, 1.0 / p.degree()), false};
}

}  // namespace

BoundResult lacunary_sum_bound(const QPolynomial& p) {
  require_monic(p, "lacunary_sum_bound");
  require_side(p, CoeffSide::Left, "lacunary_sum_bound");
  const LacunaryData d = lacunary_data(p);
  if (d.trivial)
    return {BoundMethod::LacunarySum, "", 0.0, true, "all interior coefficients zero"};
  double radius = 0.0, power = 1.0;
  for (int e = 1; e <= d.r + 1; ++e) {
    power *= d.lambda;
    radius += power;
  }
  return {BoundMethod::LacunarySum, "", radius, true,
          d.r == 0 ? "r=0 outside the stated range; formula applied as written" : ""};
}

BoundResult lacunary_max_bound(const QPolynomial& p) {
  require_monic(p, "lacunary_max_bound");
  require_side(p, CoeffSide::Right, "lacunary_max_bound");
  const LacunaryData d = lacunary_data(p);
  if (d.trivial)
    return {BoundMethod::LacunaryMax, "", 0.0, true, "all interior coefficients zero"};
  const double radius =
      d.lambda + std::max(d.lambda * d.lambda, std::pow(d.lambda, d.r + 1));
  return {BoundMethod::LacunaryMax, "", radius, true,
          d.r == 0 ? "r=0 outside the stated range; formula applied as written" : ""};
}

std::vector<double> dyadic_lambda(int n) {
  if (n < 1) throw std::invalid_argument("dyadic_lambda needs n >= 1");
  std::vector<double> l(static_cast<size_t>(n));
  for (int j = 1; j < n; ++j) l[static_cast<size_t>(j - 1)] = std::ldexp(1.0, -j);
  l[static_cast<size_t>(n - 1)] = std::ldexp(1.0, -(n - 1));
  return l;
}

std::vector<BoundResult> all_bounds(const QPolynomial& p, const BoundPresets& presets,
                                    std::span<const BoundMethod> methods) {
  require_monic(p, "all_bounds");
  const int n = p.degree();
  static const BoundMethod all[] = {BoundMethod::Cauchy,      BoundMethod::Weighted,
                                    BoundMethod::Ratio,       BoundMethod::Fujiwara,
                                    BoundMethod::LacunarySum, BoundMethod::LacunaryMax};
  std::span<const BoundMethod> wanted = methods.empty() ? std::span<const BoundMethod>(all) : methods;

  // The polynomial in each convention; built lazily since only half the
  // methods need the mirror.
  std::optional<QPolynomial> mirrored;
  auto on_side = [&](CoeffSide side) -> const QPolynomial& {
    if (p.side() == side) return p;
    if (!mirrored) mirrored = mirror_convention(p);
    return *mirrored;
  };
  auto bridge_note = [&](CoeffSide side, BoundResult r) {
    if (p.side() != side) {
      r.note += r.note.empty() ? "" : "; ";
      r.note += "evaluated via mirrored convention";
    }
    return r;
  };

  std::vector<BoundResult> out;
  for (BoundMethod m : wanted) {
    switch (m) {
      case BoundMethod::Cauchy:
        out.push_back(cauchy_bound(p));
        break;
      case BoundMethod::Weighted: {
        const QPolynomial& g = on_side(CoeffSide::Right);
        std::vector<double> alpha = presets.alpha
                                        ? *presets.alpha
                                        : std::vector<double>(static_cast<size_t>(n - 1), 1.0);
        out.push_back(bridge_note(CoeffSide::Right, weighted_bound(g, alpha)));
        if (presets.coefficient_alpha && !presets.alpha && n >= 2) {
          std::vector<double> coeff_alpha;
          bool defined = true;
          for (int i = 1; i < n && defined; ++i) {
            const double a = norm(g.coeff(i));
            if (a == 0.0) defined = false;
            coeff_alpha.push_back(a);
          }
          if (defined) {
            BoundResult r = weighted_bound(g, coeff_alpha);
            r.params = "alpha=|a_i|";
            out.push_back(bridge_note(CoeffSide::Right, std::move(r)));
          }
        }
        break;
      }
      case BoundMethod::Ratio:
        out.push_back(bridge_note(CoeffSide::Right, ratio_bound(on_side(CoeffSide::Right))));
        break;
      case BoundMethod::Fujiwara: {
        const std::vector<double> lambda = presets.lambda ? *presets.lambda : dyadic_lambda(n);
        BoundResult r = fujiwara_bound(on_side(CoeffSide::Left), lambda);
        if (!presets.lambda) r.params = "lambda=dyadic";
        out.push_back(bridge_note(CoeffSide::Left, std::move(r)));
        break;
      }
      case BoundMethod::LacunarySum:
        out.push_back(bridge_note(CoeffSide::Left, lacunary_sum_bound(on_side(CoeffSide::Left))));
        break;
      case BoundMethod::LacunaryMax:
        out.push_back(bridge_note(CoeffSide::Right, lacunary_max_bound(on_side(CoeffSide::Right))));
        break;
    }
  }
  return out;
}

}  // namespace quatloc
