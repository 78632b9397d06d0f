#include "quatloc/qpolynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatloc {

QPolynomial::QPolynomial(std::vector<Quaternion> coeffs, CoeffSide side)
    : coeffs_(std::move(coeffs)), side_(side) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const Quaternion& c : coeffs_)
    if (!c.is_finite()) throw std::invalid_argument("polynomial coefficient not finite");
  if (coeffs_.back().is_zero())
    throw std::invalid_argument("leading coefficient must be nonzero");
}

Quaternion QPolynomial::evaluate(const Quaternion& q) const {
  assert(q.is_finite());
  Quaternion acc = coeffs_[0];
  Quaternion power = Quaternion::one();
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    power = power * q;
    acc += side_ == CoeffSide::Left ? coeffs_[k] * power : power * coeffs_[k];
  }
  return acc;
}

double QPolynomial::coefficient_scale() const {
  double m = 0.0;
  for (const Quaternion& c : coeffs_) m = std::max(m, norm(c));
  return m;
}

QPolynomial multiply(const QPolynomial& p1, const QPolynomial& p2) {
  if (p1.side() != p2.side())
    throw std::invalid_argument("cannot multiply polynomials with mixed coefficient sides");
  const int n1 = p1.degree();
  const int n2 = p2.degree();
  std::vector<Quaternion> out(static_cast<size_t>(n1 + n2) + 1);
  for (int a = 0; a <= n1; ++a)
    for (int b = 0; b <= n2; ++b) out[static_cast<size_t>(a + b)] += p1.coeff(a) * p2.coeff(b);
  return {std::move(out), p1.side()};
}

QPolynomial normalize_monic(const QPolynomial& p) {
  if (p.leading().is_zero()) throw std::domain_error("zero leading coefficient");
  if (p.is_monic()) return p;
  const Quaternion inv = inverse(p.leading());
  std::vector<Quaternion> out;
  out.reserve(p.coeffs().size());
  for (const Quaternion& c : p.coeffs())
    out.push_back(p.side() == CoeffSide::Left ? inv * c : c * inv);
  out.back() = Quaternion::one();  // exact by contract
  return {std::move(out), p.side()};
}

std::optional<int> lacunary_profile(const QPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("lacunary profile requires a monic polynomial of degree >= 1");
  for (int j = p.degree() - 1; j >= 0; --j)
    if (!p.coeff(j).is_zero()) return j;
  return std::nullopt;
}

QPolynomial mirror_convention(const QPolynomial& p) {
  std::vector<Quaternion> out;
  out.reserve(p.coeffs().size());
  for (const Quaternion& c : p.coeffs()) out.push_back(conjugate(c));
  return {std::move(out), p.side() == CoeffSide::Left ? CoeffSide::Right : CoeffSide::Left};
}

}  // namespace quatloc
