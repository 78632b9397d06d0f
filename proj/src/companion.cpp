#include "quatloc/companion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quatloc {

QMatrix::QMatrix(int n, std::vector<Quaternion> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
  if (entries_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw std::invalid_argument("entry count does not match dimension");
  for (const Quaternion& e : entries_)
    if (!e.is_finite()) throw std::invalid_argument("matrix entry not finite");
}

QMatrix build_companion(const QPolynomial& p, CompanionKind kind) {
  if (!p.is_monic()) throw std::invalid_argument("companion matrix requires a monic polynomial");
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("companion matrix requires degree >= 1");
  const bool left_kind = kind == CompanionKind::Cf || kind == CompanionKind::Cp;
  if (left_kind != (p.side() == CoeffSide::Left))
    throw std::invalid_argument("companion kind does not match the coefficient side");

  QMatrix m(n);
  if (left_kind) {
    for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, Quaternion::one());
    for (int j = 0; j < n; ++j) m.set(n - 1, j, -p.coeff(j));
  } else {
    for (int i = 0; i + 1 < n; ++i) m.set(i + 1, i, Quaternion::one());
    for (int j = 0; j < n; ++j) m.set(j, n - 1, -p.coeff(j));
  }
  return m;
}

QMatrix diagonal_similarity(const QMatrix& c, std::span<const double> d) {
  const int n = c.dim();
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("diagonal length does not match matrix dimension");
  for (double v : d)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("diagonal scales must be positive reals");
  QMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, c.at(i, j) * (d[static_cast<size_t>(j)] / d[static_cast<size_t>(i)]));
  return out;
}

namespace {

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::vector<double> weighted_transform(std::span<const double> alphas) {
  std::vector<double> d(alphas.begin(), alphas.end());
  for (double a : d) check_positive(a, "alpha");
  d.push_back(1.0);
  return d;
}

std::vector<double> geometric_transform(int n, double l) {
  check_positive(l, "l");
  if (n < 1) throw std::invalid_argument("transform needs n >= 1");
  std::vector<double> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = 1.0 / std::pow(l, n - 1 - i);
  return d;
}

std::vector<double> lacunary_p_transform(int n, double lambda) { return geometric_transform(n, lambda); }

std::vector<double> lacunary_h_transform(int n, double lambda) {
  check_positive(lambda, "lambda");
  if (n < 1) throw std::invalid_argument("transform needs n >= 1");
  std::vector<double> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = std::pow(lambda, n - 1 - i);
  return d;
}

std::string render_matrix(const QMatrix& m, int precision) {
  const int n = m.dim();
  std::vector<std::string> cells(static_cast<size_t>(n) * static_cast<size_t>(n));
  size_t width = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string s = to_string(m.at(i, j), precision);
      width = std::max(width, s.size());
      cells[static_cast<size_t>(i * n + j)] = std::move(s);
    }
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    out << "[ ";
    for (int j = 0; j < n; ++j) {
      const std::string& s = cells[static_cast<size_t>(i * n + j)];
      out << s << std::string(width - s.size() + (j + 1 < n ? 2 : 0), ' ');
    }
    out << " ]\n";
  }
  return out.str();
}

}  // namespace quatloc
