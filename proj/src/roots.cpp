#include "quatloc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace quatloc {

namespace {

using Complex = std::complex<double>;

constexpr double kClusterTol = 1e-7;    // multiplicity detection
constexpr double kRealSnapTol = 1e-9;   // refined class counts as real below this
constexpr double kRecoverSplitTol = 1e-7;  // |Q| (resp. |P|) threshold vs class scale
constexpr double kUnitPureTol = 1e-6;   // acceptance window for recovered u
constexpr double kResidualRel = 1e-8;   // isolated/spherical residual contract

void horner(const std::vector<double>& c, Complex z, Complex& f, Complex& df) {
  f = Complex(c.back(), 0.0);
  df = Complex(0.0, 0.0);
  for (int m = static_cast<int>(c.size()) - 2; m >= 0; --m) {
    df = df * z + f;
    f = f * z + c[static_cast<size_t>(m)];
  }
}

double backward_scale(const std::vector<double>& c, Complex z) {
  const double az = std::abs(z);
  double s = 0.0, pw = 1.0;
  for (double cm : c) {
    s += std::abs(cm) * pw;
    pw *= az;
  }
  return 1.0 + s;
}

struct AberthOutcome {
  std::vector<Complex> roots;
  bool converged = true;
};

// Aberth-Ehrlich simultaneous iteration (Gauss-Seidel sweeps) with
// deterministic initial guesses on the Cauchy circle of the polynomial.
// Multiple roots stall at ~sqrt(eps); the caller fixes those up via cluster
// centroids and derivative refinement.
AberthOutcome aberth(std::vector<double> c) {
  const double lead = c.back();
  for (double& cm : c) cm /= lead;
  const int deg = static_cast<int>(c.size()) - 1;

  // Starting circle: the Cauchy radius 1 + max|c| can overshoot the actual
  // root magnitudes by orders at high degree, and the collapse from a far
  // circle costs ~deg*log(R/r) sweeps. The Fujiwara-style radius tracks the
  // root scale much better; take the smaller of the two.
  double cauchy = 0.0;
  for (int m = 0; m < deg; ++m) cauchy = std::max(cauchy, std::abs(c[static_cast<size_t>(m)]));
  cauchy += 1.0;
  double fujiwara = 0.0;
  for (int k = 1; k <= deg; ++k)
    fujiwara = std::max(fujiwara,
                        std::pow(std::abs(c[static_cast<size_t>(deg - k)]), 1.0 / k));
  const double radius = std::max(1e-3, std::min(cauchy, 2.0 * fujiwara));

  AberthOutcome out;
  out.roots.resize(static_cast<size_t>(deg));
  for (int v = 0; v < deg; ++v) {
    const double angle = 2.0 * M_PI * v / deg + 0.4;
    out.roots[static_cast<size_t>(v)] = radius * Complex(std::cos(angle), std::sin(angle));
  }

  const int max_sweeps = 200 + 4 * deg;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_step = 0.0;
    for (int v = 0; v < deg; ++v) {
      Complex& zv = out.roots[static_cast<size_t>(v)];
      Complex f, df;
      horner(c, zv, f, df);
      if (std::abs(f) == 0.0) continue;
      if (std::abs(df) == 0.0) {
        zv += 1e-6 * radius * Complex(1.0, 1.0);
        continue;
      }
      const Complex newton = f / df;
      Complex sum(0.0, 0.0);
      for (int u = 0; u < deg; ++u) {
        if (u == v) continue;
        Complex den = zv - out.roots[static_cast<size_t>(u)];
        if (std::abs(den) == 0.0) den = Complex(1e-12 * (1.0 + std::abs(zv)), 0.0);
        sum += 1.0 / den;
      }
      const Complex den = 1.0 - newton * sum;
      const Complex step = std::abs(den) == 0.0 ? newton : newton / den;
      zv -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zv)));
    }
    if (max_step <= 1e-14) break;
  }

  for (const Complex& z : out.roots) {
    Complex f, df;
    horner(c, z, f, df);
    if (std::abs(f) > 1e-10 * backward_scale(c, z)) out.converged = false;
  }
  return out;
}

std::vector<double> derivative_coeffs(std::vector<double> c, int times) {
  for (int t = 0; t < times; ++t) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (size_t m = 1; m < c.size(); ++m) d[m - 1] = c[m] * static_cast<double>(m);
    c = std::move(d);
  }
  return c;
}

Complex newton_refine(const std::vector<double>& c, Complex z, int iters) {
  for (int it = 0; it < iters; ++it) {
    Complex f, df;
    horner(c, z, f, df);
    if (std::abs(df) == 0.0) break;
    const Complex step = f / df;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return z;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

RealPolynomial companion_polynomial(const QPolynomial& p) {
  if (p.side() != CoeffSide::Left)
    throw std::invalid_argument("companion polynomial is defined on the left convention");
  if (!p.is_monic()) throw std::invalid_argument("companion polynomial requires a monic input");
  const int n = p.degree();
  RealPolynomial f;
  f.coeffs.assign(static_cast<size_t>(2 * n) + 1, 0.0);
  double scale = 1.0;
  for (const Quaternion& a : p.coeffs()) scale += norm_squared(a);
  for (int m = 0; m <= 2 * n; ++m) {
    // Pairing k with m-k keeps the accumulation real: the vector parts of
    // conj(a)b and conj(b)a are exact floating-point negations.
    Quaternion acc;
    const int lo = std::max(0, m - n);
    const int hi = std::min(n, m);
    for (int k = lo; k <= hi; ++k) {
      const int k2 = m - k;
      if (k > k2) break;
      if (k == k2) {
        acc += Quaternion(norm_squared(p.coeff(k)));
      } else {
        acc += conjugate(p.coeff(k)) * p.coeff(k2) + conjugate(p.coeff(k2)) * p.coeff(k);
      }
    }
    if (vec_norm(acc) > 1e-12 * scale)
      throw std::logic_error("companion polynomial picked up an imaginary residue");
    f.coeffs[static_cast<size_t>(m)] = acc.w;
  }
  return f;
}

ComplexRootsResult complex_roots(const RealPolynomial& f) {
  const int deg = f.degree();
  if (deg < 1) throw std::invalid_argument("complex_roots requires degree >= 1");
  for (double c : f.coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("coefficient not finite");
  if (f.coeffs.back() == 0.0) throw std::invalid_argument("leading coefficient must be nonzero");

  // Exact zero roots are deflated up front; they rejoin the point set below.
  size_t strip = 0;
  while (strip < f.coeffs.size() - 1 && f.coeffs[strip] == 0.0) ++strip;

  std::vector<Complex> points(strip, Complex(0.0, 0.0));
  ComplexRootsResult out;
  if (f.coeffs.size() - strip >= 2) {
    std::vector<double> work(f.coeffs.begin() + static_cast<std::ptrdiff_t>(strip), f.coeffs.end());
    AberthOutcome ab = aberth(std::move(work));
    out.converged = ab.converged;
    points.insert(points.end(), ab.roots.begin(), ab.roots.end());
  }

  const int np = static_cast<int>(points.size());
  DisjointSet ds(np);
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      const double near = std::min(std::abs(points[static_cast<size_t>(i)]), std::abs(points[static_cast<size_t>(j)]));
      if (std::abs(points[static_cast<size_t>(i)] - points[static_cast<size_t>(j)]) <= kClusterTol * (1.0 + near))
        ds.unite(i, j);
    }

  std::vector<std::vector<int>> groups(static_cast<size_t>(np));
  for (int i = 0; i < np; ++i) groups[static_cast<size_t>(ds.find(i))].push_back(i);

  for (const auto& members : groups) {
    if (members.empty()) continue;
    const int m = static_cast<int>(members.size());
    Complex centroid(0.0, 0.0);
    bool spans_axis_lo = false, spans_axis_hi = false;
    for (int idx : members) {
      centroid += points[static_cast<size_t>(idx)];
      if (points[static_cast<size_t>(idx)].imag() <= 0.0) spans_axis_lo = true;
      if (points[static_cast<size_t>(idx)].imag() >= 0.0) spans_axis_hi = true;
    }
    centroid /= static_cast<double>(m);

    Complex center = centroid;
    if (m >= 2) {
      // A cluster of m computed roots sits on an m-fold root of F, which is a
      // simple root of F^(m-1); Newton there recovers full accuracy.
      const std::vector<double> g = derivative_coeffs(f.coeffs, m - 1);
      if (g.size() >= 2) {
        const Complex refined = newton_refine(g, centroid, 60);
        if (std::abs(refined - centroid) <= 1e-3 * (1.0 + std::abs(centroid))) center = refined;
      }
    }

    const double snap = kRealSnapTol * (1.0 + std::abs(center.real()));
    const bool spans_axis = spans_axis_lo && spans_axis_hi;
    if (std::abs(center.imag()) <= snap ||
        (spans_axis && std::abs(center.imag()) <= kClusterTol * (1.0 + std::abs(center.real())))) {
      out.classes.push_back({center.real(), 0.0, m});
    } else if (center.imag() > 0.0) {
      out.classes.push_back({center.real(), center.imag(), m});
    }
    // clusters below the axis are the conjugate copies; merged away
  }

  std::sort(out.classes.begin(), out.classes.end(), [](const RootClass& a, const RootClass& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

const std::array<Quaternion, 8>& spherical_probe_directions() {
  static const std::array<Quaternion, 8> dirs = [] {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    return std::array<Quaternion, 8>{
        Quaternion(0, 1, 0, 0),    Quaternion(0, 0, 1, 0),    Quaternion(0, 0, 0, 1),
        Quaternion(0, r2, r2, 0),  Quaternion(0, 0, r2, r2),  Quaternion(0, r2, 0, r2),
        Quaternion(0, r3, r3, r3), Quaternion(0, r3, -r3, r3)};
  }();
  return dirs;
}

namespace {

double spherical_residual(const QPolynomial& p, double re, double im) {
  double worst = 0.0;
  for (const Quaternion& u : spherical_probe_directions())
    worst = std::max(worst, norm(p.evaluate(Quaternion(re, im * u.x, im * u.y, im * u.z))));
  return worst;
}

// Acceptance gate for a residual at a point of magnitude zmag. The flat
// term is the contract at desk scale; the second tracks the evaluation
// noise floor eps * sum |a_k| |z|^k, which dominates for large zeros where
// no double-precision method can do better.
double residual_gate(const QPolynomial& p, double zmag) {
  double cond = 0.0, pw = 1.0;
  for (const Quaternion& a : p.coeffs()) {
    cond += norm(a) * pw;
    pw *= zmag;
  }
  return kResidualRel * (1.0 + p.coefficient_scale()) + 1e-11 * cond;
}

}  // namespace

std::vector<ZeroRecord> recover_zeros(const QPolynomial& p, const ComplexRootsResult& classes) {
  if (p.side() != CoeffSide::Left || !p.is_monic())
    throw std::invalid_argument("recover_zeros expects a monic left-side polynomial");
  const int n = p.degree();

  std::vector<ZeroRecord> out;
  for (const RootClass& rc : classes.classes) {
    ZeroRecord rec;
    rec.class_multiplicity = rc.multiplicity;
    rec.cls = {rc.re, rc.im};
    if (rc.im == 0.0) {
      rec.kind = ZeroKind::Isolated;
      rec.value = Quaternion(rc.re);
      rec.residual = norm(p.evaluate(rec.value));
      rec.class_multiplicity = std::max(1, rc.multiplicity / 2);
      rec.ok = rec.residual <= residual_gate(p, std::abs(rc.re));
      if (!rec.ok) rec.note = "real-class residual above tolerance";
      out.push_back(std::move(rec));
      continue;
    }

    // Split the evaluation at re + im*u into P + Q*u: powers of re + im*u
    // behave like complex powers of re + im*i inside the span of {1, u}.
    Quaternion part_p = p.coeff(0);
    Quaternion part_q;
    double class_scale = norm(p.coeff(0));
    Complex zc(rc.re, rc.im), power(1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
      power *= zc;
      part_p += p.coeff(k) * power.real();
      part_q += p.coeff(k) * power.imag();
      class_scale += norm(p.coeff(k)) * std::abs(power);
    }
    class_scale += 1.0;

    if (norm(part_q) > kRecoverSplitTol * class_scale) {
      const Quaternion u = -(inverse(part_q) * part_p);
      const double vn = vec_norm(u);
      if (std::abs(u.w) <= kUnitPureTol && std::abs(norm(u) - 1.0) <= kUnitPureTol && vn > 0.0) {
        const Quaternion unit(0.0, u.x / vn, u.y / vn, u.z / vn);
        rec.kind = ZeroKind::Isolated;
        rec.value = Quaternion(rc.re, rc.im * unit.x, rc.im * unit.y, rc.im * unit.z);
        rec.residual = norm(p.evaluate(rec.value));
        rec.ok = rec.residual <= residual_gate(p, norm(rec.value));
        if (!rec.ok) rec.note = "isolated-zero residual above tolerance";
      } else {
        rec.kind = ZeroKind::Isolated;
        rec.value = Quaternion(rc.re, rc.im, 0.0, 0.0);
        rec.residual = norm(p.evaluate(rec.value));
        rec.ok = false;
        rec.note = "unit pure imaginary recovery failed";
      }
    } else if (norm(part_p) <= kRecoverSplitTol * class_scale) {
      rec.kind = ZeroKind::Spherical;
      rec.residual = spherical_residual(p, rc.re, rc.im);
      rec.ok = rec.residual <= residual_gate(p, std::hypot(rc.re, rc.im));
      if (!rec.ok) rec.note = "spherical-class residual above tolerance";
    } else {
      rec.kind = ZeroKind::Isolated;
      rec.value = Quaternion(rc.re, rc.im, 0.0, 0.0);
      rec.residual = norm(p.evaluate(rec.value));
      rec.ok = false;
      rec.note = "class recovery inconsistent (P nonzero while Q vanishes)";
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

void sort_records(std::vector<ZeroRecord>& recs) {
  std::sort(recs.begin(), recs.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (a.cls.real_part != b.cls.real_part) return a.cls.real_part < b.cls.real_part;
    if (a.cls.imag_norm != b.cls.imag_norm) return a.cls.imag_norm < b.cls.imag_norm;
    if (a.kind != b.kind) return a.kind == ZeroKind::Isolated;
    if (a.value.x != b.value.x) return a.value.x < b.value.x;
    if (a.value.y != b.value.y) return a.value.y < b.value.y;
    return a.value.z < b.value.z;
  });
}

}  // namespace

std::vector<ZeroRecord> find_zeros(const QPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("find_zeros requires degree >= 1");
  const QPolynomial monic = p.is_monic() ? p : normalize_monic(p);
  const bool mirrored = monic.side() == CoeffSide::Right;
  const QPolynomial work = mirrored ? mirror_convention(monic) : monic;

  const ComplexRootsResult cr = complex_roots(companion_polynomial(work));
  std::vector<ZeroRecord> recs = recover_zeros(work, cr);
  if (!cr.converged)
    for (ZeroRecord& r : recs) {
      r.ok = false;
      r.note = r.note.empty() ? "root iteration did not fully converge"
                              : r.note + "; root iteration did not fully converge";
    }

  // Report residuals against the caller's convention (zeros of a right-side
  // polynomial are the conjugates of the mirrored left-side zeros; classes
  // are conjugation invariant).
  for (ZeroRecord& r : recs) {
    if (r.kind == ZeroKind::Isolated) {
      if (mirrored) r.value = conjugate(r.value);
      r.residual = norm(monic.evaluate(r.value));
    } else {
      r.residual = spherical_residual(monic, r.cls.real_part, r.cls.imag_norm);
    }
    const double gate = residual_gate(
        monic, r.kind == ZeroKind::Isolated ? norm(r.value)
                                            : std::hypot(r.cls.real_part, r.cls.imag_norm));
    if (r.ok && r.residual > gate) {
      r.ok = false;
      r.note = "residual above tolerance";
    }
  }
  sort_records(recs);
  return recs;
}

namespace detail {

std::vector<double> solve_cubic_real(double c2, double c1, double c0) {
  // Depressed form t^3 + p t + q with x = t - c2/3; both the trigonometric
  // and the Cardano branch are emitted near the discriminant sign change and
  // a Newton polish tightens every candidate.
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  const double scale = std::abs(p) + std::abs(q) + 1.0;

  std::vector<double> ts;
  if (disc >= -1e-12 * scale * scale) {
    const double root = std::sqrt(std::max(disc, 0.0));
    ts.push_back(std::cbrt(-0.5 * q + root) + std::cbrt(-0.5 * q - root));
    if (p != 0.0) {
      // double-root pair of the boundary case
      ts.push_back(3.0 * q / p);
      ts.push_back(-1.5 * q / p);
    }
  }
  if (disc <= 1e-12 * scale * scale && p < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) ts.push_back(m * std::cos(theta - 2.0 * M_PI * k / 3.0));
  }
  if (ts.empty()) ts.push_back(0.0);

  std::vector<double> out;
  for (double t : ts) {
    double x = t - c2 / 3.0;
    for (int it = 0; it < 8; ++it) {
      const double fx = ((x + c2) * x + c1) * x + c0;
      const double dfx = (3.0 * x + 2.0 * c2) * x + c1;
      if (dfx == 0.0) break;
      const double step = fx / dfx;
      x -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    if (std::isfinite(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

namespace {

// Residual gate for quadratic candidates; grows with the candidate scale so
// large, well-conditioned zeros are not rejected for rounding alone.
double quad_res_tol(const Quaternion& b, const Quaternion& c, const Quaternion& z) {
  const double nz = norm(z);
  return 1e-9 * (1.0 + nz * nz + norm(b) * nz + norm(c));
}

}  // namespace

std::vector<ZeroRecord> solve_quadratic(const Quaternion& b, const Quaternion& c) {
  assert(b.is_finite() && c.is_finite());
  std::vector<ZeroRecord> out;
  const QPolynomial poly({c, b, Quaternion::one()}, CoeffSide::Left);

  if (b.is_real() && c.is_real()) {
    const double disc = b.w * b.w - 4.0 * c.w;
    if (disc > 0.0) {
      const double root = std::sqrt(disc);
      for (double v : {(-b.w - root) / 2.0, (-b.w + root) / 2.0}) {
        ZeroRecord rec;
        rec.kind = ZeroKind::Isolated;
        rec.value = Quaternion(v);
        rec.cls = similarity_invariants(rec.value);
        rec.residual = norm(poly.evaluate(rec.value));
        out.push_back(std::move(rec));
      }
    } else if (disc == 0.0) {
      ZeroRecord rec;
      rec.kind = ZeroKind::Isolated;
      rec.value = Quaternion(-b.w / 2.0);
      rec.cls = similarity_invariants(rec.value);
      rec.residual = norm(poly.evaluate(rec.value));
      rec.class_multiplicity = 2;
      out.push_back(std::move(rec));
    } else {
      ZeroRecord rec;
      rec.kind = ZeroKind::Spherical;
      rec.cls = {-b.w / 2.0, std::sqrt(-disc) / 2.0};
      rec.residual = spherical_residual(poly, rec.cls.real_part, rec.cls.imag_norm);
      out.push_back(std::move(rec));
    }
    sort_records(out);
    return out;
  }

  // Every solution satisfies (T + b) z = N - c with T = 2 Re z, N = |z|^2,
  // and the consistency of (T, N) reduces to a real cubic in x = (T + b_0)^2.
  const double b0 = b.w;
  const double beta2 = b.x * b.x + b.y * b.y + b.z * b.z;
  const double c0 = c.w;
  const double gamma2 = c.x * c.x + c.y * c.y + c.z * c.z;
  const double d1 = b.x * c.x + b.y * c.y + b.z * c.z;
  const double b02 = b0 * b0;

  const double a2 = 2.0 * beta2 - b02 + 4.0 * c0;
  const double a1 = beta2 * beta2 - 2.0 * b02 * beta2 + 4.0 * c0 * beta2 + 4.0 * b0 * d1 - 4.0 * gamma2;
  const double a0 = -b02 * beta2 * beta2 + 4.0 * b0 * d1 * beta2 - 4.0 * d1 * d1;

  const double xscale = 1.0 + beta2 + std::abs(a2) + std::sqrt(std::abs(a1)) + std::cbrt(std::abs(a0));

  std::vector<std::pair<double, double>> tn;  // (T, N) candidates
  for (double x : detail::solve_cubic_real(a2, a1, a0)) {
    if (x < -1e-7 * xscale) continue;
    x = std::max(x, 0.0);
    const double m = x + beta2;
    if (x > 1e-12 * xscale) {
      const double s = std::sqrt(x);
      for (double sv : {s, -s}) {
        const double w = ((sv - b0) * m + 2.0 * d1) / (2.0 * sv);
        tn.emplace_back(sv - b0, w + c0);
      }
    }
    if (x <= 1e-6 * xscale) {
      // s = 0 branch: the first consistency equation degenerates and N comes
      // from the quadratic in W directly.
      if (std::abs(b0 * m - 2.0 * d1) <= 1e-6 * (1.0 + std::abs(b0) * m + 2.0 * std::abs(d1))) {
        const double disc2 = m * m - 4.0 * (gamma2 - c0 * m);
        if (disc2 >= -1e-9 * (1.0 + m * m + gamma2)) {
          const double sq = std::sqrt(std::max(disc2, 0.0));
          tn.emplace_back(-b0, (m + sq) / 2.0 + c0);
          tn.emplace_back(-b0, (m - sq) / 2.0 + c0);
        }
      }
    }
  }

  struct Candidate {
    Quaternion z;
    double residual;
  };
  std::vector<Candidate> pool;
  Candidate best{Quaternion::zero(), std::numeric_limits<double>::infinity()};
  for (const auto& [t, n_raw] : tn) {
    if (n_raw < -1e-9 * (1.0 + norm(c))) continue;
    const double n = std::max(n_raw, 0.0);
    const Quaternion den = Quaternion(t) + b;
    if (norm(den) <= 1e-12 * (1.0 + std::abs(t) + norm(b))) continue;
    const Quaternion z = inverse(den) * (Quaternion(n) - c);
    const double res = norm(poly.evaluate(z));
    if (res < best.residual) best = {z, res};
    if (res <= quad_res_tol(b, c, z)) pool.push_back({z, res});
  }

  std::vector<Candidate> unique;
  for (const Candidate& cand : pool) {
    bool dup = false;
    for (Candidate& kept : unique)
      if (approx_equal(kept.z, cand.z, 1e-8 * (1.0 + norm(cand.z)))) {
        if (cand.residual < kept.residual) kept = cand;
        dup = true;
        break;
      }
    if (!dup) unique.push_back(cand);
  }

  if (unique.empty() && std::isfinite(best.residual)) {
    ZeroRecord rec;
    rec.kind = ZeroKind::Isolated;
    rec.value = best.z;
    rec.cls = similarity_invariants(best.z);
    rec.residual = best.residual;
    rec.ok = false;
    rec.note = "no candidate met the residual tolerance";
    out.push_back(std::move(rec));
    sort_records(out);
    return out;
  }

  for (const Candidate& cand : unique) {
    ZeroRecord rec;
    rec.kind = ZeroKind::Isolated;
    rec.value = cand.z;
    rec.cls = similarity_invariants(cand.z);
    rec.residual = cand.residual;
    rec.class_multiplicity = unique.size() == 1 ? 2 : 1;
    out.push_back(std::move(rec));
  }
  sort_records(out);
  return out;
}

}  // namespace quatloc
