#include "quatloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "quatloc/companion.hpp"
#include "quatloc/gershgorin.hpp"
#include "quatloc/polyio.hpp"
#include "quatloc/roots.hpp"

namespace quatloc {

void BenchConfig::validate() const {
  if (degree_min < 1 || degree_max > 64 || degree_min > degree_max)
    throw std::invalid_argument("degree range must sit inside [1, 64]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(coeff_scale > 0.0) || !std::isfinite(coeff_scale))
    throw std::invalid_argument("scale must be positive");
  for (const std::string& m : methods)
    if (m != "gershgorin" && !parse_method(m))
      throw std::invalid_argument("unknown method '" + m + "'");
}

QPolynomial sample_polynomial(uint64_t seed, int index, int degree_min, int degree_max,
                              double scale) {
  SplitMix64 rng(sample_stream_seed(seed, static_cast<uint64_t>(index)));
  const int span = degree_max - degree_min + 1;
  const int n = degree_min + static_cast<int>(rng.below(static_cast<uint64_t>(span)));
  const CoeffSide side = index % 2 == 0 ? CoeffSide::Left : CoeffSide::Right;
  const bool lacunary = index % 3 != 0;

  auto draw = [&rng, scale] {
    return Quaternion(rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                      rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  };

  std::vector<Quaternion> coeffs(static_cast<size_t>(n) + 1);
  coeffs.back() = Quaternion::one();
  if (lacunary) {
    const int r = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    for (int k = 0; k <= r; ++k) coeffs[static_cast<size_t>(k)] = draw();
    if (coeffs[static_cast<size_t>(r)].is_zero()) coeffs[static_cast<size_t>(r)] = Quaternion(scale);
  } else {
    for (int k = 0; k < n; ++k) coeffs[static_cast<size_t>(k)] = draw();
  }
  return {std::move(coeffs), side};
}

long SweepResult::violations() const {
  long v = 0;
  for (const auto& [name, stats] : per_method) v += stats.violations;
  return v;
}

namespace {

struct ZeroPoint {
  bool spherical = false;
  Quaternion value;    // isolated
  SimilarityClass cls; // spherical
  double norm_value = 0.0;
};

std::string describe_zero(const ZeroPoint& z) {
  if (z.spherical) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "class(%.17g,%.17g)", z.cls.real_part, z.cls.imag_norm);
    return buf;
  }
  return to_string(z.value, 17);
}

// Membership with the per-ball containment tolerance; returns the largest
// positive excess when the point escapes every ball.
bool union_contains(const BallUnion& u, const Quaternion& q, double* excess) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Ball& b : u.balls) {
    const double gap = norm(q - b.center) - b.radius - containment_tol(b.radius);
    if (gap <= 0.0) return true;
    worst = std::min(worst, gap);
  }
  if (excess) *excess = worst;
  return false;
}

class StatsSink {
 public:
  explicit StatsSink(SweepResult& result) : result_(result) {}

  void row(int sample, const QPolynomial& poly, const std::string& method, double radius,
           double max_zero_norm) {
    result_.rows.push_back({sample, poly.degree(), poly.side(), method, radius, max_zero_norm,
                            radius - max_zero_norm});
  }

  void check(const QPolynomial& poly, const std::string& method, double slack, double tol,
             const std::string& zero_text) {
    MethodStats& s = result_.per_method[method];
    ++s.checked;
    if (!s.any) {
      s.min_slack = s.max_slack = slack;
      s.any = true;
    } else {
      s.min_slack = std::min(s.min_slack, slack);
      s.max_slack = std::max(s.max_slack, slack);
    }
    if (slack < -tol) {
      ++s.violations;
      result_.failures.push_back({polynomial_digest(poly), method, zero_text, -slack});
    }
  }

  void failure(const QPolynomial& poly, const std::string& method, const std::string& zero_text,
               double excess) {
    MethodStats& s = result_.per_method[method];
    ++s.checked;
    ++s.violations;
    result_.failures.push_back({polynomial_digest(poly), method, zero_text, excess});
  }

 private:
  SweepResult& result_;
};

bool method_enabled(const BenchConfig& cfg, const std::string& base) {
  if (cfg.methods.empty()) return true;
  return std::find(cfg.methods.begin(), cfg.methods.end(), base) != cfg.methods.end();
}

std::string bound_tag(const BoundResult& r) {
  std::string tag(method_name(r.method));
  if (r.method == BoundMethod::Weighted && r.params == "alpha=|a_i|") tag = "weighted_coeff";
  return tag;
}

}  // namespace

SweepResult run_sweep(const BenchConfig& cfg) {
  cfg.validate();
  SweepResult result;
  StatsSink sink(result);

  for (int sample = 0; sample < cfg.samples; ++sample) {
    const QPolynomial poly =
        sample_polynomial(cfg.seed, sample, cfg.degree_min, cfg.degree_max, cfg.coeff_scale);
    SplitMix64 aux(sample_stream_seed(cfg.seed ^ 0x5bd1e995u, static_cast<uint64_t>(sample)));

    std::vector<ZeroPoint> zeros;
    double max_zero_norm = 0.0;
    for (const ZeroRecord& rec : find_zeros(poly)) {
      if (!rec.ok) {
        sink.failure(poly, "oracle", rec.note, rec.residual);
        continue;
      }
      ZeroPoint z;
      z.spherical = rec.kind == ZeroKind::Spherical;
      z.value = rec.value;
      z.cls = rec.cls;
      z.norm_value = z.spherical ? std::hypot(rec.cls.real_part, rec.cls.imag_norm)
                                 : norm(rec.value);
      max_zero_norm = std::max(max_zero_norm, z.norm_value);
      zeros.push_back(std::move(z));
    }
    if (zeros.empty()) {
      sink.failure(poly, "oracle", "no usable zero records", 0.0);
      continue;
    }

    // Default-preset bounds plus one random weighted / fujiwara preset.
    std::vector<std::pair<std::string, BoundResult>> bound_rows;
    for (BoundResult& r : all_bounds(poly)) {
      if (!r.applicable) continue;
      bound_rows.emplace_back(bound_tag(r), std::move(r));
    }
    const int n = poly.degree();
    const QPolynomial* right = nullptr;
    const QPolynomial* left = nullptr;
    QPolynomial mirrored = mirror_convention(poly);
    if (poly.side() == CoeffSide::Right) {
      right = &poly;
      left = &mirrored;
    } else {
      left = &poly;
      right = &mirrored;
    }
    {
      std::vector<double> alpha(static_cast<size_t>(n - 1));
      for (double& a : alpha) a = std::exp(aux.uniform(-std::log(4.0), std::log(4.0)));
      BoundResult r = weighted_bound(*right, alpha);
      bound_rows.emplace_back("weighted_rand", std::move(r));

      std::vector<double> lambda(static_cast<size_t>(n));
      double total = 0.0;
      for (double& l : lambda) {
        l = aux.uniform(0.05, 1.0);
        total += l;
      }
      for (double& l : lambda) l /= total;
      BoundResult f = fujiwara_bound(*left, lambda);
      bound_rows.emplace_back("fujiwara_rand", std::move(f));
    }

    for (const auto& [tag, r] : bound_rows) {
      const std::string base = std::string(method_name(r.method));
      if (!method_enabled(cfg, base)) continue;
      sink.row(sample, poly, tag, r.radius, max_zero_norm);
      const double tol = containment_tol(r.radius);
      for (const ZeroPoint& z : zeros)
        sink.check(poly, tag, r.radius - z.norm_value, tol, describe_zero(z));
    }

    if (method_enabled(cfg, "gershgorin")) {
      const CompanionKind kind = poly.side() == CoeffSide::Left ? CompanionKind::Cp
                                                                : CompanionKind::Ch;
      const QMatrix companion = build_companion(poly, kind);
      for (int t = 0; t < 3; ++t) {
        std::vector<double> diag(static_cast<size_t>(n));
        for (double& dv : diag) dv = std::exp(aux.uniform(-std::log(4.0), std::log(4.0)));
        const BallUnion u = gershgorin_balls(diagonal_similarity(companion, diag));
        const double enclosing = enclosing_radius(u);
        sink.row(sample, poly, "gershgorin", enclosing, max_zero_norm);
        for (const ZeroPoint& z : zeros) {
          bool inside = true;
          double excess = 0.0;
          if (z.spherical) {
            for (const Quaternion& dir : spherical_probe_directions()) {
              const Quaternion point(z.cls.real_part, z.cls.imag_norm * dir.x,
                                     z.cls.imag_norm * dir.y, z.cls.imag_norm * dir.z);
              double e = 0.0;
              if (!union_contains(u, point, &e)) {
                inside = false;
                excess = std::max(excess, e);
              }
            }
          } else {
            inside = union_contains(u, z.value, &excess);
          }
          if (inside)
            sink.check(poly, "gershgorin", enclosing - z.norm_value, containment_tol(enclosing),
                       describe_zero(z));
          else
            sink.failure(poly, "gershgorin", describe_zero(z), excess);
        }
      }
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result, bool with_summary) {
  std::ostringstream out;
  out << "sample,degree,side,method,radius,maxZeroNorm,slack\n";
  for (const SweepRow& r : result.rows)
    out << r.sample << ',' << r.degree << ',' << side_name(r.side) << ',' << r.method << ','
        << fmt_double(r.radius) << ',' << fmt_double(r.max_zero_norm) << ','
        << fmt_double(r.slack) << '\n';
  if (with_summary) {
    std::map<std::string, std::vector<double>> slacks;
    for (const SweepRow& r : result.rows) slacks[r.method].push_back(r.slack);
    for (auto& [method, values] : slacks) {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      std::sort(values.begin(), values.end());
      const size_t half = values.size() / 2;
      const double median = values.size() % 2 == 1
                                ? values[half]
                                : 0.5 * (values[half - 1] + values[half]);
      out << "mean,0,all," << method << ",0,0," << fmt_double(mean) << '\n';
      out << "median,0,all," << method << ",0,0," << fmt_double(median) << '\n';
    }
  }
  return out.str();
}

std::string verify_report(const BenchConfig& cfg, const SweepResult& result) {
  std::ostringstream out;
  out << "verify: seed=" << cfg.seed << " degrees=" << cfg.degree_min << ".." << cfg.degree_max
      << " samples=" << cfg.samples << " scale=" << cfg.coeff_scale << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %10s %10s %14s %14s\n", "method", "checked",
                "violations", "minSlack", "maxSlack");
  out << line;
  for (const auto& [method, s] : result.per_method) {
    std::snprintf(line, sizeof(line), "%-16s %10ld %10ld %14.6g %14.6g\n", method.c_str(),
                  s.checked, s.violations, s.any ? s.min_slack : 0.0, s.any ? s.max_slack : 0.0);
    out << line;
  }
  out << "total violations: " << result.violations() << "\n";
  for (const Failure& f : result.failures)
    out << "failure: poly=" << f.digest << " method=" << f.method << " zero=" << f.zero
        << " excess=" << fmt_double(f.excess) << "\n";
  return out.str();
}

}  // namespace quatloc
