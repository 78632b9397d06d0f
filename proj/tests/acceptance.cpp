// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 4 and 9 drive the installed CLI binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quatloc/bounds.hpp"
#include "quatloc/gershgorin.hpp"
#include "quatloc/polyio.hpp"
#include "quatloc/roots.hpp"
#include "quatloc/verify.hpp"

using namespace quatloc;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
const Quaternion ONE = Quaternion::one();
const Quaternion ZERO = Quaternion::zero();

QPolynomial example_left() { return {{K, -(I + J), ONE}, CoeffSide::Left}; }

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

void run(int idx, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(idx, what, ok, detail);
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CommandResult run_cli(const std::string& args, const std::string& tag) {
  const std::filesystem::path out =
      std::filesystem::temp_directory_path() / ("quatloc_acceptance_" + tag + ".out");
  const std::string cmd = std::string(QUATLOC_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(cmd.c_str());
  const auto stop = std::chrono::steady_clock::now();
  CommandResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.seconds = std::chrono::duration<double>(stop - start).count();
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Quaternion random_quat(SplitMix64& rng, double scale) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
          rng.uniform(-scale, scale)};
}

}  // namespace

int main() {
  run(1, "exact evaluation and factorization of q^2-(i+j)q+k", [](std::string& detail) {
    const QPolynomial p = example_left();
    const Quaternion at_i = p.evaluate(I);
    const Quaternion expect = 2.0 * K;
    if (!(at_i.w == expect.w && at_i.x == expect.x && at_i.y == expect.y && at_i.z == expect.z)) {
      detail = "evaluate(p, i) != 2k exactly: got " + to_string(at_i, 17);
      return false;
    }
    const QPolynomial prod =
        multiply(QPolynomial({-I, ONE}, CoeffSide::Left), QPolynomial({-J, ONE}, CoeffSide::Left));
    for (int k = 0; k <= 2; ++k)
      if (!approx_equal(prod.coeff(k), p.coeff(k), 0.0)) {
        detail = "(q-i)(q-j) coefficient " + std::to_string(k) + " mismatch";
        return false;
      }
    return true;
  });

  run(2, "oracle uniqueness for q^2-(i+j)q+k within 10 ms", [](std::string& detail) {
    const QPolynomial p = example_left();
    const auto start = std::chrono::steady_clock::now();
    const RealPolynomial f = companion_polynomial(p);
    const std::vector<ZeroRecord> recs = find_zeros(p);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const double expect[] = {1.0, 0.0, 2.0, 0.0, 1.0};
    for (int m = 0; m <= 4; ++m)
      if (std::abs(f.coeffs[static_cast<size_t>(m)] - expect[m]) > 1e-12) {
        detail = "companion polynomial coefficient " + std::to_string(m) + " off";
        return false;
      }
    if (recs.size() != 1 || recs[0].kind != ZeroKind::Isolated) {
      detail = "expected exactly one isolated record, got " + std::to_string(recs.size());
      return false;
    }
    if (!approx_equal(recs[0].value, J, 1e-10)) {
      detail = "zero not within 1e-10 of j: " + to_string(recs[0].value, 17);
      return false;
    }
    if (recs[0].residual > 1e-12) {
      detail = "residual " + fmt_double(recs[0].residual) + " > 1e-12";
      return false;
    }
    if (ms > 10.0) {
      detail = "runtime " + fmt_double(ms) + " ms > 10 ms";
      return false;
    }
    detail = "zero=" + to_string(recs[0].value, 6) + " residual=" + fmt_double(recs[0].residual) +
             " runtime=" + fmt_double(ms) + "ms";
    return true;
  });

  run(3, "spherical detection for q^2+1", [](std::string& detail) {
    const QPolynomial p({ONE, ZERO, ONE}, CoeffSide::Left);
    const std::vector<ZeroRecord> recs = find_zeros(p);
    if (recs.size() != 1 || recs[0].kind != ZeroKind::Spherical) {
      detail = "expected exactly one spherical record";
      return false;
    }
    if (std::abs(recs[0].cls.real_part) > 1e-10 || std::abs(recs[0].cls.imag_norm - 1.0) > 1e-10) {
      detail = "class not within 1e-10 of (0,1)";
      return false;
    }
    for (const Quaternion& dir : spherical_probe_directions()) {
      const Quaternion point(recs[0].cls.real_part, recs[0].cls.imag_norm * dir.x,
                             recs[0].cls.imag_norm * dir.y, recs[0].cls.imag_norm * dir.z);
      const double res = norm(p.evaluate(point));
      if (res > 1e-12) {
        detail = "probe residual " + fmt_double(res) + " > 1e-12";
        return false;
      }
    }
    return true;
  });

  const std::string sweep_args = "verify --seed 42 --degrees 2..8 --samples 1000 --scale 5";
  run(4, "soundness sweep (seed 42, degrees 2..8, 1000 samples, scale 5)",
      [&](std::string& detail) {
        const CommandResult r = run_cli(sweep_args + " --out " +
                                            (std::filesystem::temp_directory_path() /
                                             "quatloc_acceptance_sweep1.csv")
                                                .string(),
                                        "sweep1");
        if (r.exit_code != 0) {
          detail = "exit code " + std::to_string(r.exit_code) + "\n" + r.output;
          return false;
        }
        if (r.output.find("total violations: 0") == std::string::npos) {
          detail = "violations reported:\n" + r.output;
          return false;
        }
        if (r.seconds > 60.0) {
          detail = "runtime " + fmt_double(r.seconds) + " s > 60 s";
          return false;
        }
        detail = "0 violations in " + fmt_double(r.seconds) + " s";
        return true;
      });

  run(5, "unit-weight bound coincides with the Cauchy bound (100 random right polynomials)",
      [](std::string& detail) {
        for (int it = 0; it < 100; ++it) {
          const QPolynomial g = sample_polynomial(515, 2 * it + 1, 1, 8, 5.0);  // odd => right
          const std::vector<double> ones(static_cast<size_t>(g.degree() - 1), 1.0);
          const double w = weighted_bound(g, ones).radius;
          const double c = cauchy_bound(g).radius;
          if (std::abs(w - c) > 1e-12) {
            detail = "mismatch at sample " + std::to_string(it) + ": " + fmt_double(w) + " vs " +
                     fmt_double(c);
            return false;
          }
        }
        return true;
      });

  run(6, "lacunary max bound dominates the sum bound (200 random, 1 <= r < n-1)",
      [](std::string& detail) {
        SplitMix64 rng(616);
        int strict_checked = 0;
        for (int it = 0; it < 200; ++it) {
          const int n = 3 + static_cast<int>(rng.below(8));
          const int r = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 2)));
          std::vector<Quaternion> coeffs(static_cast<size_t>(n) + 1);
          for (int k = 0; k <= r; ++k) coeffs[static_cast<size_t>(k)] = random_quat(rng, 5.0);
          if (coeffs[static_cast<size_t>(r)].is_zero())
            coeffs[static_cast<size_t>(r)] = Quaternion(5.0);
          coeffs.back() = ONE;
          const QPolynomial h(coeffs, CoeffSide::Right);
          const double max_radius = lacunary_max_bound(h).radius;
          const double sum_radius = lacunary_sum_bound(mirror_convention(h)).radius;
          if (max_radius > sum_radius * (1.0 + 1e-15)) {
            detail = "dominance violated at sample " + std::to_string(it);
            return false;
          }
          double peak = 0.0;
          for (int k = 0; k <= r; ++k)
            peak = std::max(peak, norm(coeffs[static_cast<size_t>(k)]));
          const double lambda = std::pow(peak, 1.0 / n);
          if (r >= 2 && lambda >= 1e-6) {
            ++strict_checked;
            if (!(max_radius < sum_radius)) {
              detail = "strict dominance violated at sample " + std::to_string(it);
              return false;
            }
          }
        }
        detail = std::to_string(strict_checked) + " strict cases checked";
        return strict_checked > 0;
      });

  run(7, "2x2 Gershgorin containment and quadratic cross-check", [](std::string& detail) {
    SplitMix64 rng(717);
    for (int it = 0; it < 200; ++it) {
      QMatrix m(2);
      m.set(0, 0, random_quat(rng, 5.0));
      m.set(0, 1, random_quat(rng, 5.0));
      m.set(1, 0, random_quat(rng, 5.0));
      m.set(1, 1, random_quat(rng, 5.0));
      const BallUnion u = gershgorin_balls(m);
      const Eigen2x2 eig = left_eigenvalues_2x2(m);
      for (const Quaternion& lambda : eig.isolated)
        if (!u.contains(lambda, 1e-9)) {
          detail = "eigenvalue escaped the ball union at sample " + std::to_string(it);
          return false;
        }
      if (eig.family)
        for (const Quaternion& dir : spherical_probe_directions())
          if (!u.contains(eig.family->sample(dir), 1e-9)) {
            detail = "family member escaped the ball union at sample " + std::to_string(it);
            return false;
          }
    }
    for (int it = 0; it < 100; ++it) {
      const Quaternion a0 = random_quat(rng, 4.0);
      const Quaternion a1 = random_quat(rng, 4.0);
      QMatrix cf(2);
      cf.set(0, 1, ONE);
      cf.set(1, 0, -a0);
      cf.set(1, 1, -a1);
      const Eigen2x2 eig = left_eigenvalues_2x2(cf);
      std::vector<Quaternion> expect;
      for (const ZeroRecord& rec : solve_quadratic(a1, a0)) {
        if (rec.kind != ZeroKind::Isolated) continue;
        expect.push_back(rec.value);
      }
      if (eig.isolated.size() != expect.size()) {
        detail = "set size mismatch vs solve_quadratic at sample " + std::to_string(it);
        return false;
      }
      std::vector<bool> used(expect.size(), false);
      for (const Quaternion& lambda : eig.isolated) {
        bool found = false;
        for (size_t i = 0; i < expect.size(); ++i)
          if (!used[i] && approx_equal(lambda, expect[i], 1e-8)) {
            used[i] = found = true;
            break;
          }
        if (!found) {
          detail = "eigenvalue without matching quadratic zero at sample " + std::to_string(it);
          return false;
        }
      }
    }
    return true;
  });

  run(8, "worked radii: cauchy, fujiwara, lacunary sum and max", [](std::string& detail) {
    const double c = cauchy_bound(example_left()).radius;
    if (std::abs(c - (1.0 + std::sqrt(2.0))) > 1e-12) {
      detail = "cauchy " + fmt_double(c);
      return false;
    }
    const double f = fujiwara_bound(example_left(), std::vector<double>{0.5, 0.5}).radius;
    if (std::abs(f - 2.0 * std::sqrt(2.0)) > 1e-12) {
      detail = "fujiwara " + fmt_double(f);
      return false;
    }
    const QPolynomial cubic({Quaternion(8), Quaternion(8), ZERO, ONE}, CoeffSide::Left);
    const double ls = lacunary_sum_bound(cubic).radius;
    if (std::abs(ls - 6.0) > 1e-12) {
      detail = "lacunary sum " + fmt_double(ls);
      return false;
    }
    const QPolynomial quintic({ZERO, ZERO, Quaternion(32), ZERO, ZERO, ONE}, CoeffSide::Right);
    const double lm = lacunary_max_bound(quintic).radius;
    if (std::abs(lm - 10.0) > 1e-12) {
      detail = "lacunary max " + fmt_double(lm);
      return false;
    }
    return true;
  });

  run(9, "byte-identical CSV across two sweep runs", [&](std::string& detail) {
    const std::string csv1 =
        (std::filesystem::temp_directory_path() / "quatloc_acceptance_det1.csv").string();
    const std::string csv2 =
        (std::filesystem::temp_directory_path() / "quatloc_acceptance_det2.csv").string();
    const CommandResult r1 = run_cli(sweep_args + " --out " + csv1, "det1");
    const CommandResult r2 = run_cli(sweep_args + " --out " + csv2, "det2");
    if (r1.exit_code != 0 || r2.exit_code != 0) {
      detail = "nonzero exit";
      return false;
    }
    const std::string a = read_file(csv1);
    const std::string b = read_file(csv2);
    if (a.empty() || a != b) {
      detail = "CSV outputs differ or are empty";
      return false;
    }
    detail = std::to_string(a.size()) + " bytes identical";
    return true;
  });

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
