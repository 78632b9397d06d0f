#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatloc/bounds.hpp"
#include "quatloc/qpolynomial.hpp"

namespace quatloc {

/// Deterministic 64-bit generator (splitmix64). Every sample of the sweep
/// derives its own stream from (seed, sample index), so results do not
/// depend on evaluation order.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t s) : state(s) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline uint64_t sample_stream_seed(uint64_t seed, uint64_t index) {
  SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return mixer.next();
}

struct BenchConfig {
  int degree_min = 2;
  int degree_max = 8;
  int samples = 100;
  double coeff_scale = 5.0;
  uint64_t seed = 0;
  std::vector<std::string> methods;  // base names; empty means all
  std::string output_path;           // empty means no CSV file
  void validate() const;
};

/// Random monic polynomial for the sweep: sides alternate with the index,
/// every third sample is free-form, the rest are lacunary by construction
/// (pick r, zero the higher interior coefficients, keep a_r nonzero).
QPolynomial sample_polynomial(uint64_t seed, int index, int degree_min, int degree_max,
                              double scale);

struct MethodStats {
  long checked = 0;
  long violations = 0;
  double min_slack = 0.0;
  double max_slack = 0.0;
  bool any = false;
};

struct Failure {
  std::string digest;  // polynomial identity
  std::string method;
  std::string zero;
  double excess = 0.0;
};

struct SweepRow {
  int sample = 0;
  int degree = 0;
  CoeffSide side = CoeffSide::Left;
  std::string method;
  double radius = 0.0;
  double max_zero_norm = 0.0;
  double slack = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::map<std::string, MethodStats> per_method;
  std::vector<Failure> failures;
  long violations() const;
};

/// Containment tolerance used throughout the sweep.
inline double containment_tol(double radius) { return 1e-9 * (1.0 + radius); }

/// Runs the sweep: per sample, the oracle zero set, every applicable bound
/// (default presets plus one random weighted/fujiwara preset), and the
/// Gershgorin union of the companion matrix under 3 random positive
/// diagonal similarities. Single-threaded and fully determined by the
/// config.
SweepResult run_sweep(const BenchConfig& cfg);

/// CSV serialization: header `sample,degree,side,method,radius,maxZeroNorm,
/// slack`, one row per applicable check; with_summary appends mean/median
/// slack rows per method.
std::string sweep_csv(const SweepResult& result, bool with_summary);

/// Human-readable per-method table plus the failure list.
std::string verify_report(const BenchConfig& cfg, const SweepResult& result);

}  // namespace quatloc
