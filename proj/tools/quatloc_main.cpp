#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatloc/bounds.hpp"
#include "quatloc/companion.hpp"
#include "quatloc/gershgorin.hpp"
#include "quatloc/polyio.hpp"
#include "quatloc/roots.hpp"
#include "quatloc/verify.hpp"

namespace {

using namespace quatloc;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void parse_degrees(const std::string& text, int& lo, int& hi) {
  const size_t pos = text.find("..");
  if (pos == std::string::npos) {
    lo = hi = std::stoi(text);
    return;
  }
  lo = std::stoi(text.substr(0, pos));
  hi = std::stoi(text.substr(pos + 2));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<BoundMethod> parse_methods_or_throw(const std::vector<std::string>& names) {
  std::vector<BoundMethod> out;
  for (const std::string& name : names) {
    const auto m = parse_method(name);
    if (!m) throw std::invalid_argument("unknown method '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

int cmd_bounds(const std::string& input, const std::string& methods_csv, const std::string& out_path,
               bool dump_matrix) {
  QPolynomial poly = read_polynomial_file(input);
  if (poly.degree() < 1) throw std::invalid_argument("degree >= 1 required");
  if (!poly.is_monic()) {
    poly = normalize_monic(poly);
    std::cout << "note: input normalized to monic form\n";
  }

  if (dump_matrix) {
    const CompanionKind kind =
        poly.side() == CoeffSide::Left ? CompanionKind::Cf : CompanionKind::Cg;
    const QMatrix companion = build_companion(poly, kind);
    std::cout << "companion matrix (" << (poly.side() == CoeffSide::Left ? "C_f" : "C_g")
              << "):\n"
              << render_matrix(companion) << "gershgorin balls:\n";
    for (const Ball& b : gershgorin_balls(companion).balls)
      std::cout << "center=" << to_string(b.center) << " radius=" << fmt_double(b.radius) << "\n";
  }

  const std::vector<BoundMethod> methods = parse_methods_or_throw(split_csv(methods_csv));
  const std::vector<BoundResult> results = all_bounds(poly, {}, methods);

  std::printf("%-14s %-18s %-22s %-11s %s\n", "method", "params", "radius", "applicable", "note");
  for (const BoundResult& r : results)
    std::printf("%-14s %-18s %-22.17g %-11s %s\n", std::string(method_name(r.method)).c_str(),
                r.params.c_str(), r.radius, r.applicable ? "yes" : "no", r.note.c_str());

  if (!out_path.empty()) {
    std::ostringstream csv;
    csv << "degree,method,params,radius,applicable,note\n";
    for (const BoundResult& r : results)
      csv << poly.degree() << ',' << method_name(r.method) << ',' << r.params << ','
          << fmt_double(r.radius) << ',' << (r.applicable ? 1 : 0) << ',' << r.note << '\n';
    write_file(out_path, csv.str());
  }
  return kExitOk;
}

int cmd_roots(const std::string& input) {
  const QPolynomial poly = read_polynomial_file(input);
  if (poly.degree() < 1) throw std::invalid_argument("degree >= 1 required");
  const std::vector<ZeroRecord> records = find_zeros(poly);
  bool any_ok = false;
  for (const ZeroRecord& rec : records) {
    if (!rec.ok) {
      std::cerr << "warning: " << rec.note << "\n";
      continue;
    }
    any_ok = true;
    if (rec.kind == ZeroKind::Isolated)
      std::cout << "isolated " << fmt_double(rec.value.w) << ' ' << fmt_double(rec.value.x) << ' '
                << fmt_double(rec.value.y) << ' ' << fmt_double(rec.value.z) << ' '
                << fmt_double(rec.residual) << '\n';
    else
      std::cout << "spherical " << fmt_double(rec.cls.real_part) << ' '
                << fmt_double(rec.cls.imag_norm) << ' ' << fmt_double(rec.residual) << '\n';
  }
  if (!any_ok) {
    std::cerr << "error: no zero converged\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_verify(const BenchConfig& cfg) {
  const SweepResult result = run_sweep(cfg);
  std::cout << verify_report(cfg, result);
  if (!cfg.output_path.empty()) write_file(cfg.output_path, sweep_csv(result, false));
  return result.violations() > 0 ? kExitViolation : kExitOk;
}

int cmd_bench(const BenchConfig& cfg) {
  const SweepResult result = run_sweep(cfg);
  const std::string path = cfg.output_path.empty() ? "bench.csv" : cfg.output_path;
  write_file(path, sweep_csv(result, true));
  std::cout << "bench: " << result.rows.size() << " rows -> " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inclusion balls and zero sets of unilateral quaternionic polynomials"};
  app.require_subcommand(1);

  std::string input, methods_csv, out_path, degrees = "2..8";
  bool dump_matrix = false;
  BenchConfig cfg;

  CLI::App* bounds = app.add_subcommand("bounds", "zero-inclusion radii for a polynomial file");
  bounds->add_option("--input", input, "polynomial file")->required();
  bounds->add_option("--methods", methods_csv, "comma list (default: all)");
  bounds->add_option("--out", out_path, "CSV output path");
  bounds->add_flag("--dump-matrix", dump_matrix, "print the companion matrix");

  CLI::App* roots = app.add_subcommand("roots", "zero set via the root oracle");
  roots->add_option("--input", input, "polynomial file")->required();

  auto add_sweep_options = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--samples", cfg.samples, "number of random polynomials");
    cmd->add_option("--degrees", degrees, "degree range A..B");
    cmd->add_option("--scale", cfg.coeff_scale, "coefficient component scale");
    cmd->add_option("--methods", methods_csv, "comma list incl. gershgorin (default: all)");
    cmd->add_option("--out", out_path, "CSV output path");
  };
  CLI::App* verify = app.add_subcommand("verify", "containment check on random polynomials");
  add_sweep_options(verify);
  CLI::App* bench = app.add_subcommand("bench", "per-sample slack CSV on random polynomials");
  add_sweep_options(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(input, methods_csv, out_path, dump_matrix);
    if (roots->parsed()) return cmd_roots(input);
    parse_degrees(degrees, cfg.degree_min, cfg.degree_max);
    cfg.methods = split_csv(methods_csv);
    cfg.output_path = out_path;
    cfg.validate();
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_bench(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
