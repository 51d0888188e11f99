#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmeans/cli.hpp"

namespace {

using opmeans::cli::Range;
using opmeans::cli::RunConfig;

std::optional<Range> to_range(const std::vector<double>& raw) {
  if (raw.empty()) return std::nullopt;
  return Range{raw[0], raw[1], static_cast<int>(raw[2])};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted operator means: bound constants and Loewner-order certification"};
  app.require_subcommand(1);

  RunConfig cfg;
  double v = 0.0;
  double s = 0.0;
  double t = 0.0;
  std::vector<double> v_range;
  std::vector<double> h_range;
  std::vector<std::string> perturb;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol_rel, "Relative Loewner tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format: json or csv")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed of the random stream")->capture_default_str();
    sub->add_option("--v", v, "Weight v (values outside [0,1] use the extended catalog)");
    sub->add_option("--v-range", v_range, "START END STEPS")->expected(3);
  };
  auto add_matrices = [&](CLI::App* sub) {
    sub->add_option("--matrix-a", cfg.matrix_a, "JSON matrix file for A");
    sub->add_option("--matrix-b", cfg.matrix_b, "JSON matrix file for B");
    sub->add_option("--s", s, "Supplied lower sandwich scalar (validated)");
    sub->add_option("--t", t, "Supplied upper sandwich scalar (validated)");
    sub->add_option("--perturb", perturb, "NAME=FACTOR: scale a catalog constant (fault injection)");
  };

  auto* check = app.add_subcommand("check", "Certify every applicable bound for (A, B, v)");
  add_common(check);
  add_matrices(check);
  auto* sweep = app.add_subcommand("sweep", "Certify across a range of weights (CSV)");
  add_common(sweep);
  add_matrices(sweep);
  auto* random = app.add_subcommand("random", "Certify regime-controlled random instances");
  add_common(random);
  random->add_option("--dim", cfg.dim, "Matrix dimension")->capture_default_str();
  random->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
  random->add_option("--regime", cfg.regime, "below, above, straddle or extended")->capture_default_str();
  auto* compare = app.add_subcommand("compare", "Tabulate literature constants against f_v");
  add_common(compare);
  compare->add_option("--h-range", h_range, "START END STEPS (log-spaced)")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : opmeans::cli::kInputError;
  }

  auto* active = app.get_subcommands().front();
  if (active->count("--v")) cfg.v = v;
  if (active->count("--v-range")) cfg.v_range = to_range(v_range);
  if (active == compare && active->count("--h-range")) cfg.h_range = to_range(h_range);
  if (active == check || active == sweep) {
    if (active->count("--s")) cfg.s = s;
    if (active->count("--t")) cfg.t = t;
    for (const auto& p : perturb) {
      const auto eq = p.find('=');
      try {
        if (eq == std::string::npos) throw std::invalid_argument(p);
        cfg.perturb[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
      } catch (const std::exception&) {
        std::cerr << "input error: --perturb expects NAME=FACTOR, got '" << p << "'\n";
        return opmeans::cli::kInputError;
      }
    }
  }
  if (active == sweep && !active->count("--format")) cfg.format = "csv";
  std::cerr << "seed: " << cfg.seed << '\n';

  if (active == check) return opmeans::cli::cmd_check(cfg, std::cout, std::cerr);
  if (active == sweep) return opmeans::cli::cmd_sweep(cfg, std::cout, std::cerr);
  if (active == random) return opmeans::cli::cmd_random(cfg, std::cout, std::cerr);
  return opmeans::cli::cmd_compare(cfg, std::cout, std::cerr);
}
