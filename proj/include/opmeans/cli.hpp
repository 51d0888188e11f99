#pragma once

// Command implementations behind the opmeans executable. Each command writes its
// primary output to `out`, diagnostics to `err`, and returns the process exit code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "opmeans/certifier.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/matrix_file.hpp"
#include "opmeans/random.hpp"
#include "opmeans/report_io.hpp"
#include "opmeans/sandwich.hpp"

namespace opmeans::cli {

enum ExitCode : int { kPass = 0, kBoundFailure = 1, kInputError = 2, kNumericalFailure = 3 };

struct Range {
  double start = 0.0;
  double end = 0.0;
  int steps = 1;
};

struct RunConfig {
  double tol_rel = kDefaultLoewnerTolerance;
  std::optional<double> v;
  std::optional<Range> v_range;
  std::optional<Range> h_range;
  std::string matrix_a;
  std::string matrix_b;
  std::optional<double> s;  // user-supplied sandwich, validated against the matrices
  std::optional<double> t;
  std::string format = "json";  // "json" or "csv"
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t dim = 4;
  std::size_t count = 100;
  std::string regime = "above";
  std::map<std::string, double> perturb;  // bound name -> factor applied to its constant
};

namespace detail {

inline void validate_config(const RunConfig& cfg) {
  if (!(cfg.tol_rel > 0.0) || !std::isfinite(cfg.tol_rel))
    throw InputError("--tol must be a positive finite number");
  if (cfg.format != "json" && cfg.format != "csv")
    throw InputError("--format must be 'json' or 'csv', got '" + cfg.format + "'");
  if (cfg.s.has_value() != cfg.t.has_value()) throw InputError("--s and --t must be given together");
}

inline void validate_range(const Range& r, const char* flag) {
  if (!std::isfinite(r.start) || !std::isfinite(r.end) || r.start > r.end || r.steps < 1)
    throw InputError(std::string(flag) + ": need START <= END and STEPS >= 1");
  if (r.steps == 1 && r.start != r.end)
    throw InputError(std::string(flag) + ": a single step needs START == END");
}

inline std::vector<double> linear_points(const Range& r) {
  if (r.steps == 1) return {r.start};
  std::vector<double> pts(static_cast<std::size_t>(r.steps));
  for (int i = 0; i < r.steps; ++i)
    pts[static_cast<std::size_t>(i)] =
        i == r.steps - 1 ? r.end : r.start + (r.end - r.start) * i / (r.steps - 1);
  return pts;
}

inline std::vector<double> log_points(const Range& r) {
  if (r.steps == 1) return {r.start};
  std::vector<double> pts(static_cast<std::size_t>(r.steps));
  const double a = std::log(r.start);
  const double b = std::log(r.end);
  for (int i = 0; i < r.steps; ++i)
    pts[static_cast<std::size_t>(i)] =
        i == 0 ? r.start : (i == r.steps - 1 ? r.end : std::exp(a + (b - a) * i / (r.steps - 1)));
  return pts;
}

// Runs `body` with the output stream chosen by --out.
inline void with_output(const RunConfig& cfg, std::ostream& out,
                        const std::function<void(std::ostream&)>& body) {
  if (cfg.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw InputError(cfg.out_path + ": cannot open output file");
  body(file);
}

// Maps the error taxonomy onto exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

struct LoadedPair {
  SymPDMatrix A;
  SymPDMatrix B;
};

inline SymPDMatrix load_pd(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  const Matrix X = load_matrix_file(path);
  try {
    return SymPDMatrix::from(X);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const NumericalFailure& e) {
    throw NumericalFailure(path + ": " + e.what());
  }
}

inline LoadedPair load_pair(const RunConfig& cfg) {
  SymPDMatrix A = load_pd(cfg.matrix_a, "--matrix-a");
  SymPDMatrix B = load_pd(cfg.matrix_b, "--matrix-b");
  if (A.dim() != B.dim())
    throw InputError("matrix dimensions differ: " + cfg.matrix_a + " is " +
                     std::to_string(A.dim()) + ", " + cfg.matrix_b + " is " +
                     std::to_string(B.dim()));
  return {std::move(A), std::move(B)};
}

inline CertReport run_certification(const RunConfig& cfg, const SymPDMatrix& A,
                                    const SymPDMatrix& B, double v) {
  CertInstance inst = describe(A, B, v);
  if (cfg.s) inst.sandwich = validate_sandwich(A, B, *cfg.s, *cfg.t, cfg.tol_rel);
  std::vector<BoundStatement> bounds = catalog(inst);
  for (const auto& [name, factor] : cfg.perturb) {
    auto it = std::find_if(bounds.begin(), bounds.end(),
                           [&](const BoundStatement& b) { return b.name == name; });
    if (it == bounds.end()) throw InputError("--perturb: unknown bound '" + name + "'");
    it->constant *= factor;
  }
  return verify(A, B, inst, bounds, cfg.tol_rel);
}

inline std::string catalog_note(double v) {
  return (v >= 0.0 && v <= 1.0) ? "standard catalog (v in [0,1])"
                                 : "extended catalog (v outside [0,1]): reversed chain bounds";
}

inline nlohmann::json header(const char* command, const RunConfig& cfg) {
  return {{"command", command}, {"seed", cfg.seed}, {"tol_rel", cfg.tol_rel}};
}

inline void report_failures(const CertReport& r, std::ostream& err) {
  for (const auto& b : r.bounds)
    if (b.verdict && !b.verdict->holds)
      err << (b.statement.origin == BoundOrigin::Literature ? "finding: " : "FAILED: ")
          << "bound " << b.statement.name << " (v=" << r.instance.v
          << ") min_eig=" << b.verdict->min_eig << '\n';
}

}  // namespace detail

// check: sandwich -> catalog -> verify for one (A, B, v).
inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::validate_config(cfg);
    if (!cfg.v) throw InputError("--v is required for check");
    const auto pair = detail::load_pair(cfg);
    const CertReport report = detail::run_certification(cfg, pair.A, pair.B, *cfg.v);
    detail::report_failures(report, err);
    detail::with_output(cfg, out, [&](std::ostream& os) {
      if (cfg.format == "csv") {
        write_csv(os, {report});
      } else {
        nlohmann::json doc;
        doc["header"] = detail::header("check", cfg);
        doc["header"]["matrix_a"] = cfg.matrix_a;
        doc["header"]["matrix_b"] = cfg.matrix_b;
        doc["header"]["catalog"] = detail::catalog_note(*cfg.v);
        doc["report"] = to_json(report);
        os << doc.dump(2) << '\n';
      }
    });
    return report.overall_pass ? kPass : kBoundFailure;
  });
}

// sweep: one certification per v in the range; CSV rows in range order.
inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::validate_config(cfg);
    Range range;
    if (cfg.v_range) range = *cfg.v_range;
    else if (cfg.v) range = {*cfg.v, *cfg.v, 1};
    else throw InputError("--v-range (or --v) is required for sweep");
    detail::validate_range(range, "--v-range");
    const auto pair = detail::load_pair(cfg);
    std::vector<CertReport> reports;
    bool pass = true;
    for (double v : detail::linear_points(range)) {
      reports.push_back(detail::run_certification(cfg, pair.A, pair.B, v));
      detail::report_failures(reports.back(), err);
      pass = pass && reports.back().overall_pass;
    }
    detail::with_output(cfg, out, [&](std::ostream& os) {
      if (cfg.format == "json") {
        nlohmann::json doc;
        doc["header"] = detail::header("sweep", cfg);
        doc["reports"] = nlohmann::json::array();
        for (const auto& r : reports) doc["reports"].push_back(to_json(r));
        os << doc.dump(2) << '\n';
      } else {
        write_csv(os, reports);
      }
    });
    return pass ? kPass : kBoundFailure;
  });
}

struct RandomSummary {
  std::uint64_t seed = 0;
  std::string regime;
  std::size_t dim = 0;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t findings = 0;
  std::optional<double> worst_normalized_gap;
  std::string worst_bound;
};

// random: regime-controlled generated instances, each certified over the weight list.
inline int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::validate_config(cfg);
    const bool extended = cfg.regime == "extended";
    std::optional<Regime> fixed;
    if (!extended) fixed = regime_from_string(cfg.regime);
    std::vector<double> weights;
    if (cfg.v) weights = {*cfg.v};
    else if (cfg.v_range) {
      detail::validate_range(*cfg.v_range, "--v-range");
      weights = detail::linear_points(*cfg.v_range);
    } else if (extended) weights = {-0.5, 1.5, 2.0};
    else weights = {0.1, 0.25, 0.5, 0.75, 0.9};
    if (extended)
      for (double v : weights)
        if (v >= 0.0 && v <= 1.0)
          throw InputError("regime 'extended' needs weights outside [0,1], got " + std::to_string(v));
    if (cfg.dim < 1 || cfg.dim > kMaxDim) throw InputError("--dim must lie in [1, 512]");
    if (cfg.dim == 1 && fixed == Regime::Straddle)
      throw InputError("regime 'straddle' needs --dim >= 2");

    RandomSummary sum;
    sum.seed = cfg.seed;
    sum.regime = cfg.regime;
    sum.dim = cfg.dim;
    for (std::size_t i = 0; i < cfg.count; ++i) {
      SplitMix64 rng(derive_seed(cfg.seed, i));
      Regime regime = fixed ? *fixed : static_cast<Regime>(rng() % 3);
      if (cfg.dim == 1 && regime == Regime::Straddle) regime = Regime::Above;
      auto [s0, t0] = sample_sandwich(regime, rng);
      if (cfg.dim == 1) t0 = s0;
      const InstancePair pair = gen_instance(cfg.dim, s0, t0, rng());
      ++sum.instances;
      for (double v : weights) {
        const CertReport r = detail::run_certification(cfg, pair.A, pair.B, v);
        ++sum.checks;
        if (!r.overall_pass) {
          ++sum.failures;
          err << "instance " << i << ":\n";
          detail::report_failures(r, err);
        }
        sum.findings += r.findings.size();
        for (const auto& b : r.bounds) {
          if (!b.verdict || b.statement.origin == BoundOrigin::Literature) continue;
          if (!sum.worst_normalized_gap || b.verdict->normalized_gap < *sum.worst_normalized_gap) {
            sum.worst_normalized_gap = b.verdict->normalized_gap;
            sum.worst_bound = b.statement.name;
          }
        }
      }
    }
    detail::with_output(cfg, out, [&](std::ostream& os) {
      if (cfg.format == "csv") {
        os << "seed,regime,dim,instances,checks,failures,findings,worst_normalized_gap,worst_bound\n"
           << sum.seed << ',' << sum.regime << ',' << sum.dim << ',' << sum.instances << ','
           << sum.checks << ',' << sum.failures << ',' << sum.findings << ','
           << (sum.worst_normalized_gap ? format_number(*sum.worst_normalized_gap) : "") << ','
           << sum.worst_bound << '\n';
      } else {
        nlohmann::json doc;
        doc["header"] = detail::header("random", cfg);
        doc["header"]["catalog"] = detail::catalog_note(weights.front());
        doc["summary"] = {{"regime", sum.regime},
                          {"dim", sum.dim},
                          {"weights", weights},
                          {"instances", sum.instances},
                          {"checks", sum.checks},
                          {"failures", sum.failures},
                          {"findings", sum.findings},
                          {"worst_bound", sum.worst_bound}};
        doc["summary"]["worst_normalized_gap"] =
            sum.worst_normalized_gap ? nlohmann::json(*sum.worst_normalized_gap) : nlohmann::json(nullptr);
        os << doc.dump(2) << '\n';
      }
    });
    return sum.failures == 0 ? kPass : kBoundFailure;
  });
}

struct CompareSummary {
  std::size_t points = 0;
  std::size_t hierarchy_violations = 0;  // specht > zuo or zuo > f
  std::size_t dragomir_below_zuo = 0;
  std::size_t dragomir_above_zuo = 0;
  bool dragomir_incomparable() const { return dragomir_below_zuo > 0 && dragomir_above_zuo > 0; }
};

inline CompareSummary summarize(const std::vector<ConstantComparison>& rows) {
  CompareSummary s;
  for (const auto& r : rows) {
    ++s.points;
    if (!r.specht_le_zuo || !r.zuo_le_f) ++s.hierarchy_violations;
    if (r.dragomir_vs_zuo < 0) ++s.dragomir_below_zuo;
    if (r.dragomir_vs_zuo > 0) ++s.dragomir_above_zuo;
  }
  return s;
}

inline std::vector<ConstantComparison> comparison_grid(const Range& h, const Range& v) {
  std::vector<ConstantComparison> rows;
  for (double hv : detail::log_points(h))
    for (double vv : detail::linear_points(v)) rows.push_back(compare_constants(hv, vv));
  return rows;
}

// compare: literature constants against f_v over an (h, v) grid. h is log-spaced.
inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::validate_config(cfg);
    const Range h = cfg.h_range.value_or(Range{1.001, 100.0, 200});
    const Range v = cfg.v_range ? *cfg.v_range
                                : (cfg.v ? Range{*cfg.v, *cfg.v, 1} : Range{0.05, 0.95, 19});
    detail::validate_range(h, "--h-range");
    detail::validate_range(v, "--v-range");
    if (!(h.start >= 1.0)) throw InputError("--h-range: h must be >= 1");
    if (!(v.start >= 0.0 && v.end <= 1.0)) throw InputError("--v-range: v must lie in [0,1]");
    const auto rows = comparison_grid(h, v);
    const CompareSummary sum = summarize(rows);
    detail::with_output(cfg, out, [&](std::ostream& os) {
      if (cfg.format == "csv") {
        os << "h,v,f,zuo,specht,dragomir,specht_le_zuo,zuo_le_f,dragomir_vs_zuo\n";
        for (const auto& r : rows)
          os << format_number(r.h) << ',' << format_number(r.v) << ',' << format_number(r.f) << ','
             << format_number(r.zuo) << ',' << format_number(r.specht) << ','
             << format_number(r.dragomir) << ',' << r.specht_le_zuo << ',' << r.zuo_le_f << ','
             << r.dragomir_vs_zuo << '\n';
      } else {
        nlohmann::json doc;
        doc["header"] = detail::header("compare", cfg);
        doc["rows"] = nlohmann::json::array();
        for (const auto& r : rows) doc["rows"].push_back(to_json(r));
        doc["summary"] = {{"points", sum.points},
                          {"hierarchy_violations", sum.hierarchy_violations},
                          {"dragomir_below_zuo", sum.dragomir_below_zuo},
                          {"dragomir_above_zuo", sum.dragomir_above_zuo},
                          {"dragomir_incomparable", sum.dragomir_incomparable()}};
        os << doc.dump(2) << '\n';
      }
    });
    err << "compare: " << sum.points << " points, " << sum.hierarchy_violations
        << " hierarchy violations, dragomir<zuo at " << sum.dragomir_below_zuo
        << ", dragomir>zuo at " << sum.dragomir_above_zuo << '\n';
    return sum.hierarchy_violations == 0 ? kPass : kBoundFailure;
  });
}

}  // namespace opmeans::cli
