#pragma once

// CertReport <-> JSON, and the flat CSV schema shared by check --format csv and sweep.

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opmeans/certifier.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/sandwich.hpp"

namespace opmeans {

using nlohmann::json;

namespace detail {

// Non-finite values (overflowing constants) are written as the strings "inf", "-inf", "nan".
inline json number_to_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

inline double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw InputError("report: expected a number, got '" + s + "'");
}

template <typename Enum, std::size_t N>
Enum enum_from_string(std::string_view s, const std::array<Enum, N>& values, const char* what) {
  for (Enum e : values)
    if (to_string(e) == s) return e;
  throw InputError(std::string("report: unknown ") + what + " '" + std::string(s) + "'");
}

}  // namespace detail

inline json to_json(const CertInstance& inst) {
  json j;
  j["dim"] = inst.dim;
  j["v"] = inst.v;
  j["weight_domain"] = (inst.v >= 0.0 && inst.v <= 1.0) ? "unit" : "extended";
  j["s"] = inst.sandwich.s;
  j["t"] = inst.sandwich.t;
  j["regime"] = to_string(inst.sandwich.regime);
  j["tight"] = inst.sandwich.tight;
  j["tie"] = inst.sandwich.tie;
  if (inst.uniform_box) {
    const auto& u = *inst.uniform_box;
    j["uniform_box"] = {{"m", u.m}, {"M", u.M}, {"h", u.h}, {"degenerate", u.degenerate}};
  } else {
    j["uniform_box"] = nullptr;
  }
  if (inst.spectral_box) {
    const auto& b = inst.spectral_box->box;
    j["spectral_box"] = {{"m_outer", b.m_outer},
                         {"m_inner", b.m_inner},
                         {"M_inner", b.M_inner},
                         {"M_outer", b.M_outer},
                         {"case", to_string(inst.spectral_box->which)}};
  } else {
    j["spectral_box"] = nullptr;
  }
  return j;
}

inline CertInstance instance_from_json(const json& j) {
  CertInstance inst;
  inst.dim = j.at("dim").get<std::size_t>();
  inst.v = j.at("v").get<double>();
  inst.sandwich.s = j.at("s").get<double>();
  inst.sandwich.t = j.at("t").get<double>();
  inst.sandwich.regime = regime_from_string(j.at("regime").get<std::string>());
  inst.sandwich.tight = j.at("tight").get<bool>();
  inst.sandwich.tie = j.at("tie").get<bool>();
  if (const auto& u = j.at("uniform_box"); !u.is_null())
    inst.uniform_box = UniformBox{u.at("m").get<double>(), u.at("M").get<double>(),
                                  u.at("h").get<double>(), u.at("degenerate").get<bool>()};
  if (const auto& b = j.at("spectral_box"); !b.is_null()) {
    BoxHypothesis hyp;
    hyp.box = SpectralBox{b.at("m_outer").get<double>(), b.at("m_inner").get<double>(),
                          b.at("M_inner").get<double>(), b.at("M_outer").get<double>()};
    hyp.which = detail::enum_from_string(b.at("case").get<std::string>(),
                                         std::array{BoxCase::ABelowB, BoxCase::BBelowA}, "box case");
    inst.spectral_box = hyp;
  }
  return inst;
}

inline json to_json(const CertifiedBound& cb) {
  const auto& b = cb.statement;
  json j;
  j["name"] = b.name;
  j["form"] = to_string(b.form);
  j["side"] = to_string(b.side);
  j["relation"] = to_string(b.relation);
  j["constant"] = detail::number_to_json(b.constant);
  j["reference"] = to_string(b.reference);
  j["applicable"] = b.applicable;
  j["reason"] = b.applicability_reason;
  j["anchor"] = b.anchor;
  j["origin"] = to_string(b.origin);
  if (cb.verdict)
    j["verdict"] = {{"holds", cb.verdict->holds},
                    {"min_eig", cb.verdict->min_eig},
                    {"normalized_gap", cb.verdict->normalized_gap}};
  else
    j["verdict"] = nullptr;
  return j;
}

inline CertifiedBound bound_from_json(const json& j) {
  CertifiedBound cb;
  auto& b = cb.statement;
  b.name = j.at("name").get<std::string>();
  b.form = detail::enum_from_string(j.at("form").get<std::string>(),
                                    std::array{BoundForm::Multiplicative, BoundForm::Additive}, "form");
  b.side = detail::enum_from_string(j.at("side").get<std::string>(),
                                    std::array{BoundSide::Lower, BoundSide::Upper}, "side");
  b.relation = detail::enum_from_string(
      j.at("relation").get<std::string>(),
      std::array{BoundRelation::NablaVsSharp, BoundRelation::HarmVsSharp,
                 BoundRelation::SharpVsNablaExtended},
      "relation");
  b.constant = detail::number_from_json(j.at("constant"));
  b.reference = detail::enum_from_string(j.at("reference").get<std::string>(),
                                         std::array{ReferenceMatrix::A, ReferenceMatrix::I}, "reference");
  b.applicable = j.at("applicable").get<bool>();
  b.applicability_reason = j.at("reason").get<std::string>();
  b.anchor = j.at("anchor").get<std::string>();
  b.origin = detail::enum_from_string(
      j.at("origin").get<std::string>(),
      std::array{BoundOrigin::Core, BoundOrigin::Derived, BoundOrigin::Literature}, "origin");
  if (const auto& v = j.at("verdict"); !v.is_null())
    cb.verdict = Verdict{v.at("holds").get<bool>(), v.at("min_eig").get<double>(),
                         v.at("normalized_gap").get<double>()};
  return cb;
}

inline json to_json(const ConstantComparison& row) {
  return {{"h", row.h},
          {"v", row.v},
          {"f", detail::number_to_json(row.f)},
          {"zuo", detail::number_to_json(row.zuo)},
          {"specht", detail::number_to_json(row.specht)},
          {"dragomir", detail::number_to_json(row.dragomir)},
          {"specht_le_zuo", row.specht_le_zuo},
          {"zuo_le_f", row.zuo_le_f},
          {"dragomir_vs_zuo", row.dragomir_vs_zuo}};
}

inline ConstantComparison comparison_from_json(const json& j) {
  ConstantComparison row;
  row.h = j.at("h").get<double>();
  row.v = j.at("v").get<double>();
  row.f = detail::number_from_json(j.at("f"));
  row.zuo = detail::number_from_json(j.at("zuo"));
  row.specht = detail::number_from_json(j.at("specht"));
  row.dragomir = detail::number_from_json(j.at("dragomir"));
  row.specht_le_zuo = j.at("specht_le_zuo").get<bool>();
  row.zuo_le_f = j.at("zuo_le_f").get<bool>();
  row.dragomir_vs_zuo = j.at("dragomir_vs_zuo").get<int>();
  return row;
}

inline json to_json(const CertReport& report) {
  json j;
  j["instance"] = to_json(report.instance);
  j["tol_rel"] = report.tol_rel;
  j["bounds"] = json::array();
  for (const auto& b : report.bounds) j["bounds"].push_back(to_json(b));
  j["literature"] = json::array();
  for (const auto& row : report.literature) j["literature"].push_back(to_json(row));
  j["findings"] = report.findings;
  j["overall_pass"] = report.overall_pass;
  return j;
}

inline CertReport report_from_json(const json& j) {
  try {
    CertReport r;
    r.instance = instance_from_json(j.at("instance"));
    r.tol_rel = j.at("tol_rel").get<double>();
    for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_from_json(b));
    for (const auto& row : j.at("literature")) r.literature.push_back(comparison_from_json(row));
    r.findings = j.at("findings").get<std::vector<std::string>>();
    r.overall_pass = j.at("overall_pass").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("report: malformed: ") + e.what());
  }
}

inline std::string emit_report(const CertReport& report) { return to_json(report).dump(2); }

inline CertReport parse_report(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("report: malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV: '.' decimal separator, 17 significant digits, locale independent.

inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

inline std::vector<std::string> csv_header(const CertReport& report) {
  std::vector<std::string> cols{"v", "s", "t", "regime"};
  for (const auto& b : report.bounds) {
    cols.push_back(b.statement.name + ".constant");
    cols.push_back(b.statement.name + ".min_eig");
  }
  cols.push_back("overall_pass");
  return cols;
}

inline std::vector<std::string> csv_row(const CertReport& report) {
  std::vector<std::string> cells{format_number(report.instance.v),
                                 format_number(report.instance.sandwich.s),
                                 format_number(report.instance.sandwich.t),
                                 std::string(to_string(report.instance.sandwich.regime))};
  for (const auto& b : report.bounds) {
    if (b.statement.applicable && b.verdict) {
      cells.push_back(format_number(b.statement.constant));
      cells.push_back(format_number(b.verdict->min_eig));
    } else {
      cells.emplace_back();
      cells.emplace_back();
    }
  }
  cells.emplace_back(report.overall_pass ? "1" : "0");
  return cells;
}

inline void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<CertReport>& reports) {
  if (reports.empty()) return;
  write_csv_line(out, csv_header(reports.front()));
  for (const auto& r : reports) write_csv_line(out, csv_row(r));
}

}  // namespace opmeans
