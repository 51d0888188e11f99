#pragma once

// Bound catalog, numerical Loewner-order certification, literature constant
// comparison, and the seeded instance generators that drive the ensembles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opmeans/eigen_kernel.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/matrix.hpp"
#include "opmeans/operator_means.hpp"
#include "opmeans/random.hpp"
#include "opmeans/sandwich.hpp"
#include "opmeans/scalar_bounds.hpp"

namespace opmeans {

enum class BoundForm { Multiplicative, Additive };
enum class BoundSide { Lower, Upper };

// What is compared with what:
//   NablaVsSharp          A nabla_v B  vs  c A#_vB      (additive: A nabla_v B - A#_vB vs k Ref)
//   HarmVsSharp           A !_v B      vs  c A#_vB
//   SharpVsNablaExtended  A#_vB        vs  c A nabla_v B (additive: A#_vB - A nabla_v B vs k Ref)
enum class BoundRelation { NablaVsSharp, HarmVsSharp, SharpVsNablaExtended };

enum class ReferenceMatrix { A, I };

// Core: sharp results of the theory. Derived: completes the catalog by the same
// monotonicity argument. Literature: earlier constants, hypotheses assumed.
enum class BoundOrigin { Core, Derived, Literature };

inline std::string_view to_string(BoundForm f) {
  return f == BoundForm::Multiplicative ? "multiplicative" : "additive";
}
inline std::string_view to_string(BoundSide s) { return s == BoundSide::Lower ? "lower" : "upper"; }
inline std::string_view to_string(BoundRelation r) {
  switch (r) {
    case BoundRelation::NablaVsSharp: return "nabla_vs_sharp";
    case BoundRelation::HarmVsSharp: return "harm_vs_sharp";
    case BoundRelation::SharpVsNablaExtended: return "sharp_vs_nabla_extended";
  }
  return "?";
}
inline std::string_view to_string(ReferenceMatrix r) { return r == ReferenceMatrix::A ? "A" : "I"; }
inline std::string_view to_string(BoundOrigin o) {
  switch (o) {
    case BoundOrigin::Core: return "core";
    case BoundOrigin::Derived: return "derived";
    case BoundOrigin::Literature: return "literature";
  }
  return "?";
}

struct BoundStatement {
  std::string name;
  BoundForm form = BoundForm::Multiplicative;
  BoundSide side = BoundSide::Lower;
  BoundRelation relation = BoundRelation::NablaVsSharp;
  double constant = 0.0;
  ReferenceMatrix reference = ReferenceMatrix::A;
  bool applicable = false;
  std::string applicability_reason;
  std::string anchor;  // the inequality being certified, written out
  BoundOrigin origin = BoundOrigin::Core;

  friend bool operator==(const BoundStatement&, const BoundStatement&) = default;
};

struct Verdict {
  bool holds = false;
  double min_eig = 0.0;         // smallest eigenvalue of the residual matrix
  double normalized_gap = 0.0;  // min_eig / ||residual argument||_F

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CertifiedBound {
  BoundStatement statement;
  std::optional<Verdict> verdict;  // empty for inapplicable bounds

  friend bool operator==(const CertifiedBound&, const CertifiedBound&) = default;
};

struct ConstantComparison {
  double h = 1.0;
  double v = 0.5;
  double f = 1.0;
  double zuo = 1.0;
  double specht = 1.0;
  double dragomir = 1.0;
  bool specht_le_zuo = true;
  bool zuo_le_f = true;
  int dragomir_vs_zuo = 0;  // sign of dragomir - zuo

  friend bool operator==(const ConstantComparison&, const ConstantComparison&) = default;
};

struct CertInstance {
  std::size_t dim = 0;
  double v = 0.5;
  SandwichInterval sandwich;
  std::optional<UniformBox> uniform_box;
  std::optional<BoxHypothesis> spectral_box;

  friend bool operator==(const CertInstance&, const CertInstance&) = default;
};

struct CertReport {
  CertInstance instance;
  double tol_rel = kDefaultLoewnerTolerance;
  std::vector<CertifiedBound> bounds;
  std::vector<ConstantComparison> literature;
  std::vector<std::string> findings;  // literature bounds that failed numerically
  bool overall_pass = false;

  const CertifiedBound* find(std::string_view name) const {
    for (const auto& b : bounds)
      if (b.statement.name == name) return &b;
    return nullptr;
  }

  friend bool operator==(const CertReport&, const CertReport&) = default;
};

inline constexpr double kComparisonSlack = 1e-12;

// f_v(h), K(h,2)^r, S(h^r) and the Dragomir constant at a common h >= 1, v in [0,1].
inline ConstantComparison compare_constants(double h, double v) {
  if (!(h >= 1.0) || !std::isfinite(h)) throw DomainError("compare_constants: need h >= 1");
  detail::require_unit(v, "compare_constants");
  ConstantComparison row;
  row.h = h;
  row.v = v;
  row.f = f_v(h, v);
  row.zuo = zuo_constant(h, v);
  row.specht = specht_constant(h, v);
  row.dragomir = dragomir_constant(h, v);
  row.specht_le_zuo = row.specht <= row.zuo + kComparisonSlack;
  row.zuo_le_f = row.zuo <= row.f + kComparisonSlack;
  row.dragomir_vs_zuo = row.dragomir > row.zuo ? 1 : (row.dragomir < row.zuo ? -1 : 0);
  return row;
}

namespace detail {

struct CatalogBuilder {
  std::deque<BoundStatement> out;  // stable references while entries are filled in

  BoundStatement& add(std::string name, BoundForm form, BoundSide side, BoundRelation rel,
                      BoundOrigin origin, std::string anchor) {
    BoundStatement b;
    b.name = std::move(name);
    b.form = form;
    b.side = side;
    b.relation = rel;
    b.origin = origin;
    b.anchor = std::move(anchor);
    b.applicable = false;
    out.push_back(std::move(b));
    return out.back();
  }
};

inline void set_applicable(BoundStatement& b, double constant) {
  b.constant = constant;
  if (!std::isfinite(constant)) {
    b.applicable = false;
    b.applicability_reason = "constant overflows (bound is vacuous)";
    return;
  }
  b.applicable = true;
  b.applicability_reason = "applicable";
}

inline void set_inapplicable(BoundStatement& b, std::string reason) {
  b.applicable = false;
  b.constant = 0.0;
  b.applicability_reason = std::move(reason);
}

// Coefficients (lo, hi) with lo A <= A nabla_v B - A#_vB <= hi A for v outside [0,1],
// from concavity of g_v (maximum g_v(1) = 0, monotone on each side of 1).
inline std::pair<double, double> extended_gap_coefficients(const SandwichInterval& sw, double v) {
  const double gs = g_v(sw.s, v);
  const double gt = g_v(sw.t, v);
  switch (sw.regime) {
    case Regime::Above: return {gt, gs};
    case Regime::Below: return {gs, gt};
    case Regime::Straddle: return {std::min(gs, gt), 0.0};
  }
  return {std::min(gs, gt), 0.0};
}

}  // namespace detail

// Every bound the catalog knows, with applicability decided for this (s, t, v).
// Entry order is fixed; report and CSV layouts rely on it.
inline std::vector<BoundStatement> catalog(const SandwichInterval& sw,
                                           const std::optional<UniformBox>& ubox, double v,
                                           const std::optional<BoxHypothesis>& sbox = std::nullopt) {
  detail::require_finite(v, "catalog", "v");
  using enum BoundForm;
  using enum BoundSide;
  using enum BoundRelation;
  using enum BoundOrigin;

  const bool unit = v >= 0.0 && v <= 1.0;
  const bool below = sw.regime == Regime::Below;
  const bool above = sw.regime == Regime::Above;
  const bool straddle = sw.regime == Regime::Straddle;
  const char* kUnitOnly = "weight outside [0,1]";
  const char* kExtOnly = "weight inside [0,1]";
  const char* kOneSided = "requires regime below (t <= 1) or above (s >= 1)";

  detail::CatalogBuilder cb;
  const double s = sw.s;
  const double t = sw.t;

  auto& young = cb.add("young.classical", Multiplicative, Lower, NablaVsSharp, Core,
                       "A#_vB <= A nabla_v B");
  unit ? detail::set_applicable(young, 1.0) : detail::set_inapplicable(young, kUnitOnly);

  auto& young_h = cb.add("young.harmonic", Multiplicative, Upper, HarmVsSharp, Core,
                         "A !_v B <= A#_vB");
  unit ? detail::set_applicable(young_h, 1.0) : detail::set_inapplicable(young_h, kUnitOnly);

  auto& t1lo = cb.add("thm1.lower", Multiplicative, Lower, NablaVsSharp, Core,
                      "below: f_v(t) A#_vB <= A nabla_v B; above: f_v(s) A#_vB <= A nabla_v B");
  auto& t1hi = cb.add("thm1.upper", Multiplicative, Upper, NablaVsSharp, Core,
                      "below: A nabla_v B <= f_v(s) A#_vB; above: A nabla_v B <= f_v(t) A#_vB");
  if (!unit) {
    detail::set_inapplicable(t1lo, kUnitOnly);
    detail::set_inapplicable(t1hi, kUnitOnly);
  } else if (straddle) {
    detail::set_inapplicable(t1lo, kOneSided);
    detail::set_inapplicable(t1hi, kOneSided);
  } else {
    detail::set_applicable(t1lo, f_v(below ? t : s, v));
    detail::set_applicable(t1hi, f_v(below ? s : t, v));
  }

  auto& smu = cb.add("straddle.mult.upper", Multiplicative, Upper, NablaVsSharp, Derived,
                     "straddle: A nabla_v B <= max{f_v(s), f_v(t)} A#_vB");
  if (!unit) detail::set_inapplicable(smu, kUnitOnly);
  else if (!straddle) detail::set_inapplicable(smu, "requires regime straddle (s < 1 < t)");
  else detail::set_applicable(smu, std::max(f_v(s, v), f_v(t, v)));

  auto& p2lo = cb.add("prop2.lower", Additive, Lower, NablaVsSharp, Core,
                      "below: g_v(t) A <= A nabla_v B - A#_vB; above: g_v(s) A <= ...");
  auto& p2hi = cb.add("prop2.upper", Additive, Upper, NablaVsSharp, Core,
                      "below: A nabla_v B - A#_vB <= g_v(s) A; above: ... <= g_v(t) A");
  if (!unit) {
    detail::set_inapplicable(p2lo, kUnitOnly);
    detail::set_inapplicable(p2hi, kUnitOnly);
  } else if (straddle) {
    detail::set_inapplicable(p2lo, kOneSided);
    detail::set_inapplicable(p2hi, kOneSided);
  } else {
    detail::set_applicable(p2lo, g_v(below ? t : s, v));
    detail::set_applicable(p2hi, g_v(below ? s : t, v));
  }

  auto& t3 = cb.add("thm3.upper", Additive, Upper, NablaVsSharp, Core,
                    "A nabla_v B - A#_vB <= max{g_v(s), g_v(t)} A");
  unit ? detail::set_applicable(t3, std::max(g_v(s, v), g_v(t, v)))
       : detail::set_inapplicable(t3, kUnitOnly);

  auto& hlo = cb.add("harm.lower", Multiplicative, Lower, HarmVsSharp, Core,
                     "below: (1!_v s)/(1#_v s) A#_vB <= A !_v B; above: same at t");
  auto& hhi = cb.add("harm.upper", Multiplicative, Upper, HarmVsSharp, Core,
                     "below: A !_v B <= (1!_v t)/(1#_v t) A#_vB; above: same at s");
  if (!unit) {
    detail::set_inapplicable(hlo, kUnitOnly);
    detail::set_inapplicable(hhi, kUnitOnly);
  } else if (straddle) {
    detail::set_inapplicable(hlo, kOneSided);
    detail::set_inapplicable(hhi, kOneSided);
  } else {
    detail::set_applicable(hlo, harmonic_ratio(below ? s : t, v));
    detail::set_applicable(hhi, harmonic_ratio(below ? t : s, v));
  }

  auto& shl = cb.add("straddle.harm.lower", Multiplicative, Lower, HarmVsSharp, Derived,
                     "straddle: min{(1!_v x)/(1#_v x) : x in {s,t}} A#_vB <= A !_v B");
  if (!unit) detail::set_inapplicable(shl, kUnitOnly);
  else if (!straddle) detail::set_inapplicable(shl, "requires regime straddle (s < 1 < t)");
  else detail::set_applicable(shl, std::min(harmonic_ratio(s, v), harmonic_ratio(t, v)));

  auto& xi = cb.add("xi.upper", Additive, Upper, NablaVsSharp, Core,
                    "mI <= A,B <= MI: A nabla_v B - A#_vB <= xi A, "
                    "xi = max{(M nabla_v m - M#_v m)/M, (m nabla_v M - m#_v M)/m}");
  auto& tom = cb.add("tominaga.upper", Additive, Upper, NablaVsSharp, Literature,
                     "mI <= A,B <= MI: A nabla_v B - A#_vB <= L(1,h) log S(h) A, h = M/m");
  if (!unit) {
    detail::set_inapplicable(xi, kUnitOnly);
    detail::set_inapplicable(tom, kUnitOnly);
  } else if (!ubox) {
    detail::set_inapplicable(xi, "requires a uniform box mI <= A,B <= MI");
    detail::set_inapplicable(tom, "requires a uniform box mI <= A,B <= MI");
  } else {
    const double m = ubox->m;
    const double M = ubox->M;
    detail::set_applicable(xi, std::max((scalar_nabla(M, m, v) - scalar_sharp(M, m, v)) / M,
                                        (scalar_nabla(m, M, v) - scalar_sharp(m, M, v)) / m));
    detail::set_applicable(tom, tominaga_additive(ubox->h));
  }

  auto& zuo = cb.add("zuo.lower", Multiplicative, Lower, NablaVsSharp, Literature,
                     "K(h,2)^r A#_vB <= A nabla_v B, h = s (above) or 1/t (below)");
  auto& spe = cb.add("specht.lower", Multiplicative, Lower, NablaVsSharp, Literature,
                     "S(h^r) A#_vB <= A nabla_v B, h = s (above) or 1/t (below)");
  auto& dra = cb.add("dragomir.upper", Multiplicative, Upper, NablaVsSharp, Literature,
                     "A nabla_v B <= exp[v(1-v)(h-1)^2/2] A#_vB, h = t (above) or 1/s (below)");
  if (!unit) {
    for (auto* b : {&zuo, &spe, &dra}) detail::set_inapplicable(*b, kUnitOnly);
  } else if (straddle) {
    for (auto* b : {&zuo, &spe, &dra}) detail::set_inapplicable(*b, kOneSided);
  } else {
    const double inner = above ? s : 1.0 / t;
    const double outer = above ? t : 1.0 / s;
    detail::set_applicable(zuo, zuo_constant(inner, v));
    detail::set_applicable(spe, specht_constant(inner, v));
    detail::set_applicable(dra, dragomir_constant(outer, v));
  }

  auto& ext_chain = cb.add("ext.chain", Multiplicative, Lower, SharpVsNablaExtended, Core,
                           "v outside [0,1]: A nabla_v B <= A#_vB");
  auto& ext_lo = cb.add("ext.lower", Additive, Lower, NablaVsSharp, Core,
                        "v outside [0,1]: min{g_v(s), g_v(t)} A <= A nabla_v B - A#_vB");
  auto& ext_hi = cb.add("ext.upper", Additive, Upper, NablaVsSharp, Core,
                        "v outside [0,1]: A nabla_v B - A#_vB <= c A, c = g_v(s) (above), "
                        "g_v(t) (below), 0 (straddle)");
  auto& box_lo = cb.add("ext.box.lower", Additive, Lower, SharpVsNablaExtended, Core,
                        "v outside [0,1], spectral box: k I <= A#_vB - A nabla_v B");
  auto& box_hi = cb.add("ext.box.upper", Additive, Upper, SharpVsNablaExtended, Core,
                        "v outside [0,1], spectral box: A#_vB - A nabla_v B <= k I");
  for (auto* b : {&box_lo, &box_hi}) b->reference = ReferenceMatrix::I;
  if (unit) {
    for (auto* b : {&ext_chain, &ext_lo, &ext_hi, &box_lo, &box_hi})
      detail::set_inapplicable(*b, kExtOnly);
  } else {
    const auto [lo, hi] = detail::extended_gap_coefficients(sw, v);
    detail::set_applicable(ext_chain, 1.0);
    detail::set_applicable(ext_lo, lo);
    detail::set_applicable(ext_hi, hi);
    if (!sbox) {
      detail::set_inapplicable(box_lo, "requires a spectral box m'I <= A <= mI < MI <= B <= M'I");
      detail::set_inapplicable(box_hi, "requires a spectral box m'I <= A <= mI < MI <= B <= M'I");
    } else {
      // E = A#_vB - A nabla_v B satisfies e_lo A <= E <= e_hi A; move to I-scaling
      // with the end of A's spectral range matching each coefficient's sign.
      const auto [glo, ghi] = detail::extended_gap_coefficients(
          sandwich_from_box(sbox->box, sbox->which), v);
      const double e_lo = -ghi;
      const double e_hi = -glo;
      const bool a_low = sbox->which == BoxCase::ABelowB;
      const double a_min = a_low ? sbox->box.m_outer : sbox->box.M_inner;
      const double a_max = a_low ? sbox->box.m_inner : sbox->box.M_outer;
      detail::set_applicable(box_lo, e_lo * (e_lo >= 0.0 ? a_min : a_max));
      detail::set_applicable(box_hi, e_hi * (e_hi >= 0.0 ? a_max : a_min));
    }
  }
  return {cb.out.begin(), cb.out.end()};
}

inline std::vector<BoundStatement> catalog(const CertInstance& inst) {
  return catalog(inst.sandwich, inst.uniform_box, inst.v, inst.spectral_box);
}

// Tight instance descriptor: computed sandwich, uniform box, and spectral box if the spectra separate.
inline CertInstance describe(const SymPDMatrix& A, const SymPDMatrix& B, double v) {
  CertInstance inst;
  inst.dim = A.dim();
  inst.v = v;
  inst.sandwich = sandwich_of(A, B);
  inst.uniform_box = uniform_box_of(A, B);
  inst.spectral_box = spectral_box_of(A, B);
  return inst;
}

// Forms each applicable bound's residual and certifies it in the Loewner order.
inline CertReport verify(const SymPDMatrix& A, const SymPDMatrix& B, const CertInstance& inst,
                         const std::vector<BoundStatement>& bounds,
                         double tol_rel = kDefaultLoewnerTolerance) {
  if (A.dim() != B.dim()) throw InputError("verify: dimension mismatch");
  if (!(tol_rel > 0.0)) throw InputError("verify: tolerance must be positive");
  const double v = inst.v;
  const bool unit = v >= 0.0 && v <= 1.0;

  const Matrix nabla = op_nabla(A, B, v);
  const Matrix sharp = op_sharp(A, B, v).matrix();
  const std::optional<Matrix> harm =
      unit ? std::optional<Matrix>(op_harm(A, B, v).matrix()) : std::nullopt;
  const Matrix identity = Matrix::identity(A.dim());
  const double base_scale = std::max(frobenius_norm(nabla), frobenius_norm(sharp));

  CertReport report;
  report.instance = inst;
  report.tol_rel = tol_rel;
  report.overall_pass = true;

  for (const auto& b : bounds) {
    CertifiedBound cert{b, std::nullopt};
    if (b.applicable) {
      Matrix lhs, rhs;  // bound asserts lhs >= rhs
      if (b.form == BoundForm::Multiplicative) {
        const Matrix* bigger = nullptr;  // the mean being compared with c * other
        const Matrix* other = nullptr;
        switch (b.relation) {
          case BoundRelation::NablaVsSharp: bigger = &nabla; other = &sharp; break;
          case BoundRelation::HarmVsSharp:
            if (!harm) throw DomainError("verify: harmonic bound needs v in [0,1]: " + b.name);
            bigger = &*harm; other = &sharp; break;
          case BoundRelation::SharpVsNablaExtended: bigger = &sharp; other = &nabla; break;
        }
        if (b.side == BoundSide::Lower) {
          lhs = *bigger;
          rhs = *other * b.constant;
        } else {
          lhs = *other * b.constant;
          rhs = *bigger;
        }
      } else {
        if (b.relation == BoundRelation::HarmVsSharp)
          throw DomainError("verify: additive harmonic bounds are not defined: " + b.name);
        const Matrix gap = b.relation == BoundRelation::NablaVsSharp ? nabla - sharp : sharp - nabla;
        const Matrix ref = (b.reference == ReferenceMatrix::A ? A.matrix() : identity) * b.constant;
        if (b.side == BoundSide::Lower) {
          lhs = gap;
          rhs = ref;
        } else {
          lhs = ref;
          rhs = gap;
        }
      }
      const double scale =
          std::max({base_scale, frobenius_norm(lhs), frobenius_norm(rhs)});
      LoewnerVerdict lv;
      try {
        lv = loewner_geq_zero((lhs - rhs) * (1.0 / scale), tol_rel);
      } catch (const NumericalFailure& e) {
        throw NumericalFailure("bound " + b.name + ": " + e.what());
      }
      cert.verdict = Verdict{lv.holds, lv.min_eig * scale, lv.min_eig};
      if (!lv.holds) {
        if (b.origin == BoundOrigin::Literature) report.findings.push_back(b.name);
        else report.overall_pass = false;
      }
    }
    report.bounds.push_back(std::move(cert));
  }

  const auto& sw = inst.sandwich;
  if (unit && sw.regime != Regime::Straddle) {
    const double h = sw.regime == Regime::Above ? sw.s : 1.0 / sw.t;
    report.literature.push_back(compare_constants(std::max(h, 1.0), v));
  }
  return report;
}

inline CertReport certify(const SymPDMatrix& A, const SymPDMatrix& B, const CertInstance& inst,
                          double tol_rel = kDefaultLoewnerTolerance) {
  return verify(A, B, inst, catalog(inst), tol_rel);
}

inline CertReport certify(const SymPDMatrix& A, const SymPDMatrix& B, double v,
                          double tol_rel = kDefaultLoewnerTolerance) {
  return certify(A, B, describe(A, B, v), tol_rel);
}

// ---------------------------------------------------------------------------
// Instance generators

struct InstancePair {
  SymPDMatrix A;
  SymPDMatrix B;
};

namespace detail {

inline void require_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim)
    throw InputError("dimension must lie in [1, " + std::to_string(kMaxDim) + "], got " +
                     std::to_string(dim));
}

// Eigenvalues pinned at lo and hi (dim >= 2), the rest log-uniform in between.
inline std::vector<double> pinned_spectrum(std::size_t dim, double lo, double hi, SplitMix64& rng) {
  std::vector<double> ev(dim);
  if (dim == 1) {
    ev[0] = lo == hi ? lo : rng.log_uniform(lo, hi);
    return ev;
  }
  ev.front() = lo;
  ev.back() = hi;
  for (std::size_t i = 1; i + 1 < dim; ++i) ev[i] = rng.log_uniform(lo, hi);
  return ev;
}

inline Matrix rotated(const std::vector<double>& ev, SplitMix64& rng) {
  const Matrix Q = random_orthogonal(ev.size(), rng);
  return congruence(Matrix::diagonal(ev), Q.transpose());
}

}  // namespace detail

// A with log-uniform spectrum in [0.5, 2]; B = A^{1/2} C A^{1/2} with spec(C) spanning [s0, t0].
inline InstancePair gen_instance(std::size_t dim, double s0, double t0, std::uint64_t seed) {
  detail::require_dim(dim);
  if (!(s0 > 0.0) || !(t0 >= s0) || !std::isfinite(t0))
    throw InputError("gen_instance: need 0 < s0 <= t0");
  if (dim == 1 && s0 != t0) throw InputError("gen_instance: dim 1 requires s0 == t0");
  SplitMix64 rng(seed);
  std::vector<double> a_ev(dim);
  for (double& x : a_ev) x = rng.log_uniform(0.5, 2.0);
  const Matrix Q = random_orthogonal(dim, rng);
  const Matrix A = congruence(Matrix::diagonal(a_ev), Q.transpose());
  if (s0 == t0) {
    SymPDMatrix Apd = SymPDMatrix::from(A);
    return {Apd, SymPDMatrix::from(A * s0)};
  }
  std::vector<double> root(dim);
  for (std::size_t i = 0; i < dim; ++i) root[i] = std::sqrt(a_ev[i]);
  const Matrix A_half = congruence(Matrix::diagonal(root), Q.transpose());
  const Matrix C = detail::rotated(detail::pinned_spectrum(dim, s0, t0, rng), rng);
  return {SymPDMatrix::from(A), SymPDMatrix::from(congruence(C, A_half))};
}

// A and B with spectra inside the box ranges of the chosen case (endpoints attained for dim >= 2).
inline InstancePair gen_box_instance(std::size_t dim, const SpectralBox& box, BoxCase which,
                                     std::uint64_t seed) {
  detail::require_dim(dim);
  SplitMix64 rng(seed);
  const Matrix low = detail::rotated(detail::pinned_spectrum(dim, box.m_outer, box.m_inner, rng), rng);
  const Matrix high = detail::rotated(detail::pinned_spectrum(dim, box.M_inner, box.M_outer, rng), rng);
  if (which == BoxCase::ABelowB) return {SymPDMatrix::from(low), SymPDMatrix::from(high)};
  return {SymPDMatrix::from(high), SymPDMatrix::from(low)};
}

// Random (s0, t0) inside the requested regime.
inline std::pair<double, double> sample_sandwich(Regime regime, SplitMix64& rng) {
  switch (regime) {
    case Regime::Below: {
      const double t0 = rng.log_uniform(0.1, 1.0);
      return {t0 * rng.log_uniform(0.1, 1.0), t0};
    }
    case Regime::Above: {
      const double s0 = rng.log_uniform(1.0, 10.0);
      return {s0, s0 * rng.log_uniform(1.0, 10.0)};
    }
    case Regime::Straddle:
      return {rng.log_uniform(0.1, 0.99), rng.log_uniform(1.01, 10.0)};
  }
  return {1.0, 1.0};
}

inline SpectralBox sample_spectral_box(SplitMix64& rng) {
  const double m_outer = rng.log_uniform(0.25, 1.0);
  const double m_inner = m_outer * rng.log_uniform(1.0, 3.0);
  const double M_inner = m_inner * rng.log_uniform(1.05, 4.0);
  const double M_outer = M_inner * rng.log_uniform(1.0, 3.0);
  return SpectralBox::make(m_outer, m_inner, M_inner, M_outer);
}

}  // namespace opmeans
