#pragma once

// Sandwich scalars sA <= B <= tA, regime classification, and conversion of
// scalar spectral boxes into sandwich form.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "opmeans/eigen_kernel.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/operator_means.hpp"

namespace opmeans {

inline constexpr double kRegimeTieTolerance = 1e-12;

enum class Regime { Below, Above, Straddle };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Below: return "below";
    case Regime::Above: return "above";
    case Regime::Straddle: return "straddle";
  }
  return "?";
}

inline Regime regime_from_string(std::string_view name) {
  if (name == "below") return Regime::Below;
  if (name == "above") return Regime::Above;
  if (name == "straddle") return Regime::Straddle;
  throw InputError("unknown regime '" + std::string(name) + "'");
}

// Closed regimes; Above wins when both apply (s = t = 1).
inline Regime classify_regime(double s, double t) {
  if (s >= 1.0 - kRegimeTieTolerance) return Regime::Above;
  if (t <= 1.0 + kRegimeTieTolerance) return Regime::Below;
  return Regime::Straddle;
}

struct SandwichInterval {
  double s = 1.0;
  double t = 1.0;
  Regime regime = Regime::Above;
  bool tight = false;  // computed from the matrices rather than supplied
  bool tie = false;    // s or t sits on 1 within the tie tolerance

  static SandwichInterval make(double s, double t, bool tight) {
    if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(t) || !(t >= s)) {
      std::ostringstream msg;
      msg << "invalid sandwich interval (s=" << s << ", t=" << t << "): need 0 < s <= t";
      throw InputError(msg.str());
    }
    const bool tie = std::abs(s - 1.0) <= kRegimeTieTolerance ||
                     std::abs(t - 1.0) <= kRegimeTieTolerance;
    return {s, t, classify_regime(s, t), tight, tie};
  }

  friend bool operator==(const SandwichInterval&, const SandwichInterval&) = default;
};

// Scalar hypotheses 0 < m' <= m < M <= M'.
struct SpectralBox {
  double m_outer = 0.0;  // m'
  double m_inner = 0.0;  // m
  double M_inner = 0.0;  // M
  double M_outer = 0.0;  // M'

  static SpectralBox make(double m_outer, double m_inner, double M_inner, double M_outer) {
    const bool ok = std::isfinite(M_outer) && m_outer > 0.0 && m_outer <= m_inner &&
                    m_inner < M_inner && M_inner <= M_outer;
    if (!ok) {
      std::ostringstream msg;
      msg << "invalid spectral box (" << m_outer << ", " << m_inner << ", " << M_inner << ", "
          << M_outer << "): need 0 < m' <= m < M <= M'";
      throw InputError(msg.str());
    }
    return {m_outer, m_inner, M_inner, M_outer};
  }

  friend bool operator==(const SpectralBox&, const SpectralBox&) = default;
};

// ABelowB: m'I <= A <= mI < MI <= B <= M'I.  BBelowA: the same with A and B swapped.
enum class BoxCase { ABelowB, BBelowA };

inline std::string_view to_string(BoxCase c) {
  return c == BoxCase::ABelowB ? "a_below_b" : "b_below_a";
}

struct UniformBox {
  double m = 1.0;
  double M = 1.0;
  double h = 1.0;
  bool degenerate = false;  // m == M

  static UniformBox make(double m, double M) {
    if (!(m > 0.0) || !std::isfinite(M) || !(M >= m)) {
      std::ostringstream msg;
      msg << "invalid uniform box (m=" << m << ", M=" << M << "): need 0 < m <= M";
      throw InputError(msg.str());
    }
    return {m, M, M / m, M == m};
  }

  friend bool operator==(const UniformBox&, const UniformBox&) = default;
};

// Tight (s, t): extreme eigenvalues of A^{-1/2} B A^{-1/2}.
inline SandwichInterval sandwich_of(const SymPDMatrix& A, const SymPDMatrix& B) {
  const SpectralDecomposition rel = eig_sym(relative_matrix(A, B));
  const double s = rel.eigenvalues.front();
  const double t = rel.eigenvalues.back();
  if (!(s > 0.0))
    throw NumericalFailure("sandwich_of: relative matrix is not positive definite");
  return SandwichInterval::make(s, t, true);
}

// Checks a user-supplied (s, t) against the matrices; failure is an input error.
inline SandwichInterval validate_sandwich(const SymPDMatrix& A, const SymPDMatrix& B, double s,
                                          double t, double tol_rel = kDefaultLoewnerTolerance) {
  SandwichInterval sw = SandwichInterval::make(s, t, false);
  const LoewnerVerdict lower = loewner_geq_zero(B.matrix() - A.matrix() * s, tol_rel);
  const LoewnerVerdict upper = loewner_geq_zero(A.matrix() * t - B.matrix(), tol_rel);
  if (!lower.holds || !upper.holds) {
    std::ostringstream msg;
    msg << "supplied sandwich (s=" << s << ", t=" << t << ") does not hold: "
        << (lower.holds ? "tA - B" : "B - sA") << " has eigenvalue "
        << (lower.holds ? upper.min_eig : lower.min_eig);
    throw InputError(msg.str());
  }
  return sw;
}

inline SandwichInterval sandwich_from_box(const SpectralBox& box, BoxCase c) {
  if (c == BoxCase::ABelowB)
    return SandwichInterval::make(box.M_inner / box.m_inner, box.M_outer / box.m_outer, false);
  return SandwichInterval::make(box.m_outer / box.M_outer, box.m_inner / box.M_inner, false);
}

inline UniformBox uniform_box_of(const SymPDMatrix& A, const SymPDMatrix& B) {
  return UniformBox::make(std::min(A.lambda_min(), B.lambda_min()),
                          std::max(A.lambda_max(), B.lambda_max()));
}

inline SandwichInterval uniform_to_sandwich(const UniformBox& box) {
  return SandwichInterval::make(1.0 / box.h, box.h, false);
}

struct BoxHypothesis {
  SpectralBox box;
  BoxCase which = BoxCase::ABelowB;

  friend bool operator==(const BoxHypothesis&, const BoxHypothesis&) = default;
};

// Tightest spectral box when the spectra of A and B are strictly separated.
inline std::optional<BoxHypothesis> spectral_box_of(const SymPDMatrix& A, const SymPDMatrix& B) {
  if (A.lambda_max() < B.lambda_min())
    return BoxHypothesis{SpectralBox::make(A.lambda_min(), A.lambda_max(), B.lambda_min(),
                                           B.lambda_max()),
                         BoxCase::ABelowB};
  if (B.lambda_max() < A.lambda_min())
    return BoxHypothesis{SpectralBox::make(B.lambda_min(), B.lambda_max(), A.lambda_min(),
                                           A.lambda_max()),
                         BoxCase::BBelowA};
  return std::nullopt;
}

}  // namespace opmeans
