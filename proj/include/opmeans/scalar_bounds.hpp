#pragma once

// Scalar means, the ratio/gap functions f_v and g_v, and the bound constants
// (Kantorovich, Specht, logarithmic mean, and the literature constants built on them).
// Every function is total on its stated domain and throws DomainError outside it.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "opmeans/errors.hpp"

namespace opmeans {

namespace detail {

inline void require_finite(double v, const char* fn, const char* what) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << fn << ": " << what << " must be finite, got " << v;
    throw DomainError(msg.str());
  }
}

inline void require_positive(double x, const char* fn, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << fn << ": " << what << " must be a positive finite real, got " << x;
    throw DomainError(msg.str());
  }
}

inline void require_unit(double v, const char* fn) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << fn << ": weight must lie in [0,1], got " << v;
    throw DomainError(msg.str());
  }
}

}  // namespace detail

// The weight v of a mean. Any finite value is allowed; r = min{v, 1-v} only inside [0,1].
class Weight {
 public:
  explicit Weight(double v) : v_(v) { detail::require_finite(v, "Weight", "v"); }

  double value() const { return v_; }
  bool in_unit() const { return v_ >= 0.0 && v_ <= 1.0; }
  double r() const {
    detail::require_unit(v_, "Weight::r");
    return std::min(v_, 1.0 - v_);
  }

 private:
  double v_;
};

inline double scalar_nabla(double a, double b, double v) {
  detail::require_positive(a, "scalar_nabla", "a");
  detail::require_positive(b, "scalar_nabla", "b");
  detail::require_finite(v, "scalar_nabla", "v");
  return (1.0 - v) * a + v * b;
}

inline double scalar_sharp(double a, double b, double v) {
  detail::require_positive(a, "scalar_sharp", "a");
  detail::require_positive(b, "scalar_sharp", "b");
  detail::require_finite(v, "scalar_sharp", "v");
  return std::pow(a, 1.0 - v) * std::pow(b, v);
}

inline double scalar_harm(double a, double b, double v) {
  detail::require_positive(a, "scalar_harm", "a");
  detail::require_positive(b, "scalar_harm", "b");
  detail::require_unit(v, "scalar_harm");
  return 1.0 / ((1.0 - v) / a + v / b);
}

// (1 nabla_v x) / (1 sharp_v x)
inline double f_v(double x, double v) {
  detail::require_positive(x, "f_v", "x");
  detail::require_finite(v, "f_v", "v");
  return ((1.0 - v) + v * x) / std::pow(x, v);
}

// (1 nabla_v x) - (1 sharp_v x)
inline double g_v(double x, double v) {
  detail::require_positive(x, "g_v", "x");
  detail::require_finite(v, "g_v", "v");
  return (1.0 - v) + v * x - std::pow(x, v);
}

// (1 !_v x) / (1 sharp_v x), which equals 1 / f_{1-v}(x).
inline double harmonic_ratio(double x, double v) {
  detail::require_unit(v, "harmonic_ratio");
  return 1.0 / f_v(x, 1.0 - v);
}

// K(h,2) = (h+1)^2 / (4h)
inline double kantorovich(double h) {
  detail::require_positive(h, "kantorovich", "h");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

inline constexpr double kSpechtSeriesRadius = 1e-8;

// Specht's ratio; S(1) = 1 by continuity, with the series 1 + (t-1)^2/8 near t = 1.
inline double specht(double t) {
  detail::require_positive(t, "specht", "t");
  const double d = t - 1.0;
  if (std::abs(d) < kSpechtSeriesRadius) return 1.0 + d * d / 8.0;
  // With u = log(t)/(t-1): t^{1/(t-1)} = e^u, so S(t) = e^{u-1} / u.
  const double u = std::log1p(d) / d;
  return std::exp(u - 1.0) / u;
}

// L(x,y) = (y-x)/(log y - log x); L(x,x) = x.
inline double log_mean(double x, double y) {
  detail::require_positive(x, "log_mean", "x");
  detail::require_positive(y, "log_mean", "y");
  if (std::abs(x - y) < 1e-12 * std::max(x, y)) return x;
  return (y - x) / std::log1p((y - x) / x);
}

// K(h,2)^r with r = min{v, 1-v}
inline double zuo_constant(double h, double v) {
  detail::require_positive(h, "zuo_constant", "h");
  detail::require_unit(v, "zuo_constant");
  return std::pow(kantorovich(h), std::min(v, 1.0 - v));
}

// S(h^r) with r = min{v, 1-v}
inline double specht_constant(double h, double v) {
  detail::require_positive(h, "specht_constant", "h");
  detail::require_unit(v, "specht_constant");
  return specht(std::pow(h, std::min(v, 1.0 - v)));
}

// exp(v(1-v)(h-1)^2 / 2); may overflow to +inf for large h.
inline double dragomir_constant(double h, double v) {
  detail::require_positive(h, "dragomir_constant", "h");
  detail::require_unit(v, "dragomir_constant");
  return std::exp(0.5 * v * (1.0 - v) * (h - 1.0) * (h - 1.0));
}

// L(1,h) log S(h)
inline double tominaga_additive(double h) {
  detail::require_positive(h, "tominaga_additive", "h");
  return log_mean(1.0, h) * std::log(specht(h));
}

}  // namespace opmeans
