#pragma once

// Dense real symmetric eigendecomposition (cyclic Jacobi) and the spectral
// functional calculus used by every operator mean and Loewner-order check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opmeans/errors.hpp"
#include "opmeans/matrix.hpp"

namespace opmeans {

inline constexpr std::size_t kMaxDim = 512;
inline constexpr double kDefaultLoewnerTolerance = 1e-9;
inline constexpr double kPositiveDefiniteGate = 1e-12;

struct JacobiOptions {
  int max_sweeps = 100;
  // Converged once the off-diagonal Frobenius mass is below this times ||X||_F.
  double off_diagonal_tolerance = 1e-14;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix basis;                     // columns are orthonormal eigenvectors

  std::size_t dim() const { return eigenvalues.size(); }

  // Q diag(fn(lambda_i)) Q^T, explicitly symmetrized.
  template <typename Fn>
  Matrix apply(Fn&& fn) const {
    const std::size_t n = dim();
    Matrix scaled(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const double fj = fn(eigenvalues[j]);
      for (std::size_t i = 0; i < n; ++i) scaled(i, j) = basis(i, j) * fj;
    }
    return symmetric_part(scaled * basis.transpose());
  }

  Matrix reconstruct() const {
    return apply([](double x) { return x; });
  }
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

inline void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  const std::size_t n = a.rows();

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double g = a(r, p);
    const double h = a(r, q);
    a(r, p) = a(p, r) = g - s * (h + g * tau);
    a(r, q) = a(q, r) = h + s * (g - h * tau);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double g = v(r, p);
    const double h = v(r, q);
    v(r, p) = g - s * (h + g * tau);
    v(r, q) = h + s * (g - h * tau);
  }
}

}  // namespace detail

// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
// Throws NumericalFailure when the sweep cap is hit or the arithmetic overflows.
inline SpectralDecomposition eig_sym(const Matrix& X, const JacobiOptions& opts = {}) {
  if (!X.square()) throw InputError("eig_sym: matrix is not square: " + X.shape());
  if (X.rows() > kMaxDim)
    throw InputError("eig_sym: dimension " + std::to_string(X.rows()) + " exceeds cap " +
                     std::to_string(kMaxDim));
  if (!all_finite(X)) throw InputError("eig_sym: matrix has non-finite entries");

  const std::size_t n = X.rows();
  Matrix a = symmetric_part(X);
  Matrix v = Matrix::identity(n);

  const double norm = frobenius_norm(a);
  if (!std::isfinite(norm))
    throw NumericalFailure("eig_sym: matrix norm overflows double precision");

  bool converged = false;
  for (int sweep = 0;; ++sweep) {
    const double off = detail::off_diagonal_norm(a);
    if (!std::isfinite(off)) throw NumericalFailure("eig_sym: overflow during Jacobi sweep");
    if (off <= opts.off_diagonal_tolerance * norm) {
      converged = true;
      break;
    }
    if (sweep >= opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Negligible against both diagonal entries: drop it instead of rotating.
        const double bumped = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + bumped == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + bumped == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        detail::rotate(a, v, p, q);
      }
    }
  }
  if (!converged)
    throw NumericalFailure("eig_sym: no convergence after " + std::to_string(opts.max_sweeps) +
                           " sweeps");
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(a(i, i))) throw NumericalFailure("eig_sym: non-finite eigenvalue");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.basis(r, k) = v(r, order[k]);
  }
  return out;
}

// Real symmetric positive-definite matrix; spectral data is computed once at construction.
class SymPDMatrix {
 public:
  // Validates symmetry (1e-12 relative), symmetrizes, and applies the PD gate
  // lambda_min > 1e-12 * max(1, lambda_max).
  static SymPDMatrix from(const Matrix& X) {
    Matrix sym = symmetrize_checked(X);
    if (sym.rows() == 0) throw InputError("matrix has dimension 0");
    SpectralDecomposition spec = eig_sym(sym);
    const double lo = spec.eigenvalues.front();
    const double hi = spec.eigenvalues.back();
    if (!(lo > kPositiveDefiniteGate * std::max(1.0, hi))) {
      std::ostringstream msg;
      msg << "matrix is not positive definite: smallest eigenvalue " << lo;
      throw InputError(msg.str());
    }
    return SymPDMatrix(std::move(sym), std::move(spec));
  }

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  double lambda_min() const { return spectrum_.eigenvalues.front(); }
  double lambda_max() const { return spectrum_.eigenvalues.back(); }

 private:
  SymPDMatrix(Matrix m, SpectralDecomposition s) : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  Matrix matrix_;
  SpectralDecomposition spectrum_;
};

namespace detail {

inline bool is_integer(double p) { return std::isfinite(p) && std::floor(p) == p; }

inline Matrix spectral_power(const SpectralDecomposition& spec, double p) {
  const bool integral = is_integer(p);
  for (double lambda : spec.eigenvalues) {
    const bool bad = integral ? (p < 0.0 && lambda == 0.0) : !(lambda > 0.0);
    if (bad) {
      std::ostringstream msg;
      msg << "mat_fpow: eigenvalue " << lambda << " is outside the domain of x^" << p;
      throw DomainError(msg.str());
    }
  }
  return spec.apply([p](double x) { return std::pow(x, p); });
}

}  // namespace detail

// X^p through the cached spectral decomposition; p = 0 and p = 1 are returned exactly.
inline Matrix mat_fpow(const SymPDMatrix& X, double p) {
  if (p == 0.0) return Matrix::identity(X.dim());
  if (p == 1.0) return X.matrix();
  return detail::spectral_power(X.spectrum(), p);
}

// X^p for a general symmetric X; non-integer p requires positive eigenvalues.
inline Matrix mat_fpow(const Matrix& X, double p) {
  const Matrix sym = symmetrize_checked(X);
  if (p == 0.0) return Matrix::identity(sym.rows());
  if (p == 1.0) return sym;
  if (p == 2.0) return symmetric_part(sym * sym);
  return detail::spectral_power(eig_sym(sym), p);
}

// C^T X C, explicitly symmetrized.
inline Matrix congruence(const Matrix& X, const Matrix& C) {
  if (!X.square() || X.rows() != C.rows())
    throw InputError("congruence: shape mismatch " + X.shape() + " vs " + C.shape());
  return symmetric_part(C.transpose() * (X * C));
}

inline Matrix congruence(const SymPDMatrix& X, const Matrix& C) { return congruence(X.matrix(), C); }

struct LoewnerVerdict {
  bool holds = false;
  double min_eig = 0.0;
};

// X >= 0 in the Loewner order, accepted when lambda_min(X) >= -tol_rel * max(1, ||X||_F).
inline LoewnerVerdict loewner_geq_zero(const Matrix& X, double tol_rel = kDefaultLoewnerTolerance) {
  if (!X.square()) throw InputError("loewner_geq_zero: matrix is not square: " + X.shape());
  if (X.rows() == 0) return {true, 0.0};
  const double min_eig = eig_sym(X).eigenvalues.front();
  return {min_eig >= -tol_rel * std::max(1.0, frobenius_norm(X)), min_eig};
}

inline std::pair<double, double> spectral_bounds(const SymPDMatrix& X) {
  return {X.lambda_min(), X.lambda_max()};
}

}  // namespace opmeans
