#pragma once

// Weighted arithmetic, geometric and harmonic means of positive-definite matrices.

#include <cmath>
#include <sstream>
#include <string>

#include "opmeans/eigen_kernel.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/matrix.hpp"
#include "opmeans/scalar_bounds.hpp"

namespace opmeans {

namespace detail {

inline void require_same_dim(const SymPDMatrix& A, const SymPDMatrix& B, const char* fn) {
  if (A.dim() != B.dim())
    throw InputError(std::string(fn) + ": dimension mismatch " + std::to_string(A.dim()) +
                     " vs " + std::to_string(B.dim()));
}

}  // namespace detail

// (1-v)A + vB. Indefinite results are possible for v outside [0,1].
inline Matrix op_nabla(const SymPDMatrix& A, const SymPDMatrix& B, double v) {
  detail::require_same_dim(A, B, "op_nabla");
  detail::require_finite(v, "op_nabla", "v");
  return A.matrix() * (1.0 - v) + B.matrix() * v;
}

// The congruence A^{-1/2} B A^{-1/2}, whose spectrum is the tight sandwich of (A, B).
inline Matrix relative_matrix(const SymPDMatrix& A, const SymPDMatrix& B) {
  detail::require_same_dim(A, B, "relative_matrix");
  return congruence(B, mat_fpow(A, -0.5));
}

// A^{1/2} (A^{-1/2} B A^{-1/2})^v A^{1/2}, for any finite v.
inline SymPDMatrix op_sharp(const SymPDMatrix& A, const SymPDMatrix& B, double v) {
  detail::require_same_dim(A, B, "op_sharp");
  detail::require_finite(v, "op_sharp", "v");
  const SpectralDecomposition rel = eig_sym(relative_matrix(A, B));
  for (double lambda : rel.eigenvalues)
    if (!(lambda > 0.0)) {
      std::ostringstream msg;
      msg << "op_sharp: relative matrix lost positivity (eigenvalue " << lambda << ")";
      throw NumericalFailure(msg.str());
    }
  const Matrix powered = rel.apply([v](double x) { return std::pow(x, v); });
  return SymPDMatrix::from(congruence(powered, mat_fpow(A, 0.5)));
}

// ((1-v)A^{-1} + vB^{-1})^{-1}, v restricted to [0,1].
inline SymPDMatrix op_harm(const SymPDMatrix& A, const SymPDMatrix& B, double v) {
  detail::require_same_dim(A, B, "op_harm");
  detail::require_unit(v, "op_harm");
  const Matrix inner = mat_fpow(A, -1.0) * (1.0 - v) + mat_fpow(B, -1.0) * v;
  return SymPDMatrix::from(mat_fpow(SymPDMatrix::from(inner), -1.0));
}

}  // namespace opmeans
