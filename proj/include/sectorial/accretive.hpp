// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "sectorial/numeric.hpp"

// Accretivity predicates and the sector angle. A matrix is accretive when
// Re(A) >= O, strictly accretive when Re(A) > O; the sector angle of a
// strictly accretive A is the least alpha with |Im<Ax,x>| <= tan(alpha) Re<Ax,x>.

namespace sectorial {

struct SectorAngle {
  double alpha = 0.0;  // in [0, pi/2)
  double tan() const { return std::tan(alpha); }
  double sec() const { return 1.0 / std::cos(alpha); }
};

inline bool is_accretive(const CMatrix& a, const ToleranceProfile& tol = {}) {
  return is_psd(hermitian_part(a), tol);
}

inline bool is_strictly_accretive(const CMatrix& a, const ToleranceProfile& tol = {}) {
  return is_pd(hermitian_part(a), tol);
}

/// Least alpha with W(A) inside the sector S_alpha, computed as
/// arctan of the spectral radius of R^{-1/2} Im(A) R^{-1/2}, R = Re(A).
/// Exact up to eigensolver accuracy; requires Re(A) positive definite.
inline SectorAngle sector_angle(const CMatrix& a, const ToleranceProfile& tol = {}) {
  require_square(a, "sector_angle");
  const HMatrix re = hermitian_part(a);
  if (!is_pd(re, tol))
    throw NotSectorialError("sector_angle: Re(A) is not positive definite");
  const HMatrix r_inv_sqrt = psd_power(re, -0.5, tol);
  const HMatrix congruent =
      HMatrix::symmetrized(r_inv_sqrt.matrix() * skew_part(a).matrix() * r_inv_sqrt.matrix());
  const RVector lam = eigenvalues_hermitian(congruent);
  const double rho = std::max(std::abs(lam(0)), std::abs(lam(lam.size() - 1)));
  return SectorAngle{std::atan(rho)};
}

}  // namespace sectorial
