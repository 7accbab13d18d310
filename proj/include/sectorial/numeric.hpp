// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "sectorial/matrix.hpp"

// Dense complex primitives: Hermitian split, spectral decompositions,
// Loewner-order tests, singular values, Ky Fan norms, polar decomposition.
// Eigenvalues and singular values are ordered descending throughout.

namespace sectorial {

inline HMatrix hermitian_part(const CMatrix& a) {
  require_square(a, "hermitian_part");
  require_finite(a, "hermitian_part");
  return HMatrix::symmetrized(a);
}

inline HMatrix skew_part(const CMatrix& a) {
  require_square(a, "skew_part");
  require_finite(a, "skew_part");
  const Complex two_i(0.0, 2.0);
  return HMatrix::symmetrized((a - a.adjoint()) / two_i);
}

struct HermitianEigen {
  RVector values;   // descending
  CMatrix vectors;  // unitary, columns matching values
};

inline HermitianEigen eig_hermitian(const HMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw NumericalError("eig_hermitian: eigensolver failed to converge");
  HermitianEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

inline RVector eigenvalues_hermitian(const HMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalues_hermitian: eigensolver failed to converge");
  return solver.eigenvalues().reverse();
}

inline double lambda_min(const HMatrix& h) {
  const RVector v = eigenvalues_hermitian(h);
  return v(v.size() - 1);
}

/// Signed relative PSD margin: lambda_min / (1 + ||H||_2). Positive for PD,
/// near zero on the boundary, negative otherwise.
inline double psd_margin(const HMatrix& h) {
  const RVector v = eigenvalues_hermitian(h);
  const double norm2 = std::max(std::abs(v(0)), std::abs(v(v.size() - 1)));
  return v(v.size() - 1) / (1.0 + norm2);
}

inline bool is_psd(const HMatrix& h, const ToleranceProfile& tol = {}) {
  return psd_margin(h) >= -tol.psd_floor(h.dim());
}

/// Strict positive definiteness: smallest eigenvalue clears the floor from above.
inline bool is_pd(const HMatrix& h, const ToleranceProfile& tol = {}) {
  return psd_margin(h) > tol.psd_floor(h.dim());
}

inline bool loewner_leq(const HMatrix& h1, const HMatrix& h2, const ToleranceProfile& tol = {}) {
  require_same_dim(h1.matrix(), h2.matrix(), "loewner_leq");
  return is_psd(h2 - h1, tol);
}

inline RVector singular_values(const CMatrix& a) {
  require_square(a, "singular_values");
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues();  // Eigen returns descending, nonnegative
}

inline double spectral_norm(const CMatrix& a) { return singular_values(a)(0); }

inline double ky_fan_norm(const CMatrix& a, Index k) {
  require_square(a, "ky_fan_norm");
  if (k < 1 || k > a.rows())
    throw RangeError("ky_fan_norm: k = " + std::to_string(k) + " outside 1.." +
                     std::to_string(a.rows()));
  const RVector s = singular_values(a);
  return s.head(k).sum();
}

/// All Ky Fan norms at once (partial sums of the singular values).
inline RVector ky_fan_norms(const CMatrix& a) {
  RVector s = singular_values(a);
  for (Index j = 1; j < s.size(); ++j) s(j) += s(j - 1);
  return s;
}

struct PolarDecomposition {
  CMatrix unitary;  // U, unitary even for singular input
  HMatrix positive; // |X| = (X*X)^{1/2}
};

inline PolarDecomposition polar_decomposition(const CMatrix& x) {
  require_square(x, "polar_decomposition");
  require_finite(x, "polar_decomposition");
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix u = svd.matrixU() * svd.matrixV().adjoint();
  const CMatrix p =
      svd.matrixV() * svd.singularValues().asDiagonal().toDenseMatrix().cast<Complex>() *
      svd.matrixV().adjoint();
  return PolarDecomposition{u, HMatrix::symmetrized(p)};
}

inline HMatrix abs_value(const CMatrix& x) { return polar_decomposition(x).positive; }

inline CMatrix inverse(const CMatrix& a) {
  require_square(a, "inverse");
  require_finite(a, "inverse");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector s = svd.singularValues();
  const double smin = s(s.size() - 1);
  const double smax = s(0);
  if (!(smin > 0.0) || smax / smin > kKappaCap)
    throw SingularMatrixError("inverse: condition number " +
                              std::to_string(smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity()) +
                              " exceeds cap");
  RVector sinv = s.cwiseInverse();
  return svd.matrixV() * sinv.asDiagonal().toDenseMatrix().cast<Complex>() *
         svd.matrixU().adjoint();
}

/// Spectral power of a PSD matrix. t >= 0 clamps roundoff-negative eigenvalues
/// to zero; t < 0 additionally requires strict definiteness.
inline HMatrix psd_power(const HMatrix& h, double t, const ToleranceProfile& tol = {}) {
  const HermitianEigen eig = eig_hermitian(h);
  const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  const double floor = tol.psd_floor(h.dim()) * (1.0 + scale);
  RVector powered(eig.values.size());
  for (Index j = 0; j < eig.values.size(); ++j) {
    double lam = eig.values(j);
    if (lam < -floor)
      throw NumericalError("psd_power: input not PSD (eigenvalue " + std::to_string(lam) + ")");
    if (t < 0.0) {
      if (lam <= floor || scale / lam > kKappaCap)
        throw SingularMatrixError("psd_power: negative power of a (near-)singular matrix");
    } else {
      lam = std::max(lam, 0.0);
    }
    powered(j) = (t == 0.0) ? 1.0 : std::pow(lam, t);
  }
  const CMatrix result = eig.vectors * powered.asDiagonal().toDenseMatrix().cast<Complex>() *
                         eig.vectors.adjoint();
  return HMatrix::symmetrized(result);
}

inline HMatrix psd_sqrt(const HMatrix& h, const ToleranceProfile& tol = {}) {
  return psd_power(h, 0.5, tol);
}

}  // namespace sectorial
