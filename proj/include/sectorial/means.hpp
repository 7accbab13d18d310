// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <utility>

#include "sectorial/accretive.hpp"
#include "sectorial/matrix_functions.hpp"

// Operator means: weighted arithmetic, weighted geometric, the general mean
// sigma_f with f from the registry, and the adjoint mean. Hermitian positive
// definite inputs take the real spectral path; strictly accretive inputs take
// the principal-branch complex path. The two paths agree on their overlap;
// tests pin the agreement at 1e-10.

namespace sectorial {

enum class MeanPath { automatic, force_spd, force_complex };

namespace means_detail {

inline constexpr double kHermitianDispatchTol = 1e-12;

inline bool nearly_hermitian(const CMatrix& a) {
  return (a - a.adjoint()).norm() <= kHermitianDispatchTol * (1.0 + a.norm());
}

inline bool spd_path_applies(const CMatrix& a, const CMatrix& b) {
  if (!nearly_hermitian(a) || !nearly_hermitian(b)) return false;
  return lambda_min(HMatrix::symmetrized(a)) > 0.0 && lambda_min(HMatrix::symmetrized(b)) > 0.0;
}

// U lam^{1/2} U* and U lam^{-1/2} U* from one eigensolve.
inline std::pair<CMatrix, CMatrix> sqrt_pair_spd(const HMatrix& h) {
  const HermitianEigen eig = eig_hermitian(h);
  const double lmax = eig.values(0);
  RVector rt(eig.values.size()), irt(eig.values.size());
  for (Index j = 0; j < eig.values.size(); ++j) {
    const double lam = eig.values(j);
    if (!(lam > 0.0) || lmax / lam > kKappaCap)
      throw SingularMatrixError("mean: base matrix not safely positive definite");
    rt(j) = std::sqrt(lam);
    irt(j) = 1.0 / rt(j);
  }
  const CMatrix u = eig.vectors;
  return {u * rt.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint(),
          u * irt.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint()};
}

inline CMatrix sigma_spd(const OmfDescriptor& f, const CMatrix& a, const CMatrix& b) {
  const auto [sq, isq] = sqrt_pair_spd(HMatrix::symmetrized(a));
  const HMatrix c = HMatrix::symmetrized(isq * b * isq);
  const HMatrix fc = apply_omf_spd(f, c);
  return HMatrix::symmetrized(sq * fc.matrix() * sq).matrix();
}

inline CMatrix sigma_complex(const OmfDescriptor& f, const CMatrix& a, const CMatrix& b) {
  const CMatrix sq = principal_sqrt(a);
  const CMatrix isq = inverse(sq);
  const CMatrix c = isq * b * isq;
  return sq * apply_omf(f, c) * sq;
}

// Power-specialized route used by the weighted geometric mean.
inline CMatrix power_mean_spd(const CMatrix& a, const CMatrix& b, double t) {
  const auto [sq, isq] = sqrt_pair_spd(HMatrix::symmetrized(a));
  const HMatrix c = HMatrix::symmetrized(isq * b * isq);
  const HMatrix ct = psd_power(c, t);
  return HMatrix::symmetrized(sq * ct.matrix() * sq).matrix();
}

inline CMatrix power_mean_complex(const CMatrix& a, const CMatrix& b, double t) {
  const CMatrix sq = principal_sqrt(a);
  const CMatrix isq = inverse(sq);
  return sq * principal_power(isq * b * isq, t) * sq;
}

inline bool pick_spd(MeanPath path, const CMatrix& a, const CMatrix& b) {
  switch (path) {
    case MeanPath::force_spd:
      return true;
    case MeanPath::force_complex:
      return false;
    case MeanPath::automatic:
      return spd_path_applies(a, b);
  }
  return false;
}

}  // namespace means_detail

inline CMatrix arithmetic_mean(const CMatrix& a, const CMatrix& b, double t) {
  require_square(a, "arithmetic_mean");
  require_same_dim(a, b, "arithmetic_mean");
  if (t < 0.0 || t > 1.0) throw RangeError("arithmetic_mean: t must lie in [0, 1]");
  return (1.0 - t) * a + t * b;
}

/// Weighted geometric mean A #_t B. Exact at t = 0 and t = 1.
/// Inputs must be positive definite or strictly accretive.
inline CMatrix geometric_mean(const CMatrix& a, const CMatrix& b, double t,
                              MeanPath path = MeanPath::automatic) {
  require_square(a, "geometric_mean");
  require_same_dim(a, b, "geometric_mean");
  if (t < 0.0 || t > 1.0) throw RangeError("geometric_mean: t must lie in [0, 1]");
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return means_detail::pick_spd(path, a, b) ? means_detail::power_mean_spd(a, b, t)
                                            : means_detail::power_mean_complex(a, b, t);
}

/// General operator mean A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}.
inline CMatrix mean_sigma(const OmfDescriptor& f, const CMatrix& a, const CMatrix& b,
                          MeanPath path = MeanPath::automatic) {
  require_square(a, "mean_sigma");
  require_same_dim(a, b, "mean_sigma");
  return means_detail::pick_spd(path, a, b) ? means_detail::sigma_spd(f, a, b)
                                            : means_detail::sigma_complex(f, a, b);
}

/// Adjoint mean A sigma* B = (A^{-1} sigma B^{-1})^{-1}.
inline CMatrix adjoint_mean(const OmfDescriptor& f, const CMatrix& a, const CMatrix& b,
                            MeanPath path = MeanPath::automatic) {
  require_square(a, "adjoint_mean");
  require_same_dim(a, b, "adjoint_mean");
  return inverse(mean_sigma(f, inverse(a), inverse(b), path));
}

/// Mean result carrying the regularization flags for merely accretive inputs.
struct MeanResult {
  CMatrix value;
  bool regularized_a = false;
  bool regularized_b = false;
};

namespace means_detail {

// Shift an accretive-but-not-strict input into the strict cone: A + eps*I
// with eps = 1e-8 * (1 + ||A||). Non-accretive input is a domain error.
inline bool regularize_accretive(CMatrix& m, const ToleranceProfile& tol) {
  if (is_strictly_accretive(m, tol)) return false;
  if (!is_accretive(m, tol)) throw RangeError("mean: input matrix is not accretive");
  m += (1e-8 * (1.0 + spectral_norm(m))) * identity(m.rows());
  return true;
}

}  // namespace means_detail

inline MeanResult mean_sigma_regularized(const OmfDescriptor& f, CMatrix a, CMatrix b,
                                         const ToleranceProfile& tol = {},
                                         MeanPath path = MeanPath::automatic) {
  require_square(a, "mean_sigma_regularized");
  require_same_dim(a, b, "mean_sigma_regularized");
  MeanResult out;
  out.regularized_a = means_detail::regularize_accretive(a, tol);
  out.regularized_b = means_detail::regularize_accretive(b, tol);
  out.value = mean_sigma(f, a, b, path);
  return out;
}

inline MeanResult geometric_mean_regularized(CMatrix a, CMatrix b, double t,
                                             const ToleranceProfile& tol = {},
                                             MeanPath path = MeanPath::automatic) {
  require_square(a, "geometric_mean_regularized");
  require_same_dim(a, b, "geometric_mean_regularized");
  MeanResult out;
  out.regularized_a = means_detail::regularize_accretive(a, tol);
  out.regularized_b = means_detail::regularize_accretive(b, tol);
  out.value = geometric_mean(a, b, t, path);
  return out;
}

inline MeanResult adjoint_mean_regularized(const OmfDescriptor& f, CMatrix a, CMatrix b,
                                           const ToleranceProfile& tol = {},
                                           MeanPath path = MeanPath::automatic) {
  require_square(a, "adjoint_mean_regularized");
  require_same_dim(a, b, "adjoint_mean_regularized");
  MeanResult out;
  out.regularized_a = means_detail::regularize_accretive(a, tol);
  out.regularized_b = means_detail::regularize_accretive(b, tol);
  out.value = adjoint_mean(f, a, b, path);
  return out;
}

}  // namespace sectorial
