// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "sectorial/numeric.hpp"

// Principal matrix powers and the closed registry of operator monotone
// normalized functions, evaluated on matrices whose spectrum avoids the
// cut (-inf, 0]. Log and powers use the principal branch, arg in (-pi, pi).

namespace sectorial {

/// Eigenvector condition cap for the diagonalization-based calculus.
inline constexpr double kEigenbasisCondCap = 1e6;

/// Exclusion band around the cut (-inf, 0].
inline constexpr double kSpectrumCutTol = 1e-10;

enum class OmfKind { power, harmonic_like, log_mean, affine };

/// A function from the registry: f:(0,inf)->(0,inf), operator monotone,
/// f(1)=1, extended analytically off the cut. The registry is a closed
/// whitelist; parameters are validated at construction.
struct OmfDescriptor {
  OmfKind kind = OmfKind::power;
  double t = 0.5;  // exponent for power, weight for affine; unused otherwise

  static OmfDescriptor power(double t) {
    if (!(t > 0.0) || t > 1.0) throw RangeError("OmfDescriptor::power: t must lie in (0, 1]");
    return OmfDescriptor{OmfKind::power, t};
  }
  static OmfDescriptor harmonic_like() { return OmfDescriptor{OmfKind::harmonic_like, 0.0}; }
  static OmfDescriptor log_mean() { return OmfDescriptor{OmfKind::log_mean, 0.0}; }
  static OmfDescriptor affine(double t) {
    if (t < 0.0 || t > 1.0) throw RangeError("OmfDescriptor::affine: t must lie in [0, 1]");
    return OmfDescriptor{OmfKind::affine, t};
  }

  Complex eval(Complex z) const {
    switch (kind) {
      case OmfKind::power:
        return std::exp(t * std::log(z));
      case OmfKind::harmonic_like:
        return 2.0 * z / (1.0 + z);
      case OmfKind::log_mean: {
        const Complex w = z - 1.0;
        if (std::abs(w) < 1e-4)
          return 1.0 + w / 2.0 - w * w / 12.0 + w * w * w / 24.0;
        return w / std::log(z);
      }
      case OmfKind::affine:
        return (1.0 - t) + t * z;
    }
    throw RangeError("OmfDescriptor::eval: unknown kind");
  }

  double eval_real(double x) const {
    switch (kind) {
      case OmfKind::power:
        return std::pow(x, t);
      case OmfKind::harmonic_like:
        return 2.0 * x / (1.0 + x);
      case OmfKind::log_mean: {
        const double w = x - 1.0;
        if (std::abs(w) < 1e-4) return 1.0 + w / 2.0 - w * w / 12.0 + w * w * w / 24.0;
        return w / std::log(x);
      }
      case OmfKind::affine:
        return (1.0 - t) + t * x;
    }
    throw RangeError("OmfDescriptor::eval_real: unknown kind");
  }

  std::string name() const {
    switch (kind) {
      case OmfKind::power:
        return "power(" + std::to_string(t) + ")";
      case OmfKind::harmonic_like:
        return "harmonic_like";
      case OmfKind::log_mean:
        return "log_mean";
      case OmfKind::affine:
        return "affine(" + std::to_string(t) + ")";
    }
    return "?";
  }
};

/// Distance from z to the cut (-inf, 0].
inline double distance_to_cut(Complex z) {
  if (z.real() <= 0.0) return std::abs(z.imag());
  return std::abs(z);
}

/// f(A) for Hermitian positive definite A via the real spectral calculus.
inline HMatrix apply_omf_spd(const OmfDescriptor& f, const HMatrix& h,
                             const ToleranceProfile& tol = {}) {
  const HermitianEigen eig = eig_hermitian(h);
  const double scale = std::abs(eig.values(0));
  const double floor = tol.psd_floor(h.dim()) * (1.0 + scale);
  RVector mapped(eig.values.size());
  for (Index j = 0; j < eig.values.size(); ++j) {
    if (eig.values(j) <= floor)
      throw SpectrumOnCutError("apply_omf_spd: eigenvalue " + std::to_string(eig.values(j)) +
                               " not strictly positive");
    mapped(j) = f.eval_real(eig.values(j));
  }
  const CMatrix result = eig.vectors * mapped.asDiagonal().toDenseMatrix().cast<Complex>() *
                         eig.vectors.adjoint();
  return HMatrix::symmetrized(result);
}

/// f(A) by diagonalization A = V D V^{-1}, f(A) = V f(D) V^{-1}.
/// Requires the spectrum off the cut and a well-conditioned eigenbasis.
inline CMatrix apply_omf(const OmfDescriptor& f, const CMatrix& a) {
  require_square(a, "apply_omf");
  require_finite(a, "apply_omf");
  Eigen::ComplexEigenSolver<CMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw NumericalError("apply_omf: eigensolver failed to converge");
  const auto& d = solver.eigenvalues();
  for (Index j = 0; j < d.size(); ++j) {
    if (distance_to_cut(d(j)) <= kSpectrumCutTol)
      throw SpectrumOnCutError("apply_omf: eigenvalue within cut band: (" +
                               std::to_string(d(j).real()) + ", " + std::to_string(d(j).imag()) +
                               "i)");
  }
  const CMatrix& v = solver.eigenvectors();
  {
    Eigen::JacobiSVD<CMatrix> vsvd(v);
    const RVector s = vsvd.singularValues();
    const double smin = s(s.size() - 1);
    if (!(smin > 0.0) || s(0) / smin > kEigenbasisCondCap)
      throw IllConditionedEigenbasisError("apply_omf: eigenvector condition number exceeds cap");
  }
  Eigen::VectorXcd fd(d.size());
  for (Index j = 0; j < d.size(); ++j) fd(j) = f.eval(d(j));
  const CMatrix result = v * fd.asDiagonal() * v.partialPivLu().inverse();
  require_finite(result, "apply_omf");
  return result;
}

/// Principal power A^t for t in [0, 1]; exact at the endpoints.
inline CMatrix principal_power(const CMatrix& a, double t) {
  require_square(a, "principal_power");
  if (t < 0.0 || t > 1.0) throw RangeError("principal_power: t must lie in [0, 1]");
  if (t == 0.0) return identity(a.rows());
  if (t == 1.0) return a;
  return apply_omf(OmfDescriptor::power(t), a);
}

/// Principal square root of a matrix with spectrum off the cut.
inline CMatrix principal_sqrt(const CMatrix& a) {
  return apply_omf(OmfDescriptor::power(0.5), a);
}

}  // namespace sectorial
