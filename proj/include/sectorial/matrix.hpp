// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "sectorial/errors.hpp"

namespace sectorial {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Condition-number cap applied to every inversion.
inline constexpr double kKappaCap = 1e8;

inline void require_square(const CMatrix& a, const char* where) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw DimensionError(std::string(where) + ": matrix must be square and nonempty, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

inline void require_finite(const CMatrix& a, const char* where) {
  if (!a.allFinite()) throw NumericalError(std::string(where) + ": non-finite entries");
}

inline void require_same_dim(const CMatrix& a, const CMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(where) + ": dimension mismatch " +
                         std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
}

/// Relative tolerances shared across predicates. All scales are relative:
/// a tolerance t is applied as t * (1 + norm of the operand).
struct ToleranceProfile {
  double tol_psd = 1e-8;     // PSD floor for eigenvalue sign tests
  double tol_eq = 1e-9;      // equality / Hermitian certification
  double tol_margin = 1e-6;  // claim pass threshold

  void validate() const {
    if (!(tol_psd > 0.0) || !(tol_eq > 0.0) || !(tol_margin > 0.0))
      throw RangeError("ToleranceProfile: all tolerances must be strictly positive");
  }

  /// Effective PSD floor for dimension n; never below n ulps.
  double psd_floor(Index n) const { return std::max(tol_psd, static_cast<double>(n) * kEps); }
};

/// A complex matrix certified Hermitian. Construction either symmetrizes
/// unconditionally (for results that are Hermitian by derivation) or checks
/// ||A - A*|| <= tol_eq * (1 + ||A||) first and rejects otherwise.
class HMatrix {
 public:
  HMatrix() = default;

  static HMatrix certify(const CMatrix& a, double tol_eq = ToleranceProfile{}.tol_eq) {
    require_square(a, "HMatrix::certify");
    require_finite(a, "HMatrix::certify");
    const double dist = (a - a.adjoint()).norm();
    if (dist > tol_eq * (1.0 + a.norm()))
      throw NotHermitianError("HMatrix::certify: ||A - A*|| = " + std::to_string(dist) +
                              " exceeds tolerance");
    return HMatrix(0.5 * (a + a.adjoint()));
  }

  /// Symmetrize without a distance check. For matrices Hermitian by construction.
  static HMatrix symmetrized(const CMatrix& a) {
    require_square(a, "HMatrix::symmetrized");
    require_finite(a, "HMatrix::symmetrized");
    return HMatrix(0.5 * (a + a.adjoint()));
  }

  const CMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

  friend HMatrix operator+(const HMatrix& x, const HMatrix& y) {
    require_same_dim(x.m_, y.m_, "HMatrix::operator+");
    return HMatrix(x.m_ + y.m_);
  }
  friend HMatrix operator-(const HMatrix& x, const HMatrix& y) {
    require_same_dim(x.m_, y.m_, "HMatrix::operator-");
    return HMatrix(x.m_ - y.m_);
  }
  friend HMatrix operator*(double c, const HMatrix& x) { return HMatrix(c * x.m_); }

 private:
  explicit HMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

inline CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

}  // namespace sectorial
