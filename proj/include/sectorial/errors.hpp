// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sectorial {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// An eigenvalue lies within the exclusion band around the cut (-inf, 0].
struct SpectrumOnCutError : Error {
  using Error::Error;
};

/// Eigenvector matrix too ill-conditioned for a trustworthy functional calculus.
struct IllConditionedEigenbasisError : Error {
  using Error::Error;
};

/// Sector angle requested for a matrix whose real part is not positive definite.
struct NotSectorialError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct GenerationFailedError : Error {
  using Error::Error;
};

/// A generated instance failed its claim's precondition predicate. This is a
/// generator bug, never a claim failure.
struct HypothesisViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace sectorial
