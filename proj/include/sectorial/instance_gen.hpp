// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "sectorial/blocks.hpp"
#include "sectorial/rng.hpp"

// Seeded generators that manufacture inputs provably satisfying claim
// hypotheses. Every generator is a pure function of (spec, seed); instances
// are kept away from PSD boundaries by a relative strictness margin so that
// tolerance slack cannot flip verdicts.

namespace sectorial {

struct GenSpec {
  Index n = 2;
  std::optional<double> alpha;  // target sector angle, [0, pi/2)
  double margin = 1e-3;         // relative smallest-eigenvalue floor
  uint64_t seed = 0;

  void validate() const {
    if (n < 1) throw RangeError("GenSpec: n must be >= 1");
    if (alpha && (*alpha < 0.0 || *alpha >= kPi / 2.0))
      throw RangeError("GenSpec: alpha must lie in [0, pi/2)");
    if (!(margin > 0.0)) throw RangeError("GenSpec: margin must be positive");
  }
};

inline CMatrix gaussian_matrix(Index n, Rng& rng) {
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
  return g;
}

inline HMatrix gaussian_hermitian(Index n, Rng& rng) {
  return HMatrix::symmetrized(gaussian_matrix(n, rng));
}

inline HMatrix random_psd(Index n, Rng& rng) {
  const CMatrix g = gaussian_matrix(n, rng);
  return HMatrix::symmetrized(g.adjoint() * g);
}

inline HMatrix random_pd(Index n, double margin, Rng& rng) {
  const HMatrix base = random_psd(n, rng);
  const RVector lam = eigenvalues_hermitian(base);
  const double shift = margin * (1.0 + lam(0));
  return base + HMatrix::symmetrized(shift * identity(n));
}

inline CMatrix random_unitary(Index n, Rng& rng) {
  const CMatrix g = gaussian_matrix(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the factor is well defined.
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// Hermitian S with spectral radius of R^{-1/2} S R^{-1/2} equal to tan(alpha),
/// so that R + iS has sector angle exactly alpha.
inline HMatrix sector_skew(const HMatrix& r, double alpha, Rng& rng) {
  const Index n = r.dim();
  if (alpha == 0.0) return HMatrix::symmetrized(CMatrix::Zero(n, n));
  HMatrix t0 = gaussian_hermitian(n, rng);
  const HMatrix rinv_sqrt = psd_power(r, -0.5);
  const HMatrix congruent =
      HMatrix::symmetrized(rinv_sqrt.matrix() * t0.matrix() * rinv_sqrt.matrix());
  const RVector lam = eigenvalues_hermitian(congruent);
  double rho = std::max(std::abs(lam(0)), std::abs(lam(lam.size() - 1)));
  if (!(rho > 0.0)) {
    t0 = HMatrix::symmetrized(identity(n));
    rho = 1.0 / lambda_min(r);  // spectral radius of R^{-1/2} I R^{-1/2} is 1/lambda_min
  }
  return (std::tan(alpha) / rho) * t0;
}

/// A = R^{1/2} (I + iT) R^{1/2} with Re(A) = R positive definite and
/// sector_angle(A) = alpha.
inline CMatrix random_sectorial(Index n, double alpha, double margin, Rng& rng) {
  const HMatrix r = random_pd(n, margin, rng);
  const HMatrix s = sector_skew(r, alpha, rng);
  return r.matrix() + Complex(0.0, 1.0) * s.matrix();
}

/// Largest scale in [0, 1] accepted by `ok`, found by bisection.
/// `ok(0)` must hold; the returned value has been verified.
inline double bisect_scale(const std::function<bool(double)>& ok, int iterations = 20) {
  if (ok(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Off-diagonal X = P^{1/2} (s C) Q^{1/2} with C a random contraction and s
/// bisected so that [P, X; X*, Q] (and, when both_forms, also its partial
/// transpose) stays PSD with half of the diagonal's eigenvalue floor.
inline CMatrix fit_offdiagonal(const HMatrix& p, const HMatrix& q, bool both_forms, Rng& rng) {
  const Index n = p.dim();
  CMatrix c = gaussian_matrix(n, rng);
  const double cnorm = spectral_norm(c);
  if (cnorm > 0.0) c /= cnorm;
  const CMatrix ps = psd_sqrt(p).matrix();
  const CMatrix qs = psd_sqrt(q).matrix();
  const double floor = 0.5 * std::min(lambda_min(p), lambda_min(q));
  const auto ok = [&](double s) {
    const Block2x2 m = Block2x2::hermitian_offdiag(p.matrix(), ps * (s * c) * qs, q.matrix());
    if (lambda_min(HMatrix::symmetrized(m.assemble())) < floor) return false;
    if (!both_forms) return true;
    return lambda_min(HMatrix::symmetrized(partial_transpose(m).assemble())) >= floor;
  };
  const double s = bisect_scale(ok);
  return ps * (s * c) * qs;
}

/// Hermitian PPT block [P, X; X*, Q] with PD diagonal and eigenvalue margin.
inline Block2x2 random_ppt_block(Index n, double margin, Rng& rng) {
  for (int round = 0; round < 100; ++round) {
    const HMatrix p = random_pd(n, margin, rng);
    const HMatrix q = random_pd(n, margin, rng);
    const CMatrix x = fit_offdiagonal(p, q, /*both_forms=*/true, rng);
    const Block2x2 m = Block2x2::hermitian_offdiag(p.matrix(), x, q.matrix());
    if (is_ppt(m)) return m;
  }
  throw GenerationFailedError("random_ppt_block: rejection rounds exhausted");
}

/// APT block built on a PPT Hermitian skeleton: diagonal blocks gain i*S
/// skews placing them in the alpha sector, which leaves Re(M) and Re(M^tau)
/// equal to the skeleton's blocks. With general_offdiag the skeleton
/// off-diagonal Z is split as X = Z + W, Y = Z - W (arbitrary Gaussian W),
/// which changes neither real part.
inline Block2x2 random_apt_block(Index n, double alpha, double margin, Rng& rng,
                                 bool general_offdiag = false) {
  for (int round = 0; round < 100; ++round) {
    const Block2x2 skeleton = random_ppt_block(n, margin, rng);
    const HMatrix p = HMatrix::symmetrized(skeleton.A);
    const HMatrix q = HMatrix::symmetrized(skeleton.B);
    const CMatrix a = p.matrix() + Complex(0.0, 1.0) * sector_skew(p, alpha, rng).matrix();
    const CMatrix b = q.matrix() + Complex(0.0, 1.0) * sector_skew(q, alpha, rng).matrix();
    CMatrix x = skeleton.X;
    CMatrix ystar = skeleton.Ystar;
    if (general_offdiag) {
      const CMatrix w =
          0.5 * (1.0 + spectral_norm(skeleton.X)) * gaussian_matrix(n, rng);
      x = skeleton.X + w;
      ystar = (skeleton.X - w).adjoint();
    }
    const Block2x2 m = Block2x2::from_blocks(a, x, ystar, b);
    if (is_apt(m)) return m;
  }
  throw GenerationFailedError("random_apt_block: rejection rounds exhausted");
}

/// [A, X; X*, B] accretive with strictly accretive diagonal; no constraint on
/// the partial transpose. Diagonal sector angles are drawn up to alpha_cap.
inline Block2x2 random_accretive_block(Index n, double alpha_cap, double margin, Rng& rng) {
  const double alpha_a = rng.uniform_in(0.0, alpha_cap);
  const double alpha_b = rng.uniform_in(0.0, alpha_cap);
  const HMatrix p = random_pd(n, margin, rng);
  const HMatrix q = random_pd(n, margin, rng);
  const CMatrix x = fit_offdiagonal(p, q, /*both_forms=*/false, rng);
  const CMatrix a = p.matrix() + Complex(0.0, 1.0) * sector_skew(p, alpha_a, rng).matrix();
  const CMatrix b = q.matrix() + Complex(0.0, 1.0) * sector_skew(q, alpha_b, rng).matrix();
  return Block2x2::from_blocks(a, x, x.adjoint(), b);
}

/// Normal strictly accretive A and X with AX = XA, built on a shared random
/// eigenbasis. By construction A*X = XA* holds as well.
struct CommutingPair {
  CMatrix a;
  CMatrix x;
};

inline CommutingPair random_commuting_pair(Index n, double margin, Rng& rng) {
  const CMatrix u = random_unitary(n, rng);
  Eigen::VectorXcd da(n), dx(n);
  for (Index j = 0; j < n; ++j) {
    da(j) = Complex(margin + rng.uniform_in(0.2, 1.5), rng.uniform_in(-1.0, 1.0));
    dx(j) = rng.cgaussian();
  }
  return CommutingPair{u * da.asDiagonal() * u.adjoint(), u * dx.asDiagonal() * u.adjoint()};
}

// GenSpec entry points: pure functions of the spec.

inline HMatrix random_psd(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_psd(spec.n, rng);
}

inline HMatrix random_pd(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_pd(spec.n, spec.margin, rng);
}

inline CMatrix random_sectorial(const GenSpec& spec) {
  spec.validate();
  if (!spec.alpha) throw RangeError("random_sectorial: spec.alpha required");
  Rng rng(spec.seed);
  return random_sectorial(spec.n, *spec.alpha, spec.margin, rng);
}

inline Block2x2 random_ppt_block(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_ppt_block(spec.n, spec.margin, rng);
}

inline Block2x2 random_apt_block(const GenSpec& spec, bool general_offdiag = false) {
  spec.validate();
  if (!spec.alpha) throw RangeError("random_apt_block: spec.alpha required");
  Rng rng(spec.seed);
  return random_apt_block(spec.n, *spec.alpha, spec.margin, rng, general_offdiag);
}

inline CommutingPair random_commuting_pair(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_commuting_pair(spec.n, spec.margin, rng);
}

}  // namespace sectorial
