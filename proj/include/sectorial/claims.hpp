// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "sectorial/instance_gen.hpp"
#include "sectorial/json_io.hpp"
#include "sectorial/means.hpp"
#include "sectorial/version.hpp"

// Registry of executable claims. Each claim generates an instance satisfying
// its hypotheses from a trial seed, evaluates every asserted inequality over
// all quantified indices (eigenvalue index j, Ky Fan index k, weight grid t),
// and reports the minimum relative slack. A claim passes a trial when
// min_margin >= -tol_margin (refutation claims: min_margin > 0). Margins are
// relative: slack / (1 + largest operand norm).

namespace sectorial {

struct TrialContext {
  Index n = 2;
  uint64_t seed = 0;
  ToleranceProfile tol;
  double gen_margin = 1e-3;  // strictness margin passed to the generators
};

namespace claims_detail {

inline void require_hyp(bool ok, const char* what) {
  if (!ok) throw HypothesisViolation(std::string("hypothesis violated: ") + what);
}

inline double rel(double slack, double scale) { return slack / (1.0 + scale); }

/// lambda_min(rhs - lhs) / (1 + max operand norm).
inline double loewner_margin(const HMatrix& lhs, const HMatrix& rhs) {
  const double scale =
      std::max(std::abs(eigenvalues_hermitian(lhs)(0)), std::abs(eigenvalues_hermitian(rhs)(0)));
  return rel(lambda_min(rhs - lhs), scale);
}

inline double accretive_margin(const CMatrix& m) {
  return rel(lambda_min(hermitian_part(m)), spectral_norm(m));
}

inline double apt_margin(const Block2x2& m) {
  return std::min(accretive_margin(m.assemble()),
                  accretive_margin(partial_transpose(m).assemble()));
}

inline double ppt_margin(const Block2x2& m) {
  const auto margin_of = [](const CMatrix& h) {
    return rel(lambda_min(HMatrix::symmetrized(h)), spectral_norm(h));
  };
  return std::min(margin_of(m.assemble()), margin_of(partial_transpose(m).assemble()));
}

/// min_j (rhs_j - lhs_j) / (1 + scale), both sequences descending.
inline double dominance_margin(const RVector& lhs, const RVector& rhs, double scale) {
  double worst = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < lhs.size(); ++j) worst = std::min(worst, rel(rhs(j) - lhs(j), scale));
  return worst;
}

/// Weight grid: fixed endpoints and quartiles plus three random draws.
inline std::vector<double> t_grid(Rng& rng) {
  std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 3; ++i) grid.push_back(rng.uniform());
  return grid;
}

/// Representative sample of the closed registry of means.
inline const std::vector<OmfDescriptor>& mean_sample() {
  static const std::vector<OmfDescriptor> sample = {
      OmfDescriptor::power(0.25),  OmfDescriptor::power(0.5), OmfDescriptor::power(0.75),
      OmfDescriptor::harmonic_like(), OmfDescriptor::log_mean(), OmfDescriptor::affine(0.5)};
  return sample;
}

inline CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

inline void witness_matrix(json* w, const char* name, const CMatrix& m) {
  if (w) (*w)[name] = matrix_to_json(m);
}

inline void witness_block(json* w, const Block2x2& m) {
  if (w) (*w)["M"] = block_to_json(m);
}

// --- evaluators -----------------------------------------------------------

// A, B strictly accretive, [A,X;X*,B] accretive => A - X B^{-1} X* accretive.
inline double eval_c1(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Block2x2 m = random_accretive_block(ctx.n, 1.2, ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(m.A, ctx.tol), "A strictly accretive");
  require_hyp(is_strictly_accretive(m.B, ctx.tol), "B strictly accretive");
  require_hyp(is_accretive(m.assemble(), ctx.tol), "M accretive");
  witness_block(w, m);
  const CMatrix schur = accretive_schur_complement(m.A, m.B, m.X);
  witness_matrix(w, "schur_complement", schur);
  return accretive_margin(schur);
}

// B sectorial with angle a, A - X B^{-1} X* accretive
// => [A, cos(a) X; cos(a) X*, B] accretive.
inline double eval_c2(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Index n = ctx.n;
  const CMatrix b = random_sectorial(n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  const CMatrix x = gaussian_matrix(n, rng);
  const CMatrix e = random_sectorial(n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  const CMatrix a = x * inverse(b) * x.adjoint() + e;
  require_hyp(is_strictly_accretive(a, ctx.tol), "A strictly accretive");
  require_hyp(is_strictly_accretive(b, ctx.tol), "B strictly accretive");
  require_hyp(is_accretive(accretive_schur_complement(a, b, x), ctx.tol),
              "Schur complement accretive");
  const double cos_a = std::cos(sector_angle(b, ctx.tol).alpha);
  const Block2x2 scaled = Block2x2::hermitian_offdiag(a, cos_a * x, b);
  witness_matrix(w, "A", a);
  witness_matrix(w, "B", b);
  witness_matrix(w, "X", x);
  return accretive_margin(scaled.assemble());
}

// A strictly accretive with angle a => [A, cos(a) I; cos(a) I, A^{-1}] accretive.
inline double eval_c3(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const CMatrix a = random_sectorial(ctx.n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(a, ctx.tol), "A strictly accretive");
  const double cos_a = std::cos(sector_angle(a, ctx.tol).alpha);
  const CMatrix eye = cos_a * identity(ctx.n);
  const Block2x2 blk = Block2x2::hermitian_offdiag(a, eye, inverse(a));
  witness_matrix(w, "A", a);
  return accretive_margin(blk.assemble());
}

// Refutation: [A, I; I, A^{-1}] is never accretive for non-Hermitian strictly
// accretive A. Margin is positive exactly when the accretivity predicate fails.
inline double eval_c4(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  CMatrix a;
  bool found = false;
  for (int round = 0; round < 100 && !found; ++round) {
    a = random_sectorial(ctx.n, rng.uniform_in(0.15, 1.2), ctx.gen_margin, rng);
    const RVector skew_eigs = eigenvalues_hermitian(skew_part(a));
    const double skew_norm =
        std::max(std::abs(skew_eigs(0)), std::abs(skew_eigs(skew_eigs.size() - 1)));
    found = skew_norm >= 1e-3 * (1.0 + spectral_norm(a));
  }
  if (!found) throw GenerationFailedError("C4: could not generate a clearly non-Hermitian A");
  require_hyp(is_strictly_accretive(a, ctx.tol), "A strictly accretive");
  const Block2x2 blk = Block2x2::hermitian_offdiag(a, identity(ctx.n), inverse(a));
  witness_matrix(w, "A", a);
  const HMatrix re = hermitian_part(blk.assemble());
  return -psd_margin(re) - ctx.tol.psd_floor(2 * ctx.n);
}

/// APT margin of the mean block [A#tB, X; Y*, A#(1-t)B] minimized over the grid.
/// Exposed so tests can recompute with a shuffled grid.
inline double mean_block_apt_margin(const Block2x2& m, const std::vector<double>& grid) {
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : grid) {
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    worst = std::min(worst, apt_margin(Block2x2::from_blocks(g, m.X, m.Ystar, h)));
  }
  return worst;
}

// M = [A,X;Y*,B] APT <=> [A#tB, X; Y*, A#(1-t)B] APT on the whole grid.
// The t = 0 block is M itself (A#0B = A, A#1B = B exactly), which carries the
// converse direction.
inline double eval_c5(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng, /*general_offdiag=*/true);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  require_hyp(is_strictly_accretive(m.A, ctx.tol) && is_strictly_accretive(m.B, ctx.tol),
              "diagonal strictly accretive");
  witness_block(w, m);
  return mean_block_apt_margin(m, t_grid(rng));
}

// M = [A,X;X*,B] accretive => 2 s_j(X) <= s_j(M) for all j.
inline double eval_c6(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Block2x2 m = random_accretive_block(ctx.n, 1.2, ctx.gen_margin, rng);
  require_hyp(is_accretive(m.assemble(), ctx.tol), "M accretive");
  witness_block(w, m);
  const RVector sx = singular_values(m.X);
  const RVector sm = singular_values(m.assemble());
  return dominance_margin(2.0 * sx, sm.head(ctx.n), sm(0));
}

/// 2||X||_(k) <= sec_a ||A+B||_(k) margin over all k. With sec_a = 1 this is
/// the PPT-case bound, so the alpha = 0 degeneration can be checked against
/// the same function.
inline double c7_margin(const Block2x2& m, double sec_a) {
  const RVector fan_x = ky_fan_norms(m.X);
  const RVector fan_ab = ky_fan_norms(m.A + m.B);
  const double scale = std::max(fan_x(0), fan_ab(0));
  double worst = std::numeric_limits<double>::infinity();
  for (Index k = 0; k < fan_x.size(); ++k)
    worst = std::min(worst, rel(sec_a * fan_ab(k) - 2.0 * fan_x(k), scale));
  return worst;
}

// M APT with sector angle a => 2||X||_(k) <= sec(a) ||A+B||_(k) for all k.
inline double eval_c7(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  return c7_margin(m, sector_angle(m.assemble(), ctx.tol).sec());
}

// Pinned regression on the fixed 2x2 pair: singular values of A-B and of the
// direct sum match the frozen references and s_1(A-B) > s_1(A(+)B).
inline double eval_c8(const TrialContext&, json* w) {
  CMatrix a(2, 2), b(2, 2);
  a << Complex(2, 2), Complex(-1, 2), Complex(3, 2), Complex(1, 1);
  b << Complex(1, 2), Complex(-2, -1), Complex(-2, -1), Complex(5, 1);
  witness_matrix(w, "A", a);
  witness_matrix(w, "B", b);
  const RVector s_diff = singular_values(a - b);
  const RVector s_sum = singular_values(direct_sum(a, b));
  const double expected_diff[2] = {7.42443, 2.42443};
  const double expected_sum[4] = {6.30618, 5.1112, 1.36954, 1.11002};
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 2; ++j)
    worst = std::min(worst, (1e-4 - std::abs(s_diff(j) - expected_diff[j])) / 1e-4);
  for (int j = 0; j < 4; ++j)
    worst = std::min(worst, (1e-4 - std::abs(s_sum(j) - expected_sum[j])) / 1e-4);
  const double top_diff_sq = (61.0 + 5.0 * std::sqrt(97.0)) / 2.0;
  const double top_sum_sq = (41.0 + 3.0 * std::sqrt(165.0)) / 2.0;
  worst = std::min(worst, (1e-9 - std::abs(s_diff(0) * s_diff(0) - top_diff_sq)) / 1e-9);
  worst = std::min(worst, (1e-9 - std::abs(s_sum(0) * s_sum(0) - top_sum_sq)) / 1e-9);
  worst = std::min(worst, rel(s_diff(0) - s_sum(0), s_diff(0)));
  if (w) {
    (*w)["s_diff"] = std::vector<double>(s_diff.data(), s_diff.data() + s_diff.size());
    (*w)["s_direct_sum"] = std::vector<double>(s_sum.data(), s_sum.data() + s_sum.size());
  }
  return worst;
}

/// ||X||_(k) <= sec_a/2 ||A#tB + A#(1-t)B||_(k) margin over all k and grid t.
/// The mean path is explicit so the alpha = 0 degeneration can compare the
/// complex machinery against the PD machinery on the same instance.
inline double c9_margin(const Block2x2& m, double sec_a, const std::vector<double>& grid,
                        MeanPath path = MeanPath::automatic) {
  const RVector fan_x = ky_fan_norms(m.X);
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : grid) {
    const CMatrix sum =
        geometric_mean(m.A, m.B, t, path) + geometric_mean(m.A, m.B, 1.0 - t, path);
    const RVector fan_sum = ky_fan_norms(sum);
    const double scale = std::max(fan_x(0), fan_sum(0));
    for (Index k = 0; k < fan_x.size(); ++k)
      worst = std::min(worst, rel(0.5 * sec_a * fan_sum(k) - fan_x(k), scale));
  }
  return worst;
}

// ||X||_(k) <= sec(a)/2 ||A#tB + A#(1-t)B||_(k) for all k and grid t.
inline double eval_c9(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  return c9_margin(m, sector_angle(m.assemble(), ctx.tol).sec(), t_grid(rng));
}

// |Z| <= Re(A#t(V*BV)) # Re(A#(1-t)(V*BV)) and the starred companion,
// Z = (X+Y)/2 = V|Z|.
inline double eval_c10(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng, /*general_offdiag=*/true);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  const CMatrix z = 0.5 * (m.X + m.Ystar.adjoint());
  const CMatrix v = polar_decomposition(z).unitary;
  const HMatrix abs_z = abs_value(z);
  const HMatrix abs_zs = abs_value(z.adjoint());
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix b_conj = v.adjoint() * m.B * v;
    const HMatrix g1 = hermitian_part(geometric_mean(m.A, b_conj, t));
    const HMatrix g2 = hermitian_part(geometric_mean(m.A, b_conj, 1.0 - t));
    const HMatrix rhs = HMatrix::symmetrized(geometric_mean(g1.matrix(), g2.matrix(), 0.5));
    worst = std::min(worst, loewner_margin(abs_z, rhs));
    const CMatrix a_conj = v * m.A * v.adjoint();
    const HMatrix h1 = hermitian_part(geometric_mean(a_conj, m.B, t));
    const HMatrix h2 = hermitian_part(geometric_mean(a_conj, m.B, 1.0 - t));
    const HMatrix rhs_star = HMatrix::symmetrized(geometric_mean(h1.matrix(), h2.matrix(), 0.5));
    worst = std::min(worst, loewner_margin(abs_zs, rhs_star));
  }
  return worst;
}

// |Z| <= Re(A#tB + V*(A#(1-t)B)V)/2 and the starred companion.
inline double eval_c11(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng, /*general_offdiag=*/true);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  const CMatrix z = 0.5 * (m.X + m.Ystar.adjoint());
  const CMatrix v = polar_decomposition(z).unitary;
  const HMatrix abs_z = abs_value(z);
  const HMatrix abs_zs = abs_value(z.adjoint());
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    const HMatrix rhs = hermitian_part(0.5 * (g + v.adjoint() * h * v));
    worst = std::min(worst, loewner_margin(abs_z, rhs));
    const HMatrix rhs_star = hermitian_part(0.5 * (v * g * v.adjoint() + h));
    worst = std::min(worst, loewner_margin(abs_zs, rhs_star));
  }
  return worst;
}

// Four-link singular-value chain for Z through the mean combinations.
inline double eval_c12(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng, /*general_offdiag=*/true);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  const CMatrix z = 0.5 * (m.X + m.Ystar.adjoint());
  const CMatrix v = polar_decomposition(z).unitary;
  const RVector s0 = singular_values(z);
  const HMatrix re_a = hermitian_part(m.A);
  const HMatrix re_b = hermitian_part(m.B);
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix inner1 = geometric_mean(re_a.matrix(), re_b.matrix(), t);
    const CMatrix inner2 = geometric_mean(re_a.matrix(), re_b.matrix(), 1.0 - t);
    const CMatrix m1 = geometric_mean(inner1, v.adjoint() * inner2 * v, 0.5);
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    const CMatrix m2 = geometric_mean(hermitian_part(g).matrix(),
                                      v.adjoint() * hermitian_part(h).matrix() * v, 0.5);
    const CMatrix m4 = 0.5 * (g + v.adjoint() * h * v);
    const CMatrix m3 = hermitian_part(m4).matrix();
    const RVector s1 = singular_values(m1);
    const RVector s2 = singular_values(m2);
    const RVector s3 = singular_values(m3);
    const RVector s4 = singular_values(m4);
    worst = std::min(worst, dominance_margin(s0, s1, std::max(s0(0), s1(0))));
    worst = std::min(worst, dominance_margin(s1, s2, std::max(s1(0), s2(0))));
    worst = std::min(worst, dominance_margin(s2, s3, std::max(s2(0), s3(0))));
    worst = std::min(worst, dominance_margin(s3, s4, std::max(s3(0), s4(0))));
  }
  return worst;
}

// lambda_j(2|X| - Re(A#tB)) <= lambda_j(Re(A#(1-t)B)) <= s_j(A#(1-t)B).
inline double eval_c13(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  const HMatrix abs_x = abs_value(m.X);
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    const RVector lhs = eigenvalues_hermitian(2.0 * abs_x - hermitian_part(g));
    const RVector mid = eigenvalues_hermitian(hermitian_part(h));
    const RVector rhs = singular_values(h);
    const double scale1 = std::max(std::abs(lhs(0)), std::abs(mid(0)));
    worst = std::min(worst, dominance_margin(lhs, mid, scale1));
    worst = std::min(worst, dominance_margin(mid, rhs, std::max(std::abs(mid(0)), rhs(0))));
  }
  return worst;
}

// ||X||_(k) <= 1/2 ||A#tB + V*(A#(1-t)B)V||_(k), V from the polar of X.
inline double eval_c14(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  witness_block(w, m);
  const CMatrix v = polar_decomposition(m.X).unitary;
  const RVector fan_x = ky_fan_norms(m.X);
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix sum = geometric_mean(m.A, m.B, t) +
                        v.adjoint() * geometric_mean(m.A, m.B, 1.0 - t) * v;
    const RVector fan_sum = ky_fan_norms(sum);
    const double scale = std::max(fan_x(0), fan_sum(0));
    for (Index k = 0; k < ctx.n; ++k)
      worst = std::min(worst, rel(0.5 * fan_sum(k) - fan_x(k), scale));
  }
  return worst;
}

// M APT => [A sigma* B, X; X*, B sigma A] APT for every registry mean.
inline double eval_c15(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  require_hyp(is_strictly_accretive(m.A, ctx.tol) && is_strictly_accretive(m.B, ctx.tol),
              "diagonal strictly accretive");
  witness_block(w, m);
  double worst = std::numeric_limits<double>::infinity();
  for (const OmfDescriptor& f : mean_sample()) {
    const CMatrix top = adjoint_mean(f, m.A, m.B);
    const CMatrix bottom = mean_sigma(f, m.B, m.A);
    worst = std::min(worst, apt_margin(Block2x2::from_blocks(top, m.X, m.Ystar, bottom)));
  }
  return worst;
}

// A, B sectorial at angle a; [cos^2(a) f(A), X; X*, cos^2(a) f(B)] APT
// => [f(Re A), X; X*, f(Re B)] PPT. The off-diagonal is fitted per f.
inline double eval_c16(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const CMatrix a = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  const CMatrix b = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(a, ctx.tol) && is_strictly_accretive(b, ctx.tol),
              "A, B strictly accretive");
  witness_matrix(w, "A", a);
  witness_matrix(w, "B", b);
  const double cos2 = std::pow(std::cos(alpha), 2);
  double worst = std::numeric_limits<double>::infinity();
  for (const OmfDescriptor& f : mean_sample()) {
    const CMatrix fa_scaled = cos2 * apply_omf(f, a);
    const CMatrix fb_scaled = cos2 * apply_omf(f, b);
    const CMatrix x =
        fit_offdiagonal(hermitian_part(fa_scaled), hermitian_part(fb_scaled), true, rng);
    const Block2x2 hyp_block = Block2x2::hermitian_offdiag(fa_scaled, x, fb_scaled);
    require_hyp(is_apt(hyp_block, ctx.tol), "cos^2-scaled f block APT");
    const HMatrix f_re_a = apply_omf_spd(f, hermitian_part(a));
    const HMatrix f_re_b = apply_omf_spd(f, hermitian_part(b));
    const Block2x2 conclusion =
        Block2x2::hermitian_offdiag(f_re_a.matrix(), x, f_re_b.matrix());
    worst = std::min(worst, ppt_margin(conclusion));
    if (w) (*w)["X_" + f.name()] = matrix_to_json(x);
  }
  return worst;
}

// Same hypothesis => [f(A) nabla_t f(B), X; X*, f(A nabla_t B)] APT on the grid.
inline double eval_c17(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const CMatrix a = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  const CMatrix b = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(a, ctx.tol) && is_strictly_accretive(b, ctx.tol),
              "A, B strictly accretive");
  witness_matrix(w, "A", a);
  witness_matrix(w, "B", b);
  const double cos2 = std::pow(std::cos(alpha), 2);
  double worst = std::numeric_limits<double>::infinity();
  for (const OmfDescriptor& f : mean_sample()) {
    const CMatrix fa = apply_omf(f, a);
    const CMatrix fb = apply_omf(f, b);
    const CMatrix x = fit_offdiagonal(hermitian_part(cos2 * fa), hermitian_part(cos2 * fb),
                                      /*both_forms=*/true, rng);
    require_hyp(is_apt(Block2x2::hermitian_offdiag(cos2 * fa, x, cos2 * fb), ctx.tol),
                "cos^2-scaled f block APT");
    for (const double t : t_grid(rng)) {
      const CMatrix top = arithmetic_mean(fa, fb, t);
      const CMatrix bottom = apply_omf(f, arithmetic_mean(b, a, t));
      worst = std::min(worst, apt_margin(Block2x2::hermitian_offdiag(top, x, bottom)));
    }
    if (w) (*w)["X_" + f.name()] = matrix_to_json(x);
  }
  return worst;
}

// Accretive Schwarz: A normal, M accretive, and one of AX=XA,
// X*A^{-1}X = XA^{-1}X*, B = kA => ||X|| <= ||A#B|| (spectral norm).
inline double eval_c18(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Index n = ctx.n;
  const int condition = static_cast<int>(ctx.seed % 3);
  const CommutingPair pair = random_commuting_pair(n, ctx.gen_margin, rng);
  const CMatrix a = pair.a;
  CMatrix x0;
  CMatrix b;
  if (condition == 2) {
    x0 = gaussian_matrix(n, rng);
    b = rng.uniform_in(0.2, 3.0) * a;
  } else {
    x0 = pair.x;
    b = random_sectorial(n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  }
  const HMatrix re_a = hermitian_part(a);
  const HMatrix re_b = hermitian_part(b);
  const double floor = 0.5 * std::min(lambda_min(re_a), lambda_min(re_b));
  const auto ok = [&](double s) {
    const Block2x2 m = Block2x2::hermitian_offdiag(a, s * x0, b);
    return lambda_min(hermitian_part(m.assemble())) >= floor;
  };
  const CMatrix x = bisect_scale(ok) * x0;
  const Block2x2 m = Block2x2::hermitian_offdiag(a, x, b);
  require_hyp((a * a.adjoint() - a.adjoint() * a).norm() <= 1e-10 * (1.0 + a.norm() * a.norm()),
              "A normal");
  require_hyp(is_strictly_accretive(a, ctx.tol) && is_strictly_accretive(b, ctx.tol),
              "A, B strictly accretive");
  require_hyp(is_accretive(m.assemble(), ctx.tol), "M accretive");
  const double comm_scale = 1.0 + a.norm() * x.norm();
  if (condition == 0)
    require_hyp((a * x - x * a).norm() <= 1e-10 * comm_scale, "AX = XA");
  else if (condition == 1)
    require_hyp((x.adjoint() * inverse(a) * x - x * inverse(a) * x.adjoint()).norm() <=
                    1e-8 * comm_scale,
                "X*A^{-1}X = XA^{-1}X*");
  witness_block(w, m);
  const double mean_norm = spectral_norm(geometric_mean(a, b, 0.5));
  return rel(mean_norm - spectral_norm(x), mean_norm);
}

// M accretive and AX = XA (A normal by construction)
// => ||X||_(k) <= 1/2 ||A+B||_(k) for all k.
inline double eval_c19(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Index n = ctx.n;
  const CommutingPair pair = random_commuting_pair(n, ctx.gen_margin, rng);
  const CMatrix a = pair.a;
  const CMatrix b = random_sectorial(n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  const double floor =
      0.5 * std::min(lambda_min(hermitian_part(a)), lambda_min(hermitian_part(b)));
  const auto ok = [&](double s) {
    return lambda_min(hermitian_part(Block2x2::hermitian_offdiag(a, s * pair.x, b).assemble())) >=
           floor;
  };
  const CMatrix x = bisect_scale(ok) * pair.x;
  const Block2x2 m = Block2x2::hermitian_offdiag(a, x, b);
  require_hyp(is_accretive(m.assemble(), ctx.tol), "M accretive");
  require_hyp((a * x - x * a).norm() <= 1e-10 * (1.0 + a.norm() * x.norm()), "AX = XA");
  witness_block(w, m);
  const RVector fan_x = ky_fan_norms(x);
  const RVector fan_ab = ky_fan_norms(a + b);
  const double scale = std::max(fan_x(0), fan_ab(0));
  double worst = std::numeric_limits<double>::infinity();
  for (Index k = 0; k < n; ++k) worst = std::min(worst, rel(0.5 * fan_ab(k) - fan_x(k), scale));
  return worst;
}

// Sandwich cos^2(a) Re f(A) <= f(Re A) <= Re f(A) for every registry f, plus
// the inverse chain Re(A^{-1}) <= (Re A)^{-1} <= sec^2(a) Re(A^{-1}).
inline double eval_c20(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const CMatrix a = random_sectorial(ctx.n, rng.uniform_in(0.0, 1.2), ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(a, ctx.tol), "A strictly accretive");
  witness_matrix(w, "A", a);
  const double measured = sector_angle(a, ctx.tol).alpha;
  const double cos2 = std::pow(std::cos(measured), 2);
  double worst = std::numeric_limits<double>::infinity();
  for (const OmfDescriptor& f : mean_sample()) {
    const HMatrix re_fa = hermitian_part(apply_omf(f, a));
    const HMatrix f_re_a = apply_omf_spd(f, hermitian_part(a));
    worst = std::min(worst, loewner_margin(HMatrix::symmetrized(cos2 * re_fa.matrix()), f_re_a));
    worst = std::min(worst, loewner_margin(f_re_a, re_fa));
  }
  const HMatrix re_inv = hermitian_part(inverse(a));
  const HMatrix inv_re = psd_power(hermitian_part(a), -1.0);
  worst = std::min(worst, loewner_margin(re_inv, inv_re));
  worst = std::min(worst,
                   loewner_margin(inv_re, HMatrix::symmetrized(re_inv.matrix() / cos2)));
  return worst;
}

// Re(A) sigma Re(B) <= Re(A sigma B) <= sec^2(a) (Re(A) sigma Re(B)) for every
// registry mean; in particular A sigma B stays strictly accretive.
inline double eval_c21(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.2);
  const CMatrix a = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  const CMatrix b = random_sectorial(ctx.n, alpha, ctx.gen_margin, rng);
  require_hyp(is_strictly_accretive(a, ctx.tol) && is_strictly_accretive(b, ctx.tol),
              "A, B strictly accretive");
  witness_matrix(w, "A", a);
  witness_matrix(w, "B", b);
  const double common =
      std::max(sector_angle(a, ctx.tol).alpha, sector_angle(b, ctx.tol).alpha);
  const double sec2 = std::pow(1.0 / std::cos(common), 2);
  double worst = std::numeric_limits<double>::infinity();
  for (const OmfDescriptor& f : mean_sample()) {
    const CMatrix s = mean_sigma(f, a, b);
    const HMatrix re_s = hermitian_part(s);
    const CMatrix re_mean =
        mean_sigma(f, hermitian_part(a).matrix(), hermitian_part(b).matrix());
    const HMatrix re_mean_h = HMatrix::symmetrized(re_mean);
    worst = std::min(worst, loewner_margin(re_mean_h, re_s));
    worst = std::min(worst, loewner_margin(re_s, HMatrix::symmetrized(sec2 * re_mean)));
    worst = std::min(worst, psd_margin(re_s));
  }
  return worst;
}

// Hiroshima on PPT blocks: ||X||_(k) <= ||A+B||_(k) for all k.
inline double eval_c22(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Block2x2 m = random_ppt_block(ctx.n, ctx.gen_margin, rng);
  require_hyp(is_ppt(m, ctx.tol), "M PPT");
  witness_block(w, m);
  const RVector fan_x = ky_fan_norms(m.X);
  const RVector fan_ab = ky_fan_norms(m.A + m.B);
  return dominance_margin(fan_x, fan_ab, std::max(fan_x(0), fan_ab(0)));
}

// PPT <=> geometric-mean diagonal PPT on the whole grid (t = 0 block is M).
inline double eval_c23(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Block2x2 m = random_ppt_block(ctx.n, ctx.gen_margin, rng);
  require_hyp(is_ppt(m, ctx.tol), "M PPT");
  witness_block(w, m);
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    worst = std::min(worst, ppt_margin(Block2x2::from_blocks(g, m.X, m.Ystar, h)));
  }
  return worst;
}

// PPT case bounds on |X| and |X*| through means with the polar unitary of X,
// and the eigenvalue bound lambda_j(2|X| - A#tB) <= lambda_j(A#(1-t)B).
inline double eval_c24(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const Block2x2 m = random_ppt_block(ctx.n, ctx.gen_margin, rng);
  require_hyp(is_ppt(m, ctx.tol), "M PPT");
  witness_block(w, m);
  const CMatrix u = polar_decomposition(m.X).unitary;
  const HMatrix abs_x = abs_value(m.X);
  const HMatrix abs_xs = abs_value(m.X.adjoint());
  double worst = std::numeric_limits<double>::infinity();
  for (const double t : t_grid(rng)) {
    const CMatrix b_conj = HMatrix::symmetrized(u.adjoint() * m.B * u).matrix();
    const CMatrix a_conj = HMatrix::symmetrized(u * m.A * u.adjoint()).matrix();
    const CMatrix bound1 = geometric_mean(geometric_mean(m.A, b_conj, t),
                                          geometric_mean(m.A, b_conj, 1.0 - t), 0.5);
    worst = std::min(worst, loewner_margin(abs_x, HMatrix::symmetrized(bound1)));
    const CMatrix bound2 = geometric_mean(geometric_mean(a_conj, m.B, t),
                                          geometric_mean(a_conj, m.B, 1.0 - t), 0.5);
    worst = std::min(worst, loewner_margin(abs_xs, HMatrix::symmetrized(bound2)));
    const CMatrix g = geometric_mean(m.A, m.B, t);
    const CMatrix h = geometric_mean(m.A, m.B, 1.0 - t);
    const CMatrix bound3 = geometric_mean(g, u.adjoint() * h * u, 0.5);
    worst = std::min(worst, loewner_margin(abs_x, HMatrix::symmetrized(bound3)));
    const CMatrix bound4 = geometric_mean(u * g * u.adjoint(), h, 0.5);
    worst = std::min(worst, loewner_margin(abs_xs, HMatrix::symmetrized(bound4)));
    const RVector lhs = eigenvalues_hermitian(
        HMatrix::symmetrized(2.0 * abs_x.matrix() - g));
    const RVector rhs = eigenvalues_hermitian(HMatrix::symmetrized(h));
    worst = std::min(worst,
                     dominance_margin(lhs, rhs, std::max(std::abs(lhs(0)), std::abs(rhs(0)))));
  }
  return worst;
}

// APT with strictly accretive diagonal: ||M||_(k) <= sec(a) ||A+B||_(k) over
// the padded Ky Fan family, and the A#B diagonal block stays APT.
inline double eval_c25(const TrialContext& ctx, json* w) {
  Rng rng(ctx.seed);
  const double alpha = rng.uniform_in(0.0, 1.0);
  const Block2x2 m = random_apt_block(ctx.n, alpha, ctx.gen_margin, rng, /*general_offdiag=*/true);
  require_hyp(is_apt(m, ctx.tol), "M APT");
  require_hyp(is_strictly_accretive(m.A, ctx.tol) && is_strictly_accretive(m.B, ctx.tol),
              "diagonal strictly accretive");
  witness_block(w, m);
  const CMatrix full = m.assemble();
  const double sec_a = sector_angle(full, ctx.tol).sec();
  const RVector fan_m = ky_fan_norms(full);
  const RVector s_ab = singular_values(m.A + m.B);
  double worst = std::numeric_limits<double>::infinity();
  double padded_sum = 0.0;
  const double scale = std::max(fan_m(0), s_ab(0));
  for (Index k = 0; k < 2 * ctx.n; ++k) {
    if (k < ctx.n) padded_sum += s_ab(k);
    worst = std::min(worst, rel(sec_a * padded_sum - fan_m(k), scale));
  }
  const CMatrix g = geometric_mean(m.A, m.B, 0.5);
  worst = std::min(worst, apt_margin(Block2x2::from_blocks(g, m.X, m.Ystar, g)));
  return worst;
}

}  // namespace claims_detail

struct Claim {
  std::string id;
  std::string anchor;      // short result description
  std::string hypothesis;  // hypothesis summary for the listing
  int section = 3;         // result group exposed by the CLI filter
  bool refutation = false;
  bool fixed_instance = false;
  double (*evaluate)(const TrialContext&, json*) = nullptr;
};

inline const std::vector<Claim>& claim_registry() {
  using namespace claims_detail;
  static const std::vector<Claim> registry = {
      {"C1", "accretive Schur complement (forward)",
       "A,B strictly accretive; [A,X;X*,B] accretive", 3, false, false, &eval_c1},
      {"C2", "accretive Schur complement (reverse, cos-angle scaling)",
       "B sectorial at angle a; A - XB^{-1}X* accretive", 3, false, false, &eval_c2},
      {"C3", "[A, cos(a)I; cos(a)I, A^{-1}] accretive",
       "A strictly accretive with sector angle a", 3, false, false, &eval_c3},
      {"C4", "[A, I; I, A^{-1}] never accretive (refutation)",
       "A strictly accretive, clearly non-Hermitian", 3, true, false, &eval_c4},
      {"C5", "geometric-mean diagonal preserves APT (all t)",
       "[A,X;Y*,B] APT, A,B strictly accretive", 3, false, false, &eval_c5},
      {"C6", "2 s_j(X) <= s_j(M)", "[A,X;X*,B] accretive", 3, false, false, &eval_c6},
      {"C7", "2||X||_(k) <= sec(a)||A+B||_(k)", "[A,X;X*,B] APT, sectorial at angle a", 3, false,
       false, &eval_c7},
      {"C8", "fixed 2x2 pair: pinned singular values of A-B and the direct sum",
       "fixed matrices; s_1(A-B) > s_1(A(+)B)", 3, false, true, &eval_c8},
      {"C9", "||X||_(k) <= sec(a)/2 ||A#tB + A#(1-t)B||_(k)",
       "[A,X;X*,B] APT, sectorial at angle a", 3, false, false, &eval_c9},
      {"C10", "|Z| below outer # of Re parts of conjugated means",
       "[A,X;Y*,B] APT; Z=(X+Y)/2, V from polar of Z", 3, false, false, &eval_c10},
      {"C11", "|Z| below averaged Re of means", "[A,X;Y*,B] APT; Z=(X+Y)/2", 3, false, false,
       &eval_c11},
      {"C12", "four-link singular-value chain for Z", "[A,X;Y*,B] APT", 3, false, false,
       &eval_c12},
      {"C13", "lambda_j(2|X| - Re(A#tB)) <= lambda_j(Re(A#(1-t)B)) <= s_j(A#(1-t)B)",
       "[A,X;X*,B] APT", 3, false, false, &eval_c13},
      {"C14", "||X||_(k) <= 1/2 ||A#tB + V*(A#(1-t)B)V||_(k)",
       "[A,X;X*,B] APT; V from polar of X", 3, false, false, &eval_c14},
      {"C15", "adjoint-mean diagonal preserves APT", "[A,X;X*,B] APT, every registry mean", 3,
       false, false, &eval_c15},
      {"C16", "cos^2-scaled f block APT implies f(Re) block PPT",
       "A,B sectorial at angle a; scaled f block APT", 3, false, false, &eval_c16},
      {"C17", "f-arithmetic-mean diagonal APT", "A,B sectorial at angle a; scaled f block APT",
       3, false, false, &eval_c17},
      {"C18", "accretive Schwarz: ||X|| <= ||A#B||",
       "A normal; M accretive; AX=XA or X*A^{-1}X=XA^{-1}X* or B=kA", 3, false, false,
       &eval_c18},
      {"C19", "commuting case: ||X||_(k) <= 1/2 ||A+B||_(k)", "M accretive; AX=XA, A normal", 3,
       false, false, &eval_c19},
      {"C20", "cos^2(a) Re f(A) <= f(Re A) <= Re f(A); inverse chain",
       "A strictly accretive at angle a; every registry f", 2, false, false, &eval_c20},
      {"C21", "Re(A) s Re(B) <= Re(AsB) <= sec^2(a)(Re(A) s Re(B))",
       "A,B sectorial at angle a; every registry mean", 2, false, false, &eval_c21},
      {"C22", "PPT: ||X||_(k) <= ||A+B||_(k)", "[A,X;X*,B] PPT", 2, false, false, &eval_c22},
      {"C23", "PPT iff geometric-mean diagonal PPT (all t)", "[A,X;X*,B] PPT", 2, false, false,
       &eval_c23},
      {"C24", "PPT bounds on |X|, |X*| via means; eigenvalue bound", "[A,X;X*,B] PPT", 2, false,
       false, &eval_c24},
      {"C25", "||M||_(k) <= sec(a)||A+B||_(k); A#B diagonal APT",
       "[A,X;Y*,B] APT, strictly accretive diagonal", 2, false, false, &eval_c25},
  };
  return registry;
}

inline const Claim& find_claim(const std::string& id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return c;
  throw RangeError("unknown claim id: " + id);
}

struct ClaimVerdict {
  std::string claim_id;
  Index n = 0;
  uint64_t trial_seed = 0;
  double min_margin = 0.0;
  bool pass = false;
  json witness;  // populated on failure
};

inline bool claim_pass(const Claim& c, double margin, const ToleranceProfile& tol) {
  return c.refutation ? margin > 0.0 : margin >= -tol.tol_margin;
}

/// Evaluate one trial, regenerating (with a deterministically derived seed)
/// when the instance draws an untrustworthy eigenbasis or the generator gives
/// up. Retries are a pure function of the original seed.
inline double evaluate_trial(const Claim& claim, TrialContext ctx, json* witness,
                             int attempts = 8) {
  for (int attempt = 1;; ++attempt) {
    try {
      return claim.evaluate(ctx, witness);
    } catch (const IllConditionedEigenbasisError&) {
      if (attempt >= attempts) throw;
    } catch (const GenerationFailedError&) {
      if (attempt >= attempts) throw;
    }
    ctx.seed = splitmix64(ctx.seed);
  }
}

inline ClaimVerdict verify_claim(const std::string& id, Index n, uint64_t trial_seed,
                                 const ToleranceProfile& tol = {}) {
  const Claim& claim = find_claim(id);
  const TrialContext ctx{n, trial_seed, tol};
  ClaimVerdict verdict;
  verdict.claim_id = id;
  verdict.n = n;
  verdict.trial_seed = trial_seed;
  verdict.min_margin = evaluate_trial(claim, ctx, nullptr);
  verdict.pass = claim_pass(claim, verdict.min_margin, tol);
  if (!verdict.pass) {
    json w;
    evaluate_trial(claim, ctx, &w);
    w["n"] = n;
    w["seed"] = trial_seed;
    w["min_margin"] = verdict.min_margin;
    verdict.witness = std::move(w);
  }
  return verdict;
}

/// seed_trial = mix64(campaign_seed, claim_id_hash, trial_index).
inline uint64_t derive_trial_seed(uint64_t campaign_seed, const std::string& claim_id,
                                  uint64_t trial_index) {
  return mix64(campaign_seed, fnv1a64(claim_id), trial_index);
}

struct CampaignConfig {
  std::vector<std::string> claims;  // empty = whole registry
  long trials = 100;                // per claim per dimension
  std::vector<Index> dims = {1, 2, 3, 4, 6};
  uint64_t seed = 0;
  ToleranceProfile tol;
  double gen_margin = 1e-3;  // instance-generator strictness margin
  int threads = 0;  // 0 = SECTOR_VERIFY_THREADS or hardware concurrency

  void validate() const {
    if (trials < 0) throw RangeError("CampaignConfig: trials must be >= 0");
    if (dims.empty()) throw RangeError("CampaignConfig: dims must be nonempty");
    for (const Index n : dims)
      if (n < 1) throw RangeError("CampaignConfig: dims entries must be >= 1");
    if (!(gen_margin > 0.0)) throw RangeError("CampaignConfig: gen_margin must be positive");
    tol.validate();
    for (const std::string& id : claims) find_claim(id);
  }

  std::vector<std::string> resolved_claims() const {
    if (!claims.empty()) return claims;
    std::vector<std::string> all;
    for (const Claim& c : claim_registry()) all.push_back(c.id);
    return all;
  }
};

struct ClaimAggregate {
  std::string id;
  long trials = 0;
  long passes = 0;
  long failures = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  Index worst_dim = 0;
  uint64_t worst_seed = 0;
  double wall_s = 0.0;
  std::vector<json> witnesses;  // up to 3, for failures
  json details;                 // fixed-instance claims record computed values
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<ClaimAggregate> claims;
  long total_failures = 0;
  double wall_s = 0.0;
};

inline int resolve_threads(int requested) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  if (const char* env = std::getenv("SECTOR_VERIFY_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

inline CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto campaign_start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = config;
  const int threads = resolve_threads(config.threads);

  for (const std::string& id : config.resolved_claims()) {
    const Claim& claim = find_claim(id);
    const auto claim_start = std::chrono::steady_clock::now();
    ClaimAggregate agg;
    agg.id = id;

    // Fixed-instance claims run exactly once; others sweep dims x trials.
    const std::vector<Index> dims = claim.fixed_instance ? std::vector<Index>{2} : config.dims;
    const long trials_per_dim = claim.fixed_instance ? std::min<long>(1, config.trials)
                                                     : config.trials;
    const long total = static_cast<long>(dims.size()) * trials_per_dim;
    std::vector<double> margins(static_cast<size_t>(total));
    std::atomic<long> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto worker = [&]() {
      for (long i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        try {
          const Index n = dims[static_cast<size_t>(i / trials_per_dim)];
          const uint64_t seed = derive_trial_seed(config.seed, id, static_cast<uint64_t>(i));
          const TrialContext ctx{n, seed, config.tol, config.gen_margin};
          margins[static_cast<size_t>(i)] = evaluate_trial(claim, ctx, nullptr);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };

    {
      std::vector<std::thread> pool;
      const int spawn = std::max(0, std::min<int>(threads, static_cast<int>(total)) - 1);
      pool.reserve(static_cast<size_t>(spawn));
      for (int k = 0; k < spawn; ++k) pool.emplace_back(worker);
      worker();
      for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    agg.trials = total;
    for (long i = 0; i < total; ++i) {
      const Index n = dims[static_cast<size_t>(i / trials_per_dim)];
      const uint64_t seed = derive_trial_seed(config.seed, id, static_cast<uint64_t>(i));
      const double margin = margins[static_cast<size_t>(i)];
      if (claim_pass(claim, margin, config.tol)) {
        ++agg.passes;
      } else {
        ++agg.failures;
        if (agg.witnesses.size() < 3) {
          json w;
          evaluate_trial(claim, TrialContext{n, seed, config.tol, config.gen_margin}, &w);
          w["n"] = n;
          w["seed"] = seed;
          w["min_margin"] = margin;
          agg.witnesses.push_back(std::move(w));
        }
      }
      if (margin < agg.min_margin) {
        agg.min_margin = margin;
        agg.worst_dim = n;
        agg.worst_seed = seed;
      }
    }
    if (claim.fixed_instance && total > 0) {
      json details;
      evaluate_trial(claim, TrialContext{dims[0], derive_trial_seed(config.seed, id, 0), config.tol, config.gen_margin},
                     &details);
      agg.details = std::move(details);
    }
    agg.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - claim_start)
                     .count();
    report.total_failures += agg.failures;
    report.claims.push_back(std::move(agg));
  }
  report.wall_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - campaign_start).count();
  return report;
}

inline json config_to_json(const CampaignConfig& config) {
  return json{{"claims", config.resolved_claims()},
              {"trials", config.trials},
              {"dims", config.dims},
              {"seed", config.seed},
              {"gen", {{"margin", config.gen_margin}}},
              {"tol",
               {{"tol_psd", config.tol.tol_psd},
                {"tol_eq", config.tol.tol_eq},
                {"tol_margin", config.tol.tol_margin}}}};
}

/// Report JSON. The wall-time fields are the only nondeterministic content.
inline json report_to_json(const CampaignReport& report) {
  json claims = json::array();
  for (const ClaimAggregate& agg : report.claims) {
    json entry{{"id", agg.id},
               {"trials", agg.trials},
               {"passes", agg.passes},
               {"failures", agg.failures},
               {"wall_time_s", agg.wall_s}};
    if (agg.trials > 0) {
      entry["min_margin"] = agg.min_margin;
      entry["worst_dim"] = agg.worst_dim;
      entry["worst_seed"] = agg.worst_seed;
    } else {
      entry["min_margin"] = nullptr;
      entry["worst_dim"] = nullptr;
      entry["worst_seed"] = nullptr;
    }
    if (!agg.witnesses.empty()) entry["witnesses"] = agg.witnesses;
    if (!agg.details.is_null()) entry["details"] = agg.details;
    claims.push_back(std::move(entry));
  }
  return json{{"format_version", kReportFormatVersion},
              {"tool_version", kToolVersion},
              {"config", config_to_json(report.config)},
              {"claims", std::move(claims)},
              {"total_failures", report.total_failures},
              {"wall_time_s", report.wall_s}};
}

/// Copy with the wall-time fields removed, for byte-comparisons.
inline json strip_wall_time(json report) {
  report.erase("wall_time_s");
  for (json& entry : report.at("claims")) entry.erase("wall_time_s");
  return report;
}

}  // namespace sectorial
