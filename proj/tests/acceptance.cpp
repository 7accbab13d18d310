// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Thresholds are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sectorial/claims.hpp"
#include "sectorial/means.hpp"

using namespace sectorial;

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  std::string reason;
};

void fail_if(bool bad, const std::string& reason) {
  if (bad) throw Failure{reason};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CMatrix fixed_a() {
  CMatrix a(2, 2);
  a << Complex(2, 2), Complex(-1, 2), Complex(3, 2), Complex(1, 1);
  return a;
}

CMatrix fixed_b() {
  CMatrix b(2, 2);
  b << Complex(1, 2), Complex(-2, -1), Complex(-2, -1), Complex(5, 1);
  return b;
}

// 1. Pinned singular values of A-B and A(+)B to 1e-4; s1(A-B) > s1(A(+)B);
//    runtime under one second.
std::string criterion_pinned_values() {
  const auto start = Clock::now();
  const CMatrix a = fixed_a();
  const CMatrix b = fixed_b();
  const RVector s_diff = singular_values(a - b);
  CMatrix sum = CMatrix::Zero(4, 4);
  sum.topLeftCorner(2, 2) = a;
  sum.bottomRightCorner(2, 2) = b;
  const RVector s_sum = singular_values(sum);
  const double expected_diff[2] = {7.42443, 2.42443};
  const double expected_sum[4] = {6.30618, 5.1112, 1.36954, 1.11002};
  double worst = 0.0;
  for (int j = 0; j < 2; ++j)
    worst = std::max(worst, std::abs(s_diff(j) - expected_diff[j]));
  for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(s_sum(j) - expected_sum[j]));
  fail_if(worst > 1e-4, "singular value deviates by " + fmt(worst));
  fail_if(!(s_diff(0) > s_sum(0)), "s1(A-B) not larger than s1(A(+)B)");
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  fail_if(elapsed >= 1.0, "runtime " + fmt(elapsed) + "s exceeds 1s");
  return "max deviation " + fmt(worst) + ", s1 " + fmt(s_diff(0)) + " > " + fmt(s_sum(0)) +
         ", " + fmt(elapsed * 1e3) + "ms";
}

// 2. Closed-form radicals match the computed squares to 1e-9.
std::string criterion_closed_forms() {
  const RVector s_diff = singular_values(fixed_a() - fixed_b());
  CMatrix sum = CMatrix::Zero(4, 4);
  sum.topLeftCorner(2, 2) = fixed_a();
  sum.bottomRightCorner(2, 2) = fixed_b();
  const RVector s_sum = singular_values(sum);
  const double d1 = std::abs(s_diff(0) * s_diff(0) - (61.0 + 5.0 * std::sqrt(97.0)) / 2.0);
  const double d2 = std::abs(s_sum(0) * s_sum(0) - (41.0 + 3.0 * std::sqrt(165.0)) / 2.0);
  fail_if(d1 > 1e-9, "s1(A-B)^2 deviates by " + fmt(d1));
  fail_if(d2 > 1e-9, "s1(A(+)B)^2 deviates by " + fmt(d2));
  return "radical deviations " + fmt(d1) + ", " + fmt(d2);
}

// 3. Property campaign: C1-C7, C9-C25, 1000 trials per dimension over
//    n in {1,2,3,4,6}, every margin >= -1e-6, under 10 minutes.
std::string criterion_campaign() {
  const auto start = Clock::now();
  CampaignConfig config;
  config.trials = 1000;
  config.dims = {1, 2, 3, 4, 6};
  config.seed = 20260808;
  for (const Claim& c : claim_registry())
    if (c.id != "C8") config.claims.push_back(c.id);
  const CampaignReport report = run_campaign(config);
  double worst = std::numeric_limits<double>::infinity();
  std::string worst_id;
  for (const ClaimAggregate& agg : report.claims) {
    fail_if(agg.failures != 0,
            agg.id + ": " + std::to_string(agg.failures) + " failures, min margin " +
                fmt(agg.min_margin) + " (seed " + std::to_string(agg.worst_seed) + ")");
    fail_if(agg.min_margin < -1e-6, agg.id + ": margin " + fmt(agg.min_margin));
    if (agg.min_margin < worst) {
      worst = agg.min_margin;
      worst_id = agg.id;
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  fail_if(elapsed >= 600.0, "runtime " + fmt(elapsed) + "s exceeds 10 minutes");
  return "24 claims x 5000 trials, worst margin " + fmt(worst) + " (" + worst_id + "), " +
         fmt(elapsed) + "s";
}

// 4. Refutation claim C4 reports non-accretivity on 1000/1000 instances.
std::string criterion_refutation() {
  CampaignConfig config;
  config.claims = {"C4"};
  config.trials = 200;
  config.dims = {1, 2, 3, 4, 6};
  config.seed = 11;
  const CampaignReport report = run_campaign(config);
  const ClaimAggregate& agg = report.claims.at(0);
  fail_if(agg.trials != 1000, "expected 1000 trials, got " + std::to_string(agg.trials));
  fail_if(agg.passes != 1000,
          std::to_string(agg.passes) + "/1000 refuted; min margin " + fmt(agg.min_margin));
  return "1000/1000 non-accretive, min margin " + fmt(agg.min_margin);
}

// 5. Oracle equivalences: Riccati residual, sigma_f(power) vs the weighted
//    geometric mean, and adjoint-mean self-duality.
std::string criterion_oracles() {
  double worst_riccati = 0.0, worst_sigma = 0.0, worst_adjoint = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    Rng rng(mix64(909, 0, static_cast<uint64_t>(rep)));
    const Index n = 1 + static_cast<Index>(rep % 4);
    const CMatrix a = random_pd(n, 1e-3, rng).matrix();
    const CMatrix b = random_pd(n, 1e-3, rng).matrix();
    const CMatrix g = geometric_mean(a, b, 0.5);
    worst_riccati =
        std::max(worst_riccati, (g * inverse(a) * g - b).norm() / (1.0 + b.norm()));
    std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 3; ++i) grid.push_back(rng.uniform());
    for (const double t : grid) {
      const CMatrix geo = geometric_mean(a, b, t);
      if (t > 0.0 && t <= 1.0) {
        const CMatrix sig = mean_sigma(OmfDescriptor::power(std::max(t, 1e-12)), a, b);
        worst_sigma = std::max(worst_sigma, (sig - geo).norm() / (1.0 + geo.norm()));
        const CMatrix adj = adjoint_mean(OmfDescriptor::power(t), a, b);
        worst_adjoint = std::max(worst_adjoint, (adj - geo).norm() / (1.0 + geo.norm()));
      }
    }
  }
  fail_if(worst_riccati > 1e-8, "Riccati residual " + fmt(worst_riccati));
  fail_if(worst_sigma > 1e-10, "sigma/geometric deviation " + fmt(worst_sigma));
  fail_if(worst_adjoint > 1e-10, "adjoint/geometric deviation " + fmt(worst_adjoint));
  return "riccati " + fmt(worst_riccati) + ", sigma " + fmt(worst_sigma) + ", adjoint " +
         fmt(worst_adjoint);
}

// 6. Degeneration: on Hermitian (alpha = 0) instances the C7/C9 margins match
//    the PPT-machinery margins (sec = 1, PD mean path) to 1e-9.
std::string criterion_degeneration() {
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    Rng rng(mix64(606, 0, static_cast<uint64_t>(rep)));
    const Index n = 1 + static_cast<Index>(rep % 4);
    const Block2x2 m = random_ppt_block(n, 1e-3, rng);
    const double sec_measured = sector_angle(m.assemble()).sec();
    fail_if(sec_measured != 1.0, "Hermitian instance measured sec != 1");
    worst = std::max(worst, std::abs(claims_detail::c7_margin(m, sec_measured) -
                                     claims_detail::c7_margin(m, 1.0)));
    const std::vector<double> grid = claims_detail::t_grid(rng);
    const double apt_side =
        claims_detail::c9_margin(m, sec_measured, grid, MeanPath::force_complex);
    const double ppt_side = claims_detail::c9_margin(m, 1.0, grid, MeanPath::force_spd);
    worst = std::max(worst, std::abs(apt_side - ppt_side));
  }
  fail_if(worst > 1e-9, "margin gap " + fmt(worst));
  return "200 instances, worst C7/C9 margin gap " + fmt(worst);
}

// 7. PPT sanity: the entangled 4x4 block is PSD but not PPT, identity blocks
//    are PPT, and the predicate agrees with a direct eigensolve everywhere.
std::string criterion_ppt_sanity() {
  const ToleranceProfile tol;
  const auto direct_psd = [&](const CMatrix& candidate) {
    const CMatrix herm = 0.5 * (candidate + candidate.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    const double lmin = solver.eigenvalues()(0);
    const double lmax = std::max(std::abs(solver.eigenvalues()(0)),
                                 std::abs(solver.eigenvalues()(solver.eigenvalues().size() - 1)));
    return lmin >= -tol.psd_floor(herm.rows()) * (1.0 + lmax);
  };
  const auto direct_ppt = [&](const Block2x2& m) {
    return direct_psd(m.assemble()) && direct_psd(partial_transpose(m).assemble());
  };

  CMatrix bell_m = CMatrix::Zero(4, 4);
  bell_m(0, 0) = bell_m(0, 3) = bell_m(3, 0) = bell_m(3, 3) = Complex(1);
  const Block2x2 bell = Block2x2::disassemble(bell_m);
  fail_if(!direct_psd(bell.assemble()), "entangled block not PSD");
  fail_if(is_ppt(bell, tol), "entangled block flagged PPT");
  fail_if(!is_ppt(Block2x2::disassemble(CMatrix::Identity(4, 4)), tol),
          "identity block not PPT");

  long agreements = 0, total = 0;
  for (int rep = 0; rep < 100; ++rep) {
    Rng rng(mix64(707, 0, static_cast<uint64_t>(rep)));
    const Index n = 1 + static_cast<Index>(rep % 3);
    Block2x2 m = Block2x2::hermitian_offdiag(CMatrix::Zero(n, n), CMatrix::Zero(n, n),
                                             CMatrix::Zero(n, n));
    switch (rep % 3) {
      case 0:
        m = random_ppt_block(n, 1e-3, rng);
        break;
      case 1:  // Hermitian diagonal, generally indefinite
        m = Block2x2::hermitian_offdiag(gaussian_hermitian(n, rng).matrix(),
                                        gaussian_matrix(n, rng),
                                        gaussian_hermitian(n, rng).matrix());
        break;
      default:  // PSD diagonal with an oversized off-diagonal
        m = Block2x2::hermitian_offdiag(random_pd(n, 1e-3, rng).matrix(),
                                        3.0 * gaussian_matrix(n, rng),
                                        random_pd(n, 1e-3, rng).matrix());
        break;
    }
    ++total;
    if (is_ppt(m, tol) == direct_ppt(m)) ++agreements;
  }
  fail_if(agreements != total,
          std::to_string(agreements) + "/" + std::to_string(total) + " oracle agreement");
  return "entangled/identity verdicts correct, " + std::to_string(agreements) + "/" +
         std::to_string(total) + " oracle agreement";
}

// 8. Determinism: identical config twice gives byte-identical reports once the
//    wall-time fields are removed.
std::string criterion_determinism() {
  CampaignConfig config;
  config.trials = 10;
  config.dims = {1, 2, 3};
  config.seed = 424242;
  config.claims = {"C1", "C4", "C5", "C8", "C12", "C17", "C21", "C25"};
  const std::string r1 = strip_wall_time(report_to_json(run_campaign(config))).dump();
  const std::string r2 = strip_wall_time(report_to_json(run_campaign(config))).dump();
  fail_if(r1 != r2, "reports differ across identical runs");
  return std::to_string(r1.size()) + " report bytes identical across runs";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "pinned singular values", criterion_pinned_values},
      {2, "closed-form cross-checks", criterion_closed_forms},
      {3, "property campaign", criterion_campaign},
      {4, "refutation claim", criterion_refutation},
      {5, "oracle equivalences", criterion_oracles},
      {6, "alpha-zero degeneration", criterion_degeneration},
      {7, "PPT sanity", criterion_ppt_sanity},
      {8, "report determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    try {
      const std::string detail = criterion.run();
      std::printf("[PASS] criterion %d (%s): %s\n", criterion.number, criterion.name,
                  detail.c_str());
    } catch (const Failure& f) {
      ++failures;
      std::printf("[FAIL] criterion %d (%s): %s\n", criterion.number, criterion.name,
                  f.reason.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion %d (%s): unexpected error: %s\n", criterion.number,
                  criterion.name, e.what());
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
