// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "sectorial/instance_gen.hpp"
#include "sectorial/means.hpp"
#include "test_support.hpp"

using namespace sectorial;
using namespace test_support;

namespace {

const std::vector<OmfDescriptor>& sigma_sample() {
  static const std::vector<OmfDescriptor> fs = {
      OmfDescriptor::power(0.5), OmfDescriptor::power(0.25), OmfDescriptor::harmonic_like(),
      OmfDescriptor::log_mean(), OmfDescriptor::affine(0.5)};
  return fs;
}

}  // namespace

TEST_SUITE_BEGIN("means");

TEST_CASE("arithmetic mean") {
  Rng rng(301);
  const CMatrix a = gaussian_matrix(3, rng);
  CHECK(approx_equal(arithmetic_mean(a, a, 0.3), a, 1e-15));
  CHECK(approx_equal(arithmetic_mean(CMatrix::Zero(3, 3), a, 0.5), 0.5 * a, 1e-15));
  CHECK(approx_equal(arithmetic_mean(diag2(C(1), C(2)), diag2(C(3), C(4)), 0.25),
                     diag2(C(1.5), C(2.5)), 1e-15));
  CHECK_THROWS_AS(arithmetic_mean(a, a, 1.1), RangeError);
  CHECK_THROWS_AS(arithmetic_mean(a, CMatrix::Identity(2, 2), 0.5), DimensionError);
}

TEST_CASE("geometric mean basics") {
  CHECK(approx_equal(geometric_mean(diag2(C(1), C(4)), diag2(C(9), C(16)), 0.5),
                     diag2(C(3), C(8)), 1e-12));
  SUBCASE("idempotent on both paths") {
    Rng rng(303);
    const CMatrix pd = random_pd(3, 1e-2, rng).matrix();
    const CMatrix acc = random_sectorial(3, 0.8, 1e-3, rng);
    for (double t : {0.25, 0.5, 0.9}) {
      CHECK(approx_equal(geometric_mean(pd, pd, t), pd, 1e-11));
      CHECK(approx_equal(geometric_mean(acc, acc, t), acc, 1e-10));
    }
  }
  SUBCASE("exact endpoints") {
    Rng rng(305);
    const CMatrix a = random_sectorial(2, 0.5, 1e-3, rng);
    const CMatrix b = random_sectorial(2, 0.5, 1e-3, rng);
    CHECK(geometric_mean(a, b, 0.0) == a);
    CHECK(geometric_mean(a, b, 1.0) == b);
  }
}

TEST_CASE("riccati oracle: the midpoint mean solves G A^{-1} G = B") {
  Rng rng(307);
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = 1 + static_cast<Index>(rep % 4);
    const CMatrix a = random_pd(n, 1e-2, rng).matrix();
    const CMatrix b = random_pd(n, 1e-2, rng).matrix();
    const CMatrix g = geometric_mean(a, b, 0.5);
    CHECK((g * inverse(a) * g - b).norm() <= 1e-8 * b.norm());
  }
}

TEST_CASE("mean_sigma consistency") {
  Rng rng(311);
  SUBCASE("power descriptor reproduces the geometric mean") {
    for (int rep = 0; rep < 8; ++rep) {
      const CMatrix a = random_pd(3, 1e-2, rng).matrix();
      const CMatrix b = random_pd(3, 1e-2, rng).matrix();
      for (double t : {0.25, 0.5, 0.75}) {
        const CMatrix via_sigma = mean_sigma(OmfDescriptor::power(t), a, b);
        const CMatrix via_geo = geometric_mean(a, b, t);
        CHECK((via_sigma - via_geo).norm() <= 1e-10 * (1.0 + via_geo.norm()));
      }
    }
  }
  SUBCASE("power descriptor on strictly accretive pairs") {
    for (int rep = 0; rep < 5; ++rep) {
      const CMatrix a = random_sectorial(3, rng.uniform_in(0.1, 1.0), 1e-3, rng);
      const CMatrix b = random_sectorial(3, rng.uniform_in(0.1, 1.0), 1e-3, rng);
      const CMatrix via_sigma = mean_sigma(OmfDescriptor::power(0.5), a, b);
      const CMatrix via_geo = geometric_mean(a, b, 0.5);
      CHECK((via_sigma - via_geo).norm() <= 1e-10 * (1.0 + via_geo.norm()));
    }
  }
  SUBCASE("affine descriptor reproduces the arithmetic mean") {
    const CMatrix a = random_pd(4, 1e-2, rng).matrix();
    const CMatrix b = random_pd(4, 1e-2, rng).matrix();
    for (double t : {0.0, 0.3, 1.0}) {
      const CMatrix via_sigma = mean_sigma(OmfDescriptor::affine(t), a, b);
      const CMatrix via_arith = arithmetic_mean(a, b, t);
      CHECK((via_sigma - via_arith).norm() <= 1e-10 * (1.0 + via_arith.norm()));
    }
  }
  SUBCASE("harmonic-like scalar value") {
    const CMatrix m = mean_sigma(OmfDescriptor::harmonic_like(), mat1(C(1)), mat1(C(3)));
    CHECK(m(0, 0).real() == doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("adjoint mean") {
  SUBCASE("adjoint of the arithmetic mean on scalars is harmonic") {
    const CMatrix m = adjoint_mean(OmfDescriptor::affine(0.5), mat1(C(1)), mat1(C(3)));
    CHECK(m(0, 0).real() == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("geometric mean is self-adjoint") {
    Rng rng(313);
    for (int rep = 0; rep < 10; ++rep) {
      const Index n = 1 + static_cast<Index>(rep % 3);
      const CMatrix a = random_pd(n, 1e-2, rng).matrix();
      const CMatrix b = random_pd(n, 1e-2, rng).matrix();
      for (double t : {0.25, 0.5, 0.8}) {
        const CMatrix adj = adjoint_mean(OmfDescriptor::power(t), a, b);
        const CMatrix geo = geometric_mean(a, b, t);
        CHECK((adj - geo).norm() <= 1e-10 * (1.0 + geo.norm()));
      }
    }
  }
  SUBCASE("idempotent") {
    Rng rng(317);
    const CMatrix a = random_pd(3, 1e-2, rng).matrix();
    for (const OmfDescriptor& f : sigma_sample())
      CHECK(approx_equal(adjoint_mean(f, a, a), a, 1e-10));
  }
}

TEST_CASE("weighted geometric mean properties") {
  Rng rng(319);
  const ToleranceProfile tol;
  SUBCASE("psd output and weight flip") {
    for (int rep = 0; rep < 8; ++rep) {
      const CMatrix a = random_pd(3, 1e-2, rng).matrix();
      const CMatrix b = random_pd(3, 1e-2, rng).matrix();
      const double t = rng.uniform();
      const CMatrix g = geometric_mean(a, b, t);
      CHECK(is_psd(HMatrix::certify(g, 1e-8), tol));
      const CMatrix flipped = geometric_mean(b, a, 1.0 - t);
      CHECK((g - flipped).norm() <= 1e-10 * (1.0 + g.norm()));
    }
  }
  SUBCASE("monotonicity in both arguments") {
    for (int rep = 0; rep < 8; ++rep) {
      const HMatrix a = random_pd(3, 1e-2, rng);
      const HMatrix b = random_pd(3, 1e-2, rng);
      const HMatrix c = a + random_psd(3, rng);
      const HMatrix d = b + random_psd(3, rng);
      const double t = rng.uniform();
      const HMatrix g1 = HMatrix::symmetrized(geometric_mean(a.matrix(), b.matrix(), t));
      const HMatrix g2 = HMatrix::symmetrized(geometric_mean(c.matrix(), d.matrix(), t));
      CHECK(loewner_leq(g1, g2, tol));
    }
  }
  SUBCASE("arithmetic-geometric mean inequality") {
    for (int rep = 0; rep < 8; ++rep) {
      const CMatrix a = random_pd(3, 1e-2, rng).matrix();
      const CMatrix b = random_pd(3, 1e-2, rng).matrix();
      CHECK(loewner_leq(HMatrix::symmetrized(geometric_mean(a, b, 0.5)),
                        HMatrix::symmetrized(0.5 * (a + b)), tol));
    }
  }
}

TEST_CASE("congruence") {
  Rng rng(323);
  const ToleranceProfile tol;
  SUBCASE("inequality for arbitrary congruence of definite pairs") {
    // Singular congruences are handled by shifting the compressed pair up by
    // eps*I; means are monotone in both arguments, so the shift can only
    // enlarge the right-hand side and the inequality direction is preserved.
    for (int rep = 0; rep < 6; ++rep) {
      const CMatrix a = random_pd(3, 1e-2, rng).matrix();
      const CMatrix b = random_pd(3, 1e-2, rng).matrix();
      CMatrix x = gaussian_matrix(3, rng);
      if (rep % 3 == 0) x.col(0).setZero();  // include singular congruences
      const CMatrix ca = HMatrix::symmetrized(x.adjoint() * a * x).matrix();
      const CMatrix cb = HMatrix::symmetrized(x.adjoint() * b * x).matrix();
      const double shift = 1e-6 * (1.0 + std::max(ca.norm(), cb.norm()));
      for (const OmfDescriptor& f : sigma_sample()) {
        const CMatrix lhs = x.adjoint() * mean_sigma(f, a, b) * x;
        const CMatrix rhs = mean_sigma(f, ca + shift * CMatrix::Identity(3, 3),
                                       cb + shift * CMatrix::Identity(3, 3));
        CHECK(lambda_min(HMatrix::symmetrized(rhs - lhs)) >= -1e-7 * (1.0 + rhs.norm()));
      }
    }
  }
  SUBCASE("equality for invertible congruence of strictly accretive pairs") {
    for (int rep = 0; rep < 6; ++rep) {
      const CMatrix a = random_sectorial(3, rng.uniform_in(0.0, 1.0), 1e-3, rng);
      const CMatrix b = random_sectorial(3, rng.uniform_in(0.0, 1.0), 1e-3, rng);
      const CMatrix x = gaussian_matrix(3, rng) + 2.0 * CMatrix::Identity(3, 3);
      for (const OmfDescriptor& f : sigma_sample()) {
        const CMatrix lhs = x.adjoint() * mean_sigma(f, a, b) * x;
        const CMatrix rhs = mean_sigma(f, x.adjoint() * a * x, x.adjoint() * b * x);
        CHECK((lhs - rhs).norm() <= 1e-8 * (1.0 + rhs.norm()));
      }
    }
  }
}

TEST_CASE("real-part sandwich for means of sectorial pairs") {
  Rng rng(329);
  const ToleranceProfile tol;
  for (int rep = 0; rep < 6; ++rep) {
    const double alpha = rng.uniform_in(0.0, 1.0);
    const CMatrix a = random_sectorial(3, alpha, 1e-3, rng);
    const CMatrix b = random_sectorial(3, alpha, 1e-3, rng);
    const double sec2 = std::pow(1.0 / std::cos(alpha), 2);
    for (const OmfDescriptor& f : sigma_sample()) {
      const CMatrix s = mean_sigma(f, a, b);
      const HMatrix re_s = hermitian_part(s);
      const CMatrix mean_re =
          mean_sigma(f, hermitian_part(a).matrix(), hermitian_part(b).matrix());
      CHECK(loewner_leq(HMatrix::symmetrized(mean_re), re_s, tol));
      CHECK(loewner_leq(re_s, HMatrix::symmetrized(sec2 * mean_re), tol));
      CHECK(is_strictly_accretive(s, tol));
    }
  }
}

TEST_CASE("spd and complex paths agree on their overlap") {
  Rng rng(331);
  for (int rep = 0; rep < 6; ++rep) {
    const CMatrix a = random_pd(3, 1e-2, rng).matrix();
    const CMatrix b = random_pd(3, 1e-2, rng).matrix();
    const CMatrix g1 = geometric_mean(a, b, 0.3, MeanPath::force_spd);
    const CMatrix g2 = geometric_mean(a, b, 0.3, MeanPath::force_complex);
    CHECK((g1 - g2).norm() <= 1e-10 * (1.0 + g1.norm()));
    for (const OmfDescriptor& f : sigma_sample()) {
      const CMatrix s1 = mean_sigma(f, a, b, MeanPath::force_spd);
      const CMatrix s2 = mean_sigma(f, a, b, MeanPath::force_complex);
      CHECK((s1 - s2).norm() <= 1e-10 * (1.0 + s1.norm()));
    }
  }
}

TEST_CASE("regularization of merely accretive inputs") {
  const CMatrix boundary = mat2(C(0), C(1), C(-1), C(0));  // Re = O
  const CMatrix pd = diag2(C(1), C(2));
  SUBCASE("flags mark which side was shifted") {
    const MeanResult r = mean_sigma_regularized(OmfDescriptor::power(0.5), boundary, pd);
    CHECK(r.regularized_a);
    CHECK_FALSE(r.regularized_b);
    CHECK(r.value.allFinite());
    const MeanResult r2 = geometric_mean_regularized(pd, boundary, 0.5);
    CHECK_FALSE(r2.regularized_a);
    CHECK(r2.regularized_b);
  }
  SUBCASE("strict inputs are untouched") {
    const MeanResult r = mean_sigma_regularized(OmfDescriptor::power(0.5), pd, pd);
    CHECK_FALSE(r.regularized_a);
    CHECK_FALSE(r.regularized_b);
    CHECK(approx_equal(r.value, pd, 1e-12));
  }
  SUBCASE("non-accretive input is a domain error") {
    CHECK_THROWS_AS(mean_sigma_regularized(OmfDescriptor::power(0.5), mat1(C(-1)), mat1(C(1))),
                    RangeError);
  }
}

TEST_SUITE_END();
