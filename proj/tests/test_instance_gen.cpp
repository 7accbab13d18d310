// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "sectorial/accretive.hpp"
#include "sectorial/instance_gen.hpp"
#include "test_support.hpp"

using namespace sectorial;
using namespace test_support;

TEST_SUITE_BEGIN("instance_gen");

TEST_CASE("mix64 is a stable pure function") {
  CHECK(mix64(1, 2, 3) == mix64(1, 2, 3));
  std::set<uint64_t> seen;
  for (uint64_t a = 0; a < 4; ++a)
    for (uint64_t b = 0; b < 4; ++b)
      for (uint64_t c = 0; c < 4; ++c) seen.insert(mix64(a, b, c));
  CHECK(seen.size() == 64);  // no collisions on the small grid
  CHECK(fnv1a64("C1") != fnv1a64("C2"));
}

TEST_CASE("generators are deterministic per seed") {
  GenSpec spec;
  spec.n = 3;
  spec.seed = 99;
  spec.alpha = 0.4;
  CHECK(random_pd(spec).matrix() == random_pd(spec).matrix());
  CHECK(random_sectorial(spec) == random_sectorial(spec));
  CHECK(random_ppt_block(spec).assemble() == random_ppt_block(spec).assemble());
  CHECK(random_apt_block(spec, true).assemble() == random_apt_block(spec, true).assemble());
  const CommutingPair p1 = random_commuting_pair(spec);
  const CommutingPair p2 = random_commuting_pair(spec);
  CHECK(p1.a == p2.a);
  CHECK(p1.x == p2.x);
  GenSpec other = spec;
  other.seed = 100;
  CHECK(random_pd(spec).matrix() != random_pd(other).matrix());
}

TEST_CASE("psd and pd generators satisfy their predicates") {
  Rng rng(501);
  for (Index n : {1, 2, 4, 6}) {
    CHECK(is_psd(random_psd(n, rng)));
    const HMatrix pd = random_pd(n, 1e-3, rng);
    CHECK(is_pd(pd));
    const RVector lam = eigenvalues_hermitian(pd);
    CHECK(lam(lam.size() - 1) >= 1e-3);  // margin floor scales up with the norm
  }
  SUBCASE("scalar case is a nonnegative real") {
    Rng r2(502);
    const HMatrix s = random_psd(1, r2);
    CHECK(s.matrix()(0, 0).imag() == 0.0);
    CHECK(s.matrix()(0, 0).real() >= 0.0);
  }
}

TEST_CASE("sectorial generator hits the requested angle") {
  Rng rng(503);
  for (int rep = 0; rep < 10; ++rep) {
    const Index n = 1 + static_cast<Index>(rep % 5);
    const double alpha = rng.uniform_in(0.0, 1.3);
    const CMatrix a = random_sectorial(n, alpha, 1e-3, rng);
    CHECK(is_strictly_accretive(a));
    CHECK(sector_angle(a).alpha == doctest::Approx(alpha).epsilon(1e-8));
  }
  SUBCASE("alpha zero is Hermitian positive definite") {
    Rng r2(504);
    const CMatrix a = random_sectorial(3, 0.0, 1e-3, r2);
    CHECK(skew_part(a).matrix().norm() == 0.0);
    CHECK(is_pd(hermitian_part(a)));
  }
}

TEST_CASE("block generators satisfy their predicates") {
  Rng rng(505);
  for (Index n : {1, 2, 3, 6}) {
    const Block2x2 ppt = random_ppt_block(n, 1e-3, rng);
    CHECK(is_ppt(ppt));

    const double alpha = rng.uniform_in(0.0, 1.0);
    const Block2x2 apt = random_apt_block(n, alpha, 1e-3, rng);
    CHECK(is_apt(apt));
    CHECK(sector_angle(apt.A).alpha <= alpha + 1e-8);
    CHECK(sector_angle(apt.B).alpha <= alpha + 1e-8);
    CHECK(is_strictly_accretive(apt.A));
    CHECK(is_strictly_accretive(apt.B));

    const Block2x2 general = random_apt_block(n, alpha, 1e-3, rng, true);
    CHECK(is_apt(general));
  }
  SUBCASE("general off-diagonal really differs from the Hermitian form") {
    Rng r2(506);
    const Block2x2 g = random_apt_block(3, 0.5, 1e-3, r2, true);
    CHECK((g.Ystar - g.X.adjoint()).norm() > 1e-6);
  }
  SUBCASE("zero off-diagonal block is PPT") {
    const Block2x2 m = Block2x2::hermitian_offdiag(CMatrix::Identity(2, 2),
                                                   CMatrix::Zero(2, 2),
                                                   2.0 * CMatrix::Identity(2, 2));
    CHECK(is_ppt(m));
  }
}

TEST_CASE("commuting pair") {
  Rng rng(507);
  for (Index n : {1, 2, 4}) {
    const auto [a, x] = random_commuting_pair(n, 1e-3, rng);
    CHECK(is_strictly_accretive(a));
    CHECK((a * x - x * a).norm() <= 1e-12 * (1.0 + a.norm() * x.norm()));
    // Normality and the adjoint commutation that follows from it.
    CHECK((a * a.adjoint() - a.adjoint() * a).norm() <= 1e-12 * (1.0 + a.norm() * a.norm()));
    CHECK((a.adjoint() * x - x * a.adjoint()).norm() <=
          1e-12 * (1.0 + a.norm() * x.norm()));
  }
}

TEST_CASE("accretive block generator") {
  Rng rng(509);
  for (int rep = 0; rep < 6; ++rep) {
    const Block2x2 m = random_accretive_block(2, 1.2, 1e-3, rng);
    CHECK(is_accretive(m.assemble()));
    CHECK(is_strictly_accretive(m.A));
    CHECK(is_strictly_accretive(m.B));
    CHECK((m.Ystar - m.X.adjoint()).norm() == 0.0);
  }
}

TEST_CASE("spec validation") {
  GenSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), RangeError);
  GenSpec bad_alpha;
  bad_alpha.alpha = kPi / 2;
  CHECK_THROWS_AS(bad_alpha.validate(), RangeError);
  GenSpec no_alpha;
  CHECK_THROWS_AS(random_sectorial(no_alpha), RangeError);
}

TEST_SUITE_END();
