#include "spinrel/momentum.hpp"
#include "spinrel/sampling.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spinrel;
using namespace spinrel::test;

namespace {

using M2 = Matrix2<Rational>;
using Cov = CoFourVector<Rational>;

const M2 kBoost3{{cq(2), cq(0)}, {cq(0), cq(q(1, 2))}};

}  // namespace

TEST(MetricFromSl2, RestFrame) {
  const auto u = metric_from_sl2(M2::identity());
  EXPECT_EQ(u.matrix(), M2::identity());
  EXPECT_EQ(covector_from_metric(u), (Cov{{Q(1), Q(0), Q(0), Q(0)}}));
}

TEST(MetricFromSl2, UnitaryMatricesKeepIdentityMetric) {
  const CQ a = cq(q(1, 2), q(1, 2)), b = cq(q(1, 2), q(-1, 2));
  const M2 c{{a, b}, {-conj(b), conj(a)}};
  ASSERT_EQ(det(c), cq(1));
  EXPECT_EQ(metric_from_sl2(c).matrix(), M2::identity());
}

TEST(MetricFromSl2, DiagonalBoost) {
  const auto u = metric_from_sl2(kBoost3);
  EXPECT_EQ(u.matrix(), (M2{{cq(q(1, 4)), cq(0)}, {cq(0), cq(4)}}));
  EXPECT_EQ(covector_from_metric(u), (Cov{{q(17, 8), Q(0), Q(0), q(-15, 8)}}));
}

TEST(MetricFromSl2, RejectsNonUnimodular) {
  EXPECT_THROW(metric_from_sl2(M2(M2::identity() * cq(2))), std::invalid_argument);
}

TEST(MetricFromSl2, ExactDeterminantIsOne) {
  Rng rng(51);
  for (int t = 0; t < 500; ++t) {
    const auto u = metric_from_sl2(random_sl2c<Rational>(rng));
    ASSERT_EQ(det(u.matrix()), cq(1));
    ASSERT_EQ(scalar_square(raise(covector_from_metric(u))), Q(1));
  }
}

TEST(UnitaryMetric, Validation) {
  EXPECT_THROW(UnitaryMetric<Rational>::from_matrix(M2(-M2::identity())), std::invalid_argument);
  EXPECT_THROW(UnitaryMetric<Rational>::from_matrix(M2(M2::identity() * cq(2))),
               std::invalid_argument);
}

TEST(UnitaryMetric, QuadraticFormIsPositive) {
  Rng rng(52);
  const auto u = metric_from_sl2(random_sl2c<Rational>(rng));
  for (int t = 0; t < 100; ++t) {
    const auto i = random_nonzero_spinor<Rational>(rng);
    const CQ f = u.quadratic_form(i);
    ASSERT_EQ(f.im, Q(0));
    ASSERT_GT(f.re, Q(0));
  }
}

TEST(UnitVelocity, RandomFloatBoosts) {
  Rng rng(53);
  for (int t = 0; t < 1000; ++t) {
    const auto c = random_sl2c<double>(rng);
    const auto u = covector_from_metric(metric_from_sl2(c, TolerancePolicy::uniform(1e-9)));
    const double scale = u[0] * u[0];
    ASSERT_LT(std::abs(scalar_square(raise(u)) - 1.0), 1e-12 * std::max(1.0, scale));
    ASSERT_GT(u[0], 0.0);
  }
}

TEST(ContravariantMetric, InverseTranspose) {
  Rng rng(54);
  for (int t = 0; t < 200; ++t) {
    const auto u = metric_from_sl2(random_sl2c<Rational>(rng));
    ASSERT_EQ(u.matrix() * transpose(contravariant_metric(u)), M2::identity());
  }
  const auto u = metric_from_sl2(kBoost3);
  EXPECT_EQ(contravariant_metric(u), (M2{{cq(4), cq(0)}, {cq(0), cq(q(1, 4))}}));
}

TEST(MomentumState, MassShell) {
  const MomentumState<Rational> s(Q(4), {Q(1), Q(2), Q(2)});
  EXPECT_EQ(s.energy(), Q(5));
  EXPECT_EQ(scalar_square(s.contravariant()), Q(16));
  EXPECT_EQ(s.covariant(), (Cov{{Q(5), Q(-1), Q(-2), Q(-2)}}));
  Rng rng(55);
  for (int t = 0; t < 1000; ++t) {
    const auto f = random_float_state(rng);
    ASSERT_NEAR(scalar_square(f.contravariant()), f.mass() * f.mass(),
                1e-12 * f.energy() * f.energy());
  }
}

TEST(MomentumState, NegativeEnergy) {
  const MomentumState<Rational> s(Q(4), {Q(1), Q(2), Q(2)}, EnergySign::Negative);
  EXPECT_EQ(s.energy(), Q(-5));
  const auto u = covector_from_metric(s.metric());
  EXPECT_EQ(u, (Cov{{q(5, 4), q(1, 4), q(1, 2), q(1, 2)}}));
}

TEST(MomentumState, RejectsNonPositiveMass) {
  EXPECT_THROW(MomentumState<double>(0.0, {0.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(MomentumState<Rational>(Q(-1), {Q(0), Q(0), Q(0)}), std::invalid_argument);
}

TEST(BoostForMomentum, ZeroMomentumIsIdentity) {
  EXPECT_EQ(boost_for_momentum(Q(1), {Q(0), Q(0), Q(0)}), M2::identity());
  EXPECT_EQ(boost_for_momentum(q(7, 3), {Q(0), Q(0), Q(0)}), M2::identity());
}

TEST(BoostForMomentum, ExactDiagonalBoost) {
  EXPECT_EQ(boost_for_momentum(Q(8), {Q(0), Q(0), Q(15)}), kBoost3);
}

TEST(BoostForMomentum, TripleThreeFourFive) {
  const auto ray = boost_ray_for_momentum(Q(4), {Q(0), Q(0), Q(3)});
  EXPECT_EQ(covector_from_metric(ray.metric())[0], q(5, 4));
  EXPECT_EQ(ray.lorentz()(0, 0), q(5, 4));
  EXPECT_EQ(ray.lorentz()(3, 0), q(3, 4));
}

TEST(BoostForMomentum, QuadrupleOneTwoTwoRoundTripsExactly) {
  const auto ray = boost_ray_for_momentum(Q(4), {Q(1), Q(2), Q(2)});
  EXPECT_EQ(covector_from_metric(ray.metric()), (Cov{{q(5, 4), q(-1, 4), q(-1, 2), q(-1, 2)}}));
  // det B = 9/2 is not a rational square, so C itself is not rational.
  EXPECT_EQ(ray.det_b(), q(9, 2));
  EXPECT_THROW(ray.matrix(), NotExactlyRepresentable);
  // The time axis goes to (p^0, p^1, -p^2, p^3) / m: conj(sigma_2) = -sigma_2
  // in U = (C^{-1})^T conj(C^{-1}) reverses axis 2 relative to L(C).
  const auto l = ray.lorentz();
  EXPECT_EQ((std::array<Q, 4>{l(0, 0), l(1, 0), l(2, 0), l(3, 0)}),
            (std::array<Q, 4>{q(5, 4), q(1, 4), q(-1, 2), q(1, 2)}));
}

TEST(BoostForMomentum, ExactOnPythagoreanStates) {
  Rng rng(56);
  for (int t = 0; t < 500; ++t) {
    const auto s = random_pythagorean_state<Rational>(rng);
    const auto ray = boost_ray_for_momentum(s.mass(), s.p());
    const auto u = covector_from_metric(ray.metric());
    for (std::size_t mu = 0; mu < 4; ++mu) ASSERT_EQ(u[mu], s.covariant()[mu] / s.mass());
    ASSERT_EQ(det(ray.lorentz()), Q(1));
  }
}

TEST(BoostForMomentum, FloatRoundTrip) {
  Rng rng(57);
  for (int t = 0; t < 1000; ++t) {
    const auto s = random_float_state(rng);
    const auto c = boost_for_momentum(s.mass(), s.p());
    ASSERT_LT(hermiticity_defect(c), 1e-12 * max_abs(c));
    ASSERT_NEAR(det(c).re, 1.0, 1e-12 * max_abs(c) * max_abs(c));
    const auto u = covector_from_metric(metric_from_sl2(c, TolerancePolicy::uniform(1e-9)));
    for (std::size_t mu = 0; mu < 4; ++mu) {
      ASSERT_NEAR(u[mu], s.covariant()[mu] / s.mass(), 1e-10) << "trial " << t;
    }
  }
}

TEST(Sweep, RestFrameOnly) {
  const auto pts = sweep_momentum_space(1.0, {{0.0, 0.0, 0.0}});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].boost(), Matrix2<double>::identity());
  EXPECT_EQ(pts[0].u, (CoFourVector<double>{{1.0, 0.0, 0.0, 0.0}}));
}

TEST(Sweep, UniformGrid) {
  std::vector<Momentum3<double>> grid;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c) grid.push_back({double(a), double(b), double(c)});
  const auto pts = sweep_momentum_space(1.0, grid);
  ASSERT_EQ(pts.size(), 1331u);
  for (const auto& pt : pts) {
    ASSERT_NEAR(scalar_square(raise(pt.u)), 1.0, 1e-12 * pt.u[0] * pt.u[0]);
    ASSERT_GT(pt.u[0], 0.0);
  }
}

TEST(Sweep, LargeMomentumRelaxedTolerance) {
  // |p| = 1e6: u_0^2 ~ 1e12, so the unit norm is a difference of two
  // numbers of that size and float cancellation loses ~12 digits.
  const auto pts = sweep_momentum_space(1.0, {{1e6, 0.0, 0.0}, {0.0, 6e5, 8e5}});
  for (const auto& pt : pts) {
    EXPECT_LE(std::abs(scalar_square(raise(pt.u)) - 1.0), 1e-3);
    EXPECT_GT(pt.u[0], 0.0);
  }
}

TEST(Sweep, ErrorsCarryGridIndex) {
  EXPECT_THROW(sweep_momentum_space(0.0, {{0.0, 0.0, 0.0}}), std::invalid_argument);
  try {
    sweep_momentum_space(Q(1), {{Q(0), Q(0), Q(0)}, {Q(1), Q(0), Q(0)}});
    FAIL() << "expected GridPointError";
  } catch (const GridPointError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(Sweep, ExactPythagoreanGrid) {
  const auto pts = sweep_momentum_space(Q(4), {{Q(0), Q(0), Q(3)}, {Q(1), Q(2), Q(2)}, {Q(3), Q(0), Q(0)}});
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1].u, (Cov{{q(5, 4), q(-1, 4), q(-1, 2), q(-1, 2)}}));
  EXPECT_THROW(pts[1].boost(), NotExactlyRepresentable);
  EXPECT_EQ(sweep_momentum_space(Q(8), {{Q(0), Q(0), Q(15)}})[0].boost(), kBoost3);
}
