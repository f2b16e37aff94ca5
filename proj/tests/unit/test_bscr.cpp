#include "spinrel/bscr.hpp"
#include "spinrel/dirac.hpp"
#include "spinrel/momentum.hpp"
#include "spinrel/sampling.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace spinrel;
using namespace spinrel::test;

namespace {
const CQ I = cq(0, 1);
}

TEST(Pairing, BasisElement) { EXPECT_EQ(pairing(sq(cq(1), cq(0)), sq(cq(1), cq(0))), cq(1)); }

TEST(Pairing, ConjugatedSecondArgument) {
  EXPECT_EQ(pairing(sq(cq(1), I), sq(cq(1), I)), cq(2));
}

TEST(Pairing, ZeroSpinor) {
  Rng rng(1);
  EXPECT_EQ(pairing(sq(cq(0), cq(0)), random_spinor<Rational>(rng)), cq(0));
}

TEST(Rank33, RandomExactSextuplesVanish) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    std::array<Spinor2<Rational>, 6> e;
    for (auto& x : e) x = random_spinor<Rational>(rng);
    ASSERT_EQ(rank33_determinant(e[0], e[1], e[2], e[3], e[4], e[5]), CQ{});
  }
}

TEST(Rank33, AllElementsEqual) {
  const auto s = sq(cq(2, -1), cq(q(1, 3), 5));
  EXPECT_EQ(rank33_determinant(s, s, s, s, s, s), CQ{});
}

TEST(Rank33, BasisTriple) {
  const auto i = sq(cq(1), cq(0)), k = sq(cq(0), cq(1)), j = sq(cq(1), cq(1));
  EXPECT_EQ(rank33_determinant(i, k, j, i, k, j), CQ{});
}

TEST(Rank33, RandomFloatSextuplesBelowTolerance) {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    std::array<Spinor2<double>, 6> e;
    for (auto& x : e) x = random_spinor<double>(rng);
    ASSERT_LT(magnitude(rank33_determinant(e[0], e[1], e[2], e[3], e[4], e[5])), 1e-12);
  }
}

TEST(Factorization, MinorEqualsProductOfSymplecticForms) {
  Rng rng(13);
  for (int t = 0; t < 1000; ++t) {
    const auto i = random_spinor<Rational>(rng), k = random_spinor<Rational>(rng);
    const auto a = random_spinor<Rational>(rng), b = random_spinor<Rational>(rng);
    ASSERT_EQ(pairing_minor(i, k, a, b), symplectic(i, k) * conj(symplectic(a, b)));
    const CQ self = pairing_minor(i, k, i, k);
    ASSERT_EQ(self, CQ(norm_sq(symplectic(i, k))));
    ASSERT_GE(self.re, Q(0));
  }
}

TEST(Symplectic, BasisPair) { EXPECT_EQ(symplectic(sq(cq(1), cq(0)), sq(cq(0), cq(1))), cq(1)); }

TEST(Symplectic, Antisymmetric) {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto i = random_spinor<Rational>(rng), k = random_spinor<Rational>(rng);
    ASSERT_EQ(symplectic(i, i), CQ{});
    ASSERT_EQ(symplectic(i, k), -symplectic(k, i));
  }
}

TEST(Symplectic, HandExpansion) {
  EXPECT_EQ(symplectic(sq(cq(2), cq(3)), sq(cq(5), cq(7))), cq(-1));
}

TEST(UnitaryProduct, Examples) {
  EXPECT_EQ(unitary_product(sq(cq(1), cq(0)), sq(cq(1), cq(0))), cq(1));
  EXPECT_EQ(unitary_product(sq(cq(1), I), sq(cq(1), I)), cq(2));
}

TEST(UnitaryProduct, Sesquilinear) {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_spinor<Rational>(rng), k = random_spinor<Rational>(rng);
    const CQ lambda = Sampler<Rational>::complex(rng), rho = Sampler<Rational>::complex(rng);
    ASSERT_EQ(unitary_product(lambda * i, rho * k), lambda * conj(rho) * unitary_product(i, k));
  }
}

TEST(IndexLowering, BasisSpinor) {
  EXPECT_EQ(lower_index(sq(cq(1), cq(0))), (CoSpinor<Rational>{cq(0), cq(-1)}));
}

TEST(IndexLowering, ZeroSpinor) {
  EXPECT_EQ(lower_index(sq(cq(0), cq(0))), (CoSpinor<Rational>{cq(0), cq(0)}));
}

TEST(IndexLowering, RaiseInvertsLower) {
  Rng rng(16);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_spinor<Rational>(rng);
    ASSERT_EQ(raise_index(lower_index(i)), i);
  }
}

TEST(IndexLowering, ContractionGivesSymplecticForm) {
  Rng rng(17);
  const auto i = random_spinor<Rational>(rng), k = random_spinor<Rational>(rng);
  const auto il = lower_index(i);
  // i_r k^r = eps_{rs} i^s k^r = [k, i]
  EXPECT_EQ(il.c1 * k.c1 + il.c2 * k.c2, symplectic(k, i));
}

TEST(Transform, IdentityLeavesSpinorUnchanged) {
  const auto i = sq(cq(3, 1), cq(q(-1, 2), 2));
  EXPECT_EQ(transform(i, Matrix2<Rational>::identity()), i);
}

TEST(Transform, DiagonalAction) {
  const Matrix2<Rational> c{{cq(2), cq(0)}, {cq(0), cq(q(1, 2))}};
  EXPECT_EQ(transform(sq(cq(1), cq(1)), c), sq(cq(2), cq(q(1, 2))));
}

TEST(Transform, UnimodularMatricesPreserveSymplecticForm) {
  Rng rng(18);
  for (int t = 0; t < 500; ++t) {
    const auto c = random_sl2c<Rational>(rng);
    const auto i = random_spinor<Rational>(rng), k = random_spinor<Rational>(rng);
    ASSERT_EQ(symplectic(transform(i, c), transform(k, c)), symplectic(i, k));
  }
}

TEST(Transform, DottedCovariantComponentsUseInverseConjugateTranspose) {
  Rng rng(19);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_sl2c<Rational>(rng);
    const auto i = random_spinor<Rational>(rng);
    const CoSpinorDotted<Rational> beta{Sampler<Rational>::complex(rng),
                                        Sampler<Rational>::complex(rng)};
    // conj(i^r) beta_r. is frame independent.
    const auto ti = transform(i, c);
    const auto tb = transform(beta, c);
    ASSERT_EQ(conj(ti.c1) * tb.b1 + conj(ti.c2) * tb.b2, conj(i.c1) * beta.b1 + conj(i.c2) * beta.b2);
    // beta = U^T i in the rest frame moves to beta' = U'^T i' in the new frame.
    const auto rest = metric_from_sl2(Matrix2<Rational>::identity());
    ASSERT_EQ(transform(beta_from_i(i, rest), c), beta_from_i(ti, metric_from_sl2(c)));
  }
}
