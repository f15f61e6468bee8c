#include <cmath>

#include <gtest/gtest.h>

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/rmatrix.hpp"

using namespace qhopf;

namespace {

Colour bit(int mask, int i, int width) {
  return (mask >> (width - 1 - i)) & 1 ? Colour::minus() : Colour::plus();
}

// Oracle: the spin-1/2 x spin-1/2 R-matrix written out by hand in the basis
// (++, +-, -+, --).
Matrix spin_half_r(double q) {
  Matrix r = Matrix::Zero(4, 4);
  r(0, 0) = r(3, 3) = std::sqrt(q);
  r(1, 1) = r(2, 2) = 1.0 / std::sqrt(q);
  r(1, 2) = std::sqrt(q) * (1.0 - 1.0 / (q * q));
  return r;
}

}  // namespace

TEST(RSu, SpinHalfOracle) {
  for (double q : {0.3, 0.5, 0.8}) {
    const QParams p(q);
    EXPECT_LT(max_abs(r_su(suq2_rep(1, p), suq2_rep(1, p), p) - spin_half_r(q)), 1e-14);
  }
}

TEST(RSu, TrivialLeftIsIdentity) {
  const QParams p(0.5);
  for (int N = 0; N <= 4; ++N) {
    const auto d = static_cast<Eigen::Index>(N + 1);
    EXPECT_LT(max_abs(r_su(suq2_rep(0, p), suq2_rep(N, p), p) - Matrix::Identity(d, d)), 1e-15);
  }
}

TEST(RSu, YbeAndIntertwiner) {
  const QParams p(0.5, 1e-12);
  const GeneratorRep a = suq2_rep(1, p);
  EXPECT_LT(check_suq2_ybe(a, a, a, p).residual, 1e-12);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      EXPECT_LT(check_suq2_intertwiner(suq2_rep(n1, p), suq2_rep(n2, p), p).residual, 1e-10);
}

TEST(RColoured, EqualsRSuOnMatchedColours) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q, 1e-12);
    for (Colour d : kBothColours)
      for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2) EXPECT_TRUE(check_r_su_equivalence(d, n1, n2, p).pass);
  }
}

TEST(RColoured, TrivialLegIsIdentityAndMismatchThrows) {
  const QParams p(0.5);
  for (Colour z : kBothColours) {
    for (Colour e : kBothColours) {
      const Matrix r = r_coloured({z, e}, dqa_rep(0, z, p), dqa_rep(2, e, p), p);
      EXPECT_LT(max_abs(r - Matrix::Identity(3, 3)), 1e-14);
    }
  }
  EXPECT_THROW(r_coloured({Colour::plus(), Colour::plus()}, dqa_rep(1, Colour::minus(), p),
                          dqa_rep(1, Colour::plus(), p), p),
               LogDomainError);
  EXPECT_THROW(r_coloured({Colour::plus(), Colour::plus()}, dqa_rep(1, Colour::plus(), p),
                          dqa_rep(1, Colour::minus(), p), p),
               LogDomainError);
}

TEST(RColoured, SeriesTruncatesAtNilpotency) {
  const QParams p(0.8);
  const Colour P = Colour::plus();
  const GeneratorRep a = dqa_rep(3, P, p);
  const GeneratorRep b = dqa_rep(1, P, p);
  const Vector ga = a.j0.unaryExpr([&](double z) { return G_fn(z, p); });
  const Vector gb = b.j0.unaryExpr([&](double z) { return G_fn(z, p); });
  const Matrix x = kron(ga.cwiseInverse().asDiagonal() * a.jplus, gb.asDiagonal() * b.jminus);
  EXPECT_GT(max_abs(x), 0.0);
  EXPECT_TRUE(((x * x).array() == 0.0).all());
  const Matrix r = r_coloured({P, P}, a, b, p);
  EXPECT_GT(std::abs(r.determinant()), 1e-12);
  EXPECT_TRUE(std::isfinite((r.inverse()).norm()));
}

TEST(Intertwiner, AllColourTriples) {
  const QParams p(0.5, 1e-10);
  for (int mask = 0; mask < 8; ++mask) {
    const Colour z = bit(mask, 0, 3), e = bit(mask, 1, 3), d = bit(mask, 2, 3);
    EXPECT_TRUE(check_intertwiner(z, e, d, dqa_rep(1, z, p), dqa_rep(1, e, p), p).pass);
    EXPECT_TRUE(check_intertwiner(z, e, d, dqa_rep(2, z, p), dqa_rep(1, e, p), p).pass);
  }
}

TEST(Intertwiner, PerturbedRFails) {
  const QParams p(0.5, 1e-10);
  const Colour z = Colour::plus(), e = Colour::minus(), d = Colour::plus();
  const GeneratorRep a = dqa_rep(1, z, p), b = dqa_rep(1, e, p);
  Matrix r = r_coloured({z, e}, a, b, p);
  r(1, 2) += 1e-3;
  EXPECT_GT(intertwiner_residual(r, coproduct_rep(z, e, d, a, b, p),
                                 opposite_coproduct_rep(e, z, d, a, b, p)),
            1e-6);
}

TEST(Fusion, AllColourAssignments) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q, 1e-10);
    for (int mask = 0; mask < 32; ++mask) {
      const Colour l = bit(mask, 0, 5), m = bit(mask, 1, 5), z = bit(mask, 2, 5),
                   n = bit(mask, 3, 5), e = bit(mask, 4, 5);
      const auto r = check_fusion(l, m, z, n, e, dqa_rep(1, l, p), dqa_rep(2, m, p),
                                  dqa_rep(1, n, p), p);
      EXPECT_TRUE(r.pass) << mask << " " << r.residual;
    }
  }
}

TEST(Fusion, DoubleHopfCase) {
  const QParams p(0.5, 1e-10);
  for (Colour d : kBothColours) {
    const GeneratorRep a = dqa_rep(1, d, p);
    EXPECT_LT(check_fusion(d, d, d, d, d, a, a, a, p).residual, 1e-10);
  }
}

TEST(Cybe, AllColourTriples) {
  const QParams p(0.5, 1e-11);
  for (int mask = 0; mask < 8; ++mask) {
    const Colour z = bit(mask, 0, 3), e = bit(mask, 1, 3), m = bit(mask, 2, 3);
    EXPECT_LT(check_cybe(z, e, m, dqa_rep(1, z, p), dqa_rep(1, e, p), dqa_rep(1, m, p), p).residual,
              1e-11);
    EXPECT_TRUE(
        check_cybe(z, e, m, dqa_rep(2, z, p), dqa_rep(3, e, p), dqa_rep(1, m, p), p.with_tol(1e-9))
            .pass);
  }
}

TEST(Cybe, InvertedFactorFails) {
  const QParams p(0.5);
  const Colour z = Colour::plus(), e = Colour::minus(), m = Colour::plus();
  const GeneratorRep a = dqa_rep(1, z, p), b = dqa_rep(1, e, p), c = dqa_rep(1, m, p);
  // The inverse satisfies the equation only when every factor is inverted.
  const Matrix wrong12 = r_coloured({z, e}, a, b, p).inverse();
  const double bad = ybe_residual(wrong12, r_coloured({z, m}, a, c, p), r_coloured({e, m}, b, c, p),
                                  2, 2, 2);
  EXPECT_GT(bad, 1e-3);
}

TEST(CounitR, BothSides) {
  for (double q : {0.3, 0.5, 0.8}) {
    const QParams p(q, 1e-12);
    for (Colour z : kBothColours)
      for (Colour e : kBothColours)
        for (int N = 0; N <= 4; ++N) {
          EXPECT_TRUE(check_counit_r(z, e, dqa_rep(N, e, p), p).pass);
          EXPECT_TRUE(check_counit_r(z, e, dqa_rep(N, z, p), p).pass);
        }
  }
  EXPECT_THROW(check_counit_r(Colour::plus(), Colour::plus(), dqa_rep(1, Colour::minus(), QParams(0.5)),
                              QParams(0.5)),
               ColourMismatch);
}

TEST(ColourFlip, IdentityAndFullFlip) {
  const QParams p(0.5, 1e-10);
  const Colour P = Colour::plus(), M = Colour::minus();
  const GeneratorRep a = dqa_rep(1, P, p), b = dqa_rep(1, M, p);
  EXPECT_EQ(check_colour_flip({P, M}, {P, M}, a, b, p).residual, 0.0);
  EXPECT_TRUE(check_colour_flip({P, M}, {M, P}, a, b, p).pass);
  EXPECT_TRUE(check_colour_flip({P, M}, {M, M}, a, b, p).pass);
  EXPECT_TRUE(check_colour_flip({P, M}, {P, P}, a, b, p).pass);
}

TEST(AntipodeR, DoubleHopfAndFlippedCases) {
  const QParams p(0.5, 1e-9);
  for (int mask = 0; mask < 16; ++mask) {
    const Colour l = bit(mask, 0, 4), m = bit(mask, 1, 4), z = bit(mask, 2, 4), e = bit(mask, 3, 4);
    const auto r = check_antipode_r(l, m, z, e, dqa_rep(1, l, p), dqa_rep(1, m, p), p);
    EXPECT_TRUE(r.pass) << mask << " " << r.residual;
  }
  const Colour P = Colour::plus();
  EXPECT_LT(check_antipode_r(P, P, P, P, dqa_rep(0, P, p), dqa_rep(3, P, p), p).residual, 1e-12);
}

TEST(AntipodeR, DegenerateSpectrumRejected) {
  const QParams p(0.5);
  const Colour P = Colour::plus();
  const GeneratorRep c = coproduct_rep(P, P, P, dqa_rep(1, P, p), dqa_rep(1, P, p), p);
  EXPECT_THROW(check_antipode_r(P, P, P, P, c, dqa_rep(1, P, p), p), DegenerateSpectrum);
}
