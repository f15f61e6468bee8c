#include <cmath>

#include <gtest/gtest.h>

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"

using namespace qhopf;

namespace {

Colour bit(int mask, int i, int width) {
  return (mask >> (width - 1 - i)) & 1 ? Colour::minus() : Colour::plus();
}

}  // namespace

TEST(Coproduct, WorkedExampleTopState) {
  const QParams p(0.5);
  const GeneratorRep a = dqa_rep(1, Colour::plus(), p);
  const GeneratorRep plus = coproduct_rep(Colour::plus(), Colour::plus(), Colour::plus(), a, a, p);
  const GeneratorRep minus =
      coproduct_rep(Colour::plus(), Colour::plus(), Colour::minus(), a, a, p);
  EXPECT_NEAR(plus.j0(0), 2.0, 1e-12);
  EXPECT_NEAR(minus.j0(0), (0.5 + 1.0) / (0.5 * (0.5 - 1.0)), 1e-12);
  EXPECT_NEAR(minus.j0(0), -6.0, 1e-12);
  EXPECT_LT(plus.jplus.col(0).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(minus.jplus.col(0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Coproduct, LegShape) {
  const QParams p(0.5);
  for (Generator g : kGenerators) {
    EXPECT_EQ(coproduct_legs(g, Colour::plus(), Colour::minus(), Colour::plus(), p).legs.size(), 2u);
  }
}

TEST(Coproduct, HomomorphismOnAllColourTriples) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q, 1e-10);
    for (int mask = 0; mask < 8; ++mask) {
      const Colour z = bit(mask, 0, 3), e = bit(mask, 1, 3), d = bit(mask, 2, 3);
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = 0; n2 <= 3; ++n2) {
          const GeneratorRep c = coproduct_rep(z, e, d, dqa_rep(n1, z, p), dqa_rep(n2, e, p), p);
          EXPECT_TRUE(check_commutators(c, Algebra::DQA, p).pass);
          EXPECT_EQ(*c.meta.colour, d);
          EXPECT_TRUE(c.meta.warnings.empty());
        }
      }
    }
  }
}

TEST(Coproduct, ColourMismatchAdvisoryOrStrict) {
  const QParams p(0.5);
  const GeneratorRep a = dqa_rep(1, Colour::minus(), p);
  const GeneratorRep c = coproduct_rep(Colour::plus(), Colour::minus(), Colour::plus(), a, a, p);
  EXPECT_EQ(c.meta.warnings.size(), 1u);
  EXPECT_THROW(coproduct_rep(Colour::plus(), Colour::minus(), Colour::plus(), a, a, p,
                             ColourCheck::Strict),
               ColourMismatch);
}

TEST(Coproduct, OppositeIsInvolutive) {
  const QParams p(0.8);
  const GeneratorRep a = dqa_rep(2, Colour::plus(), p);
  const GeneratorRep b = dqa_rep(1, Colour::minus(), p);
  const Colour z = Colour::plus(), e = Colour::minus(), d = Colour::minus();
  const GeneratorRep op = opposite_coproduct_rep(z, e, d, a, b, p);
  const Matrix s = swap_matrix(a.dim(), b.dim());
  const Matrix back = s.transpose() * op.jplus * s;
  EXPECT_LT(max_abs(back - coproduct_rep(z, e, d, b, a, p).jplus), 1e-14);

  const GeneratorRep same = dqa_rep(2, Colour::plus(), p);
  const GeneratorRep sym = opposite_coproduct_rep(z, z, d, same, same, p);
  EXPECT_LT(max_abs(sym.j0 - coproduct_rep(z, z, d, same, same, p).j0), 1e-13);
}

TEST(Counit, Values) {
  const QParams p(0.5);
  for (Generator g : kGenerators) EXPECT_EQ(counit_value(g, Colour::plus(), p), 0.0);
  EXPECT_DOUBLE_EQ(counit_value(Generator::J0, Colour::minus(), p), -4.0);
  EXPECT_EQ(counit_value(Generator::Jp, Colour::minus(), p), 0.0);
  for (Colour d : kBothColours) {
    EXPECT_NEAR(counit_value(Generator::J0, d, p), dqa_rep(0, d, p).j0(0), 1e-15);
  }
}

TEST(Coassociativity, AllColourAssignments) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q, 1e-10);
    for (int mask = 0; mask < 64; ++mask) {
      CoassocColours c;
      for (int i = 0; i < 6; ++i) c[i] = bit(mask, i, 6);
      for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
          for (int n3 = 0; n3 <= 2; ++n3) {
            const auto r = check_coassociativity(c, dqa_rep(n1, c[0], p), dqa_rep(n2, c[1], p),
                                                 dqa_rep(n3, c[3], p), p);
            ASSERT_TRUE(r.pass) << mask << " residual " << r.residual;
          }
    }
  }
  const QParams p(0.5);
  const GeneratorRep a = dqa_rep(1, Colour::plus(), p);
  CoassocColours plus;
  plus.fill(Colour::plus());
  EXPECT_LT(check_coassociativity(plus, a, a, a, p).residual, 1e-12);
}

TEST(Coassociativity, WrongInnerCouplingFails) {
  const QParams p(0.5, 1e-10);
  const Colour P = Colour::plus();
  const GeneratorRep a = dqa_rep(1, P, p);
  const auto lhs = coproduct_rep(P, P, P, coproduct_rep(P, P, P, a, a, p), a, p);
  // Right bracketing with the inner output colour used as the outer leg colour
  // on the wrong side.
  const auto rhs = coproduct_rep(P, Colour::minus(), P, a, coproduct_rep(P, P, P, a, a, p), p);
  EXPECT_GT(rep_distance(lhs, rhs), 1e-3);
  EXPECT_THROW(check_coassociativity({P, P, P, P, P, P}, a, dqa_rep(1, Colour::minus(), p), a, p),
               ColourMismatch);
}

TEST(CounitAxiom, AllColourTriples) {
  const QParams p(0.5, 1e-10);
  for (int mask = 0; mask < 8; ++mask) {
    const Colour z = bit(mask, 0, 3), e = bit(mask, 1, 3), d = bit(mask, 2, 3);
    for (int N = 0; N <= 4; ++N) {
      EXPECT_TRUE(check_counit_axiom(z, e, d, dqa_rep(N, e, p), p).pass);
      EXPECT_TRUE(check_counit_axiom(z, e, d, dqa_rep(N, z, p), p).pass);
    }
  }
}

TEST(CounitAxiom, SigmaAppearsForOppositeColours) {
  const QParams p(0.5);
  const Colour z = Colour::plus(), e = Colour::plus(), d = Colour::minus();
  const GeneratorRep r = dqa_rep(2, e, p);
  const GeneratorRep c = coproduct_rep(z, e, d, dqa_rep(0, z, p), r, p);
  const Matrix expected = 2.0 / (p.q() - 1.0) * Matrix::Identity(3, 3) - r.j0_matrix();
  EXPECT_LT(max_abs(c.j0_matrix() - expected), 1e-13);
}

TEST(CounitAxiom, RequiresMatchingColour) {
  const QParams p(0.5);
  EXPECT_THROW(check_counit_axiom(Colour::plus(), Colour::plus(), Colour::plus(),
                                  dqa_rep(1, Colour::minus(), p), p),
               ColourMismatch);
}

TEST(AntipodeAxiom, AllColourQuadruples) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q, 1e-9);
    for (int mask = 0; mask < 16; ++mask) {
      const Colour z = bit(mask, 0, 4), e = bit(mask, 1, 4), m = bit(mask, 2, 4),
                   d = bit(mask, 3, 4);
      for (int N = 0; N <= 4; ++N) {
        const auto r = check_antipode_axiom(z, e, m, d, dqa_rep(N, m, p), p);
        EXPECT_TRUE(r.pass) << r.residual;
      }
    }
  }
}

TEST(AntipodeAxiom, FailsOnBrokenRep) {
  const QParams p(0.5, 1e-9);
  GeneratorRep r = dqa_rep(3, Colour::plus(), p);
  r.j0(0) += 1e-3;
  const Colour P = Colour::plus();
  EXPECT_FALSE(check_antipode_axiom(P, P, P, P, r, p).pass);
}

TEST(SigmaLaws, Coproduct) {
  const QParams p(0.8, 1e-10);
  for (int mask = 0; mask < 64; ++mask) {
    const Colour z = bit(mask, 0, 6), e = bit(mask, 1, 6), d = bit(mask, 2, 6), m = bit(mask, 3, 6),
                 n = bit(mask, 4, 6), r = bit(mask, 5, 6);
    for (int n1 = 0; n1 <= 3; ++n1) {
      const auto rep = check_sigma_coproduct(z, e, d, m, n, r, dqa_rep(n1, m, p),
                                             dqa_rep(3 - n1, n, p), p);
      EXPECT_LT(rep.residual, 1e-10);
    }
  }
}

TEST(SigmaLaws, CounitAndAntipode) {
  const QParams p(0.5, 1e-10);
  for (Colour d : kBothColours)
    for (Colour z : kBothColours) EXPECT_EQ(check_sigma_counit(d, z, p).residual, 0.0);
  for (int mask = 0; mask < 16; ++mask) {
    const Colour z = bit(mask, 0, 4), e = bit(mask, 1, 4), d = bit(mask, 2, 4), m = bit(mask, 3, 4);
    for (int N = 0; N <= 3; ++N) {
      EXPECT_LT(check_sigma_antipode(z, e, d, m, dqa_rep(N, z, p), p).residual, 1e-10);
    }
  }
}

TEST(Specialization, SingleColourFormulas) {
  const QParams p(0.5, 1e-12);
  for (Colour d : kBothColours) {
    for (int n1 = 0; n1 <= 3; ++n1) {
      EXPECT_TRUE(check_specialization(d, dqa_rep(n1, d, p), dqa_rep(2, d, p), p).pass);
    }
  }
}

TEST(Suq2Hopf, ControlSuite) {
  const QParams p(0.5, 1e-12);
  EXPECT_TRUE(check_suq2_hopf(1, 1, 1, p).pass);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (int n3 = 0; n3 <= 3; ++n3) EXPECT_LT(check_suq2_hopf(n1, n2, n3, p).residual, 1e-12);
  const GeneratorRep t = suq2_rep(0, p);
  EXPECT_EQ(t.j0(0), 0.0);
  EXPECT_EQ(t.jplus(0, 0), 0.0);
}

TEST(Suq2Hopf, CoproductAgreesWithColouredOnMatchedReps) {
  // Delta^{+,+}_+ and the su_q(2) coproduct share J+- images on the same basis.
  const QParams p(0.8);
  const GeneratorRep c = coproduct_rep(Colour::plus(), Colour::plus(), Colour::plus(),
                                       dqa_rep(2, Colour::plus(), p), dqa_rep(1, Colour::plus(), p), p);
  const GeneratorRep s = suq2_coproduct_rep(suq2_rep(2, p), suq2_rep(1, p), p);
  EXPECT_LT(max_abs(c.jplus - s.jplus), 1e-13);
  EXPECT_LT(max_abs(c.jminus - s.jminus), 1e-13);
}
