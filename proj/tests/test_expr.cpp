#include <cmath>

#include <gtest/gtest.h>

#include "qhopf/errors.hpp"
#include "qhopf/expr.hpp"

using namespace qhopf;

TEST(Eval, GeneratorsAndUnit) {
  const QParams p(0.5);
  const GeneratorRep r = dqa_rep(2, Colour::plus(), p);
  const Matrix j0 = eval_expr(Expr::j0(), r, p);
  EXPECT_NEAR(j0(0, 0), 2.0, 1e-13);
  EXPECT_NEAR(j0(1, 1), 0.0, 1e-13);
  EXPECT_NEAR(j0(2, 2), -1.0, 1e-13);
  EXPECT_EQ(eval_expr(Expr::unit(), r, p), Matrix::Identity(3, 3));
  EXPECT_EQ(eval_expr(Expr::jp(), r, p), r.jplus);
}

TEST(Eval, GInverseCommutesPastRaising) {
  for (double q : {0.3, 0.5, 0.8}) {
    const QParams p(q);
    for (Colour d : kBothColours) {
      const GeneratorRep r = dqa_rep(4, d, p);
      const Expr lhs = Expr::prod({Expr::of(JFunction::g_inverse()), Expr::jp()});
      const Expr rhs = Expr::scaled(q, Expr::prod({Expr::jp(), Expr::of(JFunction::g_inverse())}));
      EXPECT_LT(max_abs(eval_expr(lhs, r, p) - eval_expr(rhs, r, p)), 1e-12);
    }
  }
}

TEST(Eval, CatalogueFunctions) {
  const QParams p(0.5);
  EXPECT_NEAR(JFunction::g_squared()(1.0, p), 2.25, 1e-15);
  EXPECT_NEAR(JFunction::g_inverse_squared()(1.0, p), 1.0 / 2.25, 1e-15);
  EXPECT_NEAR(JFunction::power(3)(2.0, p), 8.0, 1e-15);
  EXPECT_NEAR(JFunction::affine(2.0, 1.0)(3.0, p), 7.0, 1e-15);
  EXPECT_NEAR(JFunction::log_q(1.0)(2.0, p), -1.0, 1e-14);
  EXPECT_NEAR(JFunction::cg_power(1.0, 2.0)(2.0, p), 4.0, 1e-14);
  EXPECT_NEAR(JFunction::q_pow_affine(1.0, 1.0)(1.0, p), 0.25, 1e-15);
  const JFunction l = JFunction::lagrange({0.0, 1.0, 3.0}, 1);
  EXPECT_NEAR(l(1.0, p), 1.0, 1e-15);
  EXPECT_NEAR(l(0.0, p), 0.0, 1e-15);
  EXPECT_NEAR(l(3.0, p), 0.0, 1e-15);
  EXPECT_THROW(JFunction::g_inverse()(-2.0, p), SingularPoint);
  EXPECT_THROW(JFunction::log_q(-1.0)(0.0, p), LogDomainError);
  EXPECT_THROW(JFunction::lagrange({0.0}, 3)(0.0, p), MalformedExpr);
}

TEST(Eval, MalformedScale) {
  const QParams p(0.5);
  Expr bad = Expr::scaled(2.0, Expr::unit());
  bad.children.push_back(Expr::unit());
  EXPECT_THROW(eval_expr(bad, dqa_rep(1, Colour::plus(), p), p), MalformedExpr);
}

TEST(Sigma, InvolutionStructural) {
  const Expr e = Expr::sum({Expr::prod({Expr::of(JFunction::g()), Expr::jp(), Expr::j0()}),
                            Expr::scaled(2.0, Expr::of(JFunction::g_inverse()))});
  const Expr twice = apply_sigma(apply_sigma(e));
  const QParams p(0.5);
  const GeneratorRep r = dqa_rep(3, Colour::minus(), p);
  EXPECT_LT(max_abs(eval_expr(twice, r, p) - eval_expr(e, r, p)), 1e-12);
  EXPECT_EQ(apply_sigma(apply_sigma(Expr::of(JFunction::g()))), Expr::of(JFunction::g()));
  EXPECT_EQ(apply_sigma_delta(e, Colour::plus()), e);
}

TEST(Sigma, FlipsG) {
  const QParams p(0.8);
  const GeneratorRep r = dqa_rep(3, Colour::plus(), p);
  EXPECT_LT(max_abs(eval_expr(apply_sigma(Expr::of(JFunction::g())), r, p) +
                    eval_expr(Expr::of(JFunction::g()), r, p)),
            1e-13);
  const Matrix s0 = eval_expr(apply_sigma(Expr::j0()), r, p);
  EXPECT_LT(max_abs(s0 - (2.0 / (p.q() - 1.0) * Matrix::Identity(4, 4) - r.j0_matrix())), 1e-13);
}

TEST(Antipode, RaisingImage) {
  const QParams p(0.5);
  const GeneratorRep r = dqa_rep(2, Colour::plus(), p);
  const Expr s = apply_antipode(Expr::jp(), Colour::plus(), Colour::plus(), p);
  EXPECT_EQ(s, Expr::scaled(-0.5, Expr::jp()));
  EXPECT_LT(max_abs(eval_expr(s, r, p) + 0.5 * r.jplus), 1e-15);
  const Expr sm = apply_antipode(Expr::jm(), Colour::plus(), Colour::plus(), p);
  EXPECT_LT(max_abs(eval_expr(sm, r, p) + 2.0 * r.jminus), 1e-15);
}

TEST(Antipode, SameColourJ0Form) {
  for (double q : {0.5, 0.8}) {
    const QParams p(q);
    for (Colour d : kBothColours) {
      for (int N = 0; N <= 5; ++N) {
        const GeneratorRep r = dqa_rep(N, d, p);
        const Matrix s = eval_expr(apply_antipode(Expr::j0(), d, d, p), r, p);
        const Matrix ref =
            -r.j0_matrix() * eval_expr(Expr::of(JFunction::g_inverse()), r, p);
        EXPECT_LT(max_abs(s - ref), 1e-12);
      }
    }
  }
}

TEST(Antipode, ReversesProducts) {
  const QParams p(0.5);
  const Expr a = Expr::jp();
  const Expr b = Expr::of(JFunction::g());
  const Colour z = Colour::minus(), d = Colour::plus();
  EXPECT_EQ(apply_antipode(Expr::prod({a, b}), z, d, p),
            Expr::prod({apply_antipode(b, z, d, p), apply_antipode(a, z, d, p)}));
}

TEST(Antipode, InverseUndoesAntipode) {
  const QParams p(0.8);
  const Expr e = Expr::prod({Expr::of(JFunction::g()), Expr::jp(), Expr::jm(), Expr::j0()});
  for (Colour z : kBothColours) {
    for (Colour d : kBothColours) {
      const GeneratorRep r = dqa_rep(3, z * d, p);
      const Expr back = apply_antipode_inverse(apply_antipode(e, z, d, p), z, d, p);
      EXPECT_LT(max_abs(eval_expr(back, r, p) - eval_expr(e, r, p)), 1e-11);
    }
  }
}

TEST(Antipode, Suq2) {
  const QParams p(0.5);
  const GeneratorRep r = suq2_rep(2, p);
  EXPECT_LT(max_abs(eval_expr(suq2_antipode(Expr::j0(), p), r, p) + r.j0_matrix()), 1e-15);
  EXPECT_LT(max_abs(eval_expr(suq2_antipode(Expr::jp(), p), r, p) + 0.5 * r.jplus), 1e-15);
}
