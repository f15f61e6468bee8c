#include "qhopf/hopf.hpp"

#include <algorithm>
#include <string>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

std::string colour_str(std::initializer_list<Colour> cs) {
  std::string s;
  for (Colour c : cs) s += c.symbol();
  return s;
}

std::vector<int> colour_values(std::initializer_list<Colour> cs) {
  std::vector<int> v;
  for (Colour c : cs) v.push_back(c.value());
  return v;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_colour(const GeneratorRep& rep, Colour expected, const char* what) {
  if (rep.meta.colour && *rep.meta.colour != expected) {
    throw ColourMismatch(std::string(what) + ": rep colour " + rep.meta.colour->symbol() +
                         " where " + expected.symbol() + " is required");
  }
}

double threshold_for(const QParams& p, std::size_t dim) {
  return p.tol() * static_cast<double>(std::max<std::size_t>(dim, 1));
}

}  // namespace

LegList coproduct_legs(Generator gen, Colour zeta, Colour eta, Colour delta, const QParams& p) {
  const double inv = 1.0 / (p.q() - 1.0);
  LegList out{{}, zeta, eta, delta};
  if (gen == Generator::J0) {
    const double c = -(delta * zeta * eta).value() * inv;
    out.legs.emplace_back(Expr::scaled(inv, Expr::unit()), Expr::unit());
    out.legs.emplace_back(Expr::scaled(c, Expr::of(JFunction::g())), Expr::of(JFunction::g()));
  } else {
    const Expr j = generator_expr(gen);
    out.legs.emplace_back(Expr::scaled(eta.value(), j), Expr::of(JFunction::g_inverse()));
    out.legs.emplace_back(Expr::scaled(zeta.value(), Expr::of(JFunction::g())), j);
  }
  return out;
}

std::vector<std::pair<Expr, Expr>> suq2_coproduct_legs(Generator gen) {
  std::vector<std::pair<Expr, Expr>> legs;
  if (gen == Generator::J0) {
    legs.emplace_back(Expr::j0(), Expr::unit());
    legs.emplace_back(Expr::unit(), Expr::j0());
  } else {
    const Expr j = generator_expr(gen);
    legs.emplace_back(j, Expr::of(JFunction::q_pow_affine(1.0, 0.0)));
    legs.emplace_back(Expr::of(JFunction::q_pow_affine(-1.0, 0.0)), j);
  }
  return legs;
}

Matrix eval_legs(const std::vector<std::pair<Expr, Expr>>& legs, const GeneratorRep& left,
                 const GeneratorRep& right, const QParams& p) {
  const auto d = static_cast<Eigen::Index>(left.dim() * right.dim());
  Matrix m = Matrix::Zero(d, d);
  for (const auto& [l, r] : legs) m += kron(eval_expr(l, left, p), eval_expr(r, right, p));
  return m;
}

namespace {

GeneratorRep assemble(const Matrix& j0, Matrix jplus, Matrix jminus) {
  GeneratorRep out;
  out.j0 = j0.diagonal();
  out.jplus = std::move(jplus);
  out.jminus = std::move(jminus);
  return out;
}

}  // namespace

GeneratorRep coproduct_rep(Colour zeta, Colour eta, Colour delta, const GeneratorRep& left,
                           const GeneratorRep& right, const QParams& p, ColourCheck mode) {
  std::vector<std::string> warnings;
  auto check = [&](const GeneratorRep& rep, Colour leg, const char* side) {
    if (!rep.meta.colour || *rep.meta.colour == leg) return;
    std::string msg = std::string(side) + " rep has colour " + rep.meta.colour->symbol() +
                      ", leg colour is " + leg.symbol();
    if (mode == ColourCheck::Strict) throw ColourMismatch(msg);
    warnings.push_back(std::move(msg));
  };
  check(left, zeta, "left");
  check(right, eta, "right");

  GeneratorRep out = assemble(
      eval_legs(coproduct_legs(Generator::J0, zeta, eta, delta, p).legs, left, right, p),
      eval_legs(coproduct_legs(Generator::Jp, zeta, eta, delta, p).legs, left, right, p),
      eval_legs(coproduct_legs(Generator::Jm, zeta, eta, delta, p).legs, left, right, p));
  out.meta.algebra = Algebra::DQA;
  out.meta.colour = delta;
  out.meta.ns = concat(left.meta.ns, right.meta.ns);
  out.meta.path = "Delta" + colour_str({zeta, eta, delta}) + "(" + left.meta.path + "," +
                  right.meta.path + ")";
  out.meta.warnings = left.meta.warnings;
  out.meta.warnings.insert(out.meta.warnings.end(), right.meta.warnings.begin(),
                           right.meta.warnings.end());
  out.meta.warnings.insert(out.meta.warnings.end(), warnings.begin(), warnings.end());
  return out;
}

GeneratorRep suq2_coproduct_rep(const GeneratorRep& left, const GeneratorRep& right,
                                const QParams& p) {
  GeneratorRep out = assemble(eval_legs(suq2_coproduct_legs(Generator::J0), left, right, p),
                              eval_legs(suq2_coproduct_legs(Generator::Jp), left, right, p),
                              eval_legs(suq2_coproduct_legs(Generator::Jm), left, right, p));
  out.meta.algebra = Algebra::SUQ2;
  out.meta.ns = concat(left.meta.ns, right.meta.ns);
  out.meta.path = "Delta(" + left.meta.path + "," + right.meta.path + ")";
  return out;
}

GeneratorRep opposite_coproduct_rep(Colour zeta, Colour eta, Colour delta,
                                    const GeneratorRep& left, const GeneratorRep& right,
                                    const QParams& p, ColourCheck mode) {
  const GeneratorRep swapped = coproduct_rep(zeta, eta, delta, right, left, p, mode);
  const Matrix s = swap_matrix(left.dim(), right.dim());
  GeneratorRep out = assemble(s * swapped.j0_matrix() * s.transpose(),
                              s * swapped.jplus * s.transpose(),
                              s * swapped.jminus * s.transpose());
  out.meta = swapped.meta;
  out.meta.ns = concat(left.meta.ns, right.meta.ns);
  out.meta.path = "op" + swapped.meta.path;
  return out;
}

double counit_value(Generator gen, Colour delta, const QParams& p) {
  if (gen != Generator::J0) return 0.0;
  return (1.0 - delta.value()) / (p.q() - 1.0);
}

double rep_distance(const GeneratorRep& a, const GeneratorRep& b) {
  if (a.dim() != b.dim()) throw InvalidParameter("rep_distance: dimension mismatch");
  return std::max({max_abs(a.j0 - b.j0), max_abs(a.jplus - b.jplus),
                   max_abs(a.jminus - b.jminus)});
}

CheckReport check_coassociativity(const CoassocColours& c, const GeneratorRep& r1,
                                  const GeneratorRep& r2, const GeneratorRep& r3,
                                  const QParams& p) {
  const auto [zeta, eta, mu, nu, rho, delta] = c;
  require_colour(r1, zeta, "coassociativity");
  require_colour(r2, eta, "coassociativity");
  require_colour(r3, nu, "coassociativity");
  CheckParams params{p.q(), concat(concat(r1.meta.ns, r2.meta.ns), r3.meta.ns),
                     colour_values({zeta, eta, mu, nu, rho, delta}), {}};
  const std::size_t dim = r1.dim() * r2.dim() * r3.dim();
  return timed_check("coassociativity", std::move(params), threshold_for(p, dim), [&] {
    const auto s = ColourCheck::Strict;
    const GeneratorRep lhs =
        coproduct_rep(mu, nu, delta, coproduct_rep(zeta, eta, mu, r1, r2, p, s), r3, p, s);
    const GeneratorRep rhs =
        coproduct_rep(zeta, rho, delta, r1, coproduct_rep(eta, nu, rho, r2, r3, p, s), p, s);
    return rep_distance(lhs, rhs);
  });
}

namespace {

double generator_distance(const GeneratorRep& coupled, Generator gen, const Expr& expected,
                          const GeneratorRep& rep, const QParams& p) {
  const Matrix got = gen == Generator::J0   ? coupled.j0_matrix()
                     : gen == Generator::Jp ? coupled.jplus
                                            : coupled.jminus;
  return max_abs(got - eval_expr(expected, rep, p));
}

}  // namespace

CheckReport check_counit_axiom(Colour zeta, Colour eta, Colour delta, const GeneratorRep& rep,
                               const QParams& p) {
  const bool left_form = rep.meta.colour && *rep.meta.colour == eta;
  const bool right_form = rep.meta.colour && *rep.meta.colour == zeta;
  if (!left_form && !right_form) {
    throw ColourMismatch("counit axiom needs a rep of colour zeta or eta");
  }
  CheckParams params{p.q(), rep.meta.ns, colour_values({zeta, eta, delta}), {}};
  return timed_check("counit_axiom", std::move(params), threshold_for(p, rep.dim()), [&] {
    double worst = 0.0;
    const auto s = ColourCheck::Strict;
    if (left_form) {
      const GeneratorRep coupled = coproduct_rep(zeta, eta, delta, dqa_rep(0, zeta, p), rep, p, s);
      for (Generator g : kGenerators) {
        worst = std::max(worst, generator_distance(
                                    coupled, g, apply_sigma_delta(generator_expr(g), eta * delta),
                                    rep, p));
      }
    }
    if (right_form) {
      const GeneratorRep coupled = coproduct_rep(zeta, eta, delta, rep, dqa_rep(0, eta, p), p, s);
      for (Generator g : kGenerators) {
        worst = std::max(worst, generator_distance(
                                    coupled, g, apply_sigma_delta(generator_expr(g), zeta * delta),
                                    rep, p));
      }
    }
    return worst;
  });
}

CheckReport check_antipode_axiom(Colour zeta, Colour eta, Colour mu, Colour delta,
                                 const GeneratorRep& rep, const QParams& p) {
  require_colour(rep, mu, "antipode axiom");
  CheckParams params{p.q(), rep.meta.ns, colour_values({zeta, eta, mu, delta}), {}};
  return timed_check("antipode_axiom", std::move(params), threshold_for(p, rep.dim()), [&] {
    const auto d = static_cast<Eigen::Index>(rep.dim());
    double worst = 0.0;
    for (Generator g : kGenerators) {
      const Matrix expected = counit_value(g, delta, p) * Matrix::Identity(d, d);
      Matrix left_form = Matrix::Zero(d, d);
      Matrix mirror = Matrix::Zero(d, d);
      for (const auto& [l, r] : coproduct_legs(g, zeta, eta, delta, p).legs) {
        left_form += eval_expr(apply_antipode(l, mu, zeta, p), rep, p) *
                     eval_expr(apply_sigma_delta(r, mu * eta), rep, p);
        mirror += eval_expr(apply_sigma_delta(l, mu * zeta), rep, p) *
                  eval_expr(apply_antipode(r, mu, eta, p), rep, p);
      }
      worst = std::max({worst, max_abs(left_form - expected), max_abs(mirror - expected)});
    }
    return worst;
  });
}

CheckReport check_sigma_coproduct(Colour zeta, Colour eta, Colour delta, Colour mu, Colour nu,
                                  Colour rho, const GeneratorRep& r1, const GeneratorRep& r2,
                                  const QParams& p) {
  require_colour(r1, mu, "sigma coproduct law");
  require_colour(r2, nu, "sigma coproduct law");
  CheckParams params{p.q(), concat(r1.meta.ns, r2.meta.ns),
                     colour_values({zeta, eta, delta, mu, nu, rho}), {}};
  const std::size_t dim = r1.dim() * r2.dim();
  return timed_check("sigma_coproduct", std::move(params), threshold_for(p, dim), [&] {
    const GeneratorRep coupled = coproduct_rep(mu, nu, rho, r1, r2, p, ColourCheck::Strict);
    double worst = 0.0;
    for (Generator g : kGenerators) {
      std::vector<std::pair<Expr, Expr>> twisted;
      for (const auto& [l, r] : coproduct_legs(g, zeta, eta, delta, p).legs) {
        twisted.emplace_back(apply_sigma_delta(l, mu * zeta), apply_sigma_delta(r, nu * eta));
      }
      const Matrix lhs = eval_legs(twisted, r1, r2, p);
      const Matrix rhs = eval_expr(apply_sigma_delta(generator_expr(g), rho * delta), coupled, p);
      worst = std::max(worst, max_abs(lhs - rhs));
    }
    return worst;
  });
}

CheckReport check_sigma_counit(Colour delta, Colour zeta, const QParams& p) {
  return timed_check("sigma_counit", {p.q(), {0}, colour_values({delta, zeta}), {}}, p.tol(), [&] {
    const GeneratorRep eps_delta = dqa_rep(0, delta, p);
    const GeneratorRep eps_zeta = dqa_rep(0, zeta, p);
    double worst = 0.0;
    for (Generator g : kGenerators) {
      const Expr e = generator_expr(g);
      worst = std::max(worst, max_abs(eval_expr(apply_sigma_delta(e, delta * zeta), eps_delta, p) -
                                      eval_expr(e, eps_zeta, p)));
    }
    return worst;
  });
}

CheckReport check_sigma_antipode(Colour zeta, Colour eta, Colour delta, Colour mu,
                                 const GeneratorRep& rep, const QParams& p) {
  CheckParams params{p.q(), rep.meta.ns, colour_values({zeta, eta, delta, mu}), {}};
  return timed_check("sigma_antipode", std::move(params), threshold_for(p, rep.dim()), [&] {
    double worst = 0.0;
    for (Generator g : kGenerators) {
      const Expr e = generator_expr(g);
      const Expr lhs = apply_sigma_delta(apply_antipode(e, eta, delta, p), zeta * eta);
      const Expr rhs = apply_antipode(apply_sigma_delta(e, mu * delta), zeta, mu, p);
      worst = std::max(worst, max_abs(eval_expr(lhs, rep, p) - eval_expr(rhs, rep, p)));
    }
    return worst;
  });
}

CheckReport check_specialization(Colour delta, const GeneratorRep& left,
                                 const GeneratorRep& right, const QParams& p) {
  CheckParams params{p.q(), concat(left.meta.ns, right.meta.ns), {delta.value()}, {}};
  const std::size_t dim = left.dim() * right.dim();
  return timed_check("specialization", std::move(params), threshold_for(p, dim), [&] {
    const double q = p.q();
    const int d = delta.value();
    const Vector gl = left.j0.unaryExpr([&](double z) { return G_fn(z, p); });
    const Vector gr = right.j0.unaryExpr([&](double z) { return G_fn(z, p); });
    const Matrix GL = gl.asDiagonal();
    const Matrix GR = gr.asDiagonal();
    const Matrix GRinv = gr.cwiseInverse().asDiagonal();
    const auto n = static_cast<Eigen::Index>(dim);
    const Matrix j0 = (Matrix::Identity(n, n) - d * kron(GL, GR)) / (q - 1.0);
    const Matrix jp = d * (kron(left.jplus, GRinv) + kron(GL, right.jplus));
    const Matrix jm = d * (kron(left.jminus, GRinv) + kron(GL, right.jminus));
    const GeneratorRep got = coproduct_rep(delta, delta, delta, left, right, p);

    const Matrix s_j0 = eval_expr(apply_antipode(Expr::j0(), delta, delta, p), left, p);
    const Matrix s_ref = -left.j0_matrix() * Matrix(gl.cwiseInverse().asDiagonal());
    return std::max({max_abs(got.j0_matrix() - j0), max_abs(got.jplus - jp),
                     max_abs(got.jminus - jm), max_abs(s_j0 - s_ref)});
  });
}

CheckReport check_suq2_hopf(int n1, int n2, int n3, const QParams& p) {
  const GeneratorRep r1 = suq2_rep(n1, p);
  const GeneratorRep r2 = suq2_rep(n2, p);
  const GeneratorRep r3 = suq2_rep(n3, p);
  const std::size_t dim = r1.dim() * r2.dim() * r3.dim();
  return timed_check("suq2_hopf", {p.q(), {n1, n2, n3}, {}, "suq2"}, threshold_for(p, dim), [&] {
    const GeneratorRep lhs = suq2_coproduct_rep(suq2_coproduct_rep(r1, r2, p), r3, p);
    const GeneratorRep rhs = suq2_coproduct_rep(r1, suq2_coproduct_rep(r2, r3, p), p);
    double worst = rep_distance(lhs, rhs);

    const GeneratorRep trivial = suq2_rep(0, p);
    for (const GeneratorRep* r : {&r1, &r2, &r3}) {
      worst = std::max({worst, rep_distance(suq2_coproduct_rep(trivial, *r, p), *r),
                        rep_distance(suq2_coproduct_rep(*r, trivial, p), *r)});
      const auto d = static_cast<Eigen::Index>(r->dim());
      for (Generator g : kGenerators) {
        Matrix left_form = Matrix::Zero(d, d);
        Matrix mirror = Matrix::Zero(d, d);
        for (const auto& [l, rr] : suq2_coproduct_legs(g)) {
          left_form += eval_expr(suq2_antipode(l, p), *r, p) * eval_expr(rr, *r, p);
          mirror += eval_expr(l, *r, p) * eval_expr(suq2_antipode(rr, p), *r, p);
        }
        worst = std::max({worst, max_abs(left_form), max_abs(mirror)});
      }
    }
    return worst;
  });
}

}  // namespace qhopf
