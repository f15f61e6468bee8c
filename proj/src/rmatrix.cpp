#include "qhopf/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qhopf/errors.hpp"
#include "qhopf/expr.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

namespace {

std::vector<int> colour_values(std::initializer_list<Colour> cs) {
  std::vector<int> v;
  for (Colour c : cs) v.push_back(c.value());
  return v;
}

std::vector<int> concat(std::initializer_list<const GeneratorRep*> reps) {
  std::vector<int> out;
  for (const GeneratorRep* r : reps) out.insert(out.end(), r->meta.ns.begin(), r->meta.ns.end());
  return out;
}

double threshold_for(const QParams& p, std::size_t dim) {
  return p.tol() * static_cast<double>(std::max<std::size_t>(dim, 1));
}

double series_coefficient(int n, const QParams& p) {
  const double q = p.q();
  return std::pow(1.0 - 1.0 / (q * q), n) / q_factorial(n, p) * std::pow(q, 0.5 * n * (n - 1));
}

/// sum_n c_n X^n, stopping at the first exactly-zero power.
Matrix nilpotent_series(const Matrix& x, std::size_t cap, const QParams& p) {
  const auto d = x.rows();
  Matrix sum = Matrix::Identity(d, d);
  Matrix power = Matrix::Identity(d, d);
  for (std::size_t n = 1;; ++n) {
    power = power * x;
    if ((power.array() == 0.0).all()) return sum;
    if (n >= cap) throw Error("R-matrix series did not terminate by nilpotency");
    sum += series_coefficient(static_cast<int>(n), p) * power;
  }
}

Vector log_q_leg(const GeneratorRep& rep, Colour c, const QParams& p, const char* side) {
  const double lq = std::log(p.q());
  return rep.j0.unaryExpr([&](double z) {
    const double arg = c.value() * G_fn(z, p);
    if (!(arg > 0.0)) {
      throw LogDomainError(std::string(side) + " leg: colour " + c.symbol() +
                           " gives non-positive log argument " + std::to_string(arg));
    }
    return std::log(arg) / lq;
  });
}

Matrix diagonal_prefactor(const Vector& l, const Vector& r, const QParams& p) {
  Vector diag(l.size() * r.size());
  for (Eigen::Index i = 0; i < l.size(); ++i)
    for (Eigen::Index j = 0; j < r.size(); ++j) diag(i * r.size() + j) = std::pow(p.q(), 2.0 * l(i) * r(j));
  return diag.asDiagonal();
}

}  // namespace

Matrix r_su(const GeneratorRep& left, const GeneratorRep& right, const QParams& p) {
  const double q = p.q();
  const Vector ql = left.j0.unaryExpr([&](double w) { return std::pow(q, w); });
  const Vector qr = right.j0.unaryExpr([&](double w) { return std::pow(q, -w); });
  const Matrix x = kron(ql.asDiagonal() * left.jplus, qr.asDiagonal() * right.jminus);
  return diagonal_prefactor(left.j0, right.j0, p) *
         nilpotent_series(x, left.dim() + right.dim(), p);
}

Matrix r_coloured(const RMatrixSpec& spec, const GeneratorRep& left, const GeneratorRep& right,
                  const QParams& p) {
  if (spec.algebra == Algebra::SUQ2) return r_su(left, right, p);
  const Vector ll = log_q_leg(left, spec.left, p, "left");
  const Vector lr = log_q_leg(right, spec.right, p, "right");
  const Vector gl = left.j0.unaryExpr([&](double z) { return spec.left.value() * G_fn(z, p); });
  const Vector gr = right.j0.unaryExpr([&](double z) { return spec.right.value() * G_fn(z, p); });
  const Matrix x = kron(gl.cwiseInverse().asDiagonal() * left.jplus, gr.asDiagonal() * right.jminus);
  return diagonal_prefactor(ll, lr, p) * nilpotent_series(x, left.dim() + right.dim(), p);
}

GeneratorRep sigma_delta_rep(const GeneratorRep& rep, Colour s, const QParams& p) {
  return s.is_plus() ? rep : sigma_twist(rep, p);
}

GeneratorRep transmute_to(const GeneratorRep& rep, Colour target, const QParams& p) {
  if (rep.meta.colour && *rep.meta.colour == target) return rep;
  return transmute(rep, p);
}

double intertwiner_residual(const Matrix& r, const GeneratorRep& coupled,
                            const GeneratorRep& opposite) {
  const Matrix r_inv = r.inverse();
  return std::max({max_abs(opposite.j0_matrix() - r * coupled.j0_matrix() * r_inv),
                   max_abs(opposite.jplus - r * coupled.jplus * r_inv),
                   max_abs(opposite.jminus - r * coupled.jminus * r_inv)});
}

double ybe_residual(const Matrix& r12, const Matrix& r13, const Matrix& r23, std::size_t d1,
                    std::size_t d2, std::size_t d3) {
  const Matrix a = embed12(r12, d1, d2, d3);
  const Matrix b = embed13(r13, d1, d2, d3);
  const Matrix c = embed23(r23, d1, d2, d3);
  return max_abs(a * b * c - c * b * a);
}

CheckReport check_colour_flip(const RMatrixSpec& from, const RMatrixSpec& to,
                              const GeneratorRep& left, const GeneratorRep& right,
                              const QParams& p) {
  CheckParams params{p.q(), concat({&left, &right}),
                     colour_values({from.left, from.right, to.left, to.right}), {}};
  const std::size_t dim = left.dim() * right.dim();
  return timed_check("colour_flip", std::move(params), threshold_for(p, dim), [&] {
    const GeneratorRep l2 = from.left == to.left ? left : transmute(left, p);
    const GeneratorRep r2 = from.right == to.right ? right : transmute(right, p);
    const int nl = static_cast<int>(left.dim()) - 1;
    const int nr = static_cast<int>(right.dim()) - 1;
    const Matrix tl = from.left == to.left ? Matrix::Identity(nl + 1, nl + 1)
                                           : transmutation(nl, from.left);
    const Matrix tr = from.right == to.right ? Matrix::Identity(nr + 1, nr + 1)
                                             : transmutation(nr, from.right);
    const Matrix tt = kron(tl, tr);
    const Matrix lhs = tt * r_coloured(from, left, right, p) * tt.inverse();
    return max_abs(lhs - r_coloured(to, l2, r2, p));
  });
}

CheckReport check_intertwiner(Colour zeta, Colour eta, Colour delta, const GeneratorRep& left,
                              const GeneratorRep& right, const QParams& p) {
  CheckParams params{p.q(), concat({&left, &right}), colour_values({zeta, eta, delta}), {}};
  const std::size_t dim = left.dim() * right.dim();
  return timed_check("intertwiner", std::move(params), threshold_for(p, dim), [&] {
    const auto s = ColourCheck::Strict;
    const Matrix r = r_coloured({zeta, eta}, left, right, p);
    return intertwiner_residual(r, coproduct_rep(zeta, eta, delta, left, right, p, s),
                                opposite_coproduct_rep(eta, zeta, delta, left, right, p, s));
  });
}

CheckReport check_fusion(Colour lambda, Colour mu, Colour zeta, Colour nu, Colour eta,
                         const GeneratorRep& a, const GeneratorRep& b, const GeneratorRep& c,
                         const QParams& p) {
  CheckParams params{p.q(), concat({&a, &b, &c}), colour_values({lambda, mu, zeta, nu, eta}),
                     {}};
  const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
  return timed_check("fusion", std::move(params), threshold_for(p, da * db * dc), [&] {
    const auto s = ColourCheck::Strict;
    const Matrix r_ac = embed13(r_coloured({lambda, nu}, a, c, p), da, db, dc);
    const Matrix r_bc = embed23(r_coloured({mu, nu}, b, c, p), da, db, dc);
    const Matrix r_ab = embed12(r_coloured({lambda, mu}, a, b, p), da, db, dc);

    const Matrix lhs1 = r_coloured({zeta, eta}, coproduct_rep(lambda, mu, zeta, a, b, p, s),
                                   sigma_delta_rep(c, nu * eta, p), p);
    const Matrix lhs2 = r_coloured({zeta, eta}, sigma_delta_rep(a, lambda * zeta, p),
                                   coproduct_rep(mu, nu, eta, b, c, p, s), p);
    return std::max(max_abs(lhs1 - r_ac * r_bc), max_abs(lhs2 - r_ac * r_ab));
  });
}

CheckReport check_cybe(Colour zeta, Colour eta, Colour mu, const GeneratorRep& r1,
                       const GeneratorRep& r2, const GeneratorRep& r3, const QParams& p) {
  CheckParams params{p.q(), concat({&r1, &r2, &r3}), colour_values({zeta, eta, mu}), {}};
  const std::size_t dim = r1.dim() * r2.dim() * r3.dim();
  return timed_check("coloured_ybe", std::move(params), threshold_for(p, dim), [&] {
    return ybe_residual(r_coloured({zeta, eta}, r1, r2, p), r_coloured({zeta, mu}, r1, r3, p),
                        r_coloured({eta, mu}, r2, r3, p), r1.dim(), r2.dim(), r3.dim());
  });
}

CheckReport check_suq2_ybe(const GeneratorRep& r1, const GeneratorRep& r2,
                           const GeneratorRep& r3, const QParams& p) {
  CheckParams params{p.q(), concat({&r1, &r2, &r3}), {}, "suq2"};
  const std::size_t dim = r1.dim() * r2.dim() * r3.dim();
  return timed_check("suq2_ybe", std::move(params), threshold_for(p, dim), [&] {
    return ybe_residual(r_su(r1, r2, p), r_su(r1, r3, p), r_su(r2, r3, p), r1.dim(), r2.dim(),
                        r3.dim());
  });
}

CheckReport check_counit_r(Colour zeta, Colour eta, const GeneratorRep& rep, const QParams& p) {
  const bool left_form = rep.meta.colour && *rep.meta.colour == eta;
  const bool right_form = rep.meta.colour && *rep.meta.colour == zeta;
  if (!left_form && !right_form) {
    throw ColourMismatch("counit of R needs a rep of colour zeta or eta");
  }
  CheckParams params{p.q(), rep.meta.ns, colour_values({zeta, eta}), {}};
  return timed_check("counit_r", std::move(params), p.tol(), [&] {
    const auto d = static_cast<Eigen::Index>(rep.dim());
    const Matrix id = Matrix::Identity(d, d);
    double worst = 0.0;
    if (left_form) {
      worst = std::max(worst, max_abs(r_coloured({zeta, eta}, dqa_rep(0, zeta, p), rep, p) - id));
    }
    if (right_form) {
      worst = std::max(worst, max_abs(r_coloured({zeta, eta}, rep, dqa_rep(0, eta, p), p) - id));
    }
    return worst;
  });
}

namespace {

using LegMap = std::function<Expr(const Expr&)>;

/// Applies `left_map` (x) `right_map` to R^{zeta,eta} written as
/// sum_{k,n} c_n (P_k A^n) (x) (D_k B^n) and evaluates on left (x) right.
/// The projectors interpolate on the spectrum `left_map(J0)` takes on `left`.
Matrix mapped_r(Colour zeta, Colour eta, const LegMap& left_map, const LegMap& right_map,
                const GeneratorRep& left, const GeneratorRep& right, const QParams& p) {
  const Vector nodes_v = eval_expr(left_map(Expr::j0()), left, p).diagonal();
  std::vector<double> nodes(nodes_v.begin(), nodes_v.end());
  std::vector<double> logs;
  for (double z : nodes) {
    const double arg = zeta.value() * G_fn(z, p);
    if (!(arg > 0.0)) throw LogDomainError("projector node outside the colour domain");
    logs.push_back(std::log(arg) / std::log(p.q()));
  }

  const Expr a = Expr::prod({Expr::scaled(zeta.value(), Expr::of(JFunction::g_inverse())),
                             Expr::jp()});
  const Expr b = Expr::prod({Expr::scaled(eta.value(), Expr::of(JFunction::g())), Expr::jm()});
  const auto n_max = static_cast<int>(std::min(left.dim(), right.dim()));
  const auto dim = static_cast<Eigen::Index>(left.dim() * right.dim());
  Matrix total = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::vector<Expr> lf{Expr::of(JFunction::lagrange(nodes, static_cast<int>(k)))};
    std::vector<Expr> rf{Expr::of(JFunction::cg_power(eta.value(), 2.0 * logs[k]))};
    for (int n = 0; n < n_max; ++n) {
      if (n > 0) {
        lf.push_back(a);
        rf.push_back(b);
      }
      const double c = series_coefficient(n, p);
      total += c * kron(eval_expr(left_map(Expr::prod(lf)), left, p),
                        eval_expr(right_map(Expr::prod(rf)), right, p));
    }
  }
  return total;
}

bool simple_spectrum(const Vector& v) {
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

CheckReport check_antipode_r(Colour lambda, Colour mu, Colour zeta, Colour eta,
                             const GeneratorRep& left, const GeneratorRep& right,
                             const QParams& p) {
  if (!simple_spectrum(left.j0)) {
    throw DegenerateSpectrum("antipode check of R needs a simple left J0-spectrum");
  }
  CheckParams params{p.q(), concat({&left, &right}), colour_values({lambda, mu, zeta, eta}), {}};
  const std::size_t dim = left.dim() * right.dim();
  return timed_check("antipode_r", std::move(params), threshold_for(p, dim), [&] {
    const Matrix r = r_coloured({lambda, mu}, left, right, p);
    const auto d = static_cast<Eigen::Index>(dim);
    const Matrix s_form = mapped_r(
        zeta, eta, [&](const Expr& e) { return apply_antipode(e, lambda, zeta, p); },
        [&](const Expr& e) { return apply_sigma_delta(e, mu * eta); }, left, right, p);
    const Matrix mirror = mapped_r(
        zeta, eta, [&](const Expr& e) { return apply_sigma_delta(e, lambda * zeta); },
        [&](const Expr& e) { return apply_antipode_inverse(e, mu, eta, p); }, left, right, p);
    return std::max(max_abs(s_form * r - Matrix::Identity(d, d)),
                    max_abs(mirror * r - Matrix::Identity(d, d)));
  });
}

CheckReport check_r_su_equivalence(Colour delta, int n1, int n2, const QParams& p) {
  return timed_check("r_su_equivalence", {p.q(), {n1, n2}, {delta.value()}, {}}, p.tol(), [&] {
    return max_abs(r_coloured({delta, delta}, dqa_rep(n1, delta, p), dqa_rep(n2, delta, p), p) -
                   r_su(suq2_rep(n1, p), suq2_rep(n2, p), p));
  });
}

CheckReport check_suq2_intertwiner(const GeneratorRep& left, const GeneratorRep& right,
                                   const QParams& p) {
  CheckParams params{p.q(), concat({&left, &right}), {}, "suq2"};
  const std::size_t dim = left.dim() * right.dim();
  return timed_check("suq2_intertwiner", std::move(params), threshold_for(p, dim), [&] {
    const GeneratorRep coupled = suq2_coproduct_rep(left, right, p);
    const GeneratorRep swapped = suq2_coproduct_rep(right, left, p);
    const Matrix s = swap_matrix(left.dim(), right.dim());
    GeneratorRep opposite = swapped;
    opposite.j0 = (s * swapped.j0_matrix() * s.transpose()).diagonal();
    opposite.jplus = s * swapped.jplus * s.transpose();
    opposite.jminus = s * swapped.jminus * s.transpose();
    return intertwiner_residual(r_su(left, right, p), coupled, opposite);
  });
}

}  // namespace qhopf
