#include "qhopf/repr.hpp"

#include <algorithm>
#include <cmath>

#include "qhopf/errors.hpp"

namespace qhopf {

const char* algebra_name(Algebra a) { return a == Algebra::SUQ2 ? "suq2" : "dqa"; }

double raising_amplitude(int N, int n, const QParams& p) {
  return std::sqrt(q_number(n, p) * q_number(N - n + 1, p));
}

namespace {

void require_nonneg(int N) {
  if (N < 0) throw InvalidParameter("N must be nonnegative, got " + std::to_string(N));
}

GeneratorRep ladder_shell(int N) {
  const Eigen::Index d = N + 1;
  GeneratorRep rep;
  rep.j0 = Vector::Zero(d);
  rep.jplus = Matrix::Zero(d, d);
  rep.jminus = Matrix::Zero(d, d);
  rep.meta.ns = {N};
  return rep;
}

}  // namespace

GeneratorRep suq2_rep(int N, const QParams& p) {
  require_nonneg(N);
  GeneratorRep rep = ladder_shell(N);
  for (int n = 0; n <= N; ++n) rep.j0(n) = 0.5 * N - n;
  for (int n = 1; n <= N; ++n) rep.jplus(n - 1, n) = raising_amplitude(N, n, p);
  rep.jminus = rep.jplus.transpose();
  rep.meta.algebra = Algebra::SUQ2;
  rep.meta.path = "suq2_irrep";
  return rep;
}

GeneratorRep dqa_rep(int N, Colour delta, const QParams& p) {
  require_nonneg(N);
  GeneratorRep rep = ladder_shell(N);
  const std::vector<double> m = spectrum(N, delta, p);
  const double h_top = casimir_value(N, delta, p);
  for (int n = 0; n <= N; ++n) rep.j0(n) = m[n];
  for (int n = 1; n <= N; ++n) {
    // Rounding can push the radicand of a tiny amplitude below zero.
    rep.jplus(n - 1, n) = std::sqrt(std::max(0.0, h_top - H_fn(m[n], p)));
  }
  rep.jminus = rep.jplus.transpose();
  rep.meta.algebra = Algebra::DQA;
  rep.meta.colour = delta;
  rep.meta.path = "dqa_irrep";
  return rep;
}

GeneratorRep dqa_rep_via_map(int N, Colour delta, const QParams& p) {
  GeneratorRep rep = suq2_rep(N, p);
  rep.j0 = rep.j0.unaryExpr([&](double w) { return p_delta(w, delta, p); });
  rep.meta.algebra = Algebra::DQA;
  rep.meta.colour = delta;
  rep.meta.path = "dqa_irrep_via_map";
  return rep;
}

GeneratorRep make_rep(const RepLabel& label, const QParams& p) {
  if (label.algebra == Algebra::SUQ2) {
    if (label.colour) throw InvalidParameter("su_q(2) labels carry no colour");
    return suq2_rep(label.N, p);
  }
  if (!label.colour) throw InvalidParameter("DQA labels need a colour");
  return dqa_rep(label.N, *label.colour, p);
}

double commutator_residual(const GeneratorRep& rep, Algebra algebra, const QParams& p) {
  const Matrix j0 = rep.j0_matrix();
  const Matrix& jp = rep.jplus;
  const Matrix& jm = rep.jminus;
  const Matrix cp = j0 * jp - jp * j0;
  const Matrix cm = j0 * jm - jm * j0;
  const Matrix cpm = jp * jm - jm * jp;
  if (algebra == Algebra::SUQ2) {
    const Matrix rhs = rep.j0.unaryExpr([&](double z) { return q_number(2.0 * z, p); }).asDiagonal();
    return std::max({max_abs(cp - jp), max_abs(cm + jm), max_abs(cpm - rhs)});
  }
  const Matrix g = rep.j0.unaryExpr([&](double z) { return G_fn(z, p); }).asDiagonal();
  const Matrix f = rep.j0.unaryExpr([&](double z) { return F_fn(z, p); }).asDiagonal();
  return std::max({max_abs(cp - g * jp), max_abs(cm + jm * g), max_abs(cpm - f)});
}

CheckReport check_commutators(const GeneratorRep& rep, Algebra algebra, const QParams& p) {
  CheckParams params{p.q(), rep.meta.ns, {}, algebra_name(algebra)};
  if (rep.meta.colour) params.colours = {rep.meta.colour->value()};
  const double threshold = p.tol() * static_cast<double>(rep.dim());
  return timed_check("commutators", std::move(params), threshold,
                     [&] { return commutator_residual(rep, algebra, p); });
}

Matrix casimir_matrix(const GeneratorRep& rep, Algebra algebra, const QParams& p) {
  Vector h;
  if (algebra == Algebra::SUQ2) {
    h = rep.j0.unaryExpr([&](double z) { return q_number(z, p) * q_number(z + 1.0, p); });
  } else {
    h = rep.j0.unaryExpr([&](double z) { return H_fn(z, p); });
  }
  return rep.jminus * rep.jplus + Matrix(h.asDiagonal());
}

Matrix casimir_matrix_alt(const GeneratorRep& rep, Algebra algebra, const QParams& p) {
  Vector h;
  if (algebra == Algebra::SUQ2) {
    h = rep.j0.unaryExpr([&](double z) { return q_number(z, p) * q_number(z - 1.0, p); });
  } else {
    h = rep.j0.unaryExpr([&](double z) { return H_fn(z, p) - F_fn(z, p); });
  }
  return rep.jplus * rep.jminus + Matrix(h.asDiagonal());
}

CheckReport check_casimir(const GeneratorRep& rep, Algebra algebra, double expected,
                          const QParams& p) {
  CheckParams params{p.q(), rep.meta.ns, {}, algebra_name(algebra)};
  if (rep.meta.colour) params.colours = {rep.meta.colour->value()};
  const double threshold = p.tol() * static_cast<double>(rep.dim());
  return timed_check("casimir", std::move(params), threshold, [&] {
    const Matrix c = casimir_matrix(rep, algebra, p);
    const auto d = static_cast<Eigen::Index>(rep.dim());
    return std::max(max_abs(c - expected * Matrix::Identity(d, d)),
                    max_abs(c - casimir_matrix_alt(rep, algebra, p)));
  });
}

Matrix transmutation(int N, Colour) {
  require_nonneg(N);
  return Matrix::Identity(N + 1, N + 1);
}

GeneratorRep sigma_twist(const GeneratorRep& rep, const QParams& p) {
  if (rep.meta.algebra != Algebra::DQA) throw InvalidParameter("sigma acts on DQA reps only");
  GeneratorRep out = rep;
  out.j0 = rep.j0.unaryExpr([&](double z) { return sigma_scalar(z, p); });
  if (rep.meta.colour) out.meta.colour = -*rep.meta.colour;
  out.meta.path = "sigma(" + rep.meta.path + ")";
  return out;
}

GeneratorRep transmute(const GeneratorRep& rep, const QParams& p) {
  const Colour c = rep.meta.colour.value_or(Colour::plus());
  const Matrix t = transmutation(static_cast<int>(rep.dim()) - 1, c);
  const Matrix ti = transmutation(static_cast<int>(rep.dim()) - 1, -c);
  GeneratorRep out = sigma_twist(rep, p);
  out.j0 = (t * Matrix(out.j0.asDiagonal()) * ti).diagonal();
  out.jplus = t * out.jplus * ti;
  out.jminus = t * out.jminus * ti;
  out.meta.path = "transmute(" + rep.meta.path + ")";
  return out;
}

CheckReport check_transmutation(int N, Colour delta, const QParams& p) {
  return timed_check("transmutation", {p.q(), {N}, {delta.value()}, {}}, p.tol(), [&] {
    const GeneratorRep src = dqa_rep(N, delta, p);
    const GeneratorRep dst = dqa_rep(N, -delta, p);
    const Matrix t = transmutation(N, delta);
    const Matrix t_inv = transmutation(N, -delta);
    const double inverse = max_abs(t_inv * t - Matrix::Identity(N + 1, N + 1));
    const Matrix sigma_j0 =
        (2.0 / (p.q() - 1.0)) * Matrix::Identity(N + 1, N + 1) - dst.j0_matrix();
    return std::max({inverse, max_abs(t * src.j0_matrix() * t_inv - sigma_j0),
                     max_abs(t * src.jplus * t_inv - dst.jplus),
                     max_abs(t * src.jminus * t_inv - dst.jminus)});
  });
}

}  // namespace qhopf
