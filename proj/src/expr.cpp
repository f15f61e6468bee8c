#include "qhopf/expr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

double g_nonzero(double z, const QParams& p) {
  const double g = G_fn(z, p);
  if (std::abs(g) < p.tol() * (1.0 + std::abs(z))) {
    throw SingularPoint("G vanishes at z = " + std::to_string(z));
  }
  return g;
}

double apply_subst(const Subst& s, double z, const QParams& p) {
  switch (s.kind) {
    case Subst::Kind::Sigma:
      return sigma_scalar(z, p);
    case Subst::Kind::Antipode:
      return (1.0 - s.c / g_nonzero(z, p)) / (p.q() - 1.0);
    case Subst::Kind::Negate:
      return -z;
  }
  throw MalformedExpr("unknown substitution");
}

}  // namespace

double JFunction::operator()(double z, const QParams& p) const {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) z = apply_subst(*it, z, p);
  const double q = p.q();
  switch (kind) {
    case Kind::Identity:
      return z;
    case Kind::G:
      return G_fn(z, p);
    case Kind::GInverse:
      return 1.0 / g_nonzero(z, p);
    case Kind::GSquared:
      return std::pow(G_fn(z, p), 2);
    case Kind::GInverseSquared:
      return std::pow(g_nonzero(z, p), -2);
    case Kind::Power:
      return std::pow(z, e);
    case Kind::Affine:
      return a * z + b;
    case Kind::LogQ: {
      const double arg = a * G_fn(z, p);
      if (!(arg > 0.0)) {
        throw LogDomainError("log_q of non-positive value " + std::to_string(arg));
      }
      return std::log(arg) / std::log(q);
    }
    case Kind::CGPower: {
      const double arg = a * G_fn(z, p);
      if (!(arg > 0.0)) {
        throw LogDomainError("real power of non-positive value " + std::to_string(arg));
      }
      return std::pow(arg, b);
    }
    case Kind::QPowAffine:
      return std::pow(q, a * z + b);
    case Kind::Lagrange: {
      if (e < 0 || static_cast<std::size_t>(e) >= nodes.size()) {
        throw MalformedExpr("Lagrange index out of range");
      }
      double v = 1.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (static_cast<int>(j) == e) continue;
        v *= (z - nodes[j]) / (nodes[e] - nodes[j]);
      }
      return v;
    }
  }
  throw MalformedExpr("unknown function kind");
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::J0:
      return "J0";
    case Generator::Jp:
      return "J+";
    case Generator::Jm:
      return "J-";
  }
  return "?";
}

Expr generator_expr(Generator g) {
  switch (g) {
    case Generator::J0:
      return Expr::j0();
    case Generator::Jp:
      return Expr::jp();
    case Generator::Jm:
      return Expr::jm();
  }
  throw MalformedExpr("unknown generator");
}

Matrix eval_expr(const Expr& e, const GeneratorRep& rep, const QParams& p) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  switch (e.kind) {
    case Expr::Kind::J0:
      return rep.j0_matrix();
    case Expr::Kind::Jp:
      return rep.jplus;
    case Expr::Kind::Jm:
      return rep.jminus;
    case Expr::Kind::Unit:
      return Matrix::Identity(d, d);
    case Expr::Kind::Fn:
      return Matrix(rep.j0.unaryExpr([&](double z) { return e.fn(z, p); }).asDiagonal());
    case Expr::Kind::Scale:
      if (e.children.size() != 1) throw MalformedExpr("Scale needs exactly one child");
      return e.scale * eval_expr(e.children.front(), rep, p);
    case Expr::Kind::Prod: {
      Matrix m = Matrix::Identity(d, d);
      for (const auto& c : e.children) m = m * eval_expr(c, rep, p);
      return m;
    }
    case Expr::Kind::Sum: {
      Matrix m = Matrix::Zero(d, d);
      for (const auto& c : e.children) m += eval_expr(c, rep, p);
      return m;
    }
  }
  throw MalformedExpr("unknown expression kind");
}

namespace {

JFunction with_subst(JFunction f, Subst s) {
  if (s.kind == Subst::Kind::Sigma && !f.chain.empty() && f.chain.back() == s) {
    f.chain.pop_back();
  } else {
    f.chain.push_back(s);
  }
  return f;
}

struct Substitution {
  Subst on_j0;
  double jp_factor;
  double jm_factor;
  bool reverse;
};

Expr substitute(const Expr& e, const Substitution& s) {
  switch (e.kind) {
    case Expr::Kind::J0:
      return Expr::of(with_subst(JFunction::identity(), s.on_j0));
    case Expr::Kind::Jp:
      return s.jp_factor == 1.0 ? e : Expr::scaled(s.jp_factor, e);
    case Expr::Kind::Jm:
      return s.jm_factor == 1.0 ? e : Expr::scaled(s.jm_factor, e);
    case Expr::Kind::Unit:
      return e;
    case Expr::Kind::Fn:
      return Expr::of(with_subst(e.fn, s.on_j0));
    case Expr::Kind::Scale:
    case Expr::Kind::Prod:
    case Expr::Kind::Sum: {
      Expr out = e;
      for (auto& c : out.children) c = substitute(c, s);
      if (e.kind == Expr::Kind::Prod && s.reverse) {
        std::reverse(out.children.begin(), out.children.end());
      }
      return out;
    }
  }
  throw MalformedExpr("unknown expression kind");
}

}  // namespace

Expr apply_sigma(const Expr& e) {
  return substitute(e, {{Subst::Kind::Sigma}, 1.0, 1.0, false});
}

Expr apply_sigma_delta(const Expr& e, Colour s) { return s.is_plus() ? e : apply_sigma(e); }

Expr apply_antipode(const Expr& e, Colour zeta, Colour delta, const QParams& p) {
  const double q = p.q();
  return substitute(e, {{Subst::Kind::Antipode, (zeta * delta).value()}, -q, -1.0 / q, true});
}

Expr apply_antipode_inverse(const Expr& e, Colour zeta, Colour delta, const QParams& p) {
  const double q = p.q();
  return substitute(e, {{Subst::Kind::Antipode, (zeta * delta).value()}, -1.0 / q, -q, true});
}

Expr suq2_antipode(const Expr& e, const QParams& p) {
  const double q = p.q();
  return substitute(e, {{Subst::Kind::Negate}, -q, -1.0 / q, true});
}

}  // namespace qhopf
