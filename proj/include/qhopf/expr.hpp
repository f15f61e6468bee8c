#pragma once

#include <utility>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/qfunc.hpp"
#include "qhopf/repr.hpp"

namespace qhopf {

/// Scalar substitution z -> s(z) applied to the argument of a function of J0.
struct Subst {
  enum class Kind {
    Sigma,     // 2/(q-1) - z
    Antipode,  // (1 - c / G(z)) / (q-1)
    Negate,    // -z
  };
  Kind kind = Kind::Sigma;
  int c = 1;

  friend bool operator==(const Subst&, const Subst&) = default;
};

/// Closed catalogue of functions of J0. `chain` holds pending substitutions;
/// the value at z is f(chain[0](chain[1](...chain[k-1](z)))).
struct JFunction {
  enum class Kind {
    Identity,
    G,
    GInverse,
    GSquared,
    GInverseSquared,
    Power,       // z^e
    Affine,      // a z + b
    LogQ,        // log_q(a G(z))
    CGPower,     // (a G(z))^b
    QPowAffine,  // q^(a z + b)
    Lagrange,    // prod_{j != e} (z - nodes[j]) / (nodes[e] - nodes[j])
  };
  Kind kind = Kind::Identity;
  double a = 0.0;
  double b = 0.0;
  int e = 0;
  std::vector<double> nodes;
  std::vector<Subst> chain;

  static JFunction make(Kind k, double a = 0.0, double b = 0.0, int e = 0,
                        std::vector<double> nodes = {}) {
    JFunction f;
    f.kind = k;
    f.a = a;
    f.b = b;
    f.e = e;
    f.nodes = std::move(nodes);
    return f;
  }
  static JFunction identity() { return {}; }
  static JFunction g() { return make(Kind::G); }
  static JFunction g_inverse() { return make(Kind::GInverse); }
  static JFunction g_squared() { return make(Kind::GSquared); }
  static JFunction g_inverse_squared() { return make(Kind::GInverseSquared); }
  static JFunction power(int e) { return make(Kind::Power, 0.0, 0.0, e); }
  static JFunction affine(double a, double b) { return make(Kind::Affine, a, b); }
  static JFunction log_q(double c) { return make(Kind::LogQ, c); }
  static JFunction cg_power(double c, double exponent) { return make(Kind::CGPower, c, exponent); }
  static JFunction q_pow_affine(double a, double b) { return make(Kind::QPowAffine, a, b); }
  static JFunction lagrange(std::vector<double> nodes, int k) {
    return make(Kind::Lagrange, 0.0, 0.0, k, std::move(nodes));
  }

  double operator()(double z, const QParams& p) const;

  friend bool operator==(const JFunction&, const JFunction&) = default;
};

/// Expression over the generators J0, J+, J-.
struct Expr {
  enum class Kind { J0, Jp, Jm, Unit, Fn, Scale, Prod, Sum };
  Kind kind = Kind::Unit;
  double scale = 1.0;
  JFunction fn;
  std::vector<Expr> children;

  static Expr leaf(Kind k) {
    Expr e;
    e.kind = k;
    return e;
  }
  static Expr j0() { return leaf(Kind::J0); }
  static Expr jp() { return leaf(Kind::Jp); }
  static Expr jm() { return leaf(Kind::Jm); }
  static Expr unit() { return leaf(Kind::Unit); }
  static Expr of(JFunction f) {
    Expr e = leaf(Kind::Fn);
    e.fn = std::move(f);
    return e;
  }
  static Expr scaled(double c, Expr child) {
    Expr e = leaf(Kind::Scale);
    e.scale = c;
    e.children.push_back(std::move(child));
    return e;
  }
  static Expr prod(std::vector<Expr> es) {
    Expr e = leaf(Kind::Prod);
    e.children = std::move(es);
    return e;
  }
  static Expr sum(std::vector<Expr> es) {
    Expr e = leaf(Kind::Sum);
    e.children = std::move(es);
    return e;
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

enum class Generator { J0, Jp, Jm };
inline constexpr Generator kGenerators[] = {Generator::J0, Generator::Jp, Generator::Jm};
const char* generator_name(Generator g);
Expr generator_expr(Generator g);

/// Substitutes the rep's matrices. Throws SingularPoint / LogDomainError when a
/// function is undefined on the spectrum, MalformedExpr on bad arity.
Matrix eval_expr(const Expr& e, const GeneratorRep& rep, const QParams& p);

Expr apply_sigma(const Expr& e);
Expr apply_sigma_delta(const Expr& e, Colour s);

/// S^zeta_delta: antihomomorphism, J+- -> -q^{+-1} J+-,
/// J0 -> (1 - zeta delta G(J0)^-1)/(q-1).
Expr apply_antipode(const Expr& e, Colour zeta, Colour delta, const QParams& p);

/// (S^zeta_delta)^-1: same J0 image, J+- -> -q^{-+1} J+-.
Expr apply_antipode_inverse(const Expr& e, Colour zeta, Colour delta, const QParams& p);

/// su_q(2) antipode: j0 -> -j0, j+- -> -q^{+-1} j+-.
Expr suq2_antipode(const Expr& e, const QParams& p);

}  // namespace qhopf
