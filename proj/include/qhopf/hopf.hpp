#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qhopf/check.hpp"
#include "qhopf/expr.hpp"
#include "qhopf/repr.hpp"

namespace qhopf {

/// Two-term coproduct image sum_i left_i (x) right_i of one generator.
struct LegList {
  std::vector<std::pair<Expr, Expr>> legs;
  Colour zeta;
  Colour eta;
  Colour delta;
};

LegList coproduct_legs(Generator gen, Colour zeta, Colour eta, Colour delta, const QParams& p);

/// j0 -> j0 (x) 1 + 1 (x) j0, j+- -> j+- (x) q^{j0} + q^{-j0} (x) j+-.
std::vector<std::pair<Expr, Expr>> suq2_coproduct_legs(Generator gen);

/// Advisory records a warning on colour mismatch, Strict throws.
enum class ColourCheck { Advisory, Strict };

/// sum_i rho_L(left_i) (x) rho_R(right_i), left index major.
Matrix eval_legs(const std::vector<std::pair<Expr, Expr>>& legs, const GeneratorRep& left,
                 const GeneratorRep& right, const QParams& p);

GeneratorRep coproduct_rep(Colour zeta, Colour eta, Colour delta, const GeneratorRep& left,
                           const GeneratorRep& right, const QParams& p,
                           ColourCheck mode = ColourCheck::Advisory);

GeneratorRep suq2_coproduct_rep(const GeneratorRep& left, const GeneratorRep& right,
                                const QParams& p);

/// tau o Delta on V_left (x) V_right: the coproduct built on (right, left) and
/// carried back by the swap permutation.
GeneratorRep opposite_coproduct_rep(Colour zeta, Colour eta, Colour delta,
                                    const GeneratorRep& left, const GeneratorRep& right,
                                    const QParams& p, ColourCheck mode = ColourCheck::Advisory);

/// epsilon_delta(J0) = (1-delta)/(q-1), epsilon_delta(J+-) = 0.
double counit_value(Generator gen, Colour delta, const QParams& p);

/// max over generators of the entrywise distance between two reps.
double rep_distance(const GeneratorRep& a, const GeneratorRep& b);

/// Colours in the order (zeta, eta, mu, nu, rho, delta).
using CoassocColours = std::array<Colour, 6>;

/// (Delta^{mu,nu}_delta o (Delta^{zeta,eta}_mu (x) id)) vs
/// (Delta^{zeta,rho}_delta o (id (x) Delta^{eta,nu}_rho)). Rep colours must be
/// (zeta, eta, nu).
CheckReport check_coassociativity(const CoassocColours& c, const GeneratorRep& r1,
                                  const GeneratorRep& r2, const GeneratorRep& r3,
                                  const QParams& p);

/// (eps_zeta (x) sigma_{eta delta}) o Delta = id when the rep has colour eta,
/// (sigma_{zeta delta} (x) eps_eta) o Delta = id when it has colour zeta.
CheckReport check_counit_axiom(Colour zeta, Colour eta, Colour delta, const GeneratorRep& rep,
                               const QParams& p);

/// m o (S^mu_zeta (x) sigma_{mu eta}) o Delta = eps_delta and the mirror
/// m o (sigma_{mu zeta} (x) S^mu_eta) o Delta = eps_delta, both on one rep of
/// colour mu.
CheckReport check_antipode_axiom(Colour zeta, Colour eta, Colour mu, Colour delta,
                                 const GeneratorRep& rep, const QParams& p);

/// (sigma_{mu zeta} (x) sigma_{nu eta}) o Delta^{zeta,eta}_delta
///   = Delta^{mu,nu}_rho o sigma_{rho delta}, on reps of colours (mu, nu).
CheckReport check_sigma_coproduct(Colour zeta, Colour eta, Colour delta, Colour mu, Colour nu,
                                  Colour rho, const GeneratorRep& r1, const GeneratorRep& r2,
                                  const QParams& p);

/// eps_delta o sigma_{delta zeta} = eps_zeta.
CheckReport check_sigma_counit(Colour delta, Colour zeta, const QParams& p);

/// sigma_{zeta eta} o S^eta_delta = S^zeta_mu o sigma_{mu delta}, evaluated on rep.
CheckReport check_sigma_antipode(Colour zeta, Colour eta, Colour delta, Colour mu,
                                 const GeneratorRep& rep, const QParams& p);

/// Delta^{delta,delta}_delta and S^delta_delta against the single-colour
/// formulas (1 - delta G (x) G)/(q-1), delta(J+- (x) G^-1 + G (x) J+-),
/// S(J0) = -J0 G^-1.
CheckReport check_specialization(Colour delta, const GeneratorRep& left,
                                 const GeneratorRep& right, const QParams& p);

/// Coassociativity, counit and antipode for the su_q(2) coproduct.
CheckReport check_suq2_hopf(int n1, int n2, int n3, const QParams& p);

}  // namespace qhopf
