#pragma once

#include "qhopf/check.hpp"
#include "qhopf/repr.hpp"

namespace qhopf {

/// Leg colours of R^{zeta,eta}. For SUQ2 the colours are ignored.
struct RMatrixSpec {
  Colour left;
  Colour right;
  Algebra algebra = Algebra::DQA;

  friend bool operator==(const RMatrixSpec&, const RMatrixSpec&) = default;
};

/// q^{2 j0 (x) j0} sum_n (1-q^-2)^n / [n]! q^{n(n-1)/2} (q^{j0} j+ (x) q^{-j0} j-)^n.
Matrix r_su(const GeneratorRep& left, const GeneratorRep& right, const QParams& p);

/// q^{2 L (x) L'} sum_n (1-q^-2)^n / [n]! q^{n(n-1)/2}
///   ((zeta G)^-1 J+ (x) eta G J-)^n,  L = log_q(zeta G(J0)).
/// Throws LogDomainError when zeta G or eta G is not positive on a leg.
Matrix r_coloured(const RMatrixSpec& spec, const GeneratorRep& left, const GeneratorRep& right,
                  const QParams& p);

/// rep o sigma_s: unchanged for s = +1, sigma_twist otherwise.
GeneratorRep sigma_delta_rep(const GeneratorRep& rep, Colour s, const QParams& p);

/// Transmutes the rep when its colour differs from `target`.
GeneratorRep transmute_to(const GeneratorRep& rep, Colour target, const QParams& p);

/// Residual of the intertwining relation for an explicit R.
double intertwiner_residual(const Matrix& r, const GeneratorRep& coupled,
                            const GeneratorRep& opposite);

/// |R12 R13 R23 - R23 R13 R12| for explicit factors on V1 (x) V2 (x) V3.
double ybe_residual(const Matrix& r12, const Matrix& r13, const Matrix& r23, std::size_t d1,
                    std::size_t d2, std::size_t d3);

/// (sigma_{mu zeta} (x) sigma_{nu eta})(R^{zeta,eta}) = R^{mu,nu}, with the
/// substitution realized by transmutation conjugation. Reps carry colours of
/// `from`.
CheckReport check_colour_flip(const RMatrixSpec& from, const RMatrixSpec& to,
                              const GeneratorRep& left, const GeneratorRep& right,
                              const QParams& p);

/// tau o Delta^{eta,zeta}_delta = R^{zeta,eta} Delta^{zeta,eta}_delta R^-1 on
/// V^zeta (x) V^eta.
CheckReport check_intertwiner(Colour zeta, Colour eta, Colour delta, const GeneratorRep& left,
                              const GeneratorRep& right, const QParams& p);

/// (Delta^{lambda,mu}_zeta (x) sigma_{nu eta})(R^{zeta,eta}) = R^{lambda,nu}_13 R^{mu,nu}_23
/// and (sigma_{lambda zeta} (x) Delta^{mu,nu}_eta)(R^{zeta,eta}) = R^{lambda,nu}_13 R^{lambda,mu}_12
/// on A^lambda (x) B^mu (x) C^nu.
CheckReport check_fusion(Colour lambda, Colour mu, Colour zeta, Colour nu, Colour eta,
                         const GeneratorRep& a, const GeneratorRep& b, const GeneratorRep& c,
                         const QParams& p);

/// R^{zeta,eta}_12 R^{zeta,mu}_13 R^{eta,mu}_23 = R^{eta,mu}_23 R^{zeta,mu}_13 R^{zeta,eta}_12.
CheckReport check_cybe(Colour zeta, Colour eta, Colour mu, const GeneratorRep& r1,
                       const GeneratorRep& r2, const GeneratorRep& r3, const QParams& p);

/// The same equation for the su_q(2) R-matrix.
CheckReport check_suq2_ybe(const GeneratorRep& r1, const GeneratorRep& r2,
                           const GeneratorRep& r3, const QParams& p);

/// (eps_zeta (x) id)(R^{zeta,eta}) = 1 when rep has colour eta,
/// (id (x) eps_eta)(R^{zeta,eta}) = 1 when rep has colour zeta.
CheckReport check_counit_r(Colour zeta, Colour eta, const GeneratorRep& rep, const QParams& p);

/// (S^lambda_zeta (x) sigma_{mu eta})(R^{zeta,eta}) = (R^{lambda,mu})^-1 and
/// (sigma_{lambda zeta} (x) (S^mu_eta)^-1)(R^{zeta,eta}) R^{lambda,mu} = 1 on
/// V^lambda (x) V^mu. The left rep needs a simple J0-spectrum.
CheckReport check_antipode_r(Colour lambda, Colour mu, Colour zeta, Colour eta,
                             const GeneratorRep& left, const GeneratorRep& right,
                             const QParams& p);

/// r_coloured on colour-matched DQA irreps against r_su on the su_q(2) irreps.
CheckReport check_r_su_equivalence(Colour delta, int n1, int n2, const QParams& p);

/// su_q(2) R intertwining the su_q(2) coproduct with its opposite.
CheckReport check_suq2_intertwiner(const GeneratorRep& left, const GeneratorRep& right,
                                   const QParams& p);

}  // namespace qhopf
