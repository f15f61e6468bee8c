#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/check.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/qfunc.hpp"

namespace qhopf {

enum class Algebra { SUQ2, DQA };

const char* algebra_name(Algebra a);

/// Identifies one unirrep. The colour is present iff the algebra is DQA.
struct RepLabel {
  Algebra algebra;
  int N;
  std::optional<Colour> colour;

  int dim() const { return N + 1; }
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Where a GeneratorRep came from. `colour` is the series the J0-spectrum
/// belongs to; for coupled reps it is the output colour of the coproduct.
struct RepMeta {
  Algebra algebra = Algebra::DQA;
  std::optional<Colour> colour;
  std::vector<int> ns;
  std::string path;
  std::vector<std::string> warnings;
};

/// J0 is diagonal in the canonical basis and stored as its diagonal.
struct GeneratorRep {
  Vector j0;
  Matrix jplus;
  Matrix jminus;
  RepMeta meta;

  std::size_t dim() const { return static_cast<std::size_t>(j0.size()); }
  Matrix j0_matrix() const { return j0.asDiagonal(); }
};

/// sqrt([n]_q [N-n+1]_q), the amplitude of J+ : n -> n-1 (n >= 1).
double raising_amplitude(int N, int n, const QParams& p);

GeneratorRep suq2_rep(int N, const QParams& p);

/// Amplitudes from the Casimir difference sqrt(H(gamma) - H(m_n)).
GeneratorRep dqa_rep(int N, Colour delta, const QParams& p);

/// su_q(2) rep with J0 replaced by p_delta(j0).
GeneratorRep dqa_rep_via_map(int N, Colour delta, const QParams& p);

GeneratorRep make_rep(const RepLabel& label, const QParams& p);

/// Largest residual of the defining relations, unscaled.
double commutator_residual(const GeneratorRep& rep, Algebra algebra, const QParams& p);

/// Pass iff the residual is below tol * dim.
CheckReport check_commutators(const GeneratorRep& rep, Algebra algebra, const QParams& p);

/// J-J+ + H(J0) for DQA, j-j+ + [j0][j0+1] for SUQ2.
Matrix casimir_matrix(const GeneratorRep& rep, Algebra algebra, const QParams& p);

/// J+J- + H(J0) - F(J0) for DQA, j+j- + [j0][j0-1] for SUQ2.
Matrix casimir_matrix_alt(const GeneratorRep& rep, Algebra algebra, const QParams& p);

/// max(|C - expected 1|, |C - C_alt|); pass iff below tol * dim.
CheckReport check_casimir(const GeneratorRep& rep, Algebra algebra, double expected,
                          const QParams& p);

/// Basis map V^{N,delta} -> V^{N,-delta}; the identity in index order.
Matrix transmutation(int N, Colour delta);

/// Image of the rep under sigma: J0 -> 2/(q-1) - J0, J+- unchanged. Flips the
/// colour tag.
GeneratorRep sigma_twist(const GeneratorRep& rep, const QParams& p);

/// T rho(sigma(.)) T^-1 on the flipped-colour space.
GeneratorRep transmute(const GeneratorRep& rep, const QParams& p);

/// max over J0, J+- of |T rho^delta(A) T^-1 - rho^{-delta}(sigma(A))|.
CheckReport check_transmutation(int N, Colour delta, const QParams& p);

}  // namespace qhopf
