#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qhopf/check.hpp"
#include "qhopf/repr.hpp"

namespace qhopf {

/// Coupled states of one irreducible block; row n is |N, n> in the product
/// basis (index n1 * (N2+1) + n2).
struct CGBlock {
  int N = 0;
  Matrix coefficients;
};

struct CGTable {
  int n1 = 0;
  int n2 = 0;
  double q = 0.0;
  std::vector<CGBlock> blocks;  // N descending

  /// All rows stacked in block order; square and orthogonal.
  Matrix stacked() const;
};

/// Highest-weight vectors from the kernel of the coupled raising operator on
/// each top weight space, lowered with the analytic ladder norm. The first
/// nonzero coefficient (smallest n1) of each highest-weight vector is positive.
/// `top_value(N)` is the J0-eigenvalue of the highest state of block N.
CGTable decompose(const GeneratorRep& coupled, int n1, int n2, const QParams& p,
                  const std::function<double(int)>& top_value);

/// decompose() with the top values spectrum(N, delta)[0].
CGTable decompose_dqa(const GeneratorRep& coupled, int n1, int n2, Colour delta,
                      const QParams& p);

CGTable cg_suq2(int n1, int n2, const QParams& p);
CGTable cg_dqa(int n1, int n2, Colour zeta, Colour eta, Colour delta, const QParams& p);

/// max entrywise distance; throws InvalidParameter on shape mismatch.
double table_distance(const CGTable& a, const CGTable& b);

/// |U U^T - 1| for the stacked coefficient matrix.
double orthonormality_residual(const CGTable& t);

/// Largest coefficient sitting on a product state whose coupled J0-value
/// differs from the row's.
double selection_rule_residual(const CGTable& t, Colour zeta, Colour eta, Colour delta,
                               const QParams& p);

CheckReport check_selection_rule(const CGTable& t, Colour zeta, Colour eta, Colour delta,
                                 const QParams& p);

double block_diagonalization_residual(const GeneratorRep& coupled, const CGTable& t,
                                      Colour delta, const QParams& p);

/// U Delta(A) U^T against the direct sum of dqa_rep(N, delta)(A).
CheckReport check_block_diagonalization(int n1, int n2, Colour zeta, Colour eta, Colour delta,
                                        const QParams& p);

/// Columns N,n,n1,n2,coefficient.
void write_csv(std::ostream& os, const CGTable& t);
std::string to_json(const CGTable& t);

}  // namespace qhopf
