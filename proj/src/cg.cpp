#include "qhopf/cg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "json.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

Matrix CGTable::stacked() const {
  Eigen::Index rows = 0;
  Eigen::Index cols = (n1 + 1) * (n2 + 1);
  for (const auto& b : blocks) rows += b.coefficients.rows();
  Matrix u(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    u.middleRows(at, b.coefficients.rows()) = b.coefficients;
    at += b.coefficients.rows();
  }
  return u;
}

CGTable decompose(const GeneratorRep& coupled, int n1, int n2, const QParams& p,
                  const std::function<double(int)>& top_value) {
  const auto dim = static_cast<Eigen::Index>(coupled.dim());
  if (dim != (n1 + 1) * (n2 + 1)) throw InvalidParameter("decompose: dimension mismatch");
  CGTable table{n1, n2, p.q(), {}};
  const double kernel_tol = p.tol() * static_cast<double>(dim);
  for (int N = n1 + n2; N >= std::abs(n1 - n2); N -= 2) {
    const double top = top_value(N);
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (std::abs(coupled.j0(i) - top) < 1e-8 * (1.0 + std::abs(top))) idx.push_back(i);
    }
    if (idx.empty()) throw DegenerateKernel("no product state at the top weight of N=" + std::to_string(N));
    Matrix restricted(dim, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) restricted.col(k) = coupled.jplus.col(idx[k]);

    Eigen::JacobiSVD<Matrix> svd(restricted, Eigen::ComputeFullV);
    const Vector& sv = svd.singularValues();
    const auto k = static_cast<Eigen::Index>(idx.size());
    int kernel_dim = static_cast<int>(k - sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) kernel_dim += sv(i) < kernel_tol ? 1 : 0;
    if (kernel_dim != 1) {
      throw DegenerateKernel("raising kernel of dimension " + std::to_string(kernel_dim) +
                             " at N=" + std::to_string(N));
    }
    const Vector v = svd.matrixV().col(k - 1);

    Vector top_state = Vector::Zero(dim);
    for (std::size_t i = 0; i < idx.size(); ++i) top_state(idx[i]) = v(i);
    // idx is ascending, so the first significant entry has the smallest n1.
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (std::abs(v(i)) > kernel_tol) {
        if (v(i) < 0) top_state = -top_state;
        break;
      }
    }

    CGBlock block{N, Matrix(N + 1, dim)};
    block.coefficients.row(0) = top_state.transpose();
    for (int n = 0; n < N; ++n) {
      const Vector lowered = coupled.jminus * block.coefficients.row(n).transpose();
      block.coefficients.row(n + 1) = lowered.transpose() / raising_amplitude(N, n + 1, p);
    }
    table.blocks.push_back(std::move(block));
  }
  return table;
}

CGTable cg_suq2(int n1, int n2, const QParams& p) {
  const GeneratorRep coupled = suq2_coproduct_rep(suq2_rep(n1, p), suq2_rep(n2, p), p);
  return decompose(coupled, n1, n2, p, [](int N) { return 0.5 * N; });
}

CGTable cg_dqa(int n1, int n2, Colour zeta, Colour eta, Colour delta, const QParams& p) {
  const GeneratorRep coupled = coproduct_rep(zeta, eta, delta, dqa_rep(n1, zeta, p),
                                             dqa_rep(n2, eta, p), p, ColourCheck::Strict);
  return decompose_dqa(coupled, n1, n2, delta, p);
}

double table_distance(const CGTable& a, const CGTable& b) {
  if (a.n1 != b.n1 || a.n2 != b.n2 || a.blocks.size() != b.blocks.size()) {
    throw InvalidParameter("table_distance: tables have different shapes");
  }
  return max_abs_diff(a.stacked(), b.stacked());
}

double orthonormality_residual(const CGTable& t) {
  const Matrix u = t.stacked();
  return max_abs(u * u.transpose() - Matrix::Identity(u.rows(), u.rows()));
}

double selection_rule_residual(const CGTable& t, Colour zeta, Colour eta, Colour delta,
                               const QParams& p) {
  const std::vector<double> m1 = spectrum(t.n1, zeta, p);
  const std::vector<double> m2 = spectrum(t.n2, eta, p);
  const double q = p.q();
  double worst = 0.0;
  for (const auto& b : t.blocks) {
    const std::vector<double> m = spectrum(b.N, delta, p);
    for (int n = 0; n <= b.N; ++n) {
      for (int i = 0; i <= t.n1; ++i) {
        for (int j = 0; j <= t.n2; ++j) {
          const double c = b.coefficients(n, i * (t.n2 + 1) + j);
          const double coupled_m = (1.0 - delta.value() * (zeta.value() * G_fn(m1[i], p)) *
                                              (eta.value() * G_fn(m2[j], p))) /
                                   (q - 1.0);
          if (std::abs(coupled_m - m[n]) > 1e-8 * (1.0 + std::abs(m[n]))) {
            worst = std::max(worst, std::abs(c));
          }
        }
      }
    }
  }
  return worst;
}

CheckReport check_selection_rule(const CGTable& t, Colour zeta, Colour eta, Colour delta,
                                 const QParams& p) {
  CheckParams params{p.q(), {t.n1, t.n2}, {zeta.value(), eta.value(), delta.value()}, {}};
  return timed_check("selection_rule", std::move(params), p.tol(),
                     [&] { return selection_rule_residual(t, zeta, eta, delta, p); });
}

CheckReport check_block_diagonalization(int n1, int n2, Colour zeta, Colour eta, Colour delta,
                                        const QParams& p) {
  CheckParams params{p.q(), {n1, n2}, {zeta.value(), eta.value(), delta.value()}, {}};
  const auto dim = static_cast<std::size_t>((n1 + 1) * (n2 + 1));
  return timed_check("block_diagonalization", std::move(params), p.tol() * dim, [&] {
    const GeneratorRep coupled = coproduct_rep(zeta, eta, delta, dqa_rep(n1, zeta, p),
                                               dqa_rep(n2, eta, p), p, ColourCheck::Strict);
    return block_diagonalization_residual(coupled, decompose_dqa(coupled, n1, n2, delta, p),
                                          delta, p);
  });
}

CGTable decompose_dqa(const GeneratorRep& coupled, int n1, int n2, Colour delta,
                      const QParams& p) {
  return decompose(coupled, n1, n2, p, [&](int N) { return spectrum(N, delta, p).front(); });
}

double block_diagonalization_residual(const GeneratorRep& coupled, const CGTable& t,
                                      Colour delta, const QParams& p) {
  {
    const Matrix u = t.stacked();
    std::vector<Matrix> j0s, jps, jms;
    for (const auto& b : t.blocks) {
      const GeneratorRep irrep = dqa_rep(b.N, delta, p);
      j0s.push_back(irrep.j0_matrix());
      jps.push_back(irrep.jplus);
      jms.push_back(irrep.jminus);
    }
    return std::max({max_abs(u * coupled.j0_matrix() * u.transpose() - direct_sum(j0s)),
                     max_abs(u * coupled.jplus * u.transpose() - direct_sum(jps)),
                     max_abs(u * coupled.jminus * u.transpose() - direct_sum(jms))});
  }
}

void write_csv(std::ostream& os, const CGTable& t) {
  os << "N,n,n1,n2,coefficient\n";
  char buf[64];
  for (const auto& b : t.blocks) {
    for (int n = 0; n <= b.N; ++n) {
      for (int i = 0; i <= t.n1; ++i) {
        for (int j = 0; j <= t.n2; ++j) {
          std::snprintf(buf, sizeof buf, "%.17g", b.coefficients(n, i * (t.n2 + 1) + j) + 0.0);
          os << b.N << ',' << n << ',' << i << ',' << j << ',' << buf << '\n';
        }
      }
    }
  }
}

std::string to_json(const CGTable& t) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : t.blocks) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < b.coefficients.rows(); ++r) {
      std::vector<double> row;
      for (double c : b.coefficients.row(r)) row.push_back(c + 0.0);
      rows.push_back(std::move(row));
    }
    blocks.push_back({{"N", b.N}, {"coefficients", rows}});
  }
  return nlohmann::json{{"N1", t.n1}, {"N2", t.n2}, {"q", t.q}, {"blocks", blocks}}.dump(2);
}

}  // namespace qhopf
