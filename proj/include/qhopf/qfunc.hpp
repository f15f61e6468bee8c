#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qhopf/check.hpp"

namespace qhopf {

/// Deformation parameter q in (0, 1) together with the numeric tolerance that
/// every check derives its threshold from.
class QParams {
 public:
  explicit QParams(double q, double tol = 1e-10);

  double q() const noexcept { return q_; }
  double tol() const noexcept { return tol_; }

  /// The zero of G, z = 1/(q-1).
  double singular_point() const noexcept { return 1.0 / (q_ - 1.0); }

  QParams with_tol(double tol) const { return QParams(q_, tol); }

 private:
  double q_;
  double tol_;
};

/// One of the two discrete colour values, +1 or -1.
class Colour {
 public:
  constexpr Colour() = default;
  explicit Colour(int value);

  static constexpr Colour plus() { return Colour(Tag{}, 1); }
  static constexpr Colour minus() { return Colour(Tag{}, -1); }

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_plus() const noexcept { return value_ > 0; }

  constexpr Colour operator-() const { return Colour(Tag{}, -value_); }
  friend constexpr Colour operator*(Colour a, Colour b) {
    return Colour(Tag{}, a.value_ * b.value_);
  }
  friend constexpr bool operator==(Colour, Colour) = default;

  char symbol() const noexcept { return is_plus() ? '+' : '-'; }

 private:
  struct Tag {};
  constexpr Colour(Tag, int v) : value_(v) {}
  int value_ = 1;
};

inline constexpr Colour kBothColours[] = {Colour::plus(), Colour::minus()};

/// [x]_q = (q^x - q^-x) / (q - q^-1).
double q_number(double x, const QParams& p);
double q_factorial(int n, const QParams& p);

/// G(z) = 1 + (1-q) z.
double G_fn(double z, const QParams& p);

/// p_delta(z) = (1 - delta q^-z) / (q-1); maps su_q(2) weights onto the
/// J0-spectrum of the delta series.
double p_delta(double z, Colour delta, const QParams& p);

/// ln(G(z)^2) / ln(q^-2), the common inverse of p_+ and p_-.
double g_inverse(double z, const QParams& p);

double F_fn(double z, const QParams& p);
double H_fn(double z, const QParams& p);

/// sigma(z) = 2/(q-1) - z. Involutive, fixes 1/(q-1).
double sigma_scalar(double z, const QParams& p);

/// J0 eigenvalues m_n = p_delta(N/2 - n), n = 0..N.
std::vector<double> spectrum(int N, Colour delta, const QParams& p);

struct Extrema {
  double j_max;
  double neg_j_min;
};
Extrema extrema(int N, Colour delta, const QParams& p);

/// H(gamma) with gamma = p_delta(N/2); equals [N/2]_q [N/2+1]_q for both colours.
double casimir_value(int N, Colour delta, const QParams& p);

/// 41 equally spaced points on [-5, 5] with the singular point removed.
std::vector<double> default_sample_grid(const QParams& p);

/// max |p(z) - p(z-1) - G(p(z))| over the samples.
CheckReport check_p_equation(Colour delta, const QParams& p,
                             std::span<const double> samples);

/// max |H(z) - H(z - G(z)) - F(z)| over the samples.
CheckReport check_consistency_FGH(const QParams& p, std::span<const double> samples);

/// max |g(p_delta(z)) - z| over the samples.
CheckReport check_inverse_pair(Colour delta, const QParams& p,
                               std::span<const double> samples);

}  // namespace qhopf
