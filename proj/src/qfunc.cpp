#include "qhopf/qfunc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhopf/errors.hpp"

namespace qhopf {

QParams::QParams(double q, double tol) : q_(q), tol_(tol) {
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidParameter("q must lie in (0, 1), got " + std::to_string(q));
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidParameter("tolerance must be positive and finite");
  }
}

Colour::Colour(int value) : value_(value) {
  if (value != 1 && value != -1) {
    throw InvalidParameter("colour must be +1 or -1, got " + std::to_string(value));
  }
}

double q_number(double x, const QParams& p) {
  const double q = p.q();
  return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

double q_factorial(int n, const QParams& p) {
  if (n < 0) throw InvalidParameter("q_factorial needs n >= 0");
  double r = 1.0;
  for (int k = 1; k <= n; ++k) r *= q_number(k, p);
  return r;
}

double G_fn(double z, const QParams& p) { return 1.0 + (1.0 - p.q()) * z; }

double p_delta(double z, Colour delta, const QParams& p) {
  return (1.0 - delta.value() * std::pow(p.q(), -z)) / (p.q() - 1.0);
}

namespace {

double checked_G(double z, const QParams& p) {
  const double g = G_fn(z, p);
  if (std::abs(g) < p.tol() * (1.0 + std::abs(z))) {
    throw SingularPoint("G vanishes at z = " + std::to_string(z));
  }
  return g;
}

}  // namespace

double g_inverse(double z, const QParams& p) {
  const double g = checked_G(z, p);
  return std::log(g * g) / std::log(1.0 / (p.q() * p.q()));
}

double F_fn(double z, const QParams& p) {
  const double q = p.q();
  const double g2 = std::pow(checked_G(z, p), 2);
  return -(g2 - 1.0 / g2) / (q - 1.0 / q);
}

double H_fn(double z, const QParams& p) {
  const double q = p.q();
  const double g2 = std::pow(checked_G(z, p), 2);
  const double d = q - 1.0 / q;
  return (g2 / q + q / g2 - q - 1.0 / q) / (d * d);
}

double sigma_scalar(double z, const QParams& p) { return 2.0 / (p.q() - 1.0) - z; }

std::vector<double> spectrum(int N, Colour delta, const QParams& p) {
  if (N < 0) throw InvalidParameter("N must be nonnegative");
  std::vector<double> m(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) m[n] = p_delta(0.5 * N - n, delta, p);
  return m;
}

Extrema extrema(int N, Colour delta, const QParams& p) {
  if (N < 0) throw InvalidParameter("N must be nonnegative");
  const double q = p.q();
  const int d = delta.value();
  return {(1.0 - d * std::pow(q, -d * 0.5 * N)) / (q - 1.0),
          (1.0 - d * std::pow(q, d * 0.5 * N)) / (q - 1.0)};
}

double casimir_value(int N, Colour delta, const QParams& p) {
  if (N < 0) throw InvalidParameter("N must be nonnegative");
  return H_fn(p_delta(0.5 * N, delta, p), p);
}

std::vector<double> default_sample_grid(const QParams& p) {
  std::vector<double> grid;
  grid.reserve(41);
  for (int k = 0; k <= 40; ++k) {
    const double z = -5.0 + 0.25 * k;
    if (std::abs(G_fn(z, p)) < p.tol() * (1.0 + std::abs(z))) continue;
    grid.push_back(z);
  }
  return grid;
}

namespace {

template <class F>
CheckReport sample_check(std::string name, CheckParams params, const QParams& p,
                         std::span<const double> samples, F&& residual_at) {
  if (samples.empty()) throw EmptySampleSet(name + ": no samples");
  return timed_check(std::move(name), std::move(params), p.tol(), [&] {
    double worst = 0.0;
    for (double z : samples) worst = std::max(worst, std::abs(residual_at(z)));
    return worst;
  });
}

}  // namespace

CheckReport check_p_equation(Colour delta, const QParams& p,
                             std::span<const double> samples) {
  return sample_check("p_equation", {p.q(), {}, {delta.value()}, {}}, p, samples,
                      [&](double z) {
                        const double pz = p_delta(z, delta, p);
                        return pz - p_delta(z - 1.0, delta, p) - G_fn(pz, p);
                      });
}

CheckReport check_consistency_FGH(const QParams& p, std::span<const double> samples) {
  return sample_check("fgh_consistency", {p.q(), {}, {}, {}}, p, samples, [&](double z) {
    return H_fn(z, p) - H_fn(z - G_fn(z, p), p) - F_fn(z, p);
  });
}

CheckReport check_inverse_pair(Colour delta, const QParams& p,
                               std::span<const double> samples) {
  return sample_check("inverse_pair", {p.q(), {}, {delta.value()}, {}}, p, samples,
                      [&](double z) { return g_inverse(p_delta(z, delta, p), p) - z; });
}

}  // namespace qhopf
