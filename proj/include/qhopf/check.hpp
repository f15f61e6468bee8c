#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

/// Parameters a check was evaluated at. Colours are stored as +1/-1 in the
/// order the check's signature lists them.
struct CheckParams {
  double q = 0.0;
  std::vector<int> ns;
  std::vector<int> colours;
  std::string tag;

  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

/// Outcome of one identity check. `pass` is always `residual < threshold`.
struct CheckReport {
  std::string suite;
  std::string name;
  CheckParams params;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::int64_t elapsed_micros = 0;
  std::string error;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

CheckReport make_report(std::string name, CheckParams params, double residual,
                        double threshold);

/// Runs `residual_fn` and wraps its value in a report, recording wall time.
template <class F>
CheckReport timed_check(std::string name, CheckParams params, double threshold,
                        F&& residual_fn) {
  const auto start = std::chrono::steady_clock::now();
  const double residual = std::forward<F>(residual_fn)();
  auto report = make_report(std::move(name), std::move(params), residual, threshold);
  report.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return report;
}

}  // namespace qhopf
